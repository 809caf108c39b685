"""
Tests for the averaging and unsharp masks and the replicate-border correlator.
"""

import unittest
import sys
import os

import numpy as np

# Add project root to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import AlphaOutOfRange, InvalidImage
from filters import (
    MaskKind, average_mask, convolve_3x3, nine_cell_mask, unsharp_mask, validate_alpha,
)
from image_core import Depth, Image


def replicate_correlate(samples, coeffs):
    """Plain loop over every pixel with clamped neighbour lookups."""
    height, width = samples.shape
    out = np.zeros_like(samples)
    for y in range(height):
        for x in range(width):
            total = 0.0
            for dy in (-1, 0, 1):
                for dx in (-1, 0, 1):
                    sy = min(max(y + dy, 0), height - 1)
                    sx = min(max(x + dx, 0), width - 1)
                    total += coeffs[dy + 1, dx + 1] * samples[sy, sx]
            out[y, x] = total
    return out


class TestMasks(unittest.TestCase):

    def test_average_mask(self):
        mask = average_mask()
        self.assertIs(mask.kind, MaskKind.AVERAGE)
        eighth = 1.0 / 8.0
        self.assertEqual(mask.as_lists(), [[eighth, eighth, eighth], [eighth, 0.0, eighth],
                                           [eighth, eighth, eighth]])
        self.assertEqual(mask.total(), 1.0)

    def test_nine_cell_mask(self):
        mask = nine_cell_mask()
        self.assertIs(mask.kind, MaskKind.NINE_CELL)
        self.assertAlmostEqual(mask.total(), 1.0, places=12)
        self.assertNotEqual(mask.coeffs[1, 1], 0.0)

    def test_unsharp_alpha_zero(self):
        mask = unsharp_mask(0.0)
        self.assertEqual(mask.as_lists(), [[0.0, -1.0, 0.0], [-1.0, 5.0, -1.0], [0.0, -1.0, 0.0]])

    def test_unsharp_alpha_one(self):
        mask = unsharp_mask(1.0)
        self.assertEqual(mask.as_lists(), [[-0.5, 0.0, -0.5], [0.0, 3.0, 0.0], [-0.5, 0.0, -0.5]])
        self.assertEqual(mask.alpha, 1.0)

    def test_unsharp_sums_to_one(self):
        for alpha in np.linspace(0.0, 1.0, 101):
            self.assertAlmostEqual(unsharp_mask(alpha).total(), 1.0, delta=1e-12)

    def test_alpha_range(self):
        self.assertEqual(validate_alpha(1), 1.0)
        for bad in (-0.1, 1.5, float('nan'), 'sharp'):
            with self.assertRaises(AlphaOutOfRange):
                unsharp_mask(bad)

    def test_alpha_error_is_value_error(self):
        with self.assertRaises(ValueError):
            validate_alpha(2.0)


class TestConvolve(unittest.TestCase):

    def test_average_of_interior_pixel(self):
        img = Image.from_array([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]], Depth.FLOAT)
        result = convolve_3x3(img, average_mask())
        self.assertEqual(float(result.samples[1, 1]), 5.0)

    def test_constant_image_is_preserved(self):
        img = Image.constant(6, 4, 50.0, Depth.FLOAT)
        for mask in (average_mask(), nine_cell_mask(), unsharp_mask(0.0), unsharp_mask(0.3), unsharp_mask(1.0)):
            np.testing.assert_allclose(convolve_3x3(img, mask).samples, 50.0, atol=1e-9)

    def test_single_pixel_image(self):
        img = Image.constant(1, 1, 123.0, Depth.FLOAT)
        for alpha in (0.0, 0.5, 1.0):
            self.assertAlmostEqual(float(convolve_3x3(img, unsharp_mask(alpha)).samples[0, 0]), 123.0,
                                   places=9)

    def test_matches_replicate_border_loop(self):
        rng = np.random.default_rng(5)
        img = Image.from_array(rng.uniform(0.0, 255.0, size=(5, 7)), Depth.FLOAT)
        for mask in (average_mask(), unsharp_mask(0.7)):
            np.testing.assert_allclose(convolve_3x3(img, mask).samples,
                                       replicate_correlate(img.samples, mask.coeffs), atol=1e-9)

    def test_output_is_not_clamped(self):
        img = Image.from_array([[0.0, 255.0, 0.0]], Depth.FLOAT)
        result = convolve_3x3(img, unsharp_mask(0.0))
        self.assertGreater(float(result.samples[0, 1]), 255.0)
        self.assertLess(float(result.samples[0, 0]), 0.0)

    def test_unsharp_overshoots_on_step_edge(self):
        step = np.zeros((8, 8))
        step[:, 4:] = 255.0
        img = Image.from_array(step, Depth.FLOAT)
        for alpha in (0.0, 0.5, 1.0):
            result = convolve_3x3(img, unsharp_mask(alpha))
            self.assertLess(float(result.samples.min()), 0.0)
            self.assertGreater(float(result.samples.max()), 255.0)

    def test_linearity(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            first = rng.uniform(0.0, 255.0, size=(8, 8))
            second = rng.uniform(0.0, 255.0, size=(8, 8))
            a, b = rng.uniform(-2.0, 2.0, size=2)
            for mask in (average_mask(), nine_cell_mask(), unsharp_mask(rng.uniform())):
                combined = convolve_3x3(Image.from_array(a * first + b * second, Depth.FLOAT), mask)
                separate = (a * convolve_3x3(Image.from_array(first, Depth.FLOAT), mask).samples
                            + b * convolve_3x3(Image.from_array(second, Depth.FLOAT), mask).samples)
                np.testing.assert_allclose(combined.samples, separate, rtol=0, atol=1e-5)

    def test_mirroring_commutes_with_filtering(self):
        rng = np.random.default_rng(37)
        samples = rng.uniform(0.0, 255.0, size=(9, 11))
        for mask in (average_mask(), unsharp_mask(0.0), unsharp_mask(0.4), unsharp_mask(1.0)):
            mirrored_first = convolve_3x3(Image.from_array(samples[:, ::-1], Depth.FLOAT), mask).samples
            filtered_first = convolve_3x3(Image.from_array(samples, Depth.FLOAT), mask).samples[:, ::-1]
            np.testing.assert_allclose(mirrored_first, filtered_first, rtol=0, atol=1e-6)

    def test_averaging_reduces_variance(self):
        rng = np.random.default_rng(41)
        img = Image.from_array(rng.uniform(0.0, 255.0, size=(64, 64)), Depth.FLOAT)
        for mask in (average_mask(), nine_cell_mask()):
            smoothed = convolve_3x3(img, mask)
            self.assertLessEqual(float(smoothed.samples.var()), float(img.samples.var()))

    def test_requires_float_input(self):
        with self.assertRaises(InvalidImage):
            convolve_3x3(Image.constant(2, 2, 1, Depth.U8), average_mask())


if __name__ == '__main__':
    unittest.main()
