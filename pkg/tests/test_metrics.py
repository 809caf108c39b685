"""
Tests for image difference metrics and error reports.
"""

import unittest
import sys
import os
import math

import numpy as np

# Add project root to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import DimensionMismatch, InvalidImage
from image_core import Depth, Image
from metrics import ErrorReport, ErrorRow, compare, error_ratio, mae, mse, psnr


def u8(width, height, values):
    return Image.from_samples(width, height, values, Depth.U8)


class TestMetrics(unittest.TestCase):

    def test_identical_images(self):
        img = u8(2, 2, [1, 2, 3, 4])
        self.assertEqual(error_ratio(img, img), 0.0)
        self.assertEqual(mae(img, img), 0.0)
        self.assertEqual(mse(img, img), 0.0)
        self.assertEqual(psnr(img, img), math.inf)

    def test_error_ratio(self):
        self.assertEqual(error_ratio(Image.constant(3, 3, 0, Depth.U8), Image.constant(3, 3, 255, Depth.U8)), 100.0)
        self.assertEqual(error_ratio(u8(2, 2, [0, 0, 0, 0]), u8(2, 2, [255, 0, 0, 0])), 25.0)

    def test_no_uint8_wraparound(self):
        self.assertEqual(mae(u8(1, 1, [0]), u8(1, 1, [200])), 200.0)
        self.assertEqual(mae(u8(1, 1, [200]), u8(1, 1, [0])), 200.0)

    def test_single_pixel_metrics(self):
        a, b = u8(1, 1, [0]), u8(1, 1, [10])
        self.assertEqual(mae(a, b), 10.0)
        self.assertEqual(mse(a, b), 100.0)
        self.assertAlmostEqual(psnr(a, b), 28.13, places=2)

    def test_compare_agrees_with_single_metrics(self):
        a = u8(3, 1, [0, 100, 250])
        b = u8(3, 1, [5, 90, 255])
        diff = compare(a, b)
        self.assertEqual(diff.error_percent, error_ratio(a, b))
        self.assertEqual(diff.mae, mae(a, b))
        self.assertEqual(diff.mse, mse(a, b))
        self.assertEqual(diff.psnr, psnr(a, b))

    def test_metrics_are_symmetric(self):
        a = u8(2, 1, [3, 200])
        b = u8(2, 1, [30, 100])
        self.assertEqual(compare(a, b), compare(b, a))

    def test_identities_on_random_images(self):
        rng = np.random.default_rng(53)
        for _ in range(50):
            a, b, c = (
                Image.from_array(rng.integers(0, 256, size=(5, 7), dtype=np.uint8), Depth.U8)
                for _ in range(3)
            )
            ratio = error_ratio(a, b)
            self.assertAlmostEqual(ratio, 100.0 * mae(a, b) / 255.0, delta=1e-9)
            self.assertGreaterEqual(ratio, 0.0)
            self.assertLessEqual(ratio, 100.0)
            self.assertEqual(ratio, error_ratio(b, a))
            self.assertEqual(error_ratio(a, a), 0.0)
            self.assertLessEqual(error_ratio(a, c), error_ratio(a, b) + error_ratio(b, c) + 1e-9)
            if a != b:
                self.assertGreater(ratio, 0.0)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            error_ratio(u8(2, 1, [0, 0]), u8(1, 2, [0, 0]))

    def test_float_images_rejected(self):
        img = Image.constant(1, 1, 1.0, Depth.FLOAT)
        with self.assertRaises(InvalidImage):
            mae(img, img)


class TestErrorReport(unittest.TestCase):

    def rows(self, *pairs):
        return [ErrorRow(alpha, err, 0.0, 0.0, math.inf) for alpha, err in pairs]

    def test_lookup_and_best(self):
        report = ErrorReport('bilinear', self.rows((0.0, 0.5), (0.5, 0.3), (1.0, 0.3)))
        self.assertEqual(report.alphas, [0.0, 0.5, 1.0])
        self.assertEqual(report.row_for(0.5).error_percent, 0.3)
        # ties resolve to the first row
        self.assertEqual(report.best().alpha, 0.5)
        with self.assertRaises(KeyError):
            report.row_for(0.25)

    def test_invariants(self):
        with self.assertRaises(ValueError):
            ErrorReport('nearest', [])
        with self.assertRaises(ValueError):
            ErrorReport('nearest', self.rows((0.5, 1.0), (0.5, 1.0)))
        with self.assertRaises(ValueError):
            ErrorReport('nearest', self.rows((0.0, -1.0)))

    def test_baseline_is_ignored_by_equality(self):
        rows = self.rows((0.0, 1.0))
        self.assertEqual(ErrorReport('bicubic', rows, 2.0), ErrorReport('bicubic', rows))


if __name__ == '__main__':
    unittest.main()
