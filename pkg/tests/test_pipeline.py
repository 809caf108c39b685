"""
Tests for the enlarge -> average -> unsharp pipeline.
"""

import unittest
import sys
import os

import numpy as np

# Add project root to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import AlphaOutOfRange, InvalidImage, InvalidScale
from filters import average_mask, convolve_3x3, nine_cell_mask, unsharp_mask
from image_core import Depth, Image, to_float, to_u8
from interp import BICUBIC, BILINEAR
from pipeline import (
    AverageVariant, EnlargementPipeline, PipelineConfig,
    downscale, enlarge_only, run_pipeline, run_pipeline_to_size,
)


def random_u8(seed, width, height):
    rng = np.random.default_rng(seed)
    return Image.from_array(rng.integers(0, 256, size=(height, width), dtype=np.uint8), Depth.U8)


class TestPipelineConfig(unittest.TestCase):

    def test_normalises_loose_inputs(self):
        cfg = PipelineConfig('Bicubic', 2, 0, 'nine')
        self.assertIs(cfg.method, BICUBIC)
        self.assertEqual(cfg.scale, 2.0)
        self.assertEqual(cfg.alpha, 0.0)
        self.assertIs(cfg.average_variant, AverageVariant.NINE_CELL)

    def test_defaults_to_eight_neighbour_average(self):
        self.assertIs(PipelineConfig('bilinear', 2.0, 1.0).average_variant, AverageVariant.EIGHT_NEIGHBOUR)

    def test_rejects_bad_values(self):
        with self.assertRaises(AlphaOutOfRange):
            PipelineConfig('bilinear', 2.0, 1.5)
        with self.assertRaises(InvalidScale):
            PipelineConfig('bilinear', 0.0, 1.0)
        with self.assertRaises(InvalidScale):
            PipelineConfig('bilinear', float('inf'), 1.0)
        with self.assertRaises(ValueError):
            PipelineConfig('lanczos', 2.0, 1.0)
        with self.assertRaises(ValueError):
            PipelineConfig('bilinear', 2.0, 1.0, 'four')

    def test_describe(self):
        cfg = PipelineConfig('bilinear', 2.0, 0.3)
        self.assertIs(cfg.method, BILINEAR)
        self.assertEqual(cfg.describe(), "bilinear, scale=2, alpha=0.3, average=eight")


class TestRunPipeline(unittest.TestCase):

    def test_constant_image_keeps_its_value(self):
        img = Image.constant(5, 4, 77, Depth.U8)
        for method in ('nearest', 'bilinear', 'bicubic'):
            for alpha in (0.0, 0.5, 1.0):
                for variant in ('eight', 'nine'):
                    result = run_pipeline(img, PipelineConfig(method, 2.0, alpha, variant))
                    self.assertEqual(result, Image.constant(10, 8, 77, Depth.U8))

    def test_identity_scale_reduces_to_the_filters(self):
        img = random_u8(3, 16, 16)
        expected = to_u8(convolve_3x3(convolve_3x3(to_float(img), average_mask()), unsharp_mask(0.0)))
        self.assertEqual(run_pipeline(img, PipelineConfig('bilinear', 1.0, 0.0)), expected)

    def test_nine_cell_variant_uses_box_mean(self):
        img = random_u8(4, 12, 12)
        expected = to_u8(convolve_3x3(convolve_3x3(to_float(img), nine_cell_mask()), unsharp_mask(1.0)))
        self.assertEqual(run_pipeline(img, PipelineConfig('nearest', 1.0, 1.0, 'nine')), expected)

    def test_bicubic_output_shape_and_range(self):
        img = random_u8(8, 8, 8)
        result = run_pipeline(img, PipelineConfig('bicubic', 2.0, 1.0))
        self.assertEqual((result.width, result.height, result.depth), (16, 16, Depth.U8))
        self.assertGreaterEqual(int(result.samples.min()), 0)
        self.assertLessEqual(int(result.samples.max()), 255)

    def test_run_is_deterministic(self):
        img = random_u8(9, 10, 7)
        cfg = PipelineConfig('bicubic', 1.7, 0.4)
        self.assertEqual(run_pipeline(img, cfg), run_pipeline(img, cfg))

    def test_float_input_is_rejected(self):
        with self.assertRaises(InvalidImage):
            run_pipeline(Image.constant(2, 2, 1.0, Depth.FLOAT), PipelineConfig('bilinear', 2.0, 1.0))

    def test_run_to_size(self):
        img = random_u8(1, 6, 5)
        result = run_pipeline_to_size(img, PipelineConfig('bilinear', 2.0, 1.0), 13, 9)
        self.assertEqual((result.width, result.height), (13, 9))

    def test_stages_compose_to_run(self):
        img = random_u8(2, 6, 6)
        cfg = PipelineConfig('bilinear', 2.0, 0.6)
        stages = EnlargementPipeline(cfg)
        smoothed = stages.prepare(img, 12, 12)
        self.assertIs(smoothed.depth, Depth.FLOAT)
        self.assertEqual(stages.sharpen(smoothed, 0.6), run_pipeline(img, cfg))


class TestBaselines(unittest.TestCase):

    def test_enlarge_only_identity(self):
        img = random_u8(6, 9, 4)
        for method in ('nearest', 'bilinear', 'bicubic'):
            self.assertEqual(enlarge_only(img, method, 9, 4), img)

    def test_downscale_halves_dimensions(self):
        img = random_u8(7, 16, 10)
        small = downscale(img, 'bilinear', 2.0)
        self.assertEqual((small.width, small.height, small.depth), (8, 5, Depth.U8))

    def test_bilinear_halving_averages_pixel_pairs(self):
        img = Image.from_array([[10, 20, 30, 40], [50, 60, 70, 80]], Depth.U8)
        small = downscale(img, 'bilinear', 2.0)
        self.assertEqual(small.flat(), [35, 55])

    def test_downscale_rejects_bad_scale(self):
        with self.assertRaises(InvalidScale):
            downscale(random_u8(1, 4, 4), 'bilinear', -2.0)


if __name__ == '__main__':
    unittest.main()
