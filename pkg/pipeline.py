"""
Three-step enlargement pipeline: enlarge, average, unsharp, then quantize.
"""

import enum
import logging
import math
from dataclasses import dataclass, field

from errors import InvalidImage, InvalidScale
from filters import average_mask, convolve_3x3, nine_cell_mask, unsharp_mask, validate_alpha
from image_core import Depth, Image, to_float, to_u8
from interp import InterpKernel, get_kernel, resample_2d, scaled_size

logger = logging.getLogger(__name__)


class AverageVariant(enum.Enum):
    EIGHT_NEIGHBOUR = 'eight'
    NINE_CELL = 'nine'

    @classmethod
    def parse(cls, value) -> 'AverageVariant':
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"Unknown average variant {value!r}, expected 'eight' or 'nine'")


@dataclass(frozen=True)
class PipelineConfig:
    method: InterpKernel
    scale: float
    alpha: float
    average_variant: AverageVariant = field(default=AverageVariant.EIGHT_NEIGHBOUR)

    def __post_init__(self):
        # normalise loose inputs ('bicubic', 'nine', 0) into the canonical types
        object.__setattr__(self, 'method', get_kernel(self.method))
        object.__setattr__(self, 'average_variant', AverageVariant.parse(self.average_variant))
        object.__setattr__(self, 'alpha', validate_alpha(self.alpha))
        try:
            scale = float(self.scale)
        except (TypeError, ValueError):
            raise InvalidScale(f"Scale must be a positive number, got {self.scale!r}")
        if not (math.isfinite(scale) and scale > 0):
            raise InvalidScale(f"Scale must be a positive finite number, got {self.scale!r}")
        object.__setattr__(self, 'scale', scale)

    def describe(self) -> str:
        return (f"{self.method.name}, scale={self.scale:g}, alpha={self.alpha:g}, "
                f"average={self.average_variant.value}")


class EnlargementPipeline:
    """Runs the enlarge -> average -> unsharp chain for one configuration.

    All intermediates stay in the float domain; quantization to U8 happens
    once, after the unsharp stage.
    """

    def __init__(self, cfg: PipelineConfig):
        self.cfg = cfg
        if cfg.average_variant is AverageVariant.NINE_CELL:
            self.smoothing_mask = nine_cell_mask()
        else:
            self.smoothing_mask = average_mask()

    def enlarge(self, img: Image, width: int, height: int) -> Image:
        return resample_2d(to_float(img), self.cfg.method, width, height)

    def smooth(self, enlarged: Image) -> Image:
        return convolve_3x3(enlarged, self.smoothing_mask)

    def sharpen(self, smoothed: Image, alpha: float) -> Image:
        return to_u8(convolve_3x3(smoothed, unsharp_mask(alpha)))

    def prepare(self, img: Image, width: int, height: int) -> Image:
        """Enlarge and average; the result is shared by every alpha of a sweep."""
        if img.depth is not Depth.U8:
            raise InvalidImage(f"Pipeline input must be U8, got {img.depth.name}")
        return self.smooth(self.enlarge(img, width, height))

    def run_to_size(self, img: Image, width: int, height: int) -> Image:
        logger.info(f"Running pipeline ({self.cfg.describe()}) to {width}x{height}")
        return self.sharpen(self.prepare(img, width, height), self.cfg.alpha)

    def run(self, img: Image) -> Image:
        width, height = scaled_size(img.width, img.height, self.cfg.scale)
        return self.run_to_size(img, width, height)


def run_pipeline(img: Image, cfg: PipelineConfig) -> Image:
    """Enlarge ``img`` by ``cfg.scale`` and apply the averaging and unsharp filters."""
    return EnlargementPipeline(cfg).run(img)


def run_pipeline_to_size(img: Image, cfg: PipelineConfig, width: int, height: int) -> Image:
    """Same chain as run_pipeline, resampling to an explicit output size."""
    return EnlargementPipeline(cfg).run_to_size(img, width, height)


def enlarge_only(img: Image, method, width: int, height: int) -> Image:
    """Plain interpolation without filters, quantized to U8."""
    return to_u8(resample_2d(to_float(img), method, width, height))


def downscale(img: Image, method, scale: float) -> Image:
    """Shrink a U8 image by ``1 / scale`` to form the low-resolution input."""
    if not (isinstance(scale, (int, float)) and math.isfinite(scale) and scale > 0):
        raise InvalidScale(f"Scale must be a positive finite number, got {scale!r}")
    width, height = scaled_size(img.width, img.height, 1.0 / scale)
    logger.info(f"Downscaling {img.width}x{img.height} -> {width}x{height} with {get_kernel(method).name}")
    return enlarge_only(img, method, width, height)
