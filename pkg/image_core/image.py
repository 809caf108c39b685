"""
Grayscale raster type and value-domain conversions.
"""

import enum
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from errors import InvalidImage, NonFiniteSample

logger = logging.getLogger(__name__)


class Depth(enum.Enum):
    """Sample domain of an Image."""
    U8 = 'u8'
    # Real-valued compute depth, held as float64
    FLOAT = 'float'


class PixelCoord(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True, eq=False)
class Image:
    """Immutable 2D grayscale raster.

    ``samples`` is a read-only ``(height, width)`` array: uint8 for
    ``Depth.U8`` and float64 for ``Depth.FLOAT``. Row-major order is the
    array's C order.
    """
    width: int
    height: int
    depth: Depth
    samples: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise InvalidImage(f"Image dimensions must be positive, got {self.width}x{self.height}")
        if self.samples.shape != (self.height, self.width):
            raise InvalidImage(
                f"Sample array shape {self.samples.shape} does not match {self.width}x{self.height}"
            )
        if self.depth is Depth.U8 and self.samples.dtype != np.uint8:
            raise InvalidImage(f"U8 image needs uint8 samples, got {self.samples.dtype}")
        if self.depth is Depth.FLOAT:
            if self.samples.dtype != np.float64:
                raise InvalidImage(f"Float image needs float64 samples, got {self.samples.dtype}")
            if not np.isfinite(self.samples).all():
                raise NonFiniteSample("Float image contains NaN or Inf samples")

    @classmethod
    def from_array(cls, array, depth: Depth) -> 'Image':
        """Build an Image from any 2D array-like, copying the data."""
        dtype = np.uint8 if depth is Depth.U8 else np.float64
        raw = np.asarray(array)
        if raw.ndim != 2:
            raise InvalidImage(f"Expected a 2D array, got shape {raw.shape}")
        if depth is Depth.U8 and raw.size and (raw.min() < 0 or raw.max() > 255):
            raise InvalidImage("U8 samples must lie in [0, 255]")
        samples = np.array(raw, dtype=dtype, order='C', copy=True)
        samples.setflags(write=False)
        height, width = samples.shape
        return cls(width=width, height=height, depth=depth, samples=samples)

    @classmethod
    def from_samples(cls, width: int, height: int, values, depth: Depth) -> 'Image':
        """Build an Image from a flat row-major sequence of samples."""
        flat = np.asarray(values)
        if flat.size != width * height:
            raise InvalidImage(f"Expected {width * height} samples, got {flat.size}")
        return cls.from_array(flat.reshape(height, width), depth)

    @classmethod
    def constant(cls, width: int, height: int, value, depth: Depth) -> 'Image':
        return cls.from_array(np.full((height, width), value), depth)

    def pixel(self, coord: PixelCoord):
        if not (0 <= coord.x < self.width and 0 <= coord.y < self.height):
            raise IndexError(f"{coord} outside {self.width}x{self.height} image")
        return self.samples[coord.y, coord.x]

    def flat(self) -> list:
        """Samples as a flat row-major Python list."""
        return self.samples.ravel().tolist()

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.depth is other.depth
            and np.array_equal(self.samples, other.samples)
        )

    __hash__ = None

    def __repr__(self):
        return f"Image({self.width}x{self.height}, {self.depth.name})"


def to_float(img: Image) -> Image:
    """Widen a U8 image to the float compute depth, exactly."""
    if img.depth is not Depth.U8:
        raise InvalidImage(f"to_float expects a U8 image, got {img.depth.name}")
    return Image.from_array(img.samples.astype(np.float64), Depth.FLOAT)


def to_u8(img: Image) -> Image:
    """Clamp to [0, 255] and round half away from zero."""
    if img.depth is not Depth.FLOAT:
        raise InvalidImage(f"to_u8 expects a float image, got {img.depth.name}")
    values = img.samples
    if not np.isfinite(values).all():
        raise NonFiniteSample("Cannot quantize NaN or Inf samples")
    clamped = np.clip(values, 0.0, 255.0)
    # clamped values are non-negative, so floor(v + 0.5) rounds half away from zero
    return Image.from_array(np.floor(clamped + 0.5).astype(np.uint8), Depth.U8)
