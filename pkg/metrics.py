"""
Image-pair difference metrics and the per-alpha error report.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from errors import DimensionMismatch, InvalidImage
from image_core import Depth, Image

logger = logging.getLogger(__name__)

PEAK = 255.0


def _abs_diff(a: Image, b: Image) -> np.ndarray:
    if a.depth is not Depth.U8 or b.depth is not Depth.U8:
        raise InvalidImage("Metrics are defined on U8 images")
    if (a.width, a.height) != (b.width, b.height):
        raise DimensionMismatch(
            f"Cannot compare {a.width}x{a.height} with {b.width}x{b.height}"
        )
    return np.abs(a.samples.astype(np.int64) - b.samples.astype(np.int64))


def error_ratio(a: Image, b: Image) -> float:
    """Mean absolute difference as a percentage of the full 8-bit range."""
    diff = _abs_diff(a, b)
    return 100.0 * float(diff.sum()) / (diff.size * PEAK)


def mae(a: Image, b: Image) -> float:
    diff = _abs_diff(a, b)
    return float(diff.sum()) / diff.size


def mse(a: Image, b: Image) -> float:
    diff = _abs_diff(a, b)
    return float((diff * diff).sum()) / diff.size


def psnr(a: Image, b: Image) -> float:
    """Peak signal-to-noise ratio in dB; +inf for identical images."""
    err = mse(a, b)
    if err == 0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / err)


@dataclass(frozen=True)
class ImageDiff:
    error_percent: float
    mae: float
    mse: float
    psnr: float


def compare(a: Image, b: Image) -> ImageDiff:
    """All four metrics from a single pass over the difference image."""
    diff = _abs_diff(a, b)
    n = diff.size
    total = float(diff.sum())
    squared = float((diff * diff).sum()) / n
    return ImageDiff(
        error_percent=100.0 * total / (n * PEAK),
        mae=total / n,
        mse=squared,
        psnr=math.inf if squared == 0 else 10.0 * math.log10(PEAK * PEAK / squared),
    )


@dataclass(frozen=True)
class ErrorRow:
    alpha: float
    error_percent: float
    mae: float
    mse: float
    psnr: float

    @classmethod
    def from_diff(cls, alpha: float, diff: ImageDiff) -> 'ErrorRow':
        return cls(alpha, diff.error_percent, diff.mae, diff.mse, diff.psnr)


@dataclass(frozen=True)
class ErrorReport:
    """Error ratio per unsharp alpha for one interpolation method."""
    method: str
    rows: Tuple[ErrorRow, ...]
    baseline_percent: Optional[float] = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, 'rows', rows)
        if not rows:
            raise ValueError(f"Error report for {self.method} has no rows")
        alphas = [row.alpha for row in rows]
        if any(later <= earlier for earlier, later in zip(alphas, alphas[1:])):
            raise ValueError(f"Alphas must be strictly increasing, got {alphas}")
        if any(row.error_percent < 0 for row in rows):
            raise ValueError("Error percentages must be non-negative")

    @property
    def alphas(self) -> Sequence[float]:
        return [row.alpha for row in self.rows]

    def row_for(self, alpha: float) -> ErrorRow:
        for row in self.rows:
            if math.isclose(row.alpha, alpha, abs_tol=1e-9):
                return row
        raise KeyError(f"No row for alpha={alpha} in {self.method} report")

    def best(self) -> ErrorRow:
        # first row wins ties so the result is deterministic
        return min(self.rows, key=lambda row: row.error_percent)
