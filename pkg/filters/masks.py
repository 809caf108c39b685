"""
3x3 masks: neighbour averaging and the alpha-parameterised unsharp mask.
"""

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from errors import AlphaOutOfRange


class MaskKind(enum.Enum):
    AVERAGE = 'average'
    NINE_CELL = 'nine-cell'
    UNSHARP = 'unsharp'


REPLICATE = 'replicate'


@dataclass(frozen=True, eq=False)
class FilterMask:
    """A 3x3 correlation mask together with its border policy."""
    kind: MaskKind
    coeffs: np.ndarray
    alpha: Optional[float] = None
    border: str = REPLICATE

    def total(self) -> float:
        return float(self.coeffs.sum())

    def as_lists(self) -> list:
        return self.coeffs.tolist()

    def __repr__(self):
        label = self.kind.value if self.alpha is None else f"{self.kind.value}(alpha={self.alpha})"
        return f"FilterMask({label})"


def _freeze(coeffs) -> np.ndarray:
    array = np.array(coeffs, dtype=np.float64)
    array.setflags(write=False)
    return array


def average_mask() -> FilterMask:
    """Mean of the eight neighbours; the centre pixel does not contribute."""
    coeffs = np.full((3, 3), 1.0 / 8.0)
    coeffs[1, 1] = 0.0
    return FilterMask(MaskKind.AVERAGE, _freeze(coeffs))


def nine_cell_mask() -> FilterMask:
    """Plain 3x3 box mean, centre included."""
    return FilterMask(MaskKind.NINE_CELL, _freeze(np.full((3, 3), 1.0 / 9.0)))


def validate_alpha(alpha: float) -> float:
    try:
        value = float(alpha)
    except (TypeError, ValueError):
        raise AlphaOutOfRange(f"Alpha must be a number in [0, 1], got {alpha!r}")
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise AlphaOutOfRange(f"Alpha must lie in [0, 1], got {alpha!r}")
    return value


def unsharp_mask(alpha: float) -> FilterMask:
    """Negative-Laplacian sharpening mask scaled by 1 / (alpha + 1)."""
    a = validate_alpha(alpha)
    coeffs = np.array([
        [-a, a - 1.0, -a],
        [a - 1.0, a + 5.0, a - 1.0],
        [-a, a - 1.0, -a],
    ]) / (a + 1.0)
    return FilterMask(MaskKind.UNSHARP, _freeze(coeffs), alpha=a)
