"""
3x3 spatial filter package.
"""

from .masks import (
    REPLICATE, FilterMask, MaskKind,
    average_mask, nine_cell_mask, unsharp_mask, validate_alpha,
)
from .convolve import convolve_3x3

__all__ = [
    'REPLICATE', 'FilterMask', 'MaskKind',
    'average_mask', 'nine_cell_mask', 'unsharp_mask', 'validate_alpha',
    'convolve_3x3',
]
