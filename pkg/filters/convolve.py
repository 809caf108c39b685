"""
Replicate-border 3x3 correlation engine.
"""

import logging

from scipy.ndimage import correlate

from errors import InvalidImage
from image_core import Depth, Image
from .masks import REPLICATE, FilterMask

logger = logging.getLogger(__name__)


def convolve_3x3(img: Image, mask: FilterMask) -> Image:
    """Correlate a float image with a 3x3 mask, replicating edge pixels.

    Output stays in the float domain; nothing is clamped here.
    """
    if img.depth is not Depth.FLOAT:
        raise InvalidImage(f"convolve_3x3 expects a float image, got {img.depth.name}")
    if mask.coeffs.shape != (3, 3):
        raise ValueError(f"Expected a 3x3 mask, got shape {mask.coeffs.shape}")
    if mask.border != REPLICATE:
        raise ValueError(f"Unsupported border policy {mask.border!r}")

    # scipy's 'nearest' mode is edge replication
    result = correlate(img.samples, mask.coeffs, mode='nearest')
    logger.debug(f"Applied {mask!r} to {img.width}x{img.height} image")
    return Image.from_array(result, Depth.FLOAT)
