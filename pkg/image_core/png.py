"""
Optional 8-bit grayscale PNG adapter built on Pillow.

PGM stays the canonical bit-exact format; PNG is offered for convenience.
"""

import io
import logging

import numpy as np
from PIL import Image as PILImage

from .image import Depth, Image

logger = logging.getLogger(__name__)


def read_png(data: bytes) -> Image:
    """Decode PNG bytes, converting any colour mode to 8-bit luminance."""
    with PILImage.open(io.BytesIO(data)) as pil_image:
        if pil_image.mode != 'L':
            logger.info(f"Converting PNG from mode {pil_image.mode} to L")
            pil_image = pil_image.convert('L')
        array = np.asarray(pil_image, dtype=np.uint8)
    return Image.from_array(array, Depth.U8)


def write_png(img: Image) -> bytes:
    if img.depth is not Depth.U8:
        raise ValueError(f"write_png expects a U8 image, got {img.depth.name}")
    buffer = io.BytesIO()
    PILImage.fromarray(np.ascontiguousarray(img.samples)).save(buffer, format='PNG')
    return buffer.getvalue()
