"""
Path-based image loading and saving, dispatched on file suffix.
"""

import logging
from pathlib import Path

from .image import Image
from .pnm import read_pnm, write_pnm
from .png import read_png, write_png

logger = logging.getLogger(__name__)


def load_image(path) -> Image:
    """Read a PGM/PNM (or .png) file into a U8 Image."""
    path = Path(path)
    data = path.read_bytes()
    if path.suffix.lower() == '.png':
        img = read_png(data)
    else:
        img = read_pnm(data)
    logger.info(f"Loaded {path} ({img.width}x{img.height})")
    return img


def save_image(path, img: Image, pnm_format: str = 'P5') -> Path:
    """Write a U8 Image; '.png' goes through Pillow, anything else is PGM."""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix.lower() == '.png':
        data = write_png(img)
    else:
        data = write_pnm(img, pnm_format)
    path.write_bytes(data)
    logger.info(f"Saved {path} ({img.width}x{img.height})")
    return path
