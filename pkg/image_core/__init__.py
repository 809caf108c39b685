"""
Grayscale image core package.
"""

from .image import Depth, Image, PixelCoord, to_float, to_u8
from .pnm import PNM_FORMATS, read_pnm, write_pnm
from .png import read_png, write_png
from .files import load_image, save_image

__all__ = [
    'Depth', 'Image', 'PixelCoord', 'to_float', 'to_u8',
    'PNM_FORMATS', 'read_pnm', 'write_pnm',
    'read_png', 'write_png',
    'load_image', 'save_image',
]
