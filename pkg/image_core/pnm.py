"""
PGM (Netpbm P2/P5) codec for 8-bit grayscale images.

Format specification: http://netpbm.sourceforge.net/doc/pgm.html
"""

import logging
import re

import numpy as np

from errors import MalformedHeader, PnmError, TruncatedData, UnsupportedMaxval
from .image import Depth, Image

logger = logging.getLogger(__name__)

PNM_FORMATS = ('P2', 'P5')

_WHITESPACE = b' \t\r\n\v\f'
_TOKEN = re.compile(rb'\d+')


class _HeaderReader:
    """Pulls whitespace-separated header integers, skipping '#' comments."""

    def __init__(self, data: bytes, pos: int):
        self.data = data
        self.pos = pos

    def skip_blank(self):
        data = self.data
        while self.pos < len(data):
            byte = data[self.pos:self.pos + 1]
            if byte in _WHITESPACE:
                self.pos += 1
            elif byte == b'#':
                end = data.find(b'\n', self.pos)
                self.pos = len(data) if end < 0 else end + 1
            else:
                break

    def next_int(self, name: str) -> int:
        if self.pos >= len(self.data) or self.data[self.pos:self.pos + 1] not in _WHITESPACE + b'#':
            raise MalformedHeader(f"Expected whitespace before {name}")
        self.skip_blank()
        match = _TOKEN.match(self.data, self.pos)
        if not match:
            raise MalformedHeader(f"Missing or invalid {name} in PGM header")
        self.pos = match.end()
        return int(match.group())


def read_pnm(data: bytes) -> Image:
    """Decode a P2 or P5 PGM byte string into a U8 Image."""
    magic = data[:2]
    if magic not in (b'P2', b'P5'):
        raise MalformedHeader(f"Unsupported PNM magic {magic!r}")

    header = _HeaderReader(data, 2)
    width = header.next_int('width')
    height = header.next_int('height')
    maxval = header.next_int('maxval')

    if width < 1 or height < 1:
        raise MalformedHeader(f"Invalid PGM dimensions {width}x{height}")
    if maxval > 255:
        raise UnsupportedMaxval(f"maxval {maxval} exceeds 255")
    if maxval < 1:
        raise MalformedHeader(f"Invalid maxval {maxval}")

    count = width * height
    if magic == b'P5':
        # exactly one whitespace byte separates maxval from the raster
        if header.pos >= len(data) or data[header.pos:header.pos + 1] not in _WHITESPACE:
            raise MalformedHeader("Missing whitespace after maxval")
        raster = data[header.pos + 1:header.pos + 1 + count]
        if len(raster) < count:
            raise TruncatedData(f"Expected {count} samples, got {len(raster)}")
        samples = np.frombuffer(raster, dtype=np.uint8)
    else:
        body = data[header.pos:]
        tokens = body.split()
        if len(tokens) < count:
            raise TruncatedData(f"Expected {count} samples, got {len(tokens)}")
        try:
            samples = np.array([int(token) for token in tokens[:count]], dtype=np.int64)
        except ValueError:
            raise PnmError("Non-numeric sample in P2 payload")
        except OverflowError:
            raise PnmError("P2 sample out of range")

    if samples.max() > maxval:
        raise PnmError(f"Sample value {int(samples.max())} exceeds maxval {maxval}")

    logger.debug(f"Decoded {magic.decode()} image {width}x{height} (maxval {maxval})")
    return Image.from_samples(width, height, samples, Depth.U8)


def write_pnm(img: Image, format: str = 'P5') -> bytes:
    """Encode a U8 Image as P2 (ASCII) or P5 (binary) PGM with maxval 255."""
    if img.depth is not Depth.U8:
        raise ValueError(f"write_pnm expects a U8 image, got {img.depth.name}")
    if format not in PNM_FORMATS:
        raise ValueError(f"Unknown PNM format {format!r}, expected one of {PNM_FORMATS}")

    header = f"{format}\n{img.width} {img.height}\n255\n".encode('ascii')
    if format == 'P5':
        return header + img.samples.tobytes()

    rows = [' '.join(str(v) for v in row) for row in img.samples.tolist()]
    return header + ('\n'.join(rows) + '\n').encode('ascii')
