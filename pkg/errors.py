"""
Exception hierarchy shared by every shadowzoom package.
"""


class ShadowZoomError(Exception):
    """Base class for all errors raised by the toolkit."""


class PnmError(ShadowZoomError, ValueError):
    """A PNM byte stream could not be decoded."""


class MalformedHeader(PnmError):
    pass


class TruncatedData(PnmError):
    pass


class UnsupportedMaxval(PnmError):
    pass


class InvalidImage(ShadowZoomError, ValueError):
    """Image fields violate the raster invariants."""


class NonFiniteSample(ShadowZoomError, ValueError):
    pass


class DegenerateOutput(ShadowZoomError, ValueError):
    """A resampling target rounds to zero pixels along an axis."""


class InvalidScale(ShadowZoomError, ValueError):
    pass


class AlphaOutOfRange(ShadowZoomError, ValueError):
    pass


class DimensionMismatch(ShadowZoomError, ValueError):
    pass


class InvalidSweepSpec(ShadowZoomError, ValueError):
    pass
