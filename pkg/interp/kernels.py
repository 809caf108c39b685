"""
Interpolation kernels u(s) for nearest, linear and cubic convolution.
"""

import enum
from dataclasses import dataclass

import numpy as np


class Method(enum.Enum):
    NEAREST = 'nearest'
    BILINEAR = 'bilinear'
    BICUBIC = 'bicubic'


@dataclass(frozen=True)
class InterpKernel:
    """1D interpolation kernel.

    ``support`` is the half-width outside which u(s) vanishes and ``taps``
    the number of grid points one output sample draws from.
    """
    method: Method
    support: float
    taps: int

    @property
    def name(self) -> str:
        return self.method.value


NEAREST = InterpKernel(Method.NEAREST, 0.5, 1)
BILINEAR = InterpKernel(Method.BILINEAR, 1.0, 2)
BICUBIC = InterpKernel(Method.BICUBIC, 2.0, 4)

KERNELS = {kernel.name: kernel for kernel in (NEAREST, BILINEAR, BICUBIC)}


def get_kernel(method) -> InterpKernel:
    """Look up a kernel by name, Method or InterpKernel."""
    if isinstance(method, InterpKernel):
        return method
    if isinstance(method, Method):
        return KERNELS[method.value]
    try:
        return KERNELS[str(method).lower()]
    except KeyError:
        raise ValueError(f"Unknown interpolation method {method!r}, expected one of {sorted(KERNELS)}")


def _nearest(a):
    # the |s| == 0.5 tie belongs to the unit branch
    return np.where(a <= 0.5, 1.0, 0.0)


def _linear(a):
    return np.where(a <= 1.0, 1.0 - a, 0.0)


def _cubic(a):
    # Keys cubic convolution, a = -1/2
    a2 = a * a
    a3 = a2 * a
    inner = 1.5 * a3 - 2.5 * a2 + 1.0
    outer = -0.5 * a3 + 2.5 * a2 - 4.0 * a + 2.0
    return np.where(a < 1.0, inner, np.where(a < 2.0, outer, 0.0))


_PROFILES = {
    Method.NEAREST: _nearest,
    Method.BILINEAR: _linear,
    Method.BICUBIC: _cubic,
}


def weights(kernel: InterpKernel, s) -> np.ndarray:
    """Vectorised u(s) over an array of signed distances."""
    return _PROFILES[kernel.method](np.abs(np.asarray(s, dtype=np.float64)))


def kernel_eval(kernel: InterpKernel, s: float) -> float:
    if not np.isfinite(s):
        raise ValueError(f"Kernel distance must be finite, got {s}")
    return float(weights(kernel, s))
