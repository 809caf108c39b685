"""
Interpolation package: kernels and the separable resampler.
"""

from .kernels import (
    BICUBIC, BILINEAR, KERNELS, NEAREST,
    InterpKernel, Method, get_kernel, kernel_eval, weights,
)
from .resample import (
    ResamplePlan, build_plan, enlarge, resample_2d,
    round_half_away, scaled_size, source_coordinates,
)

__all__ = [
    'BICUBIC', 'BILINEAR', 'KERNELS', 'NEAREST',
    'InterpKernel', 'Method', 'get_kernel', 'kernel_eval', 'weights',
    'ResamplePlan', 'build_plan', 'enlarge', 'resample_2d',
    'round_half_away', 'scaled_size', 'source_coordinates',
]
