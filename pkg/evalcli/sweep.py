"""
Alpha sweep harness: runs the pipeline over a grid of unsharp alphas per
interpolation method and measures each output against a reference image.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import yaml

from errors import AlphaOutOfRange, DimensionMismatch, InvalidSweepSpec
from image_core import Image
from interp import BILINEAR, KERNELS, InterpKernel, get_kernel, scaled_size
from metrics import ErrorReport, ErrorRow, compare, error_ratio
from pipeline import AverageVariant, EnlargementPipeline, PipelineConfig, downscale, enlarge_only

logger = logging.getLogger(__name__)

DEFAULT_ALPHAS = (0.0, 1.0, 0.1)
ALL_METHODS = ('nearest', 'bilinear', 'bicubic')


@dataclass(frozen=True)
class RoundTrip:
    """Reference is the input itself; the pipeline sees a downscaled copy."""
    downscale_method: InterpKernel = BILINEAR

    def __post_init__(self):
        object.__setattr__(self, 'downscale_method', get_kernel(self.downscale_method))


@dataclass(frozen=True)
class ProvidedImage:
    """Reference is a separate, already enlarged image on disk."""
    path: str


Reference = Union[RoundTrip, ProvidedImage]


@dataclass(frozen=True)
class SweepSpec:
    methods: Tuple[InterpKernel, ...] = tuple(KERNELS[name] for name in ALL_METHODS)
    start: float = DEFAULT_ALPHAS[0]
    stop: float = DEFAULT_ALPHAS[1]
    step: float = DEFAULT_ALPHAS[2]
    scale: float = 2.0
    reference: Reference = field(default_factory=RoundTrip)
    average_variant: AverageVariant = AverageVariant.EIGHT_NEIGHBOUR

    def __post_init__(self):
        methods = tuple(get_kernel(m) for m in self.methods)
        if not methods:
            raise InvalidSweepSpec("A sweep needs at least one interpolation method")
        object.__setattr__(self, 'methods', methods)
        object.__setattr__(self, 'average_variant', AverageVariant.parse(self.average_variant))
        if not self.step > 0:
            raise InvalidSweepSpec(f"Alpha step must be positive, got {self.step}")
        if self.start > self.stop:
            raise InvalidSweepSpec(f"Alpha start {self.start} exceeds stop {self.stop}")
        if self.start < 0.0 or self.stop > 1.0:
            raise AlphaOutOfRange(f"Sweep alphas must lie in [0, 1], got {self.start}..{self.stop}")
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise InvalidSweepSpec(f"Scale must be a positive finite number, got {self.scale}")

    @property
    def alphas(self) -> List[float]:
        return alpha_sequence(self.start, self.stop, self.step)


def alpha_sequence(start: float, stop: float, step: float) -> List[float]:
    """Arithmetic sequence from start to stop inclusive, free of drift."""
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def parse_alphas(text: str) -> Tuple[float, float, float]:
    """Parse 'start:stop:step'."""
    parts = text.split(':')
    if len(parts) != 3:
        raise InvalidSweepSpec(f"Expected alphas as start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise InvalidSweepSpec(f"Non-numeric alpha range {text!r}")
    return start, stop, step


def parse_methods(value) -> Tuple[InterpKernel, ...]:
    if isinstance(value, str):
        value = [item for item in value.split(',') if item.strip()]
    try:
        return tuple(get_kernel(str(item).strip()) for item in value)
    except ValueError as e:
        raise InvalidSweepSpec(str(e))


def load_sweep_preset(path) -> Dict:
    """Read a YAML sweep preset into a plain dict of settings."""
    with open(path, 'r') as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise InvalidSweepSpec(f"Sweep preset {path} must be a mapping")
    logger.info(f"Loaded sweep preset {path}: {sorted(data)}")
    return data


def build_sweep_spec(preset: Optional[Dict] = None, **overrides) -> SweepSpec:
    """Merge a preset with explicit overrides (``None`` means 'not given')."""
    settings = dict(preset or {})
    settings.update({key: value for key, value in overrides.items() if value is not None})

    known = {'methods', 'alphas', 'scale', 'reference', 'downscale_method', 'average_variant'}
    unknown = set(settings) - known
    if unknown:
        raise InvalidSweepSpec(f"Unknown sweep settings: {', '.join(sorted(unknown))}")

    kwargs = {}
    if 'methods' in settings:
        kwargs['methods'] = parse_methods(settings['methods'])

    alphas = settings.get('alphas')
    if isinstance(alphas, str):
        kwargs['start'], kwargs['stop'], kwargs['step'] = parse_alphas(alphas)
    elif isinstance(alphas, dict):
        try:
            kwargs['start'] = float(alphas.get('start', DEFAULT_ALPHAS[0]))
            kwargs['stop'] = float(alphas.get('stop', DEFAULT_ALPHAS[1]))
            kwargs['step'] = float(alphas.get('step', DEFAULT_ALPHAS[2]))
        except (TypeError, ValueError):
            raise InvalidSweepSpec(f"Non-numeric alpha range {alphas!r}")
    elif alphas is not None:
        raise InvalidSweepSpec(f"Unsupported alphas setting {alphas!r}")

    if 'scale' in settings:
        try:
            kwargs['scale'] = float(settings['scale'])
        except (TypeError, ValueError):
            raise InvalidSweepSpec(f"Non-numeric scale {settings['scale']!r}")

    reference = settings.get('reference', 'round-trip')
    if reference == 'round-trip':
        kwargs['reference'] = RoundTrip(settings.get('downscale_method', 'bilinear'))
    else:
        kwargs['reference'] = ProvidedImage(str(reference))

    if 'average_variant' in settings:
        kwargs['average_variant'] = settings['average_variant']

    return SweepSpec(**kwargs)


def run_sweep(source: Image, spec: SweepSpec, reference: Optional[Image] = None) -> List[ErrorReport]:
    """Build one ErrorReport per method of ``spec``.

    With a RoundTrip reference ``source`` is the pristine image: it is
    downscaled by 1 / scale and every pipeline output is compared against it.
    With a ProvidedImage reference ``source`` is the low-resolution input and
    ``reference`` the loaded comparison image.
    """
    if isinstance(spec.reference, RoundTrip):
        shadow = downscale(source, spec.reference.downscale_method, spec.scale)
        target = source
        width, height = source.width, source.height
    else:
        if reference is None:
            raise InvalidSweepSpec("A provided-image sweep needs the reference image")
        shadow = source
        target = reference
        width, height = scaled_size(source.width, source.height, spec.scale)
        if (target.width, target.height) != (width, height):
            raise DimensionMismatch(
                f"Reference is {target.width}x{target.height}, pipeline output is {width}x{height}"
            )

    alphas = spec.alphas
    reports = []
    for kernel in spec.methods:
        cfg = PipelineConfig(kernel, spec.scale, alphas[0], spec.average_variant)
        pipeline = EnlargementPipeline(cfg)
        smoothed = pipeline.prepare(shadow, width, height)

        rows = []
        for alpha in alphas:
            output = pipeline.sharpen(smoothed, alpha)
            rows.append(ErrorRow.from_diff(alpha, compare(output, target)))

        baseline = error_ratio(enlarge_only(shadow, kernel, width, height), target)
        logger.info(f"Swept {kernel.name}: {len(rows)} alphas, baseline {baseline:.6f}%")
        reports.append(ErrorReport(kernel.name, rows, baseline_percent=baseline))
    return reports


@dataclass(frozen=True)
class SweepSummary:
    best_method: str
    best_alpha: float
    best_error: float
    # method -> error(alpha=1) < error(alpha=0); None when either alpha was not swept
    sharpening_trend: Dict[str, Optional[bool]]

    @property
    def bilinear_alpha_one_is_best(self) -> bool:
        return self.best_method == 'bilinear' and math.isclose(self.best_alpha, 1.0)


def summarize(reports: List[ErrorReport]) -> SweepSummary:
    best_method, best_row = None, None
    trend = {}
    for report in reports:
        row = report.best()
        if best_row is None or row.error_percent < best_row.error_percent:
            best_method, best_row = report.method, row
        try:
            trend[report.method] = report.row_for(1.0).error_percent < report.row_for(0.0).error_percent
        except KeyError:
            trend[report.method] = None
    return SweepSummary(best_method, best_row.alpha, best_row.error_percent, trend)
