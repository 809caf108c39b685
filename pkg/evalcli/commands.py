"""
Command handlers behind the CLI verbs. Each returns a process exit status
and logs exactly one ERROR line when it fails.
"""

import logging
import sys
from typing import Iterable, Optional

from errors import ShadowZoomError
from image_core import load_image, save_image, to_float, to_u8
from interp import enlarge, get_kernel
from metrics import compare
from pipeline import PipelineConfig, run_pipeline
from .bench import format_bench, run_bench
from .report import format_markdown, format_summary, write_sweep_csv
from .sweep import ProvidedImage, SweepSpec, run_sweep, summarize

logger = logging.getLogger(__name__)

# Failures a command reports as a diagnostic instead of a traceback
EXPECTED_ERRORS = (ShadowZoomError, OSError, ValueError)


def cmd_enlarge(input_path, output_path, method, scale: float, pnm_format: str = 'P5') -> int:
    """Interpolate only, no filters."""
    try:
        img = load_image(input_path)
        kernel = get_kernel(method)
        result = to_u8(enlarge(to_float(img), kernel, scale))
        save_image(output_path, result, pnm_format)
    except EXPECTED_ERRORS as e:
        logger.error(f"enlarge failed: {e}")
        return 1
    print(f"✓ {kernel.name} x{scale:g}: {img.width}x{img.height} -> {result.width}x{result.height}, "
          f"saved {output_path}")
    return 0


def cmd_pipeline(input_path, output_path, method, scale: float, alpha: float,
                 average_variant: str = 'eight', pnm_format: str = 'P5') -> int:
    """Enlarge, average and sharpen one image."""
    try:
        cfg = PipelineConfig(method, scale, alpha, average_variant)
        img = load_image(input_path)
        result = run_pipeline(img, cfg)
        save_image(output_path, result, pnm_format)
    except EXPECTED_ERRORS as e:
        logger.error(f"pipeline failed: {e}")
        return 1
    print(f"✓ {cfg.describe()}: {img.width}x{img.height} -> {result.width}x{result.height}, "
          f"saved {output_path}")
    return 0


def cmd_sweep(spec: SweepSpec, input_path, output_path: Optional[str] = None,
              output_format: str = 'csv') -> int:
    """Alpha sweep per method, written as CSV or Markdown tables."""
    try:
        source = load_image(input_path)
        reference = None
        if isinstance(spec.reference, ProvidedImage):
            reference = load_image(spec.reference.path)
        reports = run_sweep(source, spec, reference)
        if output_format == 'md':
            text = format_markdown(reports)
        else:
            text = write_sweep_csv(reports)
        if output_path:
            with open(output_path, 'w', newline='') as f:
                f.write(text)
    except EXPECTED_ERRORS as e:
        logger.error(f"sweep failed: {e}")
        return 1

    summary = format_summary(summarize(reports))
    if output_path:
        print(f"✓ Wrote {len(reports)} tables x {len(spec.alphas)} rows to {output_path}")
        sys.stdout.write(summary)
        for report in reports:
            print(f"  {report.method}: enlarge-only baseline {report.baseline_percent:.6f}%")
    else:
        sys.stdout.write(text)
        if output_format == 'md':
            sys.stdout.write('\n' + summary)
    return 0


def cmd_bench(sizes: Iterable[int], methods: Iterable[str], repetitions: int, scale: float = 2.0) -> int:
    """Time enlarge-only per method and size."""
    try:
        report = run_bench(list(sizes), list(methods), repetitions, scale)
    except EXPECTED_ERRORS as e:
        logger.error(f"bench failed: {e}")
        return 1
    sys.stdout.write(format_bench(report))
    return 0


def cmd_diff(first_path, second_path) -> int:
    """Print error ratio, MAE, MSE and PSNR for an image pair."""
    try:
        diff = compare(load_image(first_path), load_image(second_path))
    except EXPECTED_ERRORS as e:
        logger.error(f"diff failed: {e}")
        return 1
    print(f"error_percent: {diff.error_percent:.6f}%")
    print(f"mae: {diff.mae:.6f}")
    print(f"mse: {diff.mse:.6f}")
    print(f"psnr: {diff.psnr:.4f} dB")
    return 0
