#!/usr/bin/env python3
"""
Command-line front end for the shadowzoom enlargement toolkit.
"""

import argparse
import logging
import sys
import os

# Add current directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import config
from errors import ShadowZoomError
from evalcli import (
    ALL_METHODS, build_sweep_spec, cmd_bench, cmd_diff, cmd_enlarge,
    cmd_pipeline, cmd_sweep, load_sweep_preset,
)
from image_core import PNM_FORMATS

logger = logging.getLogger(__name__)


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not value > 0 or value == float('inf'):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text!r}")
    return value


def size_list(text: str):
    try:
        sizes = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not sizes or any(size < 1 for size in sizes):
        raise argparse.ArgumentTypeError(f"sizes must be positive, got {text!r}")
    return sizes


def method_list(text: str):
    methods = [part.strip().lower() for part in text.split(',') if part.strip()]
    unknown = [m for m in methods if m not in ALL_METHODS]
    if not methods or unknown:
        raise argparse.ArgumentTypeError(f"methods must be drawn from {', '.join(ALL_METHODS)}")
    return methods


def build_parser() -> argparse.ArgumentParser:
    settings = config.SETTINGS
    parser = argparse.ArgumentParser(
        prog='shadowzoom',
        description="Grayscale image enlargement: interpolation, averaging and unsharp filtering",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add_method(sub):
        sub.add_argument('--method', choices=ALL_METHODS, default=settings['method'],
                         help=f"Interpolation method (default: {settings['method']})")

    def add_pnm_format(sub):
        sub.add_argument('--pnm-format', choices=PNM_FORMATS, default='P5',
                         help="PGM flavour for the output file (default: P5)")

    enlarge = subparsers.add_parser('enlarge', help="Interpolate only, no filters")
    enlarge.add_argument('input', help="Input PGM (or PNG)")
    enlarge.add_argument('output', help="Output PGM (or PNG)")
    add_method(enlarge)
    enlarge.add_argument('--scale', type=positive_float, default=settings['scale'])
    add_pnm_format(enlarge)

    pipeline = subparsers.add_parser('pipeline', help="Enlarge, average, then unsharp")
    pipeline.add_argument('input')
    pipeline.add_argument('output')
    add_method(pipeline)
    pipeline.add_argument('--scale', type=positive_float, default=settings['scale'])
    pipeline.add_argument('--alpha', type=float, default=settings['alpha'],
                          help="Unsharp alpha in [0, 1]")
    pipeline.add_argument('--average-variant', choices=config.AVERAGE_VARIANTS,
                          default=settings['average_variant'])
    add_pnm_format(pipeline)

    sweep = subparsers.add_parser('sweep', help="Error ratio per alpha for each method")
    sweep.add_argument('input', help="Pristine image (round trip) or low-resolution input")
    sweep.add_argument('--config', help="YAML sweep preset")
    sweep.add_argument('--methods', type=method_list, help="Comma-separated methods (default: all)")
    sweep.add_argument('--alphas', help="start:stop:step (default: 0.0:1.0:0.1)")
    sweep.add_argument('--scale', type=positive_float)
    reference = sweep.add_mutually_exclusive_group()
    reference.add_argument('--reference', help="Enlarged reference image to compare against")
    reference.add_argument('--round-trip', action='store_true',
                           help="Downscale the input and compare against it (default)")
    sweep.add_argument('--downscale-method', choices=ALL_METHODS)
    sweep.add_argument('--average-variant', choices=config.AVERAGE_VARIANTS)
    sweep.add_argument('--format', choices=('csv', 'md'), default='csv')
    sweep.add_argument('--output', help="Write the tables here instead of stdout")

    bench = subparsers.add_parser('bench', help="Time enlarge-only per method and size")
    bench.add_argument('--sizes', type=size_list, default=[256, 512])
    bench.add_argument('--methods', type=method_list, default=list(ALL_METHODS))
    bench.add_argument('--repetitions', type=int, default=settings['bench_repetitions'])
    bench.add_argument('--scale', type=positive_float, default=2.0)

    diff = subparsers.add_parser('diff', help="Metrics for an image pair")
    diff.add_argument('first')
    diff.add_argument('second')

    return parser


def run_sweep_command(args) -> int:
    try:
        preset = load_sweep_preset(args.config) if args.config else {}
        if args.reference:
            reference = args.reference
        elif args.round_trip:
            reference = 'round-trip'
        else:
            reference = None
        spec = build_sweep_spec(
            preset,
            methods=args.methods,
            alphas=args.alphas,
            scale=args.scale if args.scale is not None else preset.get('scale', config.SETTINGS['scale']),
            reference=reference,
            downscale_method=args.downscale_method or preset.get('downscale_method')
            or config.SETTINGS['downscale_method'],
            average_variant=args.average_variant or preset.get('average_variant')
            or config.SETTINGS['average_variant'],
        )
    except (ShadowZoomError, OSError, ValueError) as e:
        logger.error(f"sweep failed: {e}")
        return 1
    return cmd_sweep(spec, args.input, args.output, args.format)


def main(argv=None) -> int:
    """Parse arguments and dispatch to a command handler."""
    args = build_parser().parse_args(argv)

    if args.command == 'enlarge':
        return cmd_enlarge(args.input, args.output, args.method, args.scale, args.pnm_format)
    if args.command == 'pipeline':
        return cmd_pipeline(args.input, args.output, args.method, args.scale, args.alpha,
                            args.average_variant, args.pnm_format)
    if args.command == 'sweep':
        return run_sweep_command(args)
    if args.command == 'bench':
        return cmd_bench(args.sizes, args.methods, args.repetitions, args.scale)
    if args.command == 'diff':
        return cmd_diff(args.first, args.second)
    return 2


if __name__ == "__main__":
    sys.exit(main())
