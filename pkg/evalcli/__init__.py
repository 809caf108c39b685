"""
Evaluation harness and command handlers.
"""

from .sweep import (
    ALL_METHODS, ProvidedImage, RoundTrip, SweepSpec, SweepSummary,
    alpha_sequence, build_sweep_spec, load_sweep_preset, parse_alphas,
    parse_methods, run_sweep, summarize,
)
from .report import CSV_HEADER, format_markdown, format_summary, read_sweep_csv, write_sweep_csv
from .bench import BenchReport, BenchRow, format_bench, run_bench
from .commands import cmd_bench, cmd_diff, cmd_enlarge, cmd_pipeline, cmd_sweep

__all__ = [
    'ALL_METHODS', 'ProvidedImage', 'RoundTrip', 'SweepSpec', 'SweepSummary',
    'alpha_sequence', 'build_sweep_spec', 'load_sweep_preset', 'parse_alphas',
    'parse_methods', 'run_sweep', 'summarize',
    'CSV_HEADER', 'format_markdown', 'format_summary', 'read_sweep_csv', 'write_sweep_csv',
    'BenchReport', 'BenchRow', 'format_bench', 'run_bench',
    'cmd_bench', 'cmd_diff', 'cmd_enlarge', 'cmd_pipeline', 'cmd_sweep',
]
