"""
CSV and Markdown emitters for sweep results.
"""

import csv
import io
import math
from collections import OrderedDict
from typing import Dict, Iterable, List

from metrics import ErrorReport, ErrorRow
from .sweep import SweepSummary

CSV_HEADER = ['method', 'alfa', 'error_percent', 'mae', 'mse', 'psnr']


def write_sweep_csv(reports: Iterable[ErrorReport]) -> str:
    """RFC 4180 CSV, one row per (method, alfa); floats keep full precision."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\r\n')
    writer.writerow(CSV_HEADER)
    for report in reports:
        for row in report.rows:
            writer.writerow([
                report.method,
                repr(row.alpha),
                repr(row.error_percent),
                repr(row.mae),
                repr(row.mse),
                repr(row.psnr),
            ])
    return buffer.getvalue()


def read_sweep_csv(text: str) -> Dict[str, ErrorReport]:
    """Parse CSV produced by write_sweep_csv back into reports."""
    reader = csv.reader(io.StringIO(text, newline=''))
    header = next(reader, None)
    if header != CSV_HEADER:
        raise ValueError(f"Unexpected sweep CSV header {header}")

    grouped: Dict[str, List[ErrorRow]] = OrderedDict()
    for line_number, record in enumerate(reader, start=2):
        if not record:
            continue
        if len(record) != len(CSV_HEADER):
            raise ValueError(f"Line {line_number}: expected {len(CSV_HEADER)} fields, got {len(record)}")
        method, *values = record
        alpha, error_percent, mae, mse, psnr = (float(value) for value in values)
        grouped.setdefault(method, []).append(ErrorRow(alpha, error_percent, mae, mse, psnr))

    return OrderedDict((method, ErrorReport(method, rows)) for method, rows in grouped.items())


def _alpha_label(alpha: float) -> str:
    return f"{alpha:.1f}" if round(alpha, 1) == alpha else f"{alpha:g}"


def _psnr_label(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.4f}"


def format_markdown(reports: Iterable[ErrorReport]) -> str:
    """One Alfa/Error table per method, extra metric columns on the right."""
    sections = []
    for number, report in enumerate(reports, start=1):
        lines = [
            f"### Table {number}: {report.method} interpolation",
            "",
            "| Alfa | Error | MAE | MSE | PSNR (dB) |",
            "|-----:|------:|----:|----:|----------:|",
        ]
        for row in report.rows:
            lines.append(
                f"| {_alpha_label(row.alpha)} | {row.error_percent:.6f}% | {row.mae:.6f} "
                f"| {row.mse:.6f} | {_psnr_label(row.psnr)} |"
            )
        if report.baseline_percent is not None:
            lines.extend(["", f"Enlarge-only baseline (no filters): {report.baseline_percent:.6f}%"])
        sections.append('\n'.join(lines))
    return '\n\n'.join(sections) + '\n'


def format_summary(summary: SweepSummary) -> str:
    lines = [
        f"Best cell: {summary.best_method} at alfa={_alpha_label(summary.best_alpha)} "
        f"({summary.best_error:.6f}%)"
    ]
    for method, improved in summary.sharpening_trend.items():
        if improved is None:
            verdict = "n/a (alfa 0.0 and 1.0 not both swept)"
        else:
            verdict = "yes" if improved else "no"
        lines.append(f"  {method}: error(alfa=1.0) < error(alfa=0.0): {verdict}")
    if not summary.bilinear_alpha_one_is_best:
        lines.append("Deviation: the global minimum is not bilinear at alfa=1.0 on this image")
    return '\n'.join(lines) + '\n'
