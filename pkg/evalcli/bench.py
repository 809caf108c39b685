"""
Enlargement timing harness.

Reports median wall time per (method, size) and the ratio against nearest
neighbour. The cost ratios commonly quoted for these kernels are printed for
comparison only; constant factors depend on the machine.
"""

import hashlib
import logging
import statistics
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

import numpy as np

from image_core import Depth, Image, to_float, to_u8
from interp import enlarge, get_kernel

logger = logging.getLogger(__name__)

REFERENCE_RATIOS = {
    'nearest': '1 (reference)',
    'bilinear': '2 to 4 times',
    'bicubic': 'about 10 times',
}


@dataclass(frozen=True)
class BenchRow:
    method: str
    size: int
    median_seconds: float
    ratio_to_nearest: Optional[float]
    checksum: str


@dataclass(frozen=True)
class BenchReport:
    rows: List[BenchRow]
    scale: float
    repetitions: int

    def ordered_by_cost(self) -> Dict[int, bool]:
        """Per size: whether nearest <= bilinear <= bicubic in median time."""
        verdicts = {}
        for size in sorted({row.size for row in self.rows}):
            medians = {row.method: row.median_seconds for row in self.rows if row.size == size}
            chain = [medians[m] for m in ('nearest', 'bilinear', 'bicubic') if m in medians]
            verdicts[size] = all(a <= b for a, b in zip(chain, chain[1:]))
        return verdicts


def bench_image(size: int, seed: int = 0) -> Image:
    rng = np.random.default_rng(seed + size)
    return Image.from_array(rng.integers(0, 256, size=(size, size), dtype=np.uint8), Depth.U8)


def checksum(img: Image) -> str:
    return hashlib.sha256(img.samples.tobytes()).hexdigest()[:16]


def run_bench(sizes: Iterable[int], methods: Iterable, repetitions: int, scale: float = 2.0) -> BenchReport:
    if repetitions < 1:
        raise ValueError(f"Repetitions must be at least 1, got {repetitions}")
    kernels = [get_kernel(m) for m in methods]
    rows = []
    for size in sizes:
        source = to_float(bench_image(size))
        medians = {}
        digests = {}
        for kernel in kernels:
            timings = []
            result = None
            for _ in range(repetitions):
                started = time.perf_counter()
                result = enlarge(source, kernel, scale)
                timings.append(time.perf_counter() - started)
            medians[kernel.name] = statistics.median(timings)
            digests[kernel.name] = checksum(to_u8(result))
            logger.info(f"{kernel.name} {size}x{size}: median {medians[kernel.name]:.6f}s")

        nearest = medians.get('nearest')
        for name, median in medians.items():
            ratio = median / nearest if nearest else None
            rows.append(BenchRow(name, size, median, ratio, digests[name]))
    return BenchReport(rows, scale, repetitions)


def format_bench(report: BenchReport) -> str:
    lines = [
        f"Enlargement benchmark (scale {report.scale:g}, median of {report.repetitions} runs)",
        "",
        f"{'method':<10} {'size':>9} {'median (s)':>12} {'x nearest':>10} {'reference':>16}  checksum",
    ]
    for row in report.rows:
        ratio = f"{row.ratio_to_nearest:.2f}" if row.ratio_to_nearest is not None else "n/a"
        lines.append(
            f"{row.method:<10} {f'{row.size}x{row.size}':>9} {row.median_seconds:>12.6f} {ratio:>10} "
            f"{REFERENCE_RATIOS.get(row.method, ''):>16}  {row.checksum}"
        )
    lines.append("")
    for size, ordered in report.ordered_by_cost().items():
        lines.append(f"{size}x{size}: nearest <= bilinear <= bicubic: {'yes' if ordered else 'no'}")
    return '\n'.join(lines) + '\n'
