"""
Bundled test corpus and the frozen golden case.
"""

import logging
from pathlib import Path
from typing import Dict, List

import config
from image_core import Image, load_image
from pipeline import PipelineConfig, run_pipeline

logger = logging.getLogger(__name__)

PRIMARY_IMAGE = 'shadow_128.pgm'
GOLDEN_SOURCE = 'golden_src_32.pgm'
GOLDEN_OUTPUT = 'golden/golden_src_32_bilinear_x2_a1.pgm'
GOLDEN_CONFIG = PipelineConfig('bilinear', 2.0, 1.0)


def corpus_dir() -> Path:
    return Path(config.SETTINGS['corpus_dir'])


def corpus_images() -> List[Path]:
    """Top-level corpus images, golden outputs excluded."""
    return sorted(corpus_dir().glob('*.pgm'))


def load_corpus() -> Dict[str, Image]:
    return {path.name: load_image(path) for path in corpus_images()}


def render_golden() -> Image:
    """Run the golden configuration on the golden source image."""
    return run_pipeline(load_image(corpus_dir() / GOLDEN_SOURCE), GOLDEN_CONFIG)


def load_golden() -> Image:
    return load_image(corpus_dir() / GOLDEN_OUTPUT)
