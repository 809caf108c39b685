"""
Centralized configuration management for the application.

This module loads configuration from environment variables and provides
a single source of truth for all configuration settings.
"""

import os
import logging
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Set up logging
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

METHOD_NAMES = ('nearest', 'bilinear', 'bicubic')
AVERAGE_VARIANTS = ('eight', 'nine')

# Pipeline defaults
DEFAULT_METHOD = os.getenv('SHADOWZOOM_METHOD', 'bilinear').lower()
DEFAULT_SCALE = os.getenv('SHADOWZOOM_SCALE', '2.0')
DEFAULT_ALPHA = os.getenv('SHADOWZOOM_ALPHA', '1.0')
AVERAGE_VARIANT = os.getenv('SHADOWZOOM_AVERAGE_VARIANT', 'eight').lower()
DOWNSCALE_METHOD = os.getenv('SHADOWZOOM_DOWNSCALE_METHOD', 'bilinear').lower()

# Evaluation harness
CORPUS_DIR = os.getenv(
    'SHADOWZOOM_CORPUS_DIR',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'corpus')
)
BENCH_REPETITIONS = os.getenv('SHADOWZOOM_BENCH_REPETITIONS', '5')


def _as_float(value: str):
    try:
        return float(value)
    except ValueError:
        return None


def _as_int(value: str):
    try:
        return int(value)
    except ValueError:
        return None


# Validate that every setting holds a usable value
def validate_config():
    """Ensure all configuration variables hold usable values."""
    problems = []

    if DEFAULT_METHOD not in METHOD_NAMES:
        problems.append(f"SHADOWZOOM_METHOD={DEFAULT_METHOD!r}")
    if DOWNSCALE_METHOD not in METHOD_NAMES:
        problems.append(f"SHADOWZOOM_DOWNSCALE_METHOD={DOWNSCALE_METHOD!r}")
    if AVERAGE_VARIANT not in AVERAGE_VARIANTS:
        problems.append(f"SHADOWZOOM_AVERAGE_VARIANT={AVERAGE_VARIANT!r}")

    scale = _as_float(DEFAULT_SCALE)
    if scale is None or not scale > 0:
        problems.append(f"SHADOWZOOM_SCALE={DEFAULT_SCALE!r}")

    alpha = _as_float(DEFAULT_ALPHA)
    if alpha is None or not 0.0 <= alpha <= 1.0:
        problems.append(f"SHADOWZOOM_ALPHA={DEFAULT_ALPHA!r}")

    repetitions = _as_int(BENCH_REPETITIONS)
    if repetitions is None or repetitions < 1:
        problems.append(f"SHADOWZOOM_BENCH_REPETITIONS={BENCH_REPETITIONS!r}")

    if problems:
        logging.error(f"Invalid configuration values: {', '.join(problems)}")
        raise ValueError(f"Invalid configuration values: {', '.join(problems)}")

    return {
        'method': DEFAULT_METHOD,
        'scale': scale,
        'alpha': alpha,
        'average_variant': AVERAGE_VARIANT,
        'downscale_method': DOWNSCALE_METHOD,
        'corpus_dir': CORPUS_DIR,
        'bench_repetitions': repetitions,
    }


# Run validation on import
SETTINGS = validate_config()
