#!/usr/bin/env python3
"""
Utility script for maintaining the bundled corpus and golden output.
"""

import os
import sys
import argparse

# Add current directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from errors import ShadowZoomError
from evalcli.corpus import (
    GOLDEN_CONFIG, GOLDEN_OUTPUT, corpus_dir, corpus_images, load_golden, render_golden,
)
from image_core import load_image, save_image


def check_corpus():
    """Read every bundled image and report its dimensions."""
    print(f"Checking corpus in {corpus_dir()}...")
    ok = True
    for path in corpus_images():
        try:
            img = load_image(path)
            print(f"✓ {path.name}: {img.width}x{img.height}")
        except (ShadowZoomError, OSError) as e:
            print(f"✗ {path.name}: {e}")
            ok = False
    try:
        matches = render_golden() == load_golden()
        print(f"{'✓' if matches else '✗'} golden output {'matches' if matches else 'differs from'} "
              f"the current pipeline ({GOLDEN_CONFIG.describe()})")
        ok = ok and matches
    except (ShadowZoomError, OSError) as e:
        print(f"✗ golden check failed: {e}")
        ok = False
    return ok


def make_golden():
    """Rewrite the frozen golden output from the current pipeline."""
    path = save_image(corpus_dir() / GOLDEN_OUTPUT, render_golden(), 'P2')
    print(f"✓ Wrote golden output {path}")
    return True


def main():
    """Main function to run utility tasks."""
    parser = argparse.ArgumentParser(description="shadowzoom corpus utilities")
    parser.add_argument(
        "task",
        choices=["check-corpus", "make-golden"],
        help="Task to perform"
    )

    args = parser.parse_args()

    if args.task == "check-corpus":
        success = check_corpus()
    else:
        success = make_golden()

    if not success:
        print("\n✗ Corpus check failed.")
        sys.exit(1)


if __name__ == "__main__":
    main()
