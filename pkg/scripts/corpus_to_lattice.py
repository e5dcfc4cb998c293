#!/usr/bin/env python3
"""Drive a real corpus through both packages: adapter, then pipeline.

The two packages touch only through the weights JSON written in the
middle, same as running the two CLIs by hand.

Usage: python3 scripts/corpus_to_lattice.py <corpus_dir> [out_dir]
"""

import subprocess
import sys
from pathlib import Path


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 1
    corpus = sys.argv[1]
    out_dir = Path(sys.argv[2]) if len(sys.argv) > 2 else Path("corpus_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    weights = out_dir / "weights.json"
    steps = [
        [
            sys.executable, "-m", "fatcat_adapter",
            "--root", corpus,
            "--out", str(weights),
            "--n-topics", "3",
            "--manifest-out", str(out_dir / "extraction_manifest.json"),
        ],
        [
            sys.executable, "-m", "fatcat", "pipeline",
            "--weights", str(weights),
            "--out-dir", str(out_dir / "lattice"),
            "--target-density", "0.3",
            "--minsupp-directory", "0.5",
        ],
    ]
    for cmd in steps:
        proc = subprocess.run(cmd)
        if proc.returncode != 0:
            return proc.returncode
    print(f"artifacts in {out_dir}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
