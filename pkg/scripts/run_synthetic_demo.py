#!/usr/bin/env python3
"""Generate a seeded synthetic corpus, run the full pipeline, print a summary.

Usage: python3 scripts/run_synthetic_demo.py [out_dir]
"""

import json
import sys
from pathlib import Path

from fatcat.ingest import weights_from_dict
from fatcat.pipeline import PipelineConfig, run_pipeline
from fatcat.synthetic import generate_synthetic


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_out")
    data = generate_synthetic(seed=0, n_dirs=3, docs_per_dir=50, n_topics=20)
    matrix, topics = weights_from_dict(data)
    result = run_pipeline(
        matrix, topics=topics, config=PipelineConfig(), out_dir=out_dir
    )
    print(f"threshold delta: {result.threshold.delta:.6f}")
    print(f"achieved density: {result.threshold.achieved_density}")
    for label, entry in result.manifest["directories"].items():
        print(f"  {label}: {entry['documents']} docs, {entry['concepts']} concepts")
    final = result.manifest["final_lattice"]
    print(f"final lattice: {final['concepts']} concepts, {final['covers']} covers")
    print(f"artifacts in {out_dir}/")
    print(json.dumps(result.timings, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
