#!/usr/bin/env python3
"""Sweep the per-directory support cutoff and report lattice sizes.

Shows how the iceberg cutoff trades concept count against coverage on a
seeded synthetic corpus.

Usage: python3 scripts/minsupp_sweep.py [seed]
"""

import sys

from fatcat.aggregation import directory_topic_context, split_by_directory
from fatcat.context import enumerate_concepts
from fatcat.iceberg import iceberg_concepts
from fatcat.ingest import weights_from_dict
from fatcat.synthetic import generate_synthetic
from fatcat.thresholding import binarize, row_normalize, select_threshold


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    data = generate_synthetic(seed=seed, n_dirs=3, docs_per_dir=50, n_topics=20)
    matrix, _ = weights_from_dict(data)
    normalized = row_normalize(matrix)
    report = select_threshold(normalized, "0.1")
    context = binarize(normalized, report.delta)
    subcontexts = split_by_directory(context)
    print(f"delta={report.delta:.6f} density={report.achieved_density}")
    header = "minsupp  " + "  ".join(f"{d:>8}" for d in subcontexts) + "     final"
    print(header)
    for minsupp in ["0.05", "0.1", "0.2", "0.3", "0.5"]:
        per_dir = [
            len(iceberg_concepts(sub, minsupp).concepts)
            for sub in subcontexts.values()
        ]
        dtc = directory_topic_context(subcontexts, minsupp)
        final = len(enumerate_concepts(dtc.to_context()).concepts)
        cells = "  ".join(f"{n:>8}" for n in per_dir)
        print(f"{minsupp:>7}  {cells}  {final:>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
