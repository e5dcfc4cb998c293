"""End-to-end pipeline: weights in, lattice artifacts out.

Stage order: row-normalize, select the density threshold, binarize, split
by directory, mine one iceberg lattice per directory, aggregate into the
directory-topic context, compute its lattice (full by default), label it,
export DOT and JSON.  Any stage failure aborts with the stage name and the
cause; a sentinel threshold (no admissible delta) is refused rather than
silently producing an all-zero context.

All written artifacts are deterministic for identical inputs and
configuration.  Wall-clock stage timings are therefore kept out of the
manifest and written to a separate timings.json.
"""

from __future__ import annotations

import json
import logging
import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .aggregation import (
    DirectoryTopicContext,
    directory_lattice,
    directory_topic_context,
    split_by_directory,
)
from .context import ConceptSet, FormalContext, normalize_rate
from .errors import DomainError, FatcatError, InputError
from .export import LabeledLattice, TopicInfo, concepts_to_dict, reduced_labels, to_dot, to_json
from .iceberg import IcebergLattice, iceberg_concepts
from .thresholding import (
    ThresholdReport,
    WeightedDocTopicMatrix,
    binarize,
    row_normalize,
    select_threshold,
)

logger = logging.getLogger(__name__)

MANIFEST_SCHEMA_VERSION = 1

STAGES = (
    "normalize",
    "select_threshold",
    "binarize",
    "split_by_directory",
    "directory_icebergs",
    "directory_topic_context",
    "directory_lattice",
    "reduced_labels",
    "export",
)


@dataclass(frozen=True)
class PipelineConfig:
    """Tunable pipeline parameters.

    Rates accept floats or decimal strings; strings are exact, floats are
    read via their shortest decimal repr.  minsupp_final of None keeps the
    full directory-topic lattice.  seed only drives corpus generation and
    has no effect on analysis.
    """

    target_density: float | str = 0.1
    minsupp_directory: float | str = 0.1
    minsupp_final: float | str | None = None
    directory_depth: int = 1
    words_per_topic: int = 5
    seed: int = 0

    def __post_init__(self) -> None:
        target = normalize_rate(self.target_density, "target_density")
        if target == 0:
            raise InputError("target_density must be in (0, 1]")
        normalize_rate(self.minsupp_directory, "minsupp_directory")
        if self.minsupp_final is not None:
            normalize_rate(self.minsupp_final, "minsupp_final")
        if not isinstance(self.directory_depth, int) or self.directory_depth < 1:
            raise InputError(
                f"directory_depth must be a positive integer, got {self.directory_depth!r}"
            )
        if not isinstance(self.words_per_topic, int) or self.words_per_topic < 0:
            raise InputError(
                f"words_per_topic must be a non-negative integer, got {self.words_per_topic!r}"
            )


@dataclass
class PipelineResult:
    normalized: WeightedDocTopicMatrix
    threshold: ThresholdReport
    context: FormalContext
    subcontexts: dict[str, FormalContext]
    icebergs: dict[str, IcebergLattice]
    dtc: DirectoryTopicContext
    lattice: ConceptSet
    labeled: LabeledLattice
    dot: str
    lattice_json: str
    manifest: dict
    timings: dict = field(repr=False)


class _StageClock:
    def __init__(self) -> None:
        self.records: list[dict] = []

    def run(self, name: str, fn):
        start = time.perf_counter()
        try:
            result = fn()
        except FatcatError as exc:
            raise type(exc)(f"stage {name}: {exc}") from exc
        self.records.append(
            {"name": name, "seconds": time.perf_counter() - start}
        )
        return result


def run_pipeline(
    matrix: WeightedDocTopicMatrix,
    topics: Mapping[int, TopicInfo] | None = None,
    config: PipelineConfig = PipelineConfig(),
    out_dir: str | Path | None = None,
) -> PipelineResult:
    """Run every stage on a parsed weights matrix.

    With out_dir set, writes manifest.json, timings.json, context.json,
    one icebergs/<directory>.json per directory, the directory-topic
    context, lattice.json and lattice.dot.
    """
    clock = _StageClock()
    normalized = clock.run("normalize", lambda: row_normalize(matrix))
    report = clock.run(
        "select_threshold", lambda: select_threshold(normalized, config.target_density)
    )
    if report.is_sentinel:
        raise DomainError(
            "stage select_threshold: no admissible threshold, the thresholded "
            f"density stays above {report.target_density} for every candidate "
            "weight; the binarized context would be all zeros"
        )
    context = clock.run(
        "binarize", lambda: binarize(normalized, report.delta, config.directory_depth)
    )
    subcontexts = clock.run(
        "split_by_directory", lambda: split_by_directory(context, config.directory_depth)
    )

    def mine_directories() -> dict[str, IcebergLattice]:
        result = {}
        for label, sub in subcontexts.items():
            try:
                result[label] = iceberg_concepts(sub, config.minsupp_directory)
            except FatcatError as exc:
                raise type(exc)(f"directory {label!r}: {exc}") from exc
        return result

    icebergs = clock.run("directory_icebergs", mine_directories)
    dtc = clock.run(
        "directory_topic_context",
        lambda: directory_topic_context(subcontexts, config.minsupp_directory),
    )
    lattice = clock.run(
        "directory_lattice", lambda: directory_lattice(dtc, config.minsupp_final)
    )
    labeled = clock.run(
        "reduced_labels", lambda: reduced_labels(lattice, context=dtc.to_context())
    )

    def export() -> tuple[str, str]:
        return (
            to_dot(labeled, topics=topics, words_per_topic=config.words_per_topic),
            to_json(labeled),
        )

    dot, lattice_json = clock.run("export", export)

    manifest = {
        "schema_version": MANIFEST_SCHEMA_VERSION,
        "config": {
            "target_density": float(normalize_rate(config.target_density)),
            "minsupp_directory": float(normalize_rate(config.minsupp_directory)),
            "minsupp_final": (
                None
                if config.minsupp_final is None
                else float(normalize_rate(config.minsupp_final))
            ),
            "directory_depth": config.directory_depth,
            "words_per_topic": config.words_per_topic,
        },
        "stages": [record["name"] for record in clock.records],
        "threshold": report.to_dict(),
        "context": {
            "documents": context.n_objects,
            "topics": context.n_attributes,
        },
        "directories": {
            label: {
                "documents": subcontexts[label].n_objects,
                "concepts": len(icebergs[label].concepts),
            }
            for label in sorted(subcontexts)
        },
        "final_lattice": {
            "concepts": len(lattice.concepts),
            "covers": len(lattice.covers),
            "minsupp": getattr(lattice, "minsupp", None),
        },
    }
    timings = {
        "stages": clock.records,
        "total_seconds": sum(r["seconds"] for r in clock.records),
    }

    result = PipelineResult(
        normalized=normalized,
        threshold=report,
        context=context,
        subcontexts=subcontexts,
        icebergs=icebergs,
        dtc=dtc,
        lattice=lattice,
        labeled=labeled,
        dot=dot,
        lattice_json=lattice_json,
        manifest=manifest,
        timings=timings,
    )
    if out_dir is not None:
        _write_artifacts(result, Path(out_dir))
    return result


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _safe_filename(label: str, used: set[str]) -> str:
    name = re.sub(r"[^A-Za-z0-9._-]", "_", label.replace("/", "__")) or "_"
    candidate = name
    suffix = 1
    while candidate in used:
        suffix += 1
        candidate = f"{name}_{suffix}"
    used.add(candidate)
    return candidate


def _write_artifacts(result: PipelineResult, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "manifest.json").write_text(_dump(result.manifest), encoding="utf-8")
    (out_dir / "timings.json").write_text(_dump(result.timings), encoding="utf-8")
    (out_dir / "context.json").write_text(_dump(result.context.to_dict()), encoding="utf-8")
    (out_dir / "directory_topic_context.json").write_text(
        _dump(result.dtc.to_dict()), encoding="utf-8"
    )
    iceberg_dir = out_dir / "icebergs"
    iceberg_dir.mkdir(exist_ok=True)
    used: set[str] = set()
    for label in sorted(result.icebergs):
        name = _safe_filename(label, used)
        (iceberg_dir / f"{name}.json").write_text(
            _dump(concepts_to_dict(result.icebergs[label])), encoding="utf-8"
        )
    (out_dir / "lattice.json").write_text(result.lattice_json, encoding="utf-8")
    (out_dir / "lattice.dot").write_text(result.dot, encoding="utf-8")
    logger.info("wrote pipeline artifacts to %s", out_dir)
