"""Command line interface.

Subcommands mirror the pipeline stages so each intermediate artifact can
be produced and inspected on its own, plus `pipeline` to run everything
and `gen` for seeded synthetic corpora.  File arguments accept "-" for
stdin/stdout where that makes sense.  Exit codes: 0 success, 1 bad input,
2 pipeline or domain error.  Set FATCAT_LOG=DEBUG (or any logging level)
to adjust verbosity; no command touches the network.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .aggregation import (
    DirectoryTopicContext,
    directory_lattice,
    directory_topic_context,
    split_by_directory,
)
from .context import FormalContext
from .errors import FatcatError, InputError
from .export import concepts_to_dict, reduced_labels, to_dot, to_json
from .iceberg import iceberg_concepts
from .ingest import parse_weights, parse_weights_csv
from .pipeline import PipelineConfig, run_pipeline
from .synthetic import generate_synthetic
from .thresholding import binarize, row_normalize, select_threshold

logger = logging.getLogger(__name__)


def _configure_logging() -> None:
    level_name = os.environ.get("FATCAT_LOG", "WARNING").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _load_weights(path: str):
    text = _read_text(path)
    if path != "-" and path.lower().endswith(".csv"):
        return parse_weights_csv(text)
    return parse_weights(text)


def _load_context(path: str) -> FormalContext:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a context JSON object")
    return FormalContext.from_dict(data)


def _load_dtc(path: str) -> DirectoryTopicContext:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a directory-topic JSON object")
    return DirectoryTopicContext.from_dict(data)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatcat",
        description="Density-thresholded concept lattices over document-topic weights.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded synthetic weights file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-dirs", type=int, default=3)
    p.add_argument("--docs-per-dir", type=int, default=50)
    p.add_argument("--n-topics", type=int, default=20)
    p.add_argument("--topics-per-doc", type=int, default=10)
    p.add_argument("--out", default="-", help="output path or - for stdout")

    p = sub.add_parser("threshold", help="normalize and report the selected density threshold")
    p.add_argument("--weights", required=True, help="weights file (.json or .csv), - for stdin")
    p.add_argument("--target-density", default="0.1")
    p.add_argument("--out", default="-")

    p = sub.add_parser("binarize", help="normalize, threshold and emit the binary context")
    p.add_argument("--weights", required=True)
    p.add_argument("--delta", type=float, default=None, help="explicit threshold; skips selection")
    p.add_argument("--target-density", default="0.1")
    p.add_argument("--directory-depth", type=int, default=1)
    p.add_argument("--out", default="-")

    p = sub.add_parser("iceberg", help="iceberg concept lattice of a context JSON")
    p.add_argument("--context", required=True)
    p.add_argument("--minsupp", default="0.1")
    p.add_argument("--out", default="-")

    p = sub.add_parser("aggregate", help="split a context by directory and aggregate topics")
    p.add_argument("--context", required=True)
    p.add_argument("--minsupp-directory", default="0.1")
    p.add_argument("--directory-depth", type=int, default=1)
    p.add_argument("--out", default="-")

    p = sub.add_parser("lattice", help="lattice of a directory-topic context, as JSON and DOT")
    p.add_argument("--dtc", required=True, help="directory-topic context JSON")
    p.add_argument("--minsupp-final", default=None)
    p.add_argument("--weights", default=None, help="weights file supplying topic words for the legend")
    p.add_argument("--words-per-topic", type=int, default=5)
    p.add_argument("--out-json", default="-")
    p.add_argument("--out-dot", default=None)

    p = sub.add_parser("pipeline", help="run every stage and write all artifacts")
    p.add_argument("--weights", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--target-density", default="0.1")
    p.add_argument("--minsupp-directory", default="0.1")
    p.add_argument("--minsupp-final", default=None)
    p.add_argument("--directory-depth", type=int, default=1)
    p.add_argument("--words-per-topic", type=int, default=5)

    return parser


def _cmd_gen(args) -> int:
    data = generate_synthetic(
        seed=args.seed,
        n_dirs=args.n_dirs,
        docs_per_dir=args.docs_per_dir,
        n_topics=args.n_topics,
        topics_per_doc=args.topics_per_doc,
    )
    _write_text(args.out, _dump(data))
    return 0


def _cmd_threshold(args) -> int:
    matrix, _ = _load_weights(args.weights)
    report = select_threshold(row_normalize(matrix), args.target_density)
    _write_text(args.out, _dump(report.to_dict()))
    return 0


def _cmd_binarize(args) -> int:
    matrix, _ = _load_weights(args.weights)
    normalized = row_normalize(matrix)
    delta = args.delta
    if delta is None:
        report = select_threshold(normalized, args.target_density)
        delta = report.delta
    context = binarize(normalized, delta, args.directory_depth)
    _write_text(args.out, _dump(context.to_dict()))
    return 0


def _cmd_iceberg(args) -> int:
    context = _load_context(args.context)
    lattice = iceberg_concepts(context, args.minsupp)
    _write_text(args.out, _dump(concepts_to_dict(lattice)))
    return 0


def _cmd_aggregate(args) -> int:
    context = _load_context(args.context)
    subcontexts = split_by_directory(context, args.directory_depth)
    dtc = directory_topic_context(subcontexts, args.minsupp_directory)
    _write_text(args.out, _dump(dtc.to_dict()))
    return 0


def _cmd_lattice(args) -> int:
    dtc = _load_dtc(args.dtc)
    lattice = directory_lattice(dtc, args.minsupp_final)
    labeled = reduced_labels(lattice, context=dtc.to_context())
    topics = None
    if args.weights is not None:
        _, topics = _load_weights(args.weights)
    _write_text(args.out_json, to_json(labeled))
    if args.out_dot is not None:
        _write_text(args.out_dot, to_dot(labeled, topics=topics, words_per_topic=args.words_per_topic))
    return 0


def _cmd_pipeline(args) -> int:
    matrix, topics = _load_weights(args.weights)
    config = PipelineConfig(
        target_density=args.target_density,
        minsupp_directory=args.minsupp_directory,
        minsupp_final=args.minsupp_final,
        directory_depth=args.directory_depth,
        words_per_topic=args.words_per_topic,
    )
    result = run_pipeline(matrix, topics, config, out_dir=args.out_dir)
    summary = result.manifest["final_lattice"]
    sys.stdout.write(
        f"delta={result.threshold.delta} "
        f"concepts={summary['concepts']} "
        f"out={args.out_dir}\n"
    )
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "threshold": _cmd_threshold,
    "binarize": _cmd_binarize,
    "iceberg": _cmd_iceberg,
    "aggregate": _cmd_aggregate,
    "lattice": _cmd_lattice,
    "pipeline": _cmd_pipeline,
}


def main(argv=None) -> int:
    _configure_logging()
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        logger.debug("input error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FatcatError as exc:
        logger.debug("pipeline error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # keep the exit-code contract even when surprised
        logger.debug("unexpected error", exc_info=True)
        print(f"unexpected error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
