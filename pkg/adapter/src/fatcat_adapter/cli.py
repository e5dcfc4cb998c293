"""Command line entry point: corpus directory in, weights JSON out."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .emit import DEFAULT_TOP_K, emit_weights
from .errors import AdapterError, InputError
from .extract import extract_corpus
from .topics import MODELS, make_model


def _configure_logging() -> None:
    level_name = os.environ.get("FATCAT_ADAPTER_LOG", "WARNING").upper()
    level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatcat-adapter",
        description="Extract a corpus, fit a topic model, write weights JSON.",
    )
    parser.add_argument("--root", required=True, help="corpus directory to read")
    parser.add_argument(
        "--out", required=True, help="weights JSON destination ('-' for stdout)"
    )
    parser.add_argument(
        "--top-k",
        type=int,
        default=DEFAULT_TOP_K,
        help="keep this many strongest topics per document",
    )
    parser.add_argument(
        "--model",
        default="tfidf-kmeans",
        choices=sorted(MODELS),
        help="topic model to fit",
    )
    parser.add_argument(
        "--n-topics", type=int, default=5, help="number of topics to fit"
    )
    parser.add_argument("--seed", type=int, default=0, help="model random seed")
    parser.add_argument(
        "--manifest-out",
        default=None,
        help="also write the extraction manifest JSON here",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    args = _build_parser().parse_args(argv)
    try:
        manifest, texts = extract_corpus(args.root)
        if not texts:
            raise InputError(f"no extractable documents under {args.root}")
        model = make_model(args.model, n_topics=args.n_topics, seed=args.seed)
        data = emit_weights(texts, model, top_k=args.top_k)
        payload = json.dumps(data, indent=2) + "\n"
        if args.out == "-":
            sys.stdout.write(payload)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        if args.manifest_out:
            with open(args.manifest_out, "w", encoding="utf-8") as fh:
                json.dump(manifest.to_dict(), fh, indent=2)
                fh.write("\n")
        counts = manifest.counts()
        print(
            f"docs={len(data['documents'])} topics={len(data['topics'])} "
            f"ok={counts['ok']} captioned={counts['captioned']} "
            f"skipped={counts['skipped']} error={counts['error']} out={args.out}",
            file=sys.stderr if args.out == "-" else sys.stdout,
        )
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AdapterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
