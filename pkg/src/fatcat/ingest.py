"""Read and validate weighted document-topic files.

The canonical interchange format is JSON with three arrays:

    {"documents": [{"id": "...", "path": "dir/file.txt"}, ...],
     "topics":    [{"id": 0, "words": [...], "word_scores": [...]}, ...],
     "weights":   [{"doc": "...", "topic": 0, "weight": 0.42}, ...]}

Structural problems are reported with the JSON path of the offending
element.  Referential problems (unknown ids, duplicate cells) likewise.
A document carrying more than ten weights is unusual for this pipeline's
inputs, so it draws a warning, but it is never rejected.

A small CSV shim accepts doc,topic,weight rows (optionally with a path
column) for spreadsheet workflows.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math

import jsonschema

from .errors import InputError
from .export import TopicInfo
from .thresholding import Document, WeightedDocTopicMatrix, WeightEntry

logger = logging.getLogger(__name__)

#: Documents are expected to carry at most this many topic weights.
EXPECTED_MAX_WEIGHTS_PER_DOC = 10

WEIGHTS_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["documents", "topics", "weights"],
    "properties": {
        "documents": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "path"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "path": {"type": "string", "minLength": 1},
                },
            },
        },
        "topics": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "words": {
                        "type": "array",
                        "items": {"type": "string", "minLength": 1},
                        "minItems": 1,
                    },
                    "word_scores": {"type": "array", "items": {"type": "number"}},
                },
            },
        },
        "weights": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["doc", "topic", "weight"],
                "properties": {
                    "doc": {"type": "string"},
                    "topic": {"type": "integer", "minimum": 0},
                    "weight": {"type": "number", "minimum": 0},
                },
            },
        },
    },
}


def _reject_constant(name: str):
    raise InputError(f"weights JSON must not contain {name}")


def parse_weights(raw: bytes | str) -> tuple[WeightedDocTopicMatrix, dict[int, TopicInfo]]:
    """Parse and validate a weights file.

    Returns the matrix (documents, topics, and entries in file order) and
    a map of topic id to its descriptive words.  Raises InputError with
    the JSON path of the first offending element on invalid input.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"weights file is not valid UTF-8: {exc}") from None
    try:
        data = json.loads(raw, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"weights file is not valid JSON: {exc}") from None
    return weights_from_dict(data)


def weights_from_dict(data) -> tuple[WeightedDocTopicMatrix, dict[int, TopicInfo]]:
    """Validate an already parsed weights structure. See parse_weights."""
    validator = jsonschema.Draft202012Validator(WEIGHTS_SCHEMA)
    error = jsonschema.exceptions.best_match(validator.iter_errors(data))
    if error is not None:
        raise InputError(f"{error.json_path}: {error.message}")

    documents = []
    seen_docs: dict[str, int] = {}
    for i, d in enumerate(data["documents"]):
        if d["id"] in seen_docs:
            raise InputError(
                f"$.documents[{i}].id: duplicate document id {d['id']!r} "
                f"(first at $.documents[{seen_docs[d['id']]}])"
            )
        seen_docs[d["id"]] = i
        documents.append(Document(id=d["id"], path=d["path"]))

    topic_info: dict[int, TopicInfo] = {}
    seen_topics: dict[int, int] = {}
    for i, t in enumerate(data["topics"]):
        tid = t["id"]
        if tid in seen_topics:
            raise InputError(f"$.topics[{i}].id: duplicate topic id {tid}")
        seen_topics[tid] = i
        words = tuple(t.get("words", ()))
        scores = t.get("word_scores")
        if scores is not None:
            if "words" not in t:
                raise InputError(f"$.topics[{i}].word_scores: word_scores without words")
            if len(scores) != len(words):
                raise InputError(
                    f"$.topics[{i}].word_scores: {len(scores)} scores for {len(words)} words"
                )
            if not all(math.isfinite(s) for s in scores):
                raise InputError(f"$.topics[{i}].word_scores: scores must be finite")
        topic_info[tid] = TopicInfo(
            topic_id=tid, words=words, word_scores=None if scores is None else tuple(scores)
        )

    entries = []
    cells: dict[tuple[str, int], int] = {}
    per_doc: dict[str, int] = {}
    for i, w in enumerate(data["weights"]):
        if w["doc"] not in seen_docs:
            raise InputError(f"$.weights[{i}].doc: unknown document {w['doc']!r}")
        if w["topic"] not in seen_topics:
            raise InputError(f"$.weights[{i}].topic: unknown topic {w['topic']}")
        if not math.isfinite(w["weight"]):
            raise InputError(f"$.weights[{i}].weight: weight must be finite")
        cell = (w["doc"], w["topic"])
        if cell in cells:
            raise InputError(
                f"$.weights[{i}]: duplicate weight for document {w['doc']!r} "
                f"topic {w['topic']} (first at $.weights[{cells[cell]}])"
            )
        cells[cell] = i
        per_doc[w["doc"]] = per_doc.get(w["doc"], 0) + 1
        entries.append(WeightEntry(doc=w["doc"], topic=w["topic"], weight=float(w["weight"])))

    for doc_id in (d.id for d in documents):
        count = per_doc.get(doc_id, 0)
        if count > EXPECTED_MAX_WEIGHTS_PER_DOC:
            logger.warning(
                "document %r carries %d topic weights, more than the expected top %d",
                doc_id,
                count,
                EXPECTED_MAX_WEIGHTS_PER_DOC,
            )

    matrix = WeightedDocTopicMatrix(
        documents=tuple(documents),
        topics=tuple(t["id"] for t in data["topics"]),
        entries=tuple(entries),
    )
    return matrix, topic_info


def parse_weights_csv(text: str) -> tuple[WeightedDocTopicMatrix, dict[int, TopicInfo]]:
    """CSV shim for the weights triple.

    Expects a header with doc, topic and weight columns, optionally a path
    column.  Documents keep first-appearance order and default their path
    to the doc id; topics are the distinct ids in ascending order.  Topic
    words cannot be expressed in this format.
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise InputError("CSV weights file is empty")
    fields = [f.strip() for f in reader.fieldnames]
    for required in ("doc", "topic", "weight"):
        if required not in fields:
            raise InputError(f"CSV weights file is missing a {required!r} column")
    documents: list[dict] = []
    seen_docs: dict[str, str] = {}
    rows = []
    for line_no, row in enumerate(reader, start=2):
        doc = (row.get("doc") or "").strip()
        if not doc:
            raise InputError(f"CSV line {line_no}: empty doc id")
        try:
            topic = int((row.get("topic") or "").strip())
            weight = float((row.get("weight") or "").strip())
        except ValueError as exc:
            raise InputError(f"CSV line {line_no}: {exc}") from None
        path = (row.get("path") or "").strip() or doc
        if doc not in seen_docs:
            seen_docs[doc] = path
            documents.append({"id": doc, "path": path})
        elif seen_docs[doc] != path:
            raise InputError(f"CSV line {line_no}: conflicting path for document {doc!r}")
        rows.append({"doc": doc, "topic": topic, "weight": weight})
    topics = sorted({r["topic"] for r in rows})
    return weights_from_dict(
        {
            "documents": documents,
            "topics": [{"id": t} for t in topics],
            "weights": rows,
        }
    )
