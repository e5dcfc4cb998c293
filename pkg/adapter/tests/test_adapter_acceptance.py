"""Adapter acceptance: the emitted file satisfies the ingest contract."""

import json
import logging

from fatcat.ingest import EXPECTED_MAX_WEIGHTS_PER_DOC, parse_weights

from fatcat_adapter.emit import emit_weights
from fatcat_adapter.extract import extract_corpus
from fatcat_adapter.topics import MAX_WORDS_PER_TOPIC, make_model

from adapter_helpers import record_acceptance


def test_toy_corpus_weights_satisfy_ingest_contract(toycorpus, caplog):
    manifest, texts = extract_corpus(toycorpus)
    ok = len(texts) == 5
    model = make_model("tfidf-kmeans", n_topics=3, seed=0)
    data = emit_weights(texts, model, top_k=10)
    payload = json.dumps(data)
    with caplog.at_level(logging.WARNING):
        matrix, topics = parse_weights(payload)
    warnings = [r for r in caplog.records if r.levelno >= logging.WARNING]
    ok &= not warnings
    per_doc: dict[str, int] = {}
    for entry in matrix.entries:
        per_doc[entry.doc] = per_doc.get(entry.doc, 0) + 1
    ok &= len(matrix.documents) == 5
    ok &= all(n <= EXPECTED_MAX_WEIGHTS_PER_DOC for n in per_doc.values())
    ok &= all(len(info.words) <= MAX_WORDS_PER_TOPIC for info in topics.values())
    record_acceptance(
        "adapter weights contract",
        ok,
        f"5-doc corpus, {len(warnings)} ingest warnings, "
        f"max {max(per_doc.values())} weights/doc, "
        f"max {max(len(i.words) for i in topics.values())} words/topic",
    )
    assert ok
