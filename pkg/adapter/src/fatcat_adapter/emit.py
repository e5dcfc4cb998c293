"""Turn extracted texts plus a topic model into a weights file dict."""

from __future__ import annotations

from typing import Mapping

from .errors import InputError
from .topics import MAX_WORDS_PER_TOPIC, TopicModel

DEFAULT_TOP_K = 10


def emit_weights(
    texts: Mapping[str, str], model: TopicModel, top_k: int = DEFAULT_TOP_K
) -> dict:
    """Score documents and keep each document's top_k strongest topics.

    The result is a plain dict in the weights-file layout: documents,
    topics (with words), then one entry per kept (doc, topic) cell.
    """
    if top_k < 1:
        raise InputError(f"top_k must be positive, got {top_k}")
    if not texts:
        raise InputError("no documents to emit")
    order = sorted(texts)
    fit = model.fit_transform([texts[p] for p in order])
    documents = [{"id": p, "path": p} for p in order]
    topics = []
    for tid, words in enumerate(fit.topic_words):
        entry: dict = {"id": tid}
        if words:
            entry["words"] = list(words[:MAX_WORDS_PER_TOPIC])
        topics.append(entry)
    weights = []
    for i, path in enumerate(order):
        row = fit.doc_topic[i]
        ranked = sorted(range(len(row)), key=lambda t: (-row[t], t))
        for t in ranked[:top_k]:
            value = float(row[t])
            if value <= 0:
                break
            weights.append({"doc": path, "topic": t, "weight": round(value, 6)})
    return {"documents": documents, "topics": topics, "weights": weights}
