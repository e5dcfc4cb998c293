"""Weights emission: top-k cap, ordering, shape."""

import numpy as np
import pytest

from fatcat_adapter.emit import emit_weights
from fatcat_adapter.errors import InputError
from fatcat_adapter.topics import TopicFit


class StubModel:
    """Fixed scores so the selection logic is checked exactly."""

    def __init__(self, words, scores):
        self._fit = TopicFit(
            topic_words=words, doc_topic=np.asarray(scores, dtype=float)
        )
        self.seen: list[str] | None = None

    def fit_transform(self, texts):
        self.seen = list(texts)
        return self._fit


def test_documents_sorted_and_ids_are_paths():
    model = StubModel((("w",), ("v",)), [[0.5, 0.1], [0.2, 0.9]])
    data = emit_weights({"b/doc.txt": "later", "a/doc.txt": "first"}, model)
    assert [d["id"] for d in data["documents"]] == ["a/doc.txt", "b/doc.txt"]
    assert [d["path"] for d in data["documents"]] == ["a/doc.txt", "b/doc.txt"]
    assert model.seen == ["first", "later"]


def test_top_k_caps_entries():
    scores = [[0.9, 0.8, 0.7, 0.6, 0.5]]
    words = tuple((f"w{i}",) for i in range(5))
    data = emit_weights({"d": "text"}, StubModel(words, scores), top_k=3)
    assert [w["topic"] for w in data["weights"]] == [0, 1, 2]


def test_zero_scores_are_dropped():
    scores = [[0.9, 0.0, 0.4]]
    words = (("a",), ("b",), ("c",))
    data = emit_weights({"d": "text"}, StubModel(words, scores), top_k=10)
    assert [w["topic"] for w in data["weights"]] == [0, 2]


def test_ties_break_by_topic_id():
    scores = [[0.5, 0.5, 0.5]]
    words = (("a",), ("b",), ("c",))
    data = emit_weights({"d": "text"}, StubModel(words, scores), top_k=2)
    assert [w["topic"] for w in data["weights"]] == [0, 1]


def test_weights_are_rounded():
    scores = [[0.123456789]]
    data = emit_weights({"d": "text"}, StubModel((("a",),), scores))
    assert data["weights"][0]["weight"] == 0.123457


def test_topics_without_words_omit_the_key():
    model = StubModel(((), ("x",)), [[0.5, 0.5]])
    data = emit_weights({"d": "text"}, model)
    assert "words" not in data["topics"][0]
    assert data["topics"][1]["words"] == ["x"]


def test_validation():
    model = StubModel((("a",),), [[0.5]])
    with pytest.raises(InputError):
        emit_weights({}, model)
    with pytest.raises(InputError):
        emit_weights({"d": "text"}, model, top_k=0)
