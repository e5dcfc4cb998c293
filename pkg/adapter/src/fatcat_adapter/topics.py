"""Topic models behind a small protocol.

The interface mirrors what embedding-based topic libraries expose (fit
on raw texts, then per-document topic scores and per-topic word lists),
so swapping in one of those is a thin wrapper.  The bundled default
stays offline: TF-IDF vectors, k-means centroids, cosine scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

from .errors import InputError, ModelError

MAX_WORDS_PER_TOPIC = 50


@dataclass(frozen=True)
class TopicFit:
    """Per-topic word lists and a dense document x topic score matrix."""

    topic_words: tuple[tuple[str, ...], ...]
    doc_topic: np.ndarray  # shape (n_docs, n_topics), scores >= 0

    def __post_init__(self) -> None:
        if self.doc_topic.ndim != 2:
            raise ModelError("doc_topic must be 2-dimensional")
        if self.doc_topic.shape[1] != len(self.topic_words):
            raise ModelError("topic_words and doc_topic disagree on topic count")
        for words in self.topic_words:
            if len(words) > MAX_WORDS_PER_TOPIC:
                raise ModelError(
                    f"a topic carries {len(words)} words, limit is {MAX_WORDS_PER_TOPIC}"
                )


class TopicModel(Protocol):
    def fit_transform(self, texts: Sequence[str]) -> TopicFit:
        """Fit on raw document texts and score every document."""


class TfidfKMeansModel:
    """TF-IDF + k-means, scored by cosine similarity to each centroid."""

    def __init__(self, n_topics: int = 5, seed: int = 0):
        if n_topics < 1:
            raise InputError(f"n_topics must be positive, got {n_topics}")
        self.n_topics = n_topics
        self.seed = seed

    def fit_transform(self, texts: Sequence[str]) -> TopicFit:
        from sklearn.cluster import KMeans
        from sklearn.feature_extraction.text import TfidfVectorizer

        if len(texts) < 2:
            raise ModelError(
                f"need at least 2 documents to fit topics, got {len(texts)}"
            )
        k = min(self.n_topics, len(texts))
        vectorizer = TfidfVectorizer(stop_words="english", lowercase=True)
        try:
            matrix = vectorizer.fit_transform(texts)
        except ValueError as exc:
            raise ModelError(f"vectorizer failed: {exc}") from None
        dense = np.asarray(matrix.todense(), dtype=float)
        kmeans = KMeans(n_clusters=k, random_state=self.seed, n_init=10)
        try:
            kmeans.fit(dense)
        except ValueError as exc:
            raise ModelError(f"clustering failed: {exc}") from None
        centroids = kmeans.cluster_centers_
        doc_norms = np.linalg.norm(dense, axis=1, keepdims=True)
        cen_norms = np.linalg.norm(centroids, axis=1, keepdims=True)
        doc_norms[doc_norms == 0] = 1.0
        cen_norms[cen_norms == 0] = 1.0
        scores = (dense / doc_norms) @ (centroids / cen_norms).T
        scores = np.clip(scores, 0.0, None)
        vocab = np.asarray(vectorizer.get_feature_names_out())
        topic_words = []
        for centroid in centroids:
            order = np.argsort(-centroid, kind="stable")
            keep = [
                str(vocab[i]) for i in order[:MAX_WORDS_PER_TOPIC] if centroid[i] > 0
            ]
            topic_words.append(tuple(keep))
        return TopicFit(topic_words=tuple(topic_words), doc_topic=scores)


MODELS: dict[str, type] = {
    "tfidf-kmeans": TfidfKMeansModel,
}


def make_model(name: str, n_topics: int = 5, seed: int = 0) -> TopicModel:
    cls = MODELS.get(name)
    if cls is None:
        known = ", ".join(sorted(MODELS))
        raise InputError(f"unknown model {name!r}; available: {known}")
    return cls(n_topics=n_topics, seed=seed)
