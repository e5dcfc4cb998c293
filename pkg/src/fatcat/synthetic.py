"""Seeded synthetic corpora for tests and demos.

Each directory gets a biased subset of topics; its documents draw roughly
half of their topic weights from that subset with high weight and the rest
uniformly with low weight.  That makes per-directory lattices non-trivial
(biased topics co-occur often enough to be frequent together) while
directories still overlap on some topics.  Output is byte-identical for a
fixed seed: generation never iterates over sets and all randomness comes
from one random.Random instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError

WORDS_PER_SYNTHETIC_TOPIC = 12


@dataclass(frozen=True)
class SyntheticPlan:
    """The raw draw behind a synthetic corpus, exposed for property tests."""

    directories: tuple[str, ...]
    biased_topics: dict[str, tuple[int, ...]]
    documents: tuple[dict, ...]  # {"id", "path", "directory", "entries": [(topic, weight)]}


def synthetic_plan(
    seed: int = 0,
    n_dirs: int = 3,
    docs_per_dir: int = 50,
    n_topics: int = 20,
    topics_per_doc: int = 10,
) -> SyntheticPlan:
    for name, value in (
        ("n_dirs", n_dirs),
        ("docs_per_dir", docs_per_dir),
        ("n_topics", n_topics),
        ("topics_per_doc", topics_per_doc),
    ):
        if not isinstance(value, int) or value < 1:
            raise InputError(f"{name} must be a positive integer, got {value!r}")
    if topics_per_doc > n_topics:
        raise InputError(
            f"topics_per_doc ({topics_per_doc}) cannot exceed n_topics ({n_topics})"
        )
    rng = random.Random(seed)
    directories = tuple(f"dir{i:02d}" for i in range(n_dirs))
    bias_size = max(2, min(n_topics, round(n_topics * 0.3)))
    biased = {
        d: tuple(sorted(rng.sample(range(n_topics), bias_size))) for d in directories
    }
    documents = []
    index = 0
    for d in directories:
        for _ in range(docs_per_dir):
            doc_id = f"doc{index:04d}"
            index += 1
            n_biased = max(1, min(len(biased[d]), (topics_per_doc + 1) // 2))
            picks = rng.sample(biased[d], n_biased)
            pool = [t for t in range(n_topics) if t not in picks]
            picks += rng.sample(pool, min(topics_per_doc - n_biased, len(pool)))
            entries = []
            for topic in sorted(picks):
                if topic in biased[d]:
                    weight = round(rng.uniform(0.55, 1.0), 6)
                else:
                    weight = round(rng.uniform(0.05, 0.35), 6)
                entries.append((topic, weight))
            documents.append(
                {
                    "id": doc_id,
                    "path": f"{d}/{doc_id}.txt",
                    "directory": d,
                    "entries": entries,
                }
            )
    return SyntheticPlan(
        directories=directories, biased_topics=biased, documents=tuple(documents)
    )


def generate_synthetic(
    seed: int = 0,
    n_dirs: int = 3,
    docs_per_dir: int = 50,
    n_topics: int = 20,
    topics_per_doc: int = 10,
) -> dict:
    """A weights-file structure (see ingest) for a synthetic corpus."""
    plan = synthetic_plan(seed, n_dirs, docs_per_dir, n_topics, topics_per_doc)
    return {
        "documents": [{"id": d["id"], "path": d["path"]} for d in plan.documents],
        "topics": [
            {
                "id": t,
                "words": [f"t{t}w{k}" for k in range(WORDS_PER_SYNTHETIC_TOPIC)],
            }
            for t in range(n_topics)
        ],
        "weights": [
            {"doc": d["id"], "topic": topic, "weight": weight}
            for d in plan.documents
            for topic, weight in d["entries"]
        ],
    }
