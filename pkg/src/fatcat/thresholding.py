"""Turn weighted document-topic matrices into binary contexts.

The matrix holds sparse nonneg weights; cells absent from the entry list
are weight 0.  The pipeline first row-normalizes, then picks the smallest
threshold delta whose thresholded density

    density(W, delta) = |{cells with weight >= delta}| / (|D| * |T|)

drops to or below a target, then binarizes: incidence 1 iff weight >= delta.
Density is non-increasing in delta, so the candidate scan over the distinct
weight values can stop at the first hit.  When even the largest weight
leaves the density above the target there is no admissible delta and the
sentinel +inf is reported instead of an arbitrary value; the resulting
context is all zeros and pipelines are expected to refuse it loudly.
"""

from __future__ import annotations

import logging
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction

from .aggregation import directory_label
from .context import FormalContext, normalize_rate
from .errors import DomainError, InputError

logger = logging.getLogger(__name__)

TopicId = int


@dataclass(frozen=True)
class Document:
    id: str
    path: str


@dataclass(frozen=True)
class WeightEntry:
    doc: str
    topic: TopicId
    weight: float


@dataclass
class WeightedDocTopicMatrix:
    """Sparse document-topic weights with fixed row and column order.

    Entries keep file order.  Every entry must reference a declared
    document and topic, appear at most once per (doc, topic) cell, and
    carry a finite weight >= 0.
    """

    documents: tuple[Document, ...]
    topics: tuple[TopicId, ...]
    entries: tuple[WeightEntry, ...]
    _weights: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.documents = tuple(self.documents)
        self.topics = tuple(self.topics)
        self.entries = tuple(self.entries)
        doc_ids = {d.id for d in self.documents}
        if len(doc_ids) != len(self.documents):
            raise InputError("duplicate document ids in matrix")
        if len(set(self.topics)) != len(self.topics):
            raise InputError("duplicate topic ids in matrix")
        for t in self.topics:
            if not isinstance(t, int) or isinstance(t, bool) or t < 0:
                raise InputError(f"topic ids must be non-negative integers, got {t!r}")
        topic_ids = set(self.topics)
        weights: dict[tuple[str, TopicId], float] = {}
        for e in self.entries:
            if e.doc not in doc_ids:
                raise InputError(f"weight entry references unknown document: {e.doc!r}")
            if e.topic not in topic_ids:
                raise InputError(f"weight entry references unknown topic: {e.topic!r}")
            if not math.isfinite(e.weight) or e.weight < 0:
                raise InputError(
                    f"weight for ({e.doc!r}, {e.topic}) must be finite and >= 0, got {e.weight!r}"
                )
            cell = (e.doc, e.topic)
            if cell in weights:
                raise InputError(f"duplicate weight entry for ({e.doc!r}, {e.topic})")
            weights[cell] = e.weight
        self._weights = weights

    @property
    def n_documents(self) -> int:
        return len(self.documents)

    @property
    def n_topics(self) -> int:
        return len(self.topics)

    def weight(self, doc: str, topic: TopicId) -> float:
        """Weight of a cell, 0.0 for cells absent from the entry list."""
        return self._weights.get((doc, topic), 0.0)


@dataclass(frozen=True)
class ThresholdReport:
    """Outcome of threshold selection.

    delta is +inf when no candidate weight brought the density down to the
    target; achieved_density is the density at the selected delta.
    """

    delta: float
    target_density: float
    achieved_density: float
    candidates_examined: int

    @property
    def is_sentinel(self) -> bool:
        return math.isinf(self.delta)

    def to_dict(self) -> dict:
        return {
            "delta": None if self.is_sentinel else self.delta,
            "sentinel": self.is_sentinel,
            "target_density": self.target_density,
            "achieved_density": self.achieved_density,
            "candidates_examined": self.candidates_examined,
        }


def row_normalize(matrix: WeightedDocTopicMatrix) -> WeightedDocTopicMatrix:
    """Scale each document's weights to sum to 1; all-zero rows stay as is.

    The sparsity pattern is unchanged and column order is untouched.
    """
    sums: dict[str, float] = {}
    for e in matrix.entries:
        sums[e.doc] = sums.get(e.doc, 0.0) + e.weight
    entries = tuple(
        e if sums[e.doc] == 0.0 else WeightEntry(e.doc, e.topic, e.weight / sums[e.doc])
        for e in matrix.entries
    )
    return WeightedDocTopicMatrix(matrix.documents, matrix.topics, entries)


def density(matrix: WeightedDocTopicMatrix, delta: float) -> float:
    """Fraction of all |D| * |T| cells whose weight meets delta.

    Cells absent from the entry list weigh 0 and therefore count only
    when delta <= 0.
    """
    total = matrix.n_documents * matrix.n_topics
    if total == 0:
        raise DomainError("density is undefined on a matrix with no documents or no topics")
    if math.isnan(delta):
        raise InputError("delta must not be NaN")
    if delta > 0:
        count = sum(1 for e in matrix.entries if e.weight >= delta)
    else:
        count = total - sum(1 for e in matrix.entries if e.weight < delta)
    return count / total


def select_threshold(matrix: WeightedDocTopicMatrix, target_density: float | str) -> ThresholdReport:
    """Smallest distinct weight value whose density is at or below target.

    Candidates are the distinct weights present in the matrix, scanned in
    ascending order; the comparison against the target is exact.  With no
    admissible candidate the sentinel +inf is returned with a warning and
    achieved density 0.0.
    """
    target = normalize_rate(target_density, "target_density")
    if target == 0:
        raise InputError("target_density must be in (0, 1]")
    total = matrix.n_documents * matrix.n_topics
    if total == 0:
        raise DomainError("threshold selection is undefined on an empty matrix")
    sorted_weights = sorted(e.weight for e in matrix.entries)
    candidates = sorted(set(sorted_weights))
    examined = 0
    for value in candidates:
        examined += 1
        if value > 0:
            count = len(sorted_weights) - bisect_left(sorted_weights, value)
        else:
            count = total - bisect_left(sorted_weights, value)
        if Fraction(count, total) <= target:
            return ThresholdReport(
                delta=value,
                target_density=float(target),
                achieved_density=count / total,
                candidates_examined=examined,
            )
    logger.warning(
        "no threshold reaches target density %s; returning +inf sentinel "
        "(the binarized context would be all zeros)",
        float(target),
    )
    return ThresholdReport(
        delta=math.inf,
        target_density=float(target),
        achieved_density=0.0,
        candidates_examined=examined,
    )


def binarize(
    matrix: WeightedDocTopicMatrix, delta: float, directory_depth: int = 1
) -> FormalContext:
    """Binary context with incidence 1 iff weight >= delta.

    Objects are document ids in row order, attributes are topic ids as
    strings in column order.  Each object carries its path and the
    directory label derived from it at directory_depth.
    """
    if math.isnan(delta):
        raise InputError("delta must not be NaN")
    if not isinstance(directory_depth, int) or directory_depth < 1:
        raise InputError(f"directory_depth must be a positive integer, got {directory_depth!r}")
    topic_col = {t: j for j, t in enumerate(matrix.topics)}
    fill = 1 if delta <= 0 else 0
    rows = {d.id: [fill] * matrix.n_topics for d in matrix.documents}
    if delta > 0:
        for e in matrix.entries:
            if e.weight >= delta:
                rows[e.doc][topic_col[e.topic]] = 1
    paths = [d.path for d in matrix.documents]
    return FormalContext(
        [d.id for d in matrix.documents],
        [str(t) for t in matrix.topics],
        [rows[d.id] for d in matrix.documents],
        object_paths=paths,
        object_directories=[directory_label(p, directory_depth) for p in paths],
    )
