"""Present concept lattices: reduced labeling, DOT, and JSON.

Reduced labeling places each attribute at its attribute concept (the
maximal concept whose intent contains it) and each object at its object
concept (the minimal concept whose extent contains it), so every name
appears exactly once in a drawing and propagates implicitly along the
order.  Iceberg lattices may have lost an object's concept to the support
cutoff; such objects are omitted rather than mislabeled, which requires
consulting the originating context.

Attribute sets whose ids are all numeric render as compressed ranges
("3-5, 9") to keep nodes readable; a legend appended to the DOT output
maps topic ids back to their top words when topic info is supplied.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .context import AttributeId, ConceptSet, FormalConcept, FormalContext, ObjectId
from .errors import InputError

LATTICE_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class TopicInfo:
    """Descriptive words for one topic, most characteristic first."""

    topic_id: int
    words: tuple[str, ...] = ()
    word_scores: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.word_scores is not None and len(self.word_scores) != len(self.words):
            raise InputError(
                f"topic {self.topic_id}: word_scores and words must have equal length"
            )


@dataclass(frozen=True)
class LabeledLattice:
    """A concept set plus reduced label maps (name -> concept index)."""

    concepts: tuple[FormalConcept, ...]
    covers: tuple[tuple[int, int], ...]
    attribute_labels: dict[AttributeId, int] = field(default_factory=dict)
    object_labels: dict[ObjectId, int] = field(default_factory=dict)
    minsupp: float | None = None


def reduced_labels(cs: ConceptSet, context: FormalContext | None = None) -> LabeledLattice:
    """Compute reduced labels for a concept set.

    For a full lattice the maps are total and the originating context is
    not needed.  For an iceberg (nonzero minsupp) the context is required:
    whether an object's concept survived the cutoff cannot be decided from
    the surviving concepts alone, and guessing would pin the object onto a
    strictly larger concept.
    """
    minsupp = getattr(cs, "minsupp", None)
    if context is None:
        if minsupp:
            raise InputError(
                "labeling an iceberg lattice requires the context it was mined from"
            )
        attribute_labels = _maximal_containing_attr(cs.concepts)
        object_labels = _minimal_containing_obj(cs.concepts)
    else:
        extent_index = {frozenset(c.extent): i for i, c in enumerate(cs.concepts)}
        attribute_labels = {}
        for m in context.attributes:
            idx = extent_index.get(context.derive_extent([m]))
            if idx is not None:
                attribute_labels[m] = idx
        object_labels = {}
        for g in context.objects:
            idx = extent_index.get(context.derive_extent(context.derive_intent([g])))
            if idx is not None:
                object_labels[g] = idx
    return LabeledLattice(
        concepts=cs.concepts,
        covers=cs.covers,
        attribute_labels=dict(sorted(attribute_labels.items())),
        object_labels=dict(sorted(object_labels.items())),
        minsupp=minsupp,
    )


def _maximal_containing_attr(concepts: Sequence[FormalConcept]) -> dict[AttributeId, int]:
    best: dict[AttributeId, int] = {}
    for i, concept in enumerate(concepts):
        for m in concept.intent:
            if m not in best or len(concept.extent) > len(concepts[best[m]].extent):
                best[m] = i
    return best


def _minimal_containing_obj(concepts: Sequence[FormalConcept]) -> dict[ObjectId, int]:
    containing: dict[ObjectId, list[int]] = {}
    for i, concept in enumerate(concepts):
        for g in concept.extent:
            containing.setdefault(g, []).append(i)
    labels: dict[ObjectId, int] = {}
    for g, indices in containing.items():
        low = min(indices, key=lambda i: len(concepts[i].extent))
        low_extent = set(concepts[low].extent)
        # only label when the minimum is unique, i.e. sits inside all others
        if all(low_extent <= set(concepts[i].extent) for i in indices):
            labels[g] = low
    return labels


def compress_ranges(ids: Iterable[int]) -> str:
    """Render ids as maximal runs: {3,4,5,9} -> "3-5, 9"."""
    values = sorted(set(ids))
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InputError(f"ids must be non-negative integers, got {v!r}")
    parts: list[str] = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] == values[j] + 1:
            j += 1
        parts.append(str(values[i]) if i == j else f"{values[i]}-{values[j]}")
        i = j + 1
    return ", ".join(parts)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(
    ll: LabeledLattice,
    topics: Mapping[int, TopicInfo] | None = None,
    words_per_topic: int = 5,
) -> str:
    """Graphviz source for the lattice diagram, edges parent -> child.

    Node identity is the canonical concept index.  Labels show the
    attributes placed at the node (compressed to id ranges when all ids
    are numeric) above the objects placed there.  With topic info a
    legend of the top words per topic id is appended as comments.
    """
    if not isinstance(words_per_topic, int) or words_per_topic < 0:
        raise InputError(f"words_per_topic must be a non-negative integer, got {words_per_topic!r}")
    attrs_at: dict[int, list[AttributeId]] = {}
    for m, i in ll.attribute_labels.items():
        attrs_at.setdefault(i, []).append(m)
    objs_at: dict[int, list[ObjectId]] = {}
    for g, i in ll.object_labels.items():
        objs_at.setdefault(i, []).append(g)
    lines = ["digraph lattice {", "  rankdir=TB;", "  node [shape=box];"]
    for i in range(len(ll.concepts)):
        attr_ids = sorted(attrs_at.get(i, ()))
        obj_ids = sorted(objs_at.get(i, ()))
        if attr_ids and all(a.isdigit() for a in attr_ids):
            attr_text = compress_ranges(int(a) for a in attr_ids)
        else:
            attr_text = ", ".join(attr_ids)
        obj_text = ", ".join(obj_ids)
        parts = [_dot_escape(t) for t in (attr_text, obj_text) if t]
        label = "\\n".join(parts)  # the two-char DOT escape, a literal newline is invalid there
        lines.append(f'  c{i} [label="{label}"];')
    for p, c in ll.covers:
        lines.append(f"  c{p} -> c{c};")
    if topics:
        legend: list[str] = []
        present = sorted(
            int(a) for a in ll.attribute_labels if a.isdigit() and int(a) in topics
        )
        for tid in present:
            words = topics[tid].words[:words_per_topic]
            if words:
                legend.append(f"  // {tid}: {' '.join(words)}")
        if legend:
            lines.append("  // topics:")
            lines.extend(legend)
    lines.append("}")
    return "\n".join(lines) + "\n"


def concepts_to_dict(cs: ConceptSet) -> dict:
    """ConceptSet (or iceberg, which adds minsupp) as a JSON-ready dict."""
    data: dict = {"schema_version": LATTICE_SCHEMA_VERSION}
    minsupp = getattr(cs, "minsupp", None)
    if minsupp is not None:
        data["minsupp"] = minsupp
    data["concepts"] = [
        {"extent": list(c.extent), "intent": list(c.intent), "support": c.support}
        for c in cs.concepts
    ]
    data["covers"] = [list(pair) for pair in cs.covers]
    return data


def to_json(ll: LabeledLattice) -> str:
    """Deterministic lattice JSON: fixed field order, sorted label keys."""
    data = concepts_to_dict(
        ConceptSet(concepts=ll.concepts, covers=ll.covers)
    )
    if ll.minsupp is not None:
        # rebuild to keep the field order: version, minsupp, concepts, covers
        data = {
            "schema_version": data["schema_version"],
            "minsupp": ll.minsupp,
            "concepts": data["concepts"],
            "covers": data["covers"],
        }
    data["attribute_labels"] = dict(sorted(ll.attribute_labels.items()))
    data["object_labels"] = dict(sorted(ll.object_labels.items()))
    return json.dumps(data, indent=2) + "\n"


def lattice_from_json(text: str | bytes) -> LabeledLattice:
    """Parse lattice JSON back into a LabeledLattice (inverse of to_json)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid lattice JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("invalid lattice JSON: expected an object at the top level")
    if data.get("schema_version") != LATTICE_SCHEMA_VERSION:
        raise InputError(
            f"unsupported lattice schema_version: {data.get('schema_version')!r}"
        )
    try:
        concepts = tuple(
            FormalConcept(
                extent=tuple(c["extent"]),
                intent=tuple(c["intent"]),
                support=float(c["support"]),
            )
            for c in data["concepts"]
        )
        covers = tuple((int(p), int(c)) for p, c in data["covers"])
        attribute_labels = {str(k): int(v) for k, v in data.get("attribute_labels", {}).items()}
        object_labels = {str(k): int(v) for k, v in data.get("object_labels", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid lattice JSON: {exc}") from None
    for name, idx in list(attribute_labels.items()) + list(object_labels.items()):
        if not 0 <= idx < len(concepts):
            raise InputError(f"label {name!r} points at missing concept {idx}")
    minsupp = data.get("minsupp")
    return LabeledLattice(
        concepts=concepts,
        covers=covers,
        attribute_labels=dict(sorted(attribute_labels.items())),
        object_labels=dict(sorted(object_labels.items())),
        minsupp=None if minsupp is None else float(minsupp),
    )
