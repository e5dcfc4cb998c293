"""Aggregate per-directory analysis into a directory-topic context.

Documents are grouped by the leading components of their paths.  Each
directory gets its own sub-context (same topic columns, its documents as
rows), and the aggregate records, per directory, which topics are frequent
inside it.  A topic appears in some frequent intent of the directory's
iceberg lattice exactly when its singleton support meets minsupp (support
is antitone, so the singleton dominates every intent containing the
topic); the cheap singleton test is what runs here, and the equivalence is
covered by tests.

The directory-topic incidence is itself a formal context (directories as
objects, topics as attributes), so the final aggregation step is just the
concept lattice of that context, full by default or an iceberg when a
minimum support is given.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .context import (
    DEFAULT_ENUMERATION_LIMIT,
    ConceptSet,
    FormalContext,
    enumerate_concepts,
    min_frequent_count,
    normalize_rate,
)
from .errors import DomainError, InputError
from .iceberg import IcebergLattice, iceberg_concepts

Rate = float | int | str | Fraction


def directory_label(path: str, depth: int) -> str:
    """Leading directory components of a path, joined with '/'.

    The final component is treated as the file name and never becomes part
    of the label.  Files sitting above `depth` directories keep what they
    have; files at the tree root map to ".".
    """
    if not isinstance(depth, int) or depth < 1:
        raise InputError(f"depth must be a positive integer, got {depth!r}")
    if not path:
        raise InputError("object with empty path")
    parts = [p for p in path.split("/") if p and p != "."]
    if not parts:
        raise InputError(f"path has no usable components: {path!r}")
    dirs = parts[:-1]
    return "/".join(dirs[:depth]) if dirs else "."


def split_by_directory(context: FormalContext, depth: int = 1) -> dict[str, FormalContext]:
    """Partition a context's objects by directory label, one sub-context each.

    Every sub-context keeps the full attribute list in the original column
    order.  Keys are sorted directory labels.  The context must carry
    object paths (binarize attaches them).
    """
    if context.object_paths is None:
        raise InputError("context has no object paths to split on")
    groups: dict[str, list[int]] = {}
    for i, path in enumerate(context.object_paths):
        if not path:
            raise InputError(f"object with empty path: {context.objects[i]!r}")
        groups.setdefault(directory_label(path, depth), []).append(i)
    return {
        label: context.restrict_objects(indices)
        for label, indices in sorted(groups.items())
    }


@dataclass(frozen=True)
class DirectoryTopicContext:
    """Directories as objects, topics as attributes, binary incidence.

    Row order follows the input mapping, column order the shared topic
    columns of the sub-contexts.  Rows may be all zero (a directory none
    of whose topics were frequent) and are retained.
    """

    directories: tuple[str, ...]
    topics: tuple[int, ...]
    incidence: tuple[tuple[int, ...], ...]

    def to_context(self) -> FormalContext:
        return FormalContext(
            self.directories, [str(t) for t in self.topics], self.incidence
        )

    def to_dict(self) -> dict:
        return {
            "role": "directory-topic",
            "objects": list(self.directories),
            "attributes": list(self.topics),
            "incidence": [list(row) for row in self.incidence],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "DirectoryTopicContext":
        if data.get("role") != "directory-topic":
            raise InputError('directory-topic JSON must carry "role": "directory-topic"')
        for key in ("objects", "attributes", "incidence"):
            if key not in data:
                raise InputError(f"directory-topic JSON is missing {key!r}")
        topics = tuple(data["attributes"])
        rows = [tuple(int(bool(v)) for v in row) for row in data["incidence"]]
        dtc = cls(tuple(data["objects"]), topics, tuple(rows))
        dtc.to_context()  # validates shapes and id uniqueness
        for t in topics:
            if not isinstance(t, int) or isinstance(t, bool) or t < 0:
                raise InputError(f"topic ids must be non-negative integers, got {t!r}")
        return dtc


def directory_topic_context(
    subcontexts: Mapping[str, FormalContext], minsupp: Rate
) -> DirectoryTopicContext:
    """Aggregate sub-contexts into one directory-topic context.

    A directory-topic cell is 1 iff the topic occurs in the intent of at
    least one frequent concept of the directory's iceberg lattice, which
    reduces to the topic's singleton support meeting minsupp in that
    sub-context.  All sub-contexts must share the same attribute columns
    and each must contain at least one document.
    """
    rate = normalize_rate(minsupp)
    if not subcontexts:
        raise DomainError("no sub-contexts to aggregate")
    items = list(subcontexts.items())
    attributes = items[0][1].attributes
    topics = []
    for attr in attributes:
        try:
            topic = int(attr)
        except ValueError:
            raise InputError(f"attribute ids must be integer topic ids, got {attr!r}") from None
        if topic < 0:
            raise InputError(f"attribute ids must be non-negative topic ids, got {attr!r}")
        topics.append(topic)
    rows = []
    for label, sub in items:
        if sub.attributes != attributes:
            raise InputError(f"sub-context {label!r} has mismatched attribute columns")
        if sub.n_objects == 0:
            raise DomainError(f"directory {label!r}: sub-context has no documents")
        needed = min_frequent_count(sub.n_objects, rate)
        rows.append(
            tuple(1 if sub._cols[j].bit_count() >= needed else 0 for j in range(len(attributes)))
        )
    return DirectoryTopicContext(
        directories=tuple(label for label, _ in items),
        topics=tuple(topics),
        incidence=tuple(rows),
    )


def directory_lattice(
    dtc: DirectoryTopicContext,
    minsupp: Rate | None = None,
    max_attributes: int = DEFAULT_ENUMERATION_LIMIT,
) -> ConceptSet | IcebergLattice:
    """Concept lattice of the directory-topic context.

    Full lattice by default; an iceberg of it when minsupp is given.
    """
    if not dtc.directories:
        raise DomainError("directory-topic context has no directories")
    context = dtc.to_context()
    if minsupp is None:
        return enumerate_concepts(context, max_attributes=max_attributes)
    return iceberg_concepts(context, minsupp)
