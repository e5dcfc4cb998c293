"""Binary formal contexts and their concept lattices.

A formal context is a triple (G, M, I): a set of objects G, a set of
attributes M, and an incidence relation I stating which object has which
attribute.  The two derivation operators

    A' = {m in M | every g in A has m}      for A a set of objects
    B' = {g in G | g has every m in B}      for B a set of attributes

form a Galois connection.  A formal concept is a pair (A, B) with A' = B
and B' = A; concepts ordered by extent inclusion form a complete lattice.

Incidence is stored densely as one Python integer bitmask per row and per
column, so derivations reduce to bitwise AND.  Contexts here tend to have
few attributes and possibly many objects, which keeps column masks the
expensive side and row masks cheap.

Instances are immutable after construction.  All outputs that list objects
or attributes report them in construction order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InputError

ObjectId = str
AttributeId = str

#: Enumeration is refused when the smaller context dimension exceeds this.
DEFAULT_ENUMERATION_LIMIT = 25


def normalize_rate(value: float | int | str | Fraction, name: str = "minsupp") -> Fraction:
    """Normalize a support or density rate to an exact Fraction in [0, 1].

    Decimal strings ("0.1") convert exactly, which is what the CLI passes
    through.  Floats are interpreted via their shortest decimal repr, so a
    Python literal 0.1 means one tenth rather than its binary neighbour.
    """
    try:
        if isinstance(value, Fraction):
            rate = value
        elif isinstance(value, bool):
            raise TypeError("rate must be numeric, not bool")
        elif isinstance(value, int):
            rate = Fraction(value)
        elif isinstance(value, float):
            if not math.isfinite(value):
                raise ValueError("rate must be finite")
            rate = Fraction(repr(value))
        elif isinstance(value, str):
            rate = Fraction(value)
        else:
            raise TypeError(f"rate must be a number or decimal string, got {type(value).__name__}")
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"invalid {name}: {value!r} ({exc})") from None
    if not 0 <= rate <= 1:
        raise InputError(f"invalid {name}: {value!r} is outside [0, 1]")
    return rate


def min_frequent_count(n_objects: int, rate: Fraction) -> int:
    """Smallest extent cardinality k with k/n_objects >= rate."""
    scaled = rate * n_objects
    return -(-scaled.numerator // scaled.denominator)


class FormalContext:
    """A binary formal context with dense bitmask incidence.

    Parameters
    ----------
    objects, attributes:
        Unique id strings.  Row and column order is fixed at construction
        and all outputs are reported in that order.
    incidence:
        One row per object, each a sequence of |attributes| flags.
    object_paths:
        Optional per-object file paths, used for directory aggregation.
    object_directories:
        Optional per-object directory labels, normally derived from the
        paths at a configured depth.
    """

    __slots__ = (
        "objects",
        "attributes",
        "object_paths",
        "object_directories",
        "_obj_index",
        "_attr_index",
        "_rows",
        "_cols",
    )

    def __init__(
        self,
        objects: Sequence[ObjectId],
        attributes: Sequence[AttributeId],
        incidence: Sequence[Sequence[int]],
        *,
        object_paths: Sequence[str] | None = None,
        object_directories: Sequence[str] | None = None,
    ) -> None:
        self.objects = tuple(objects)
        self.attributes = tuple(attributes)
        self._obj_index = {g: i for i, g in enumerate(self.objects)}
        self._attr_index = {m: j for j, m in enumerate(self.attributes)}
        if len(self._obj_index) != len(self.objects):
            raise InputError("duplicate object ids in context")
        if len(self._attr_index) != len(self.attributes):
            raise InputError("duplicate attribute ids in context")
        if len(incidence) != len(self.objects):
            raise InputError(
                f"incidence has {len(incidence)} rows for {len(self.objects)} objects"
            )
        n_attrs = len(self.attributes)
        rows = []
        for i, row in enumerate(incidence):
            if len(row) != n_attrs:
                raise InputError(
                    f"incidence row {i} has {len(row)} cells for {n_attrs} attributes"
                )
            mask = 0
            for j, cell in enumerate(row):
                if cell:
                    mask |= 1 << j
            rows.append(mask)
        self._rows = tuple(rows)
        cols = [0] * n_attrs
        for i, mask in enumerate(rows):
            bit = 1 << i
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                cols[j] |= bit
                m &= m - 1
        self._cols = tuple(cols)
        self.object_paths = self._optional_labels(object_paths, "object_paths")
        self.object_directories = self._optional_labels(object_directories, "object_directories")

    def _optional_labels(self, labels: Sequence[str] | None, name: str) -> tuple[str, ...] | None:
        if labels is None:
            return None
        if len(labels) != len(self.objects):
            raise InputError(f"{name} has {len(labels)} entries for {len(self.objects)} objects")
        return tuple(labels)

    @classmethod
    def from_pairs(
        cls,
        objects: Sequence[ObjectId],
        attributes: Sequence[AttributeId],
        pairs: Iterable[tuple[ObjectId, AttributeId]],
        **kwargs,
    ) -> "FormalContext":
        """Build a context from an iterable of (object, attribute) pairs."""
        obj_index = {g: i for i, g in enumerate(objects)}
        attr_index = {m: j for j, m in enumerate(attributes)}
        rows = [[0] * len(attributes) for _ in objects]
        for g, m in pairs:
            if g not in obj_index:
                raise InputError(f"unknown object id: {g!r}")
            if m not in attr_index:
                raise InputError(f"unknown attribute id: {m!r}")
            rows[obj_index[g]][attr_index[m]] = 1
        return cls(objects, attributes, rows, **kwargs)

    # -- basic accessors ---------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    def has(self, obj: ObjectId, attr: AttributeId) -> bool:
        i = self._object_index(obj)
        j = self._attribute_index(attr)
        return bool(self._rows[i] >> j & 1)

    def __repr__(self) -> str:  # pragma: no cover
        return f"FormalContext({self.n_objects} objects, {self.n_attributes} attributes)"

    def _object_index(self, obj: ObjectId) -> int:
        try:
            return self._obj_index[obj]
        except KeyError:
            raise InputError(f"unknown object id: {obj!r}") from None

    def _attribute_index(self, attr: AttributeId) -> int:
        try:
            return self._attr_index[attr]
        except KeyError:
            raise InputError(f"unknown attribute id: {attr!r}") from None

    # -- mask-level operations ----------------------------------------------

    def object_mask(self, objs: Iterable[ObjectId]) -> int:
        mask = 0
        for g in objs:
            mask |= 1 << self._object_index(g)
        return mask

    def attribute_mask(self, attrs: Iterable[AttributeId]) -> int:
        mask = 0
        for m in attrs:
            mask |= 1 << self._attribute_index(m)
        return mask

    def extent_mask_of(self, attr_mask: int) -> int:
        """Objects (as a bitmask) having every attribute in attr_mask."""
        extent = (1 << self.n_objects) - 1
        m = attr_mask
        while m:
            j = (m & -m).bit_length() - 1
            extent &= self._cols[j]
            if not extent:
                break
            m &= m - 1
        return extent

    def intent_mask_of(self, obj_mask: int) -> int:
        """Attributes (as a bitmask) shared by every object in obj_mask.

        Computed by column subset tests, which stays cheap when the
        attribute count is small even for very wide extents.
        """
        intent = 0
        for j in range(self.n_attributes):
            if obj_mask & self._cols[j] == obj_mask:
                intent |= 1 << j
        return intent

    def objects_from_mask(self, mask: int) -> tuple[ObjectId, ...]:
        return tuple(self.objects[i] for i in _bit_indices(mask))

    def attributes_from_mask(self, mask: int) -> tuple[AttributeId, ...]:
        return tuple(self.attributes[j] for j in _bit_indices(mask))

    # -- derivation operators -----------------------------------------------

    def derive_intent(self, objs: Iterable[ObjectId]) -> frozenset[AttributeId]:
        """A' for a set of objects: the attributes all of them share."""
        mask = (1 << self.n_attributes) - 1
        for g in objs:
            mask &= self._rows[self._object_index(g)]
        return frozenset(self.attributes_from_mask(mask))

    def derive_extent(self, attrs: Iterable[AttributeId]) -> frozenset[ObjectId]:
        """B' for a set of attributes: the objects having all of them."""
        return frozenset(self.objects_from_mask(self.extent_mask_of(self.attribute_mask(attrs))))

    def closure(self, attrs: Iterable[AttributeId]) -> frozenset[AttributeId]:
        """B'' for a set of attributes: extensive, monotone, idempotent."""
        extent = self.extent_mask_of(self.attribute_mask(attrs))
        return frozenset(self.attributes_from_mask(self.intent_mask_of(extent)))

    def support(self, attrs: Iterable[AttributeId]) -> float:
        """|B'| / |G|, the fraction of objects having all attributes in B."""
        if self.n_objects == 0:
            raise DomainError("support is undefined on a context with no objects")
        extent = self.extent_mask_of(self.attribute_mask(attrs))
        return extent.bit_count() / self.n_objects

    # -- restriction ---------------------------------------------------------

    def restrict_objects(self, indices: Sequence[int]) -> "FormalContext":
        """New context keeping the given object rows, same attribute columns."""
        objects = [self.objects[i] for i in indices]
        rows = [self._row_flags(i) for i in indices]
        paths = [self.object_paths[i] for i in indices] if self.object_paths else None
        dirs = [self.object_directories[i] for i in indices] if self.object_directories else None
        return FormalContext(
            objects, self.attributes, rows, object_paths=paths, object_directories=dirs
        )

    def _row_flags(self, i: int) -> list[int]:
        mask = self._rows[i]
        return [(mask >> j) & 1 for j in range(self.n_attributes)]

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        data: dict = {
            "objects": list(self.objects),
            "attributes": list(self.attributes),
            "incidence": [self._row_flags(i) for i in range(self.n_objects)],
        }
        if self.object_paths is not None:
            data["object_paths"] = list(self.object_paths)
        if self.object_directories is not None:
            data["object_directories"] = list(self.object_directories)
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> "FormalContext":
        for key in ("objects", "attributes", "incidence"):
            if key not in data:
                raise InputError(f"context JSON is missing {key!r}")
        return cls(
            data["objects"],
            data["attributes"],
            data["incidence"],
            object_paths=data.get("object_paths"),
            object_directories=data.get("object_directories"),
        )


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FormalConcept:
    """A pair (extent, intent) with extent' = intent and intent' = extent.

    Extent and intent are reported in context construction order.  Support
    is |extent| / |G| for the context the concept came from.
    """

    extent: tuple[ObjectId, ...]
    intent: tuple[AttributeId, ...]
    support: float


@dataclass(frozen=True)
class ConceptSet:
    """Concepts in canonical order plus their cover relation.

    Canonical order sorts by extent size descending, ties broken by the
    intent's column-index sequence, so serialization is deterministic.
    Covers are (parent_index, child_index) pairs of the transitive
    reduction of extent inclusion, sorted ascending.
    """

    concepts: tuple[FormalConcept, ...]
    covers: tuple[tuple[int, int], ...]


def _canonical_order(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Sort (extent_mask, intent_mask) pairs into canonical concept order."""
    def key(pair: tuple[int, int]):
        extent, intent = pair
        return (-extent.bit_count(), tuple(_bit_indices(intent)))

    return sorted(pairs, key=key)


def _covers_from_extent_masks(extents: Sequence[int]) -> list[tuple[int, int]]:
    """Transitive reduction of strict extent inclusion.

    For each concept the candidate parents are scanned smallest first; a
    candidate is a cover unless an already accepted cover sits inside it.
    """
    order = sorted(range(len(extents)), key=lambda i: extents[i].bit_count())
    covers: list[tuple[int, int]] = []
    for c in range(len(extents)):
        child = extents[c]
        accepted: list[int] = []
        for p in order:
            parent = extents[p]
            if parent == child or parent & child != child:
                continue
            if any(extents[q] & parent == extents[q] for q in accepted):
                continue
            accepted.append(p)
            covers.append((p, c))
    covers.sort()
    return covers


def cover_relation(concepts: Sequence[FormalConcept]) -> list[tuple[int, int]]:
    """Cover pairs (parent_index, child_index) under extent inclusion.

    The transitive reduction of the concept order: (p, c) is a cover when
    extent(c) is strictly contained in extent(p) with nothing in between.
    Duplicate extents are rejected, they would make the order ill-defined.
    """
    universe: dict[ObjectId, int] = {}
    for concept in concepts:
        for g in concept.extent:
            if g not in universe:
                universe[g] = len(universe)
    masks = []
    seen: dict[int, int] = {}
    for idx, concept in enumerate(concepts):
        mask = 0
        for g in concept.extent:
            mask |= 1 << universe[g]
        if mask in seen:
            raise InputError(
                f"duplicate extent in concepts {seen[mask]} and {idx}"
            )
        seen[mask] = idx
        masks.append(mask)
    return _covers_from_extent_masks(masks)


def enumerate_concepts(
    context: FormalContext, max_attributes: int = DEFAULT_ENUMERATION_LIMIT
) -> ConceptSet:
    """All formal concepts of the context, exactly.

    Concept extents are precisely the intersections of attribute extents
    (plus G itself), so the closure system is generated by folding each
    column into the running set of extents.  When the context has fewer
    objects than attributes the dual runs over rows instead; the guard
    therefore applies to the smaller dimension, which bounds the lattice
    size at 2**min(|G|, |M|).

    Raises DomainError when min(|G|, |M|) exceeds max_attributes: the
    context is too large for exact enumeration.
    """
    small_side = min(context.n_objects, context.n_attributes)
    if small_side > max_attributes:
        raise DomainError(
            f"context too large for exact enumeration: min(|G|, |M|) = {small_side} "
            f"exceeds the limit of {max_attributes}"
        )
    n = context.n_objects
    if context.n_attributes <= n:
        full = (1 << n) - 1
        extents = {full}
        for col in context._cols:
            extents |= {e & col for e in extents}
        pairs = [(e, context.intent_mask_of(e)) for e in extents]
    else:
        full_intent = (1 << context.n_attributes) - 1
        intents = {full_intent}
        for row in context._rows:
            intents |= {b & row for b in intents}
        pairs = [(context.extent_mask_of(b), b) for b in intents]
    ordered = _canonical_order(pairs)
    concepts = tuple(
        FormalConcept(
            extent=context.objects_from_mask(extent),
            intent=context.attributes_from_mask(intent),
            support=(extent.bit_count() / n) if n else 0.0,
        )
        for extent, intent in ordered
    )
    covers = tuple(_covers_from_extent_masks([e for e, _ in ordered]))
    return ConceptSet(concepts=concepts, covers=covers)
