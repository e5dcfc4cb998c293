"""Iceberg concept lattices via level-wise key search.

An iceberg lattice keeps only the concepts whose intent is frequent:
supp(B) = |B'| / |G| meets or exceeds a minimum support.  Because support
is antitone in the intent, the frequent concepts form an order filter of
the full lattice (everything above a kept concept is kept), which is what
lets a level-wise search find them all without enumerating the lattice:
key sets (minimal generators) are explored in order of size with
Apriori-style candidate generation, and every frequent closed intent is
the closure of some frequent key.

Support comparisons run on integer extent cardinalities against an exact
rational threshold, so boundary cases like supp = 0.5 at minsupp 0.5 are
decided without floating-point drift.  See `normalize_rate` for how float
and string thresholds are interpreted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .context import (
    AttributeId,
    ConceptSet,
    FormalConcept,
    FormalContext,
    _bit_indices,
    _canonical_order,
    _covers_from_extent_masks,
    min_frequent_count,
    normalize_rate,
)
from .errors import DomainError

Rate = float | int | str | Fraction


@dataclass(frozen=True)
class IcebergLattice(ConceptSet):
    """Frequent part of a concept lattice.

    Inherits the canonical concept order and cover pairs from ConceptSet
    (covers are restricted to the frequent set, which coincides with the
    full lattice's covers on that set because it is an order filter).
    `level_candidates` records how many candidate key sets each level of
    the search materialized; it exists for diagnostics and perf assertions
    and is not serialized.
    """

    minsupp: float = 0.0
    level_candidates: tuple[int, ...] = field(default=(), compare=False)


def is_frequent(
    context: FormalContext, attrs, minsupp: Rate
) -> bool:
    """Whether supp(attrs) meets or exceeds minsupp (boundary inclusive)."""
    rate = normalize_rate(minsupp)
    if context.n_objects == 0:
        raise DomainError("support is undefined on a context with no objects")
    needed = min_frequent_count(context.n_objects, rate)
    extent = context.extent_mask_of(context.attribute_mask(attrs))
    return extent.bit_count() >= needed


def iceberg_concepts(context: FormalContext, minsupp: Rate) -> IcebergLattice:
    """All concepts with frequent intent, with covers, in canonical order.

    minsupp = 0 yields the full lattice; minsupp = 1 yields only the top
    concept (G, G').  The search walks candidate key sets level by level:
    supports come from one bitset intersection per candidate, non-keys
    (support equal to some subset one size down) are pruned, and the next
    level is generated Apriori-style from the surviving frequent keys.
    Closures are read off the candidate's extent directly.
    """
    rate = normalize_rate(minsupp)
    n = context.n_objects
    if n == 0:
        raise DomainError("iceberg lattice is undefined on a context with no objects")
    needed = min_frequent_count(n, rate)
    cols = context._cols
    n_attrs = context.n_attributes
    full_extent = (1 << n) - 1

    # closed intents found so far, keyed by intent mask
    closed: dict[int, int] = {}

    def record(extent_mask: int) -> None:
        intent = context.intent_mask_of(extent_mask)
        if intent not in closed:
            closed[intent] = extent_mask

    record(full_extent)  # closure of the empty key, always frequent

    level_candidates: list[int] = []
    # frequent keys of the current level: sorted attr tuple -> (extent, count)
    keys: dict[tuple[int, ...], tuple[int, int]] = {(): (full_extent, n)}
    prev_counts: dict[tuple[int, ...], int] = {(): n}
    size = 1
    while keys:
        if size == 1:
            candidates = [((j,), full_extent) for j in range(n_attrs)]
        else:
            candidates = []
            ordered = sorted(keys)
            for a, b in combinations(ordered, 2):
                if a[:-1] != b[:-1]:
                    continue
                cand = a + (b[-1],)
                if all(
                    cand[:i] + cand[i + 1 :] in keys for i in range(len(cand) - 2)
                ):
                    candidates.append((cand, keys[a][0]))
        level_candidates.append(len(candidates))
        next_keys: dict[tuple[int, ...], tuple[int, int]] = {}
        counts: dict[tuple[int, ...], int] = {}
        for cand, parent_extent in candidates:
            extent = parent_extent & cols[cand[-1]]
            count = extent.bit_count()
            counts[cand] = count
            if count < needed:
                continue
            # a candidate matching any one-smaller subset's support is not a key
            if any(
                count == prev_counts[cand[:i] + cand[i + 1 :]]
                for i in range(len(cand))
            ):
                continue
            next_keys[cand] = (extent, count)
            record(extent)
        keys = next_keys
        prev_counts = counts
        size += 1

    ordered_pairs = _canonical_order([(e, b) for b, e in closed.items()])
    concepts = tuple(
        FormalConcept(
            extent=context.objects_from_mask(extent),
            intent=context.attributes_from_mask(intent),
            support=extent.bit_count() / n,
        )
        for extent, intent in ordered_pairs
    )
    covers = tuple(_covers_from_extent_masks([e for e, _ in ordered_pairs]))
    return IcebergLattice(
        concepts=concepts,
        covers=covers,
        minsupp=float(rate),
        level_candidates=tuple(level_candidates),
    )
