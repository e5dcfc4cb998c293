"""Reference implementations and test data builders.

The reference functions work straight from the definitions using plain
Python sets, with no bitmasks and no shared code with the package.  They
are deliberately slow; tests use them as oracles on small inputs.
"""


from __future__ import annotations

import random
from itertools import combinations

from fatcat.context import FormalContext


# -- naive reference implementations (oracles) ------------------------------


def naive_intent(attributes, pairs, objs):
    """A' from the definition: attributes shared by every object in objs."""
    return {m for m in attributes if all((g, m) in pairs for g in objs)}


def naive_extent(objects, pairs, attrs):
    """B' from the definition: objects having every attribute in attrs."""
    return {g for g in objects if all((g, m) in pairs for m in attrs)}


def naive_closure(objects, attributes, pairs, attrs):
    return naive_intent(attributes, pairs, naive_extent(objects, pairs, attrs))


def naive_concepts(objects, attributes, pairs):
    """All concepts by closing every attribute subset (2^|M| of them).

    Returns a set of (frozenset extent, frozenset intent) pairs.
    """
    found = set()
    attrs = list(attributes)
    for r in range(len(attrs) + 1):
        for combo in combinations(attrs, r):
            extent = naive_extent(objects, pairs, combo)
            intent = naive_intent(attributes, pairs, extent)
            found.add((frozenset(extent), frozenset(intent)))
    return found


def naive_covers(extents):
    """Transitive reduction of strict subset order by the triple loop."""
    covers = set()
    n = len(extents)
    for p in range(n):
        for c in range(n):
            if p == c or not extents[c] < extents[p]:
                continue
            between = any(
                q not in (p, c) and extents[c] < extents[q] < extents[p]
                for q in range(n)
            )
            if not between:
                covers.add((p, c))
    return covers


# -- random context material --------------------------------------------------


def random_context_data(rng: random.Random, max_objects=10, max_attributes=8,
                        density=None):
    """Raw (objects, attributes, rows) for a seeded random context."""
    n_obj = rng.randint(1, max_objects)
    n_attr = rng.randint(1, max_attributes)
    if density is None:
        density = rng.uniform(0.1, 0.9)
    rows = [
        [int(rng.random() < density) for _ in range(n_attr)]
        for _ in range(n_obj)
    ]
    objects = [f"g{i}" for i in range(n_obj)]
    attributes = [f"m{j}" for j in range(n_attr)]
    return objects, attributes, rows


def pairs_from_rows(objects, attributes, rows):
    return {
        (objects[i], attributes[j])
        for i, row in enumerate(rows)
        for j, cell in enumerate(row)
        if cell
    }


def contranominal(n: int) -> FormalContext:
    """The n x n context where object i has every attribute except i."""
    return FormalContext(
        [f"g{i}" for i in range(n)],
        [f"m{j}" for j in range(n)],
        [[int(i != j) for j in range(n)] for i in range(n)],
    )


# -- acceptance reporting --------------------------------------------------------

_acceptance_lines: list[str] = []


def record_acceptance(name: str, ok: bool, detail: str = "") -> None:
    """Queue a one-line verdict, echoed after the run by the summary hook."""
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    _acceptance_lines.append(f"[{status}] {name}{suffix}")

