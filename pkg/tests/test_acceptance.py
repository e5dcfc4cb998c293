"""Acceptance suite: one verdict line per criterion, stated tolerances.

Each test records a PASS/FAIL line (echoed in the terminal summary) and
then asserts, so a red test and a FAIL line always travel together.
"""

import json
import os
import random
import subprocess
import sys
import time
from math import comb

import pytest

from fatcat.aggregation import directory_topic_context
from fatcat.context import (
    FormalContext,
    enumerate_concepts,
    min_frequent_count,
    normalize_rate,
)
from fatcat.export import reduced_labels
from fatcat.iceberg import iceberg_concepts
from fatcat.thresholding import density, row_normalize, select_threshold

from helpers import (
    contranominal,
    naive_extent,
    naive_intent,
    pairs_from_rows,
    random_context_data,
    record_acceptance,
)
from test_thresholding import matrix_from_rows


MINSUPPS = [0, 0.1, 0.3, 0.5, 1.0]


def seeded_context(rng, max_objects, max_attributes):
    objects, attributes, rows = random_context_data(
        rng, max_objects=max_objects, max_attributes=max_attributes
    )
    return objects, attributes, rows, FormalContext(objects, attributes, rows)


def subset(rng, pool):
    return {x for x in pool if rng.random() < 0.4}


def test_galois_laws_hold_on_seeded_contexts():
    rng = random.Random(2024)
    start = time.perf_counter()
    checked = 0
    ok = True
    for _ in range(1000):
        objects, attributes, rows, ctx = seeded_context(rng, 15, 15)
        for _ in range(3):
            objs = subset(rng, objects)
            attrs = subset(rng, attributes)
            attrs2 = attrs | subset(rng, attributes)
            a2 = ctx.derive_extent(ctx.derive_intent(objs))
            b2 = ctx.closure(attrs)
            ok &= objs <= a2
            ok &= attrs <= b2
            ok &= ctx.derive_extent(attrs2) <= ctx.derive_extent(attrs)
            intent = ctx.derive_intent(objs)
            ok &= ctx.derive_intent(ctx.derive_extent(intent)) == intent
            checked += 1
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10.0
    record_acceptance(
        "galois laws on 1000 seeded contexts",
        ok,
        f"{checked} subset triples, {elapsed:.2f}s < 10s",
    )
    assert ok


def test_iceberg_matches_brute_force_filter():
    rng = random.Random(2025)
    start = time.perf_counter()
    ok = True
    pairs_checked = 0
    for _ in range(200):
        _, _, _, ctx = seeded_context(rng, 40, 12)
        full = enumerate_concepts(ctx)
        for minsupp in MINSUPPS:
            needed = min_frequent_count(len(ctx.objects), normalize_rate(minsupp))
            keep = [
                i for i, c in enumerate(full.concepts) if len(c.extent) >= needed
            ]
            remap = {old: new for new, old in enumerate(keep)}
            want_concepts = tuple(full.concepts[i] for i in keep)
            want_covers = tuple(
                (remap[p], remap[c])
                for p, c in full.covers
                if p in remap and c in remap
            )
            lat = iceberg_concepts(ctx, minsupp)
            ok &= lat.concepts == want_concepts
            ok &= lat.covers == want_covers
            pairs_checked += 1
    elapsed = time.perf_counter() - start
    ok &= elapsed < 60.0
    record_acceptance(
        "iceberg equals filtered enumeration",
        ok,
        f"{pairs_checked} context/minsupp pairs, {elapsed:.2f}s < 60s",
    )
    assert ok


def test_contranominal_counts():
    ok = True
    for n in range(1, 11):
        ctx = contranominal(n)
        full = enumerate_concepts(ctx)
        ok &= len(full.concepts) == 2**n
        if n >= 2:
            lat = iceberg_concepts(ctx, f"{n - 1}/{n}")
            # empty intent plus the n singletons survive at (n-1)/n
            ok &= len(lat.concepts) == n + 1
    record_acceptance(
        "contranominal scales", ok, "2^n concepts for n=1..10, n+1 at (n-1)/n"
    )
    assert ok


def test_threshold_selection_semantics():
    rng = random.Random(2026)
    ok = True
    for _ in range(50):
        rows = [
            [round(rng.random(), 3) for _ in range(rng.randint(2, 8))]
        ]
        width = len(rows[0])
        for _ in range(rng.randint(1, 9)):
            rows.append([round(rng.random(), 3) for _ in range(width)])
        m = row_normalize(matrix_from_rows(rows))
        candidates = sorted({e.weight for e in m.entries if e.weight > 0})
        densities = [density(m, d) for d in candidates]
        ok &= densities == sorted(densities, reverse=True)
        target = round(rng.uniform(0.05, 0.95), 4)
        report = select_threshold(m, target)
        if not report.is_sentinel:
            ok &= density(m, report.delta) <= target
            below = [d for d in candidates if d < report.delta]
            if below:
                ok &= density(m, max(below)) > target
    worked = select_threshold(matrix_from_rows([[0.7, 0.3], [0.6, 0.4]]), 0.25)
    ok &= worked.delta == 0.7
    ok &= worked.achieved_density == 0.25
    record_acceptance(
        "threshold selection",
        ok,
        "density non-increasing, minimal delta, worked example delta=0.7",
    )
    assert ok


def test_aggregation_equivalence():
    rng = random.Random(2027)
    ok = True
    for i in range(100):
        objects, attributes, rows = random_context_data(
            rng, max_objects=12, max_attributes=7
        )
        attributes = [str(j) for j in range(len(attributes))]
        ctx = FormalContext(objects, attributes, rows)
        minsupp = rng.choice([0.1, 0.3, 0.5, 1.0])
        dtc = directory_topic_context({"d": ctx}, minsupp)
        by_singletons = {
            t for t, bit in zip(dtc.topics, dtc.incidence[0]) if bit
        }
        lat = iceberg_concepts(ctx, minsupp)
        by_intents = {int(a) for c in lat.concepts for a in c.intent}
        ok &= by_singletons == by_intents
    record_acceptance(
        "aggregation equivalence",
        ok,
        "frequent singletons equal union of frequent intents, 100 sub-contexts",
    )
    assert ok


def test_pipeline_end_to_end_determinism(tmp_path):
    start = time.perf_counter()
    weights = tmp_path / "weights.json"
    env = dict(os.environ)

    def cli(args, hash_seed):
        env_run = dict(env, PYTHONHASHSEED=hash_seed)
        return subprocess.run(
            [sys.executable, "-m", "fatcat", *args],
            capture_output=True,
            text=True,
            env=env_run,
        )

    gen = cli(
        [
            "gen",
            "--seed", "0",
            "--n-dirs", "3",
            "--docs-per-dir", "50",
            "--n-topics", "20",
            "--topics-per-doc", "10",
            "--out", str(weights),
        ],
        "0",
    )
    ok = gen.returncode == 0
    artifacts = []
    for hash_seed in ["0", "31337"]:
        out_dir = tmp_path / f"run{hash_seed}"
        proc = cli(
            ["pipeline", "--weights", str(weights), "--out-dir", str(out_dir)],
            hash_seed,
        )
        ok &= proc.returncode == 0
        artifacts.append(
            {
                name: (out_dir / name).read_bytes()
                for name in ["manifest.json", "lattice.json", "lattice.dot"]
            }
            if proc.returncode == 0
            else {}
        )
    ok &= bool(artifacts[0]) and artifacts[0] == artifacts[1]
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30.0
    record_acceptance(
        "pipeline determinism",
        bool(ok),
        f"byte-identical manifest/lattice/dot across hash seeds, {elapsed:.2f}s < 30s",
    )
    assert ok


def test_reduced_labeling_on_full_lattices():
    rng = random.Random(2028)
    ok = True
    for _ in range(100):
        objects, attributes, rows = random_context_data(
            rng, max_objects=10, max_attributes=7
        )
        ctx = FormalContext(objects, attributes, rows)
        pairs = pairs_from_rows(objects, attributes, rows)
        cs = enumerate_concepts(ctx)
        ll = reduced_labels(cs)
        ok &= sorted(ll.attribute_labels) == sorted(attributes)
        ok &= sorted(ll.object_labels) == sorted(objects)
        for m, i in ll.attribute_labels.items():
            # attribute concept, recomputed with the set-based oracle
            extent = naive_extent(objects, pairs, {m})
            intent = naive_intent(attributes, pairs, extent)
            ok &= set(cs.concepts[i].extent) == extent
            ok &= set(cs.concepts[i].intent) == intent
        for g, i in ll.object_labels.items():
            intent = naive_intent(attributes, pairs, {g})
            extent = naive_extent(objects, pairs, intent)
            ok &= set(cs.concepts[i].extent) == extent
            ok &= set(cs.concepts[i].intent) == intent
    record_acceptance(
        "reduced labeling",
        ok,
        "100 full lattices, each label once at its attribute/object concept",
    )
    assert ok


def test_iceberg_performance_on_large_context():
    rng = random.Random(2029)
    n_objects, n_attributes = 10_000, 40
    rows = [
        [1 if rng.random() < 0.1 else 0 for _ in range(n_attributes)]
        for _ in range(n_objects)
    ]
    ctx = FormalContext(
        [f"d{i}" for i in range(n_objects)],
        [str(j) for j in range(n_attributes)],
        rows,
    )
    start = time.perf_counter()
    lat = iceberg_concepts(ctx, 0.1)
    elapsed = time.perf_counter() - start
    ok = elapsed < 5.0
    counters = lat.level_candidates
    ok &= bool(counters) and counters[0] == n_attributes
    needed = min_frequent_count(n_objects, normalize_rate(0.1))
    frequent_singletons = sum(
        1
        for j in range(n_attributes)
        if sum(rows[i][j] for i in range(n_objects)) >= needed
    )
    for k, n_cand in enumerate(counters, start=1):
        if k == 1:
            continue
        ok &= n_cand <= comb(frequent_singletons, k)
        ok &= n_cand < 2**n_attributes
    record_acceptance(
        "iceberg performance",
        ok,
        f"10000x40 at minsupp 0.1 in {elapsed:.2f}s < 5s, "
        f"levels {list(counters)} within Apriori frontier",
    )
    assert ok
