"""Directory labels, per-directory split, directory-topic aggregation."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatcat.aggregation import (
    DirectoryTopicContext,
    directory_label,
    directory_lattice,
    directory_topic_context,
    split_by_directory,
)
from fatcat.context import FormalContext, min_frequent_count, normalize_rate
from fatcat.errors import DomainError, InputError
from fatcat.iceberg import iceberg_concepts

from helpers import random_context_data


# -- directory labels -------------------------------------------------------------


def test_directory_label_examples():
    assert directory_label("Military/a.pdf", 1) == "Military"
    assert directory_label("A/B/x", 2) == "A/B"
    assert directory_label("A/B/x", 1) == "A"
    assert directory_label("x.txt", 1) == "."
    assert directory_label("./x.txt", 1) == "."
    assert directory_label("A//B/x", 1) == "A"
    assert directory_label("A/B/C/deep.txt", 5) == "A/B/C"


def test_directory_label_validation():
    with pytest.raises(InputError):
        directory_label("", 1)
    with pytest.raises(InputError):
        directory_label("a/b", 0)


# -- splitting ---------------------------------------------------------------------


def two_dir_context():
    return FormalContext(
        ["d0", "d1", "d2"],
        ["0", "1"],
        [[1, 0], [1, 1], [0, 1]],
        object_paths=["a/d0.txt", "a/d1.txt", "b/d2.txt"],
        object_directories=["a", "a", "b"],
    )


def test_split_by_directory_groups_and_sorts():
    subs = split_by_directory(two_dir_context())
    assert list(subs) == ["a", "b"]
    assert subs["a"].objects == ("d0", "d1")
    assert subs["b"].objects == ("d2",)
    assert subs["a"].attributes == ("0", "1")


def test_split_requires_paths():
    bare = FormalContext(["d0"], ["0"], [[1]])
    with pytest.raises(InputError, match="path"):
        split_by_directory(bare)


def test_split_respects_depth():
    ctx = FormalContext(
        ["d0", "d1"],
        ["0"],
        [[1], [1]],
        object_paths=["a/x/d0.txt", "a/y/d1.txt"],
    )
    assert list(split_by_directory(ctx, depth=1)) == ["a"]
    assert list(split_by_directory(ctx, depth=2)) == ["a/x", "a/y"]


# -- aggregation --------------------------------------------------------------------


def test_directory_topic_worked_example():
    # directory "a": t0 in 2/2 docs, t1 in 1/2; at 0.6 only t0 survives
    subs = split_by_directory(two_dir_context())
    dtc = directory_topic_context(subs, 0.6)
    assert dtc.directories == ("a", "b")
    assert dtc.topics == (0, 1)
    assert dtc.incidence == ((1, 0), (0, 1))


def test_directory_topic_boundary_is_inclusive():
    subs = split_by_directory(two_dir_context())
    dtc = directory_topic_context(subs, 0.5)
    assert dtc.incidence == ((1, 1), (0, 1))


def test_aggregation_matches_union_of_frequent_intents():
    # the singleton-support rule equals collecting topics over iceberg intents
    rng = random.Random(21)
    for _ in range(40):
        objects, attributes, rows = random_context_data(
            rng, max_objects=10, max_attributes=6
        )
        attributes = [str(j) for j in range(len(attributes))]
        ctx = FormalContext(objects, attributes, rows)
        for minsupp in [0.1, 0.3, 0.5, 1.0]:
            dtc = directory_topic_context({"only": ctx}, minsupp)
            got = {t for t, bit in zip(dtc.topics, dtc.incidence[0]) if bit}
            lat = iceberg_concepts(ctx, minsupp)
            want = {int(a) for c in lat.concepts for a in c.intent}
            assert got == want, (rows, minsupp)


def test_aggregation_rejects_mismatched_topic_sets():
    a = FormalContext(["d0"], ["0"], [[1]])
    b = FormalContext(["d1"], ["1"], [[1]])
    with pytest.raises(InputError, match="mismatched attribute"):
        directory_topic_context({"a": a, "b": b}, 0.5)


def test_aggregation_rejects_non_integer_topics():
    ctx = FormalContext(["d0"], ["t-zero"], [[1]])
    with pytest.raises(InputError):
        directory_topic_context({"a": ctx}, 0.5)


def test_aggregation_rejects_empty_inputs():
    with pytest.raises(DomainError):
        directory_topic_context({}, 0.5)
    empty = FormalContext([], ["0"], [])
    with pytest.raises(DomainError, match="'a'"):
        directory_topic_context({"a": empty}, 0.5)


def test_dtc_round_trip_and_role_tag():
    subs = split_by_directory(two_dir_context())
    dtc = directory_topic_context(subs, 0.6)
    d = dtc.to_dict()
    assert d["role"] == "directory-topic"
    assert d["attributes"] == [0, 1]
    assert DirectoryTopicContext.from_dict(d) == dtc


def test_dtc_from_dict_validates_role():
    subs = split_by_directory(two_dir_context())
    d = directory_topic_context(subs, 0.6).to_dict()
    d["role"] = "something-else"
    with pytest.raises(InputError, match="role"):
        DirectoryTopicContext.from_dict(d)


def test_directory_lattice_worked_example():
    subs = split_by_directory(two_dir_context())
    dtc = directory_topic_context(subs, 0.5)
    cs = directory_lattice(dtc)
    # incidence [[1,1],[0,1]]: concepts ({a,b},{1}) and ({a},{0,1})
    assert [(c.extent, c.intent) for c in cs.concepts] == [
        (("a", "b"), ("1",)),
        (("a",), ("0", "1")),
    ]
    assert cs.covers == ((0, 1),)


def test_directory_lattice_with_minsupp_uses_iceberg():
    subs = split_by_directory(two_dir_context())
    dtc = directory_topic_context(subs, 0.5)
    cs = directory_lattice(dtc, minsupp=1.0)
    assert [(c.extent, c.intent) for c in cs.concepts] == [(("a", "b"), ("1",))]


@settings(deadline=None)
@given(st.integers(0, 2**12 - 1), st.sampled_from([0.1, 0.5, 1.0]))
def test_singleton_rule_equals_min_count(bits, minsupp):
    rows = [[(bits >> (3 * i + j)) & 1 for j in range(3)] for i in range(4)]
    ctx = FormalContext(
        [f"d{i}" for i in range(4)], ["0", "1", "2"], rows
    )
    dtc = directory_topic_context({"x": ctx}, minsupp)
    needed = min_frequent_count(4, normalize_rate(minsupp))
    for j in range(3):
        col = sum(rows[i][j] for i in range(4))
        assert dtc.incidence[0][j] == (1 if col >= needed else 0)
