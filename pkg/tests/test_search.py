"""Bounded searches: colouring mini-language, constraint families, the
x/y transform bridge, witness re-verification and deterministic merging."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermono import search
from supermono.search import (
    Q5_VARIANTS,
    X_ALTERNATING,
    Y_BLOCK,
    Y_SUBSET,
    Constraint,
    altsum_search,
    colour_number,
    colour_pair_value,
    constraints_for,
    hindman_search,
    parse_colouring,
    plus_pair_search,
    q5_search,
    supermono_search,
    verify_altsum_witness,
    verify_hindman_witness,
    verify_plus_witness,
    verify_q5_witness,
    verify_supermono_witness,
    xy_inverse,
    xy_transform,
)
from supermono.words import ExplicitPrefix, Periodic


def test_parse_colouring_families():
    theta = parse_colouring("theta")
    assert (theta.family, theta.args, theta.lift) == ("theta", ("full",), None)
    assert parse_colouring("theta:stage2").args == ("stage2",)
    assert parse_colouring("lenmod:2").args == (2,)
    assert parse_colouring("valmod:3").lift == "both"
    assert parse_colouring("valmod:3@diff").lift == "diff"
    assert parse_colouring("gaps:2,4").args == (2, 4)
    assert parse_colouring("gaps:2").args == (2, 3)
    assert parse_colouring("dbl").family == "dbl"


def test_parse_colouring_rejections():
    for bad in ("rainbow:3", "theta:stage9", "lenmod:0", "base-lsnz:1",
                "gaps:0,3", "valmod:2@upwards", "theta@left", "lenmod:2@left"):
        with pytest.raises(ValueError):
            parse_colouring(bad)


def test_colour_number_families():
    assert colour_number(parse_colouring("const"), 7) == 0
    assert colour_number(parse_colouring("valmod:3"), 7) == 1
    assert colour_number(parse_colouring("fpmod:2"), 8) == 1
    assert colour_number(parse_colouring("base-lsnz:3"), 18) == 2
    assert colour_number(parse_colouring("gaps:2"), 0b10101) == (2, 0)
    assert colour_number(parse_colouring("dbl"), 12) == (1, "110")
    with pytest.raises(ValueError):
        colour_number(parse_colouring("valmod:2"), 0)
    with pytest.raises(ValueError):
        colour_number(parse_colouring("lenmod:2"), 3)


def test_colour_pair_value_lifts():
    assert colour_pair_value(parse_colouring("valmod:4@left"), 3, 9) == 3
    assert colour_pair_value(parse_colouring("valmod:4@right"), 3, 9) == 1
    assert colour_pair_value(parse_colouring("valmod:4@diff"), 3, 9) == 2
    assert colour_pair_value(parse_colouring("valmod:4@sum"), 3, 9) == 0
    assert colour_pair_value(parse_colouring("valmod:4"), 3, 9) == (3, 1)
    assert colour_pair_value(parse_colouring("theta"), 1, 201) == "100-001-101"
    with pytest.raises(ValueError):
        colour_pair_value(parse_colouring("valmod:4"), 9, 3)
    with pytest.raises(ValueError):
        colour_pair_value(parse_colouring("lenmod:2"), 1, 2)


def test_xy_transform_examples():
    assert xy_transform((1, 3, 4)) == [1, 2, 1]
    assert xy_inverse((1, 2, 1)) == [1, 3, 4]
    assert xy_transform((5,)) == [5]
    with pytest.raises(ValueError):
        xy_transform((2, 2))
    with pytest.raises(ValueError):
        xy_inverse((1, 0))


@given(xs=st.lists(st.integers(min_value=1, max_value=1 << 10),
                   min_size=1, max_size=6, unique=True))
def test_xy_round_trip(xs):
    xs = sorted(xs)
    assert xy_inverse(xy_transform(xs)) == xs
    ys = xy_transform(xs)
    assert all(y >= 1 for y in ys)


def test_constraint_pairs_for_small_sequences():
    pairs = [(c.left, c.right) for c in constraints_for((1, 2, 3), X_ALTERNATING)]
    assert pairs == [(1, 2), (1, 3), (2, 3)]
    four = {(c.left, c.right) for c in constraints_for((1, 2, 3, 4), X_ALTERNATING)}
    assert (2, 4) in four
    subset = [(c.left, c.right) for c in constraints_for((1, 1, 1), Y_SUBSET)]
    assert subset == [(2, 3)]
    block = [(c.left, c.right) for c in constraints_for((1, 1, 1), Y_BLOCK)]
    assert block == [(1, 2), (1, 3), (2, 3)]


def test_constraints_validation():
    with pytest.raises(ValueError):
        constraints_for((1, 2), "z_form")
    with pytest.raises(ValueError):
        constraints_for((2, 1), X_ALTERNATING)
    with pytest.raises(ValueError):
        constraints_for((1, 0), Y_SUBSET)
    with pytest.raises(AssertionError):
        Constraint(2, 2, (1, 2))


def test_first_index_relaxation_for_subset_form():
    assert [(c.left, c.right) for c in constraints_for((1, 3), Y_SUBSET, True)] \
        == [(2, 4)]
    assert constraints_for((1, 3), Y_SUBSET) == []
    assert constraints_for((1, 1), Y_SUBSET, True) == []


@given(xs=st.lists(st.integers(min_value=1, max_value=1 << 10),
                   min_size=1, max_size=6, unique=True))
@settings(max_examples=300)
def test_block_form_mirrors_alternating_form(xs):
    xs = sorted(xs)
    assert constraints_for(xs, X_ALTERNATING) == \
        constraints_for(xy_transform(xs), Y_BLOCK)


@given(ys=st.lists(st.integers(min_value=1, max_value=8),
                   min_size=2, max_size=6))
@settings(max_examples=300)
def test_subset_form_pairs_embed_in_block_form(ys):
    subset = {(c.left, c.right) for c in constraints_for(ys, Y_SUBSET)}
    block = {(c.left, c.right) for c in constraints_for(ys, Y_BLOCK)}
    assert subset <= block


@given(data=st.data())
@settings(max_examples=200)
def test_incremental_constraints_union_to_full_set(data):
    form = data.draw(st.sampled_from((X_ALTERNATING, Y_SUBSET, Y_BLOCK)))
    if form == X_ALTERNATING:
        values = sorted(data.draw(st.sets(
            st.integers(min_value=1, max_value=64), min_size=1, max_size=6)))
    else:
        values = data.draw(st.lists(
            st.integers(min_value=1, max_value=8), min_size=1, max_size=6))
    allow = data.draw(st.booleans())
    union = set()
    for i in range(1, len(values) + 1):
        union.update(search._constraints_with_top(values[:i], form, allow))
    assert union == set(constraints_for(values, form, allow))


def test_altsum_search_first_and_all_modes():
    rep = altsum_search(parse_colouring("const"), 10, 6)
    assert rep.witnesses == [[1, 2, 3, 4, 5, 6]]
    assert not rep.exhausted
    assert rep.nodes_explored == 6
    rep = altsum_search(parse_colouring("const"), 4, 2, mode="all")
    assert rep.witnesses == [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
    assert rep.exhausted
    for witness in rep.witnesses:
        assert verify_altsum_witness(parse_colouring("const"), witness,
                                     X_ALTERNATING)


def test_altsum_witness_verification_rejects_mixed_colours():
    assert not verify_altsum_witness(parse_colouring("theta"), [1, 2, 3],
                                     X_ALTERNATING)


def test_theta_stages_refine_witness_sets():
    by_stage = {}
    for stage in ("stage1", "stage2", "full"):
        rep = altsum_search(parse_colouring(f"theta:{stage}"), 12, 4, mode="all")
        assert rep.exhausted
        by_stage[stage] = (rep, {tuple(w) for w in rep.witnesses})
    assert by_stage["full"][1] <= by_stage["stage2"][1] <= by_stage["stage1"][1]
    assert by_stage["full"][0].max_depth_reached <= \
        by_stage["stage2"][0].max_depth_reached <= \
        by_stage["stage1"][0].max_depth_reached


def test_parallel_merge_is_deterministic():
    col = parse_colouring("theta")
    serial = altsum_search(col, 12, 4, mode="all", jobs=1)
    threaded = altsum_search(col, 12, 4, mode="all", jobs=4)
    assert serial == threaded
    first_serial = altsum_search(col, 12, 3, jobs=1)
    first_threaded = altsum_search(col, 12, 3, jobs=4)
    assert first_serial == first_threaded


def test_hindman_search_examples():
    col = parse_colouring("lenmod:2")
    rep = hindman_search("a", col, 3, 10)
    assert rep.witnesses == [[2, 4, 6]]
    assert verify_hindman_witness("a", col, [2, 4, 6])
    rep = hindman_search("a", col, 3, 2)
    assert rep.witnesses == []
    assert rep.exhausted
    with pytest.raises(ValueError):
        hindman_search("a", col, 1, 10)
    with pytest.raises(ValueError):
        hindman_search("", col, 3, 10)


def test_plus_pair_search_example():
    col = parse_colouring("valmod:2")
    rep = plus_pair_search(col, 3, 16)
    assert rep.witnesses == [[2, 4, 8]]
    assert verify_plus_witness(col, [2, 4, 8])
    assert not verify_plus_witness(col, [2, 4, 7])
    with pytest.raises(ValueError):
        plus_pair_search(col, 1, 16)


def test_q5_patterns_by_variant():
    assert search._q5_patterns(3, "plain") == [(1, 1, 1), (1, 2, 1)]
    assert search._q5_patterns(3, "with_gaps") == \
        [(1, 0, 1), (1, 1, 1), (1, 2, 1)]
    assert search._q5_patterns(1, "a1free") == [(1,), (2,)]
    assert search._q5_patterns(2, "akfree") == [(1, 1), (1, 2)]
    assert "with_gaps" in Q5_VARIANTS


def test_q5_search_variants():
    col = parse_colouring("base-lsnz:3")
    free = q5_search(col, "a1free", 3, 243)
    assert free.witnesses == []
    assert free.exhausted
    assert free.nodes_explored == 243
    plain = q5_search(col, "plain", 3, 243)
    assert plain.witnesses == [[1, 2, 4]]
    assert verify_q5_witness(col, "plain", [1, 2, 4])
    assert not verify_q5_witness(col, "plain", [1, 1])
    with pytest.raises(ValueError):
        q5_search(col, "spread", 3, 243)


def test_supermono_search_examples():
    word = Periodic("ab")
    rep = supermono_search(word, parse_colouring("lenmod:2"), 3, 2, 8)
    assert rep.witnesses == [[1, "ab", "ab"]]
    assert verify_supermono_witness(word, parse_colouring("lenmod:2"),
                                    [1, "ab", "ab"])
    rep = supermono_search(word, parse_colouring("theta"), 3, 2, 8)
    assert rep.witnesses == []
    assert rep.exhausted


def test_scan_starved_colours_count_as_unknown_aborts():
    word = ExplicitPrefix("abaab")
    rep = supermono_search(word, parse_colouring("theta"), 1, 2, 4,
                           scan_bound=2, mode="all")
    assert rep.exhausted
    assert rep.witnesses == []
    assert rep.counts["unknown_aborts"] > 0
    rep = hindman_search("a", parse_colouring("theta"), 2, 3,
                         x=ExplicitPrefix("ab"), scan_bound=2, mode="all")
    assert rep.exhausted
    assert rep.witnesses == []
    assert rep.counts["unknown_aborts"] == 4


def test_search_mode_validation():
    with pytest.raises(ValueError):
        altsum_search(parse_colouring("const"), 4, 2, mode="sampled")
