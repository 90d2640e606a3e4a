"""Verification suites at reduced bounds, plus an independent brute-force
cross-check that the constructive obstruction enumeration is complete."""

from __future__ import annotations

import itertools

import pytest

from supermono import bits, verify
from supermono.verify import (
    SUITES,
    SuiteResult,
    claim6_hypotheses_hold,
    claim6_pair_set,
    claim6_tuples,
    partition_pieces,
    run_suite,
    verify_oracles,
)


def test_suite_registry():
    assert SUITES == ("oracles", "claim1", "lastdigit", "claim4", "claim6",
                      "fragments", "stage3")
    with pytest.raises(ValueError):
        run_suite("claim9")


def test_oracle_suite_passes_at_small_bounds():
    result = verify_oracles(64, 500)
    assert isinstance(result, SuiteResult)
    assert result.ok
    assert result.suite == "oracles"
    assert result.checked > 20_000
    assert result.counterexample is None


def test_remaining_suites_pass_at_small_bounds():
    for suite, bound in (("claim1", 1024), ("lastdigit", 200), ("claim4", 10),
                         ("claim6", 15), ("fragments", 150), ("stage3", 50)):
        result = run_suite(suite, bound)
        assert result.ok, (suite, result.detail, result.counterexample)
        assert result.suite == suite
        assert result.checked > 0


def test_obstruction_tuple_counts():
    assert len(list(claim6_tuples(13))) == 19
    assert run_suite("claim6", 15).checked == 200


def _brute_obstruction_tuples(max_pos):
    """Relaxed candidate generator for the completeness cross-check.

    The strict ordering of the ten boundary positions follows from the
    centre validation rules plus support disjointness alone; the >= 2 gap
    margins are deliberately not imposed, so near-miss chains are generated
    and left for the hypothesis predicate to reject. Interior positions may
    go to any channel whose digit window contains them, or to none.
    """
    for chain in itertools.combinations(range(max_pos + 1), 10):
        f1, f2, l1, f3, l2, f4, l3, f5, l4, l5 = chain
        bounds = [(f1, l1), (f2, l2), (f3, l3), (f4, l4), (f5, l5)]
        interiors = []
        for p in range(f1 + 1, l5):
            if p in chain:
                continue
            owners = [i for i, (f, l) in enumerate(bounds) if f < p < l]
            interiors.append((p, [None] + owners))
        base = [(1 << f) | (1 << l) for f, l in bounds]
        for choice in itertools.product(*(opts for _, opts in interiors)):
            zs = list(base)
            for (p, _), owner in zip(interiors, choice):
                if owner is not None:
                    zs[owner] |= 1 << p
            yield tuple(zs)


def test_constructive_enumeration_is_complete():
    survivors = {zs for zs in _brute_obstruction_tuples(14)
                 if claim6_hypotheses_hold(zs)}
    constructive = set(claim6_tuples(14))
    assert len(constructive) == 200
    assert survivors == constructive


def test_obstruction_pair_differences():
    for zs in claim6_tuples(13):
        z1, z2, z3, z4, z5 = zs
        pairs = claim6_pair_set(zs)
        assert [b - a for a, b in pairs] == [z2, z3, z4, z2 + z3, z2 + z4]
        assert all(a < b for a, b in pairs)


def test_hypothesis_predicate_rejects_broken_tuples():
    zs = next(iter(claim6_tuples(13)))
    assert claim6_hypotheses_hold(zs)
    overlapping = (zs[0] | (zs[1] & -zs[1]),) + zs[1:]
    assert not claim6_hypotheses_hold(overlapping)
    window_lo = bits.centre(zs[1], zs[0], zs[2])[1][0]
    holed = (zs[0], zs[1] & ~(1 << window_lo)) + zs[2:]
    assert not claim6_hypotheses_hold(holed)


def test_partition_pieces_attribution():
    pieces = partition_pieces(9, 70, 160)
    assert pieces == [({0}, 1), ({3}, 1), ({1, 2}, 2), (set(), 2),
                      ({6}, 2), ({5}, 3), ({7}, 3)]
    union = set().union(*(positions for positions, _ in pieces))
    assert union == set(bits.support(9 + 70 + 160))
    assert sum(len(positions) for positions, _ in pieces) == len(union)
