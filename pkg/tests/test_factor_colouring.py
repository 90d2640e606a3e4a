"""Factor colouring through first occurrences: pinned colours, the split
tag, representation independence, and the alternating-sum bridge that ties
concatenated factors to the pair colouring."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermono.factor_colouring import (
    NOT_FACTOR,
    UNKNOWN,
    FactorColour,
    altsum_identity_check,
    phi,
)
from supermono.pair_colouring import colour_pair
from supermono.words import (
    EventuallyPeriodic,
    ExplicitPrefix,
    Factorisation,
    Morphic,
    Occurrence,
    Periodic,
    Standardised,
    first_occurrence,
    standardise,
)


def test_pinned_factor_colours():
    x = Periodic("ab")
    assert phi(x, "ab", 64).serialise() == "(110-001-111,0)"
    assert phi(x, "ba", 64).serialise() == "(111-001-010,1)"
    assert phi(x, "a", 64).serialise() == "(000-001-010,1)"


def test_absent_and_undecided_factors():
    assert phi(Periodic("ab"), "aa", 64) is NOT_FACTOR
    assert NOT_FACTOR.serialise() == "2"
    assert phi(ExplicitPrefix("abaab"), "aabb", 5) is UNKNOWN
    with pytest.raises(ValueError):
        phi(Periodic("ab"), "aba", 2)


def test_single_letters_never_split():
    colour = phi(Periodic("ab"), "b", 64)
    assert isinstance(colour, FactorColour)
    assert colour.tag == 1
    assert colour.theta == colour_pair(2, 3)


@given(data=st.data())
@settings(max_examples=200)
def test_colour_ignores_word_representation(data):
    u = data.draw(st.text(alphabet="ab", min_size=1, max_size=4))
    sources = (Periodic("ab"), Periodic("abab"), EventuallyPeriodic("ab", "ab"))
    colours = [phi(x, u, 64) for x in sources]
    assert colours[0] == colours[1] == colours[2] or \
        all(c is colours[0] for c in colours)


def test_tag_zero_closure_for_standardised_neighbours():
    fib = Morphic({"a": "ab", "b": "a"}, "a")
    outcome = standardise(
        fib, Factorisation(("a", "b", "a", "ab", "aba", "abaab"), 1), 512, 50)
    assert isinstance(outcome, Standardised)
    factors = outcome.factorisation.factors
    assert len(factors) >= 2
    for left, right in zip(factors, factors[1:]):
        colour = phi(fib, left + right, 512)
        assert isinstance(colour, FactorColour)
        assert colour.tag == 0


def test_altsum_identity_examples():
    assert altsum_identity_check((2, 4, 6), (2,)) == (2, 4)
    assert altsum_identity_check((2, 4, 6), (3,)) == (4, 6)
    assert altsum_identity_check((2, 4, 6), (2, 3)) == (2, 6)


def test_altsum_identity_validation():
    with pytest.raises(ValueError):
        altsum_identity_check((2, 4, 6), ())
    with pytest.raises(ValueError):
        altsum_identity_check((2, 4, 6), (1, 2))
    with pytest.raises(ValueError):
        altsum_identity_check((2, 4, 6), (3, 2))
    with pytest.raises(ValueError):
        altsum_identity_check((2, 4, 6), (2, 4))
    with pytest.raises(ValueError):
        altsum_identity_check((4, 2, 6), (2,))
    with pytest.raises(ValueError):
        altsum_identity_check((0, 2, 6), (2,))


@given(data=st.data())
@settings(max_examples=300)
def test_altsum_identity_yields_valid_pairs(data):
    ms = sorted(data.draw(st.sets(
        st.integers(min_value=1, max_value=200), min_size=2, max_size=8)))
    ks = sorted(data.draw(st.sets(
        st.integers(min_value=2, max_value=len(ms)), min_size=1)))
    left, right = altsum_identity_check(ms, ks)
    assert 1 <= left < right
    assert right == ms[ks[-1] - 1]


def test_concatenated_factors_colour_as_their_endpoint_pair():
    x = Periodic("abcdef")
    slices = {1: "a", 2: "bc", 3: "de"}
    starts = {1: 1, 2: 2, 3: 4}
    ms = (2, 4, 6)
    for k, u in slices.items():
        occ = first_occurrence(x, u, 64)
        assert occ == Occurrence(starts[k], starts[k] + len(u))
    for ks in ((2,), (3,), (2, 3)):
        left, right = altsum_identity_check(ms, ks)
        concat = "".join(slices[k] for k in ks)
        assert first_occurrence(x, concat, 64) == Occurrence(left, right)
        colour = phi(x, concat, 64)
        assert isinstance(colour, FactorColour)
        assert colour.theta == colour_pair(left, right)
    assert phi(x, slices[2] + slices[3], 64).tag == 0
