"""Word colouring induced by the pair colouring through first occurrences.

A finite word u occurring in the reference word x picks up the pair
(A, B) = (start, end) of its first occurrence. Its colour is the full
pair colour of (A, B) plus a tag recording whether some two-part split
u = vw reproduces A from v and B from w. Splits with an empty half are
not considered: an empty half has no first occurrence to compare.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pair_colouring import PairColour, colour_pair
from .words import NOT_A_FACTOR, UNRESOLVED, WordSource, first_occurrence


class _NotFactorColour:
    def __repr__(self) -> str:
        return "NOT_FACTOR"

    def serialise(self) -> str:
        return "2"


class _UnknownColour:
    def __repr__(self) -> str:
        return "UNKNOWN"


NOT_FACTOR = _NotFactorColour()
UNKNOWN = _UnknownColour()


@dataclass(frozen=True)
class FactorColour:
    """Colour of a factor: the full pair colour of its first-occurrence span
    and the split tag (0 when some split u = vw has the start of v's first
    occurrence equal to A and the end of w's equal to B, else 1)."""

    theta: PairColour
    tag: int

    def serialise(self) -> str:
        return f"({self.theta.key()},{self.tag})"


def phi(x: WordSource, u: str, scan_bound: int):
    """Colour u relative to x, scanning a prefix of length scan_bound.

    Returns NOT_FACTOR when u is certified absent, UNKNOWN when a required
    first occurrence stays unresolved within the bound, and a FactorColour
    otherwise. Splits are tried with the left half shortest first; the tag
    records bare existence, so the order cannot change the result.
    """
    occ = first_occurrence(x, u, scan_bound)
    if occ is NOT_A_FACTOR:
        return NOT_FACTOR
    if occ is UNRESOLVED:
        return UNKNOWN
    a, b = occ.start, occ.end
    tag = 1
    for cut in range(1, len(u)):
        occ_v = first_occurrence(x, u[:cut], scan_bound)
        occ_w = first_occurrence(x, u[cut:], scan_bound)
        if occ_v is UNRESOLVED or occ_w is UNRESOLVED:
            return UNKNOWN
        if occ_v.start == a and occ_w.end == b:
            tag = 0
            break
    return FactorColour(colour_pair(a, b), tag)


def altsum_identity_check(ms, ks) -> tuple[int, int]:
    """Alternating-sum bridge between word endpoints and number pairs.

    ms lists the endpoint positions m_1 < m_2 < ... (1-indexed); ks picks
    indices k_1 < ... < k_t with k_1 >= 2. Returns
    (m_{k_1-1} - m_{k_1} + m_{k_2-1} - ... + m_{k_t-1}, m_{k_t}).
    The result satisfies 1 <= left < right whenever the inputs do; that is
    a consequence of monotonicity, asserted rather than validated.
    """
    ms = tuple(ms)
    ks = tuple(ks)
    if not ks:
        raise ValueError("ks must be nonempty")
    if ms and ms[0] < 1:
        raise ValueError("positions in ms must be positive")
    if any(m2 <= m1 for m1, m2 in zip(ms, ms[1:])):
        raise ValueError("ms must be strictly increasing")
    if any(k2 <= k1 for k1, k2 in zip(ks, ks[1:])):
        raise ValueError("ks must be strictly increasing")
    if ks[0] < 2:
        raise ValueError("k_1 must be at least 2")
    if ks[-1] > len(ms):
        raise ValueError("k_t exceeds the number of positions")
    left = sum(ms[k - 2] for k in ks) - sum(ms[k - 1] for k in ks[:-1])
    right = ms[ks[-1] - 1]
    assert 1 <= left < right
    return left, right
