"""Infinite word sources and factor machinery: letters, first occurrences,
factorisations, block subfactorisations, and the standardisation procedure
that either aligns first occurrences or certifies eventual periodicity.

Words are 1-indexed throughout.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass


class BeyondPrefixError(IndexError):
    """Raised when a position past the end of an explicit prefix is read."""


class WordSource:
    """Base for lazily evaluable infinite words. Subclasses implement
    letter_at (1-based) and prefix, and set spec/alphabet."""

    spec: str
    alphabet: tuple[str, ...]

    def letter_at(self, n: int) -> str:
        raise NotImplementedError

    def prefix(self, length: int) -> str:
        """First `length` letters; may be shorter for explicit-prefix sources."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec!r})"


def _check_position(n: int) -> None:
    if n < 1:
        raise ValueError(f"positions are 1-based, got {n}")


def _check_letters(word: str, what: str) -> None:
    if not word:
        raise ValueError(f"{what} must be nonempty")


class Periodic(WordSource):
    """The word uuu... for a finite nonempty u."""

    def __init__(self, period_word: str):
        _check_letters(period_word, "period word")
        self.period_word = period_word
        self.period = len(period_word)
        self.preperiod = ""
        self.spec = f"periodic:{period_word}"
        self.alphabet = tuple(sorted(set(period_word)))

    def letter_at(self, n: int) -> str:
        _check_position(n)
        return self.period_word[(n - 1) % self.period]

    def prefix(self, length: int) -> str:
        reps = -(-length // self.period)
        return (self.period_word * reps)[:length]


class EventuallyPeriodic(WordSource):
    """A finite prefix p followed by uuu..."""

    def __init__(self, preperiod: str, period_word: str):
        _check_letters(period_word, "period word")
        self.preperiod = preperiod
        self.period_word = period_word
        self.period = len(period_word)
        self.spec = f"evper:{preperiod}|{period_word}"
        self.alphabet = tuple(sorted(set(preperiod + period_word)))

    def letter_at(self, n: int) -> str:
        _check_position(n)
        if n <= len(self.preperiod):
            return self.preperiod[n - 1]
        return self.period_word[(n - 1 - len(self.preperiod)) % self.period]

    def prefix(self, length: int) -> str:
        if length <= len(self.preperiod):
            return self.preperiod[:length]
        tail = length - len(self.preperiod)
        reps = -(-tail // self.period)
        return self.preperiod + (self.period_word * reps)[:tail]


class Morphic(WordSource):
    """Fixed point of a prolongable morphism, expanded lazily and cached.

    The seed's image must start with the seed and be longer than it, every
    letter reachable must have a nonempty image.
    """

    def __init__(self, rules: dict[str, str], seed: str):
        if len(seed) != 1:
            raise ValueError(f"seed must be a single letter, got {seed!r}")
        if seed not in rules:
            raise ValueError(f"seed {seed!r} has no rule")
        for letter, image in rules.items():
            if len(letter) != 1:
                raise ValueError(f"rule keys must be single letters, got {letter!r}")
            if not image:
                raise ValueError(f"rule for {letter!r} has an empty image")
            for ch in image:
                if ch not in rules:
                    raise ValueError(f"letter {ch!r} appears in an image but has no rule")
        if not rules[seed].startswith(seed) or len(rules[seed]) < 2:
            raise ValueError(
                f"morphism not prolongable: image of {seed!r} must start with it "
                f"and be longer")
        self.rules = dict(rules)
        self.seed = seed
        rule_text = ",".join(f"{k}->{v}" for k, v in rules.items())
        self.spec = f"morphic:{rule_text}|{seed}"
        self.alphabet = tuple(sorted(rules))
        self._cached = seed
        self._lock = threading.Lock()

    def prefix(self, length: int) -> str:
        if len(self._cached) < length:
            with self._lock:
                while len(self._cached) < length:
                    self._cached = "".join(self.rules[ch] for ch in self._cached)
        return self._cached[:length]

    def letter_at(self, n: int) -> str:
        _check_position(n)
        return self.prefix(n)[n - 1]


class ExplicitPrefix(WordSource):
    """A known finite prefix of an otherwise unknown word."""

    def __init__(self, text: str):
        _check_letters(text, "prefix")
        self.text = text
        self.spec = f"prefix:{text}"
        self.alphabet = tuple(sorted(set(text)))

    def letter_at(self, n: int) -> str:
        _check_position(n)
        if n > len(self.text):
            raise BeyondPrefixError(
                f"position {n} is beyond the explicit prefix of length {len(self.text)}")
        return self.text[n - 1]

    def prefix(self, length: int) -> str:
        return self.text[:length]


def parse_word_spec(text: str) -> WordSource:
    """Parse the word mini-language: 'periodic:ab', 'evper:c|ab',
    'morphic:a->ab,b->a|a', 'prefix:abaab'."""
    kind, sep, payload = text.partition(":")
    if not sep:
        raise ValueError(f"word spec needs 'kind:payload', got {text!r}")
    if kind == "periodic":
        return Periodic(payload)
    if kind == "evper":
        preperiod, sep, period_word = payload.partition("|")
        if not sep:
            raise ValueError(f"evper payload needs 'prefix|period', got {payload!r}")
        return EventuallyPeriodic(preperiod, period_word)
    if kind == "morphic":
        rule_text, sep, seed = payload.partition("|")
        if not sep:
            raise ValueError(f"morphic payload needs 'rules|seed', got {payload!r}")
        rules = {}
        for piece in rule_text.split(","):
            letter, arrow, image = piece.partition("->")
            if not arrow:
                raise ValueError(f"morphic rule needs 'letter->image', got {piece!r}")
            if letter in rules:
                raise ValueError(f"duplicate rule for {letter!r}")
            rules[letter] = image
        return Morphic(rules, seed)
    if kind == "prefix":
        return ExplicitPrefix(payload)
    raise ValueError(
        f"unknown word kind {kind!r}; expected periodic, evper, morphic or prefix")


@dataclass(frozen=True)
class Occurrence:
    """First occurrence of a factor: start position and the position just
    after it (end - start is the factor length)."""

    start: int
    end: int


class _NotAFactor:
    def __repr__(self) -> str:
        return "NOT_A_FACTOR"


class _Unresolved:
    def __repr__(self) -> str:
        return "UNRESOLVED"


NOT_A_FACTOR = _NotAFactor()
UNRESOLVED = _Unresolved()


def decision_bound(x: WordSource, u: str) -> int | None:
    """Scan depth after which non-occurrence is certain, for sources with a
    known periodic structure; None when no finite certificate exists."""
    if isinstance(x, (Periodic, EventuallyPeriodic)):
        return len(x.preperiod) + 2 * len(u) + x.period
    return None


def first_occurrence(x: WordSource, u: str, scan_bound: int):
    """Minimal start of u in x within scan_bound letters.

    Returns an Occurrence, NOT_A_FACTOR (periodic-structure sources only,
    once the scan covers the decision bound), or UNRESOLVED. Explicit-prefix
    sources never certify non-occurrence.
    """
    _check_letters(u, "factor")
    if scan_bound < len(u):
        raise ValueError(
            f"scan_bound {scan_bound} is below the factor length {len(u)}")
    text = x.prefix(scan_bound)
    at = text.find(u)
    if at >= 0:
        return Occurrence(at + 1, at + 1 + len(u))
    certain_by = decision_bound(x, u)
    if certain_by is not None and scan_bound - len(u) + 1 >= certain_by:
        return NOT_A_FACTOR
    return UNRESOLVED


@dataclass(frozen=True)
class Factorisation:
    """Finite list of factors writing out x from suffix_start onwards."""

    factors: tuple[str, ...]
    suffix_start: int = 1

    def __post_init__(self):
        if not self.factors:
            raise ValueError("factorisation needs at least one factor")
        for u in self.factors:
            _check_letters(u, "factor")
        _check_position(self.suffix_start)

    def total_length(self) -> int:
        return sum(len(u) for u in self.factors)

    def standard_positions(self) -> list[int]:
        """Start position of each factor inside x."""
        positions = []
        at = self.suffix_start
        for u in self.factors:
            positions.append(at)
            at += len(u)
        return positions


def check_factorisation(x: WordSource, f: Factorisation) -> None:
    """Verify f against x letter by letter; raise naming the first mismatch."""
    at = f.suffix_start
    for u in f.factors:
        for letter in u:
            try:
                actual = x.letter_at(at)
            except BeyondPrefixError:
                raise ValueError(
                    f"factorisation extends beyond the available prefix at "
                    f"position {at}") from None
            if actual != letter:
                raise ValueError(
                    f"factorisation mismatch at position {at}: expected "
                    f"{letter!r}, word has {actual!r}")
            at += 1


def block_subfactorisation(f: Factorisation, cuts) -> Factorisation:
    """Concatenate consecutive runs of factors per the 1-based ascending
    cuts; factors beyond the last cut are dropped; suffix_start unchanged."""
    if not cuts:
        raise ValueError("cuts must be nonempty")
    previous = 0
    grouped = []
    for cut in cuts:
        if cut <= previous:
            raise ValueError(f"cuts must be strictly ascending, got {tuple(cuts)}")
        if cut > len(f.factors):
            raise ValueError(f"cut {cut} exceeds factor count {len(f.factors)}")
        grouped.append("".join(f.factors[previous:cut]))
        previous = cut
    return Factorisation(tuple(grouped), f.suffix_start)


@dataclass(frozen=True)
class Standardised:
    """Every factor of the result first-occurs at its standard position."""

    factorisation: Factorisation
    merges: int


@dataclass(frozen=True)
class PeriodicityWitness:
    """Evidence that the suffixes at i and j agree: letters at i+k and j+k
    matched for all k < depth."""

    i: int
    j: int
    depth: int


@dataclass(frozen=True)
class BoundExhausted:
    """Standardisation gave up at the 1-based group index, after the recorded
    number of merges."""

    index: int
    merges: int
    reason: str


def _verification_depth(x: WordSource, j: int, scan_bound: int) -> int:
    available = scan_bound
    if isinstance(x, ExplicitPrefix):
        available = min(available, len(x.text))
    return max(available - j + 1, 0)


def standardise(x: WordSource, f: Factorisation, scan_bound: int,
                merge_bound: int):
    """Align every factor's first occurrence with its standard position by
    merging forward, or certify eventual periodicity.

    Returns Standardised, PeriodicityWitness or BoundExhausted. A factor
    first occurring before its standard position is merged with its
    successor; when the last group still occurs early, the two suffixes are
    compared letter by letter up to scan_bound: agreement yields a
    PeriodicityWitness, a mismatch folds the group into the previous factor
    (extension keeps that factor's first occurrence at its standard position,
    since extending only moves first occurrences later).
    """
    check_factorisation(x, f)
    factors = list(f.factors)
    merges = 0
    i = 0
    standard = f.suffix_start
    while i < len(factors):
        u = factors[i]
        occ = first_occurrence(x, u, scan_bound)
        if not isinstance(occ, Occurrence):
            return BoundExhausted(
                i + 1, merges,
                f"scan bound {scan_bound} cannot resolve the occurrence of a "
                f"length-{len(u)} factor standing at {standard}")
        if occ.start == standard:
            i += 1
            standard += len(u)
            continue
        if i + 1 < len(factors):
            if merges >= merge_bound:
                return BoundExhausted(i + 1, merges, "merge budget exhausted")
            factors[i] = u + factors[i + 1]
            del factors[i + 1]
            merges += 1
            continue
        depth = _verification_depth(x, standard, scan_bound)
        agreed = 0
        while agreed < depth and x.letter_at(occ.start + agreed) == x.letter_at(standard + agreed):
            agreed += 1
        if agreed == depth:
            return PeriodicityWitness(occ.start, standard, depth)
        if i > 0:
            factors[i - 1] += u
            del factors[i]
            break
        return BoundExhausted(
            1, merges,
            "first group occurs early but the two suffixes disagree")
    return Standardised(Factorisation(tuple(factors), f.suffix_start), merges)


def check_periodicity_witness(x: WordSource, i: int, j: int, depth: int) -> bool:
    """True iff the letters at i+k and j+k agree for all 0 <= k < depth."""
    if not i < j:
        raise ValueError(f"witness needs i < j, got i={i}, j={j}")
    _check_position(i)
    return all(x.letter_at(i + k) == x.letter_at(j + k) for k in range(depth))
