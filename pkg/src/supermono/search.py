"""Bounded deterministic searches for the monochromatic families behind the
reductions: alternating-sum pairs, super-monochromatic factorisations,
finite Hindman sums, the all-plus pair family, and coefficient-pattern sums.

Every search is an exhaustive depth-first enumeration within its stated
bounds, extending by the smallest candidate first. Reports are
deterministic functions of the search parameters alone. Parallel runs
explore top-level branches concurrently and merge them in canonical branch
order with sequential stop accounting, so they reproduce the sequential
report byte for byte; the parallelism degree is execution plumbing and is
deliberately kept out of the report.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import bits
from .factor_colouring import UNKNOWN, phi
from .pair_colouring import STAGES, colour_pair
from .words import WordSource

X_ALTERNATING = "x_alternating"
Y_SUBSET = "y_subset"
Y_BLOCK = "y_block"
FORMS = (X_ALTERNATING, Y_SUBSET, Y_BLOCK)

Q5_VARIANTS = ("plain", "a1free", "akfree", "with_gaps")

LIFT_MODES = ("left", "right", "diff", "sum", "both")

_NUMBER_FAMILIES = ("const", "valmod", "fpmod", "base-lsnz", "gaps", "dbl")
_WORD_FAMILIES = ("const", "lenmod", "theta")


# ---------------------------------------------------------------------------
# Colouring specifications


@dataclass(frozen=True)
class Colouring:
    """Parsed colouring specification.

    family is the colouring family id; args its numeric parameters; lift
    the pair-lift mode for number families used on pairs (None for
    pair-native and word families). spec echoes the original text.
    """

    spec: str
    family: str
    args: tuple
    lift: str | None


def parse_colouring(text: str) -> Colouring:
    """Parse the colouring mini-language.

    Families: "const", "theta:stage1|stage2|full", "lenmod:k",
    "base-lsnz:b", "fpmod:k", "gaps:m,cap", "valmod:k", "dbl". A number
    family may carry a pair-lift suffix "@left|@right|@diff|@sum|@both"
    (default both) controlling how it colours pairs.
    """
    body, sep, lift = text.partition("@")
    if sep and lift not in LIFT_MODES:
        raise ValueError(f"unknown pair-lift mode {lift!r}")
    family, _, arg = body.partition(":")
    args: tuple
    if family == "const":
        args = ()
    elif family == "theta":
        stage = arg or "full"
        if stage not in STAGES:
            raise ValueError(f"unknown theta stage {stage!r}")
        args = (stage,)
    elif family in ("lenmod", "valmod", "fpmod"):
        k = int(arg)
        if k < 1:
            raise ValueError(f"{family} modulus must be positive")
        args = (k,)
    elif family == "base-lsnz":
        b = int(arg)
        if b < 2:
            raise ValueError("base-lsnz base must be at least 2")
        args = (b,)
    elif family == "gaps":
        m_text, _, cap_text = arg.partition(",")
        m, cap = int(m_text), int(cap_text or "3")
        if m < 1 or cap < 1:
            raise ValueError("gaps parameters must be positive")
        args = (m, cap)
    elif family == "dbl":
        args = ()
    else:
        raise ValueError(f"unknown colouring family {family!r}")
    if sep and family not in _NUMBER_FAMILIES:
        raise ValueError(f"{family} is not a number family; no pair lift")
    lift_mode = lift if sep else ("both" if family in _NUMBER_FAMILIES else None)
    return Colouring(text, family, args, lift_mode)


def colour_number(col: Colouring, n: int):
    """Colour a single natural number under a number family."""
    if n < 1:
        raise ValueError("number colourings are defined on naturals >= 1")
    if col.family == "const":
        return 0
    if col.family == "valmod":
        return n % col.args[0]
    if col.family == "fpmod":
        return bits.first_digit(n) % col.args[0]
    if col.family == "base-lsnz":
        b = col.args[0]
        while n % b == 0:
            n //= b
        return n % b
    if col.family == "gaps":
        m, cap = col.args
        counts = [0] * m
        positions = bits.support(n)
        for p, q in zip(positions, positions[1:]):
            r = (q - p) % m
            counts[r] = min(counts[r] + 1, cap)
        return tuple(counts)
    if col.family == "dbl":
        last = bits.last_digit(n)
        return (last % 2, bits.digit_string(n, last - 2, last))
    raise ValueError(f"{col.family} does not colour single numbers")


def colour_pair_value(col: Colouring, a: int, b: int):
    """Colour an ordered pair a < b."""
    if not 1 <= a < b:
        raise ValueError("pair colourings need 1 <= a < b")
    if col.family == "theta":
        return colour_pair(a, b, col.args[0]).key()
    if col.family == "const":
        return 0
    if col.family not in _NUMBER_FAMILIES:
        raise ValueError(f"{col.family} does not colour pairs")
    mode = col.lift or "both"
    if mode == "left":
        return colour_number(col, a)
    if mode == "right":
        return colour_number(col, b)
    if mode == "diff":
        return colour_number(col, b - a)
    if mode == "sum":
        return colour_number(col, a + b)
    return (colour_number(col, a), colour_number(col, b))


def word_colour_fn(col: Colouring, x: WordSource | None, scan_bound: int):
    """Build a word-colouring callable u -> colour value.

    The theta family colours words through the induced colouring relative
    to x and may return the UNKNOWN sentinel within scan_bound; the other
    families are total. Values are hashable and JSON-friendly.
    """
    if col.family == "const":
        return lambda u: 0
    if col.family == "lenmod":
        k = col.args[0]
        return lambda u: len(u) % k
    if col.family == "theta":
        if x is None:
            raise ValueError("theta word colouring needs a reference word")
        if col.args[0] != "full":
            raise ValueError("word-side theta colouring uses the full stage")
        cache: dict[str, object] = {}

        def colour(u: str):
            value = cache.get(u)
            if value is None:
                if len(u) > scan_bound:
                    value = UNKNOWN
                else:
                    result = phi(x, u, scan_bound)
                    value = result if result is UNKNOWN else result.serialise()
                cache[u] = value
            return value

        return colour
    raise ValueError(f"{col.family} does not colour words")


# ---------------------------------------------------------------------------
# Constraint families and the x <-> y transform


@dataclass(frozen=True)
class Constraint:
    """One monochromaticity obligation: the pair (left, right) with the
    1-based index tuple that generated it."""

    left: int
    right: int
    origin: tuple

    def __post_init__(self):
        assert 1 <= self.left < self.right


def xy_transform(xs) -> list[int]:
    """y_1 = x_1, y_n = x_n - x_{n-1}; inverse of prefix sums."""
    xs = list(xs)
    if any(x2 <= x1 for x1, x2 in zip(xs, xs[1:])):
        raise ValueError("xs must be strictly increasing")
    return [x - p for x, p in zip(xs, [0] + xs[:-1])]


def xy_inverse(ys) -> list[int]:
    """Prefix sums; inverse of xy_transform."""
    ys = list(ys)
    if any(y < 1 for y in ys):
        raise ValueError("ys must be positive")
    return list(itertools.accumulate(ys))


def _alt_sum(values) -> int:
    total = 0
    for i, v in enumerate(values):
        total += v if i % 2 == 0 else -v
    return total


def _constraints_with_top(values, form: str, allow_k1_equal_1: bool = False):
    """Constraints whose maximal index is the last element of values.

    Extending a sequence by one element only creates index tuples ending
    at the new index, so a search can accumulate these incrementally.
    """
    n = len(values)
    out = []
    if form == X_ALTERNATING:
        for size in range(2, n + 1, 2):
            for combo in itertools.combinations(range(1, n), size - 1):
                ks = combo + (n,)
                left = _alt_sum([values[k - 1] for k in ks[:-1]])
                out.append(Constraint(left, values[n - 1], ks))
        return out
    prefix = list(itertools.accumulate(values))
    first = 1 if (form == Y_BLOCK or allow_k1_equal_1) else 2
    for size in range(2, n + 1):
        if form == Y_BLOCK and size % 2 == 1:
            continue
        for combo in itertools.combinations(range(first, n), size - 1):
            ks = combo + (n,)
            right = prefix[n - 1]
            if form == Y_SUBSET:
                left = values[0] + sum(values[k - 1] for k in ks[:-1])
                if left >= right:
                    continue
            else:
                left = prefix[ks[0] - 1]
                for lo, hi in zip(ks[1:-1:2], ks[2:-1:2]):
                    left += prefix[hi - 1] - prefix[lo - 1]
            out.append(Constraint(left, right, ks))
    return out


def constraints_for(values, form: str, allow_k1_equal_1: bool = False):
    """All constraints of the family over values, sizes ascending and index
    tuples in lexicographic order within each size.

    x_alternating pairs (x_{k_1} - x_{k_2} + ... + x_{k_t}, x_{k_{t+1}})
    for t odd; y_subset pairs (y_1 + y_{k_1} + ... + y_{k_t},
    y_1 + ... + y_{k_{t+1}}) with k_1 >= 2 unless allow_k1_equal_1 (the
    literal reading; pairs violating left < right are then skipped);
    y_block is the image of x_alternating under prefix summation.
    """
    if form not in FORMS:
        raise ValueError(f"unknown constraint form {form!r}")
    values = list(values)
    if form == X_ALTERNATING:
        if any(x2 <= x1 for x1, x2 in zip(values, values[1:])):
            raise ValueError("xs must be strictly increasing")
    elif any(v < 1 for v in values):
        raise ValueError("ys must be positive")
    n = len(values)
    prefix = list(itertools.accumulate(values))
    out = []
    if form == X_ALTERNATING:
        for size in range(2, n + 1, 2):
            for ks in itertools.combinations(range(1, n + 1), size):
                left = _alt_sum([values[k - 1] for k in ks[:-1]])
                out.append(Constraint(left, values[ks[-1] - 1], ks))
        return out
    first = 1 if (form == Y_BLOCK or allow_k1_equal_1) else 2
    for size in range(2, n + 1):
        if form == Y_BLOCK and size % 2 == 1:
            continue
        for ks in itertools.combinations(range(first, n + 1), size):
            right = prefix[ks[-1] - 1]
            if form == Y_SUBSET:
                left = values[0] + sum(values[k - 1] for k in ks[:-1])
                if left >= right:
                    continue
            else:
                left = prefix[ks[0] - 1]
                for lo, hi in zip(ks[1:-1:2], ks[2:-1:2]):
                    left += prefix[hi - 1] - prefix[lo - 1]
            out.append(Constraint(left, right, ks))
    return out


# ---------------------------------------------------------------------------
# Reports and the deterministic branch runner


@dataclass
class SearchReport:
    """Outcome of one bounded search run.

    exhausted means the enumeration ran to completion within the bounds;
    a first-witness run that stops early reports exhausted=False.
    nodes_explored counts candidate extensions tested, rejected ones
    included. counts carries per-kind tallies such as unknown aborts.
    """

    params: dict
    witnesses: list
    exhausted: bool
    nodes_explored: int
    max_depth_reached: int
    counts: dict = field(default_factory=dict)


@dataclass
class _BranchResult:
    witnesses: list
    nodes: int
    max_depth: int
    counts: dict


def _merge_counts(total: dict, extra: dict) -> None:
    for key, value in extra.items():
        total[key] = total.get(key, 0) + value


def _run_branches(branch_keys, run_branch, mode: str, jobs: int):
    """Run per-branch searches and merge them in canonical branch order.

    In first mode, accumulation stops at the first branch with a witness,
    mirroring a sequential early stop; parallel execution changes only
    wall-clock behaviour, never the merged report.
    """
    witnesses: list = []
    nodes = 0
    max_depth = 0
    counts: dict = {}
    stopped = False
    if jobs <= 1:
        results = map(run_branch, branch_keys)
    else:
        executor = ThreadPoolExecutor(max_workers=jobs)
        results = executor.map(run_branch, branch_keys)
    try:
        for res in results:
            nodes += res.nodes
            max_depth = max(max_depth, res.max_depth)
            _merge_counts(counts, res.counts)
            witnesses.extend(res.witnesses)
            if mode == "first" and res.witnesses:
                stopped = True
                break
    finally:
        if jobs > 1:
            executor.shutdown(wait=False, cancel_futures=True)
    return witnesses, nodes, max_depth, counts, not stopped


def _check_mode(mode: str) -> None:
    if mode not in ("first", "all"):
        raise ValueError(f"mode must be 'first' or 'all', got {mode!r}")


# ---------------------------------------------------------------------------
# Alternating-sum search


def altsum_search(colouring: Colouring, bound: int, max_len: int,
                  form: str = X_ALTERNATING, mode: str = "first",
                  jobs: int = 1, allow_k1_equal_1: bool = False) -> SearchReport:
    """Depth-first search for a sequence all of whose family constraints
    share one pair colour.

    The x form grows strictly increasing sequences <= bound; the y forms
    grow arbitrary positive sequences <= bound. A witness has length
    max_len. The path colour is fixed by the first constraint generated on
    the path; every later constraint must match it.
    """
    _check_mode(mode)
    if form not in FORMS:
        raise ValueError(f"unknown constraint form {form!r}")
    if bound < 1 or max_len < 1:
        raise ValueError("bound and max_len must be positive")
    increasing = form == X_ALTERNATING

    def run_branch(start: int) -> _BranchResult:
        res = _BranchResult([], 0, 0, {"constraints_checked": 0})

        def extend(values: list, fixed):
            res.max_depth = max(res.max_depth, len(values))
            if len(values) == max_len:
                res.witnesses.append(list(values))
                return mode == "first"
            lo = values[-1] + 1 if increasing else 1
            for v in range(lo, bound + 1):
                res.nodes += 1
                new = _constraints_with_top(values + [v], form, allow_k1_equal_1)
                res.counts["constraints_checked"] += len(new)
                target = fixed
                ok = True
                for c in new:
                    colour = colour_pair_value(colouring, c.left, c.right)
                    if target is None:
                        target = colour
                    elif colour != target:
                        ok = False
                        break
                if ok and extend(values + [v], target):
                    return True
            return False

        res.nodes += 1
        new = _constraints_with_top([start], form, allow_k1_equal_1)
        res.counts["constraints_checked"] += len(new)
        assert not new
        extend([start], None)
        return res

    witnesses, nodes, depth, counts, exhausted = _run_branches(
        range(1, bound + 1), run_branch, mode, jobs)
    params = {
        "kind": "altsum", "colouring": colouring.spec, "B": bound,
        "L": max_len, "form": form, "mode": mode,
        "allow_k1_equal_1": allow_k1_equal_1,
    }
    return SearchReport(params, witnesses, exhausted, nodes, depth, counts)


def verify_altsum_witness(colouring: Colouring, values, form: str,
                          allow_k1_equal_1: bool = False) -> bool:
    """Recolour every constraint of the family from scratch."""
    cs = constraints_for(values, form, allow_k1_equal_1)
    colours = {colour_pair_value(colouring, c.left, c.right) for c in cs}
    return len(colours) <= 1


# ---------------------------------------------------------------------------
# Super-monochromatic factorisation search


def supermono_search(x: WordSource, colouring: Colouring, suffix_bound: int,
                     n_factors: int, len_bound: int, scan_bound: int = 4096,
                     mode: str = "first", jobs: int = 1) -> SearchReport:
    """Search for consecutive factors u_1..u_n of a suffix of x whose
    2^n - 1 ordered-subset concatenations all share one colour.

    Suffix starts run from 1 to suffix_bound; factor lengths are chosen
    smallest first with total length <= len_bound. A subset concatenation
    whose colour is UNKNOWN within scan_bound aborts that extension and is
    tallied under unknown_aborts; an unknown abort cannot hide a witness,
    because every extension keeps the unresolved subset.
    """
    _check_mode(mode)
    if n_factors < 1:
        raise ValueError("n_factors must be at least 1")
    if suffix_bound < 1 or len_bound < 1:
        raise ValueError("bounds must be positive")
    colour_of = word_colour_fn(colouring, x, scan_bound)

    def run_branch(start: int) -> _BranchResult:
        res = _BranchResult([], 0, 0, {"colour_evaluations": 0,
                                       "unknown_aborts": 0})

        def extend(pos: int, factors: list, subsets: list, fixed):
            res.max_depth = max(res.max_depth, len(factors))
            if len(factors) == n_factors:
                res.witnesses.append([start] + factors)
                return mode == "first"
            used = pos - start
            for length in range(1, len_bound - used + 1):
                u = x.prefix(pos + length - 1)[pos - 1:]
                if len(u) < length:
                    break
                res.nodes += 1
                new_words = [w + u for w in subsets] + [u]
                target = fixed
                ok = True
                unknown = False
                for w in new_words:
                    res.counts["colour_evaluations"] += 1
                    colour = colour_of(w)
                    if colour is UNKNOWN:
                        unknown = True
                        break
                    if target is None:
                        target = colour
                    elif colour != target:
                        ok = False
                        break
                if unknown:
                    res.counts["unknown_aborts"] += 1
                    continue
                if ok and extend(pos + length, factors + [u],
                                 subsets + new_words, target):
                    return True
            return False

        extend(start, [], [], None)
        return res

    witnesses, nodes, depth, counts, exhausted = _run_branches(
        range(1, suffix_bound + 1), run_branch, mode, jobs)
    params = {
        "kind": "supermono", "word": x.spec, "colouring": colouring.spec,
        "suffix_bound": suffix_bound, "n": n_factors,
        "len_bound": len_bound, "scan_bound": scan_bound, "mode": mode,
    }
    return SearchReport(params, witnesses, exhausted, nodes, depth, counts)


def verify_supermono_witness(x: WordSource, colouring: Colouring, witness,
                             scan_bound: int = 4096) -> bool:
    """Rebuild all ordered-subset concatenations independently and check
    they share one defined colour."""
    start, factors = witness[0], list(witness[1:])
    text = x.prefix(start + sum(len(u) for u in factors) - 1)
    pos = start
    for u in factors:
        if text[pos - 1:pos - 1 + len(u)] != u:
            return False
        pos += len(u)
    colour_of = word_colour_fn(colouring, x, scan_bound)
    colours = set()
    for size in range(1, len(factors) + 1):
        for combo in itertools.combinations(factors, size):
            colour = colour_of("".join(combo))
            if colour is UNKNOWN:
                return False
            colours.add(colour)
    return len(colours) == 1


# ---------------------------------------------------------------------------
# Finite Hindman search


def hindman_search(u: str, colouring: Colouring, n: int, bound: int,
                   x: WordSource | None = None, scan_bound: int = 4096,
                   mode: str = "first", jobs: int = 1) -> SearchReport:
    """Search a_1 < ... < a_n <= bound such that u^s has one colour for
    every nonempty distinct-element sum s.

    The first witness in lexicographic order is returned in first mode.
    theta colourings need a reference word x for the induced colouring.
    """
    _check_mode(mode)
    if n < 2:
        raise ValueError("n must be at least 2")
    if not u:
        raise ValueError("u must be nonempty")
    if bound < 1:
        raise ValueError("bound must be positive")
    colour_of = word_colour_fn(colouring, x, scan_bound)
    cache: dict[int, object] = {}

    def colour_power(s: int):
        value = cache.get(s)
        if value is None:
            value = colour_of(u * s)
            cache[s] = value
        return value

    def run_branch(start: int) -> _BranchResult:
        res = _BranchResult([], 0, 0, {"colour_evaluations": 0,
                                       "unknown_aborts": 0})

        def extend(values: list, sums: list, fixed):
            res.max_depth = max(res.max_depth, len(values))
            if len(values) == n:
                res.witnesses.append(list(values))
                return mode == "first"
            for v in range(values[-1] + 1, bound + 1):
                res.nodes += 1
                new_sums = [s + v for s in sums] + [v]
                target = fixed
                ok = True
                unknown = False
                for s in new_sums:
                    res.counts["colour_evaluations"] += 1
                    colour = colour_power(s)
                    if colour is UNKNOWN:
                        unknown = True
                        break
                    if target is None:
                        target = colour
                    elif colour != target:
                        ok = False
                        break
                if unknown:
                    res.counts["unknown_aborts"] += 1
                    continue
                if ok and extend(values + [v], sums + new_sums, target):
                    return True
            return False

        res.nodes += 1
        first_colour = colour_power(start)
        res.counts["colour_evaluations"] += 1
        if first_colour is UNKNOWN:
            res.counts["unknown_aborts"] += 1
        else:
            extend([start], [start], first_colour)
        return res

    witnesses, nodes, depth, counts, exhausted = _run_branches(
        range(1, bound + 1), run_branch, mode, jobs)
    params = {
        "kind": "hindman", "u": u, "colouring": colouring.spec, "n": n,
        "bound": bound, "mode": mode,
        "word": x.spec if x is not None else None,
        "scan_bound": scan_bound,
    }
    return SearchReport(params, witnesses, exhausted, nodes, depth, counts)


def verify_hindman_witness(u: str, colouring: Colouring, values,
                           x: WordSource | None = None,
                           scan_bound: int = 4096) -> bool:
    """Recolour u^s for every nonempty subset sum s independently."""
    colour_of = word_colour_fn(colouring, x, scan_bound)
    colours = set()
    for size in range(1, len(values) + 1):
        for combo in itertools.combinations(values, size):
            colour = colour_of(u * sum(combo))
            if colour is UNKNOWN:
                return False
            colours.add(colour)
    return len(colours) == 1


# ---------------------------------------------------------------------------
# All-plus pair search


def plus_pair_search(colouring: Colouring, n: int, bound: int,
                     mode: str = "first", jobs: int = 1) -> SearchReport:
    """Search x_1 < ... < x_n <= bound with every pair (prefix subset sum,
    next element) one colour.

    Elements are forced superincreasing (each exceeds the sum of all
    earlier ones) so every constraint satisfies left < right.
    """
    _check_mode(mode)
    if n < 2:
        raise ValueError("n must be at least 2")
    if bound < 1:
        raise ValueError("bound must be positive")

    def run_branch(start: int) -> _BranchResult:
        res = _BranchResult([], 0, 0, {"constraints_checked": 0})

        def extend(values: list, sums: list, total: int, fixed):
            res.max_depth = max(res.max_depth, len(values))
            if len(values) == n:
                res.witnesses.append(list(values))
                return mode == "first"
            for v in range(total + 1, bound + 1):
                res.nodes += 1
                res.counts["constraints_checked"] += len(sums)
                target = fixed
                ok = True
                for s in sums:
                    colour = colour_pair_value(colouring, s, v)
                    if target is None:
                        target = colour
                    elif colour != target:
                        ok = False
                        break
                if ok and extend(values + [v], sums + [s + v for s in sums] + [v],
                                 total + v, target):
                    return True
            return False

        res.nodes += 1
        extend([start], [start], start, None)
        return res

    witnesses, nodes, depth, counts, exhausted = _run_branches(
        range(1, bound + 1), run_branch, mode, jobs)
    params = {
        "kind": "plus", "colouring": colouring.spec, "n": n,
        "bound": bound, "mode": mode,
    }
    return SearchReport(params, witnesses, exhausted, nodes, depth, counts)


def verify_plus_witness(colouring: Colouring, values) -> bool:
    """Recolour every (prefix subset sum, next element) pair from scratch."""
    colours = set()
    for j in range(1, len(values)):
        earlier = values[:j]
        for size in range(1, j + 1):
            for combo in itertools.combinations(earlier, size):
                colours.add(colour_pair_value(colouring, sum(combo), values[j]))
    return len(colours) <= 1


# ---------------------------------------------------------------------------
# Coefficient-pattern sum search


def _q5_patterns(k: int, variant: str):
    """Coefficient tuples (a_1..a_k) for prefix length k under the variant.

    plain fixes a_1 = a_k = 1 with interior in {1,2}; a1free and akfree
    free the respective endpoint to {1,2}; with_gaps keeps the endpoints 1
    but allows interior zeros. For k = 1 the freed-endpoint variants
    constrain both y_1 and 2y_1, reading the endpoint rules literally.
    """
    if variant == "plain":
        firsts, lasts, inner = (1,), (1,), (1, 2)
    elif variant == "a1free":
        firsts, lasts, inner = (1, 2), (1,), (1, 2)
    elif variant == "akfree":
        firsts, lasts, inner = (1,), (1, 2), (1, 2)
    elif variant == "with_gaps":
        firsts, lasts, inner = (1,), (1,), (0, 1, 2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if k == 1:
        coeffs = sorted(set(firsts) | set(lasts))
        return [(c,) for c in coeffs]
    out = []
    for a1 in firsts:
        for mid in itertools.product(inner, repeat=k - 2):
            for ak in lasts:
                out.append((a1,) + mid + (ak,))
    return out


def q5_search(colouring: Colouring, variant: str, max_len: int, bound: int,
              mode: str = "first", jobs: int = 1) -> SearchReport:
    """Search y_1..y_L <= bound (repeats allowed) with every coefficient
    sum a_1 y_1 + ... + a_k y_k, k = 1..L, one colour under a number
    colouring, with coefficients drawn per variant."""
    _check_mode(mode)
    if variant not in Q5_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if max_len < 1 or bound < 1:
        raise ValueError("bounds must be positive")
    patterns = [()] + [_q5_patterns(k, variant) for k in range(1, max_len + 1)]

    def run_branch(start: int) -> _BranchResult:
        res = _BranchResult([], 0, 0, {"sums_checked": 0})

        def extend(values: list, fixed):
            res.max_depth = max(res.max_depth, len(values))
            if len(values) == max_len:
                res.witnesses.append(list(values))
                return mode == "first"
            for v in range(1, bound + 1):
                res.nodes += 1
                new = values + [v]
                target = fixed
                ok = True
                for coeffs in patterns[len(new)]:
                    res.counts["sums_checked"] += 1
                    total = sum(c * y for c, y in zip(coeffs, new))
                    colour = colour_number(colouring, total)
                    if target is None:
                        target = colour
                    elif colour != target:
                        ok = False
                        break
                if ok and extend(new, target):
                    return True
            return False

        res.nodes += 1
        target = None
        ok = True
        for coeffs in patterns[1]:
            res.counts["sums_checked"] += 1
            colour = colour_number(colouring, coeffs[0] * start)
            if target is None:
                target = colour
            elif colour != target:
                ok = False
                break
        if ok:
            extend([start], target)
        return res

    witnesses, nodes, depth, counts, exhausted = _run_branches(
        range(1, bound + 1), run_branch, mode, jobs)
    params = {
        "kind": "q5", "colouring": colouring.spec, "variant": variant,
        "L": max_len, "bound": bound, "mode": mode,
    }
    return SearchReport(params, witnesses, exhausted, nodes, depth, counts)


def verify_q5_witness(colouring: Colouring, variant: str, values) -> bool:
    """Recolour every coefficient sum of every prefix from scratch."""
    colours = set()
    for k in range(1, len(values) + 1):
        for coeffs in _q5_patterns(k, variant):
            total = sum(c * y for c, y in zip(coeffs, values[:k]))
            colours.add(colour_number(colouring, total))
    return len(colours) == 1
