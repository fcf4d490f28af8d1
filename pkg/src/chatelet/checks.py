"""Seeded fuzz suites cross-validating the symbol, enumerator, and classifier.

Each suite is deterministic for a fixed Random instance and collects failures
instead of raising, so the CLI can print pass/fail counts; the test suite
asserts the failure lists are empty.  Surface generation is directed: every
case family has a constructor that lands in it by explicit congruence
arithmetic, and the suites verify the landing as part of the check.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from .globalchow import reciprocity_check
from .local import (
    ContradictionError,
    Subgroup3,
    characteristic_subgroup,
    local_chow,
    normalize_roots,
)
from .norms import chi, norm_uniformizer
from .padic import (
    REAL_PLACE,
    Place,
    hilbert_oracle,
    hilbert_symbol,
    is_local_square,
    legendre,
    suggested_oracle_precision,
)

__all__ = [
    "CASE_FAMILIES",
    "CheckReport",
    "SuiteResult",
    "check_equivariance",
    "check_order_agreement",
    "check_reciprocity",
    "check_square_scaling",
    "check_symbol_identities",
    "check_symbol_oracle",
    "check_truncation_stability",
    "random_rational",
    "random_surface",
    "run_check",
]

CASE_FAMILIES = (
    "Split-trivial",
    "Prop1-i",
    "Prop1-ii",
    "Prop1-iii",
    "Prop2-i",
    "Prop2-ii",
    "Prop2-iii",
    "Prop3-i",
    "Prop3-ii",
    "Prop3-iii",
    "Real-d-negative",
    "Real-d-positive",
)

_SMOOTH_PRIMES = (2, 3, 5, 7, 11, 13)
_PLACE_POOL = (REAL_PLACE, 2, 3, 5, 7, 11, 13)
_MAX_TRIES = 400
_MAX_STORED_FAILURES = 5


@dataclass(frozen=True)
class SuiteResult:
    name: str
    runs: int
    failed: int
    failures: Tuple[str, ...]  # first few messages only
    details: Tuple[Tuple[str, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass(frozen=True)
class CheckReport:
    seed: int
    fuzz_count: int
    suites: Tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(suite.ok for suite in self.suites)


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.runs = 0
        self.failed = 0
        self.messages: List[str] = []

    def record(self, ok: bool, message: str) -> None:
        self.runs += 1
        if not ok:
            self.failed += 1
            if len(self.messages) < _MAX_STORED_FAILURES:
                self.messages.append(message)

    def result(self, details: Sequence[Tuple[str, int]] = ()) -> SuiteResult:
        return SuiteResult(
            self.name, self.runs, self.failed, tuple(self.messages), tuple(details)
        )


def random_rational(
    rng: random.Random, max_exp: int = 2, primes: Sequence[int] = _SMOOTH_PRIMES
) -> Fraction:
    """Nonzero signed rational with smooth support and bounded exponents."""
    value = Fraction(rng.choice((1, -1)))
    for q in primes:
        if rng.random() < 0.5:
            value *= Fraction(q) ** rng.randint(-max_exp, max_exp)
    return value


# ---------------------------------------------------------------------------
# directed surface generation


def _signed_unit(rng: random.Random, p: int) -> int:
    bound = max(p * p, 16)
    while True:
        u = rng.choice((1, -1)) * rng.randint(1, bound)
        if u % p != 0:
            return u


def _odd_signed(rng: random.Random) -> int:
    return rng.choice((1, -1)) * (2 * rng.randint(0, 15) + 1)


def _unramified_d(rng: random.Random, p: int) -> Fraction:
    if p == 2:
        return (8 * rng.randint(-4, 4) + 5) * Fraction(4) ** rng.randint(-1, 1)
    for _ in range(_MAX_TRIES):
        c = _signed_unit(rng, p)
        if legendre(c, p) == 1:
            return c * Fraction(p) ** (2 * rng.randint(-1, 1))
    raise RuntimeError(f"found no nonresidue unit mod {p}")


def _norm_directed_element(
    rng: random.Random, d: Fraction, p: int, r: int, want: int
) -> Fraction:
    """A value e with v(e) = r and chi(e / pi^r) equal to want."""
    pi = norm_uniformizer(d, p) if r else None
    for _ in range(_MAX_TRIES):
        u = _odd_signed(rng) if p == 2 else _signed_unit(rng, p)
        e = u * Fraction(p) ** r
        target = e / pi**r if r else Fraction(u)
        if chi(d, target, p) == want:
            return e
    raise RuntimeError(f"found no unit with character value {want} for d={d}, p={p}")


def _prop1(rng: random.Random, sub: str, small: bool) -> Tuple[Fraction, Fraction, Fraction, int]:
    if small:
        pool = (3, 5)
    elif sub == "i":
        pool = (3, 3, 5, 5, 7, 13)  # never 2: odd units cannot differ at valuation 0
    else:
        pool = (2, 3, 3, 5, 5, 7, 13)
    p = rng.choice(pool)
    d = _unramified_d(rng, p)
    if sub == "iii":
        r = rng.choice((-1, 1))
        u1 = _signed_unit(rng, p)
        u2 = _signed_unit(rng, p)
        while u2 == u1:
            u2 = _signed_unit(rng, p)
    else:
        r = rng.choice((-2, 0, 0, 0, 2))
        u1 = _signed_unit(rng, p)
        if sub == "i":
            u2 = _signed_unit(rng, p)
            while (u1 - u2) % p == 0:
                u2 = _signed_unit(rng, p)
        else:
            u2 = u1 + _signed_unit(rng, p) * p ** rng.randint(1, 2)
    return d, u1 * Fraction(p) ** r, u2 * Fraction(p) ** r, p


def _prop2(rng: random.Random, sub: str, small: bool) -> Tuple[Fraction, Fraction, Fraction, int]:
    p = 3 if small else rng.choice((3, 3, 3, 3, 3, 3, 3, 5))
    d = _signed_unit(rng, p) * Fraction(p) ** rng.choice((-1, 1))
    r = rng.choice((0, 0, 0, 1))
    if sub == "iii":
        u1 = _signed_unit(rng, p)
        u2 = _signed_unit(rng, p)
        while (u1 - u2) % p == 0:
            u2 = _signed_unit(rng, p)
        return d, u1 * Fraction(p) ** r, u2 * Fraction(p) ** r, p
    e1 = _norm_directed_element(rng, d, p, r, 0 if sub == "i" else 1)
    j = 1 if (small or p != 3) else rng.randint(1, 2)
    ratio = 1 + _signed_unit(rng, p) * Fraction(p) ** j
    return d, e1, e1 * ratio, p


def _prop3(
    rng: random.Random, sub: str, heavy: bool, small: bool
) -> Tuple[Fraction, Fraction, Fraction, int]:
    if heavy:
        d = Fraction(rng.choice((2, -2)))  # conductor 2
        depth = 5
        r = 0
    else:
        d = Fraction(rng.choice((-1, -5)))  # conductor 1
        depth = 3
        r = rng.choice((0, 0, 0, 1))
    if sub == "iii":
        u1 = _odd_signed(rng)
        u2 = u1 + _odd_signed(rng) * 2 ** rng.randint(1, depth - 1)
        return d, u1 * Fraction(2) ** r, u2 * Fraction(2) ** r, 2
    e1 = _norm_directed_element(rng, d, 2, r, 0 if sub == "i" else 1)
    extra = 0 if (heavy or small) else rng.choice((0, 0, 0, 1))
    ratio = 1 + _odd_signed(rng) * Fraction(2) ** (depth + extra)
    return d, e1, e1 * ratio, 2


def _distinct_rationals(rng: random.Random) -> Tuple[Fraction, Fraction, Fraction]:
    while True:
        roots = tuple(
            Fraction(rng.randint(-12, 12), rng.choice((1, 1, 2, 3))) for _ in range(3)
        )
        if len(set(roots)) == 3:
            return roots


def _split_d(rng: random.Random, p: int) -> Fraction:
    for _ in range(_MAX_TRIES):
        d = random_rational(rng)
        if is_local_square(d, p):
            return d
    raise RuntimeError(f"found no local square at p={p}")


def random_surface(
    rng: random.Random, family: str, heavy: bool = False, small: bool = False
) -> Tuple[Fraction, Tuple[Fraction, Fraction, Fraction], Place]:
    """One fuzzed surface (d, roots, place) directed at the named case family.

    heavy asks the dyadic ramified constructor for a conductor-2 class (wider
    sweep windows); small restricts primes and depths so that re-running with
    an inflated window stays cheap.
    """
    if family == "Real-d-positive":
        return abs(random_rational(rng)), _distinct_rationals(rng), REAL_PLACE
    if family == "Real-d-negative":
        return -abs(random_rational(rng)), _distinct_rationals(rng), REAL_PLACE
    if family == "Split-trivial":
        p = rng.choice((2, 3, 5, 7, 13))
        return _split_d(rng, p), _distinct_rationals(rng), p
    group, sub = family.split("-")
    if group == "Prop1":
        d, e1, e2, p = _prop1(rng, sub, small)
    elif group == "Prop2":
        d, e1, e2, p = _prop2(rng, sub, small)
    elif group == "Prop3":
        d, e1, e2, p = _prop3(rng, sub, heavy, small)
    else:
        raise ValueError(f"unknown case family {family!r}")
    if rng.random() < 0.3:
        d *= random_rational(rng, 1) ** 2  # same square class, messier input
    shift = Fraction(rng.randint(-9, 9), rng.choice((1, 1, 2, 3)))
    roots = [shift, shift + e1, shift + e2]
    rng.shuffle(roots)
    return d, tuple(roots), p


# ---------------------------------------------------------------------------
# symbol suites


def _oracle_triple(rng: random.Random) -> Tuple[Fraction, Fraction, int]:
    """A pair with valuations in [-3, 3], parity-limited so the exhaustive
    search modulus stays small at larger primes."""
    p = rng.choice((2, 2, 2, 2, 3, 3, 3, 5, 5, 7, 11, 13))
    if p >= 7:
        parities = (0, 0)
    elif p == 5:
        parities = rng.choice(((0, 0), (1, 0), (0, 1)))
    else:
        parities = (rng.randint(0, 1), rng.randint(0, 1))
    others = tuple(q for q in _SMOOTH_PRIMES if q != p)

    def part(parity: int) -> Fraction:
        unit = Fraction(rng.choice((1, -1)))
        for q in rng.sample(others, 2):
            unit *= Fraction(q) ** rng.randint(0, 2)
        return unit * Fraction(p) ** (parity + 2 * rng.randint(-1, 1))

    return part(parities[0]), part(parities[1]), p


def check_symbol_oracle(rng: random.Random, count: int = 500) -> SuiteResult:
    """Closed-formula symbol vs exhaustive solvability search."""
    tally = _Tally("symbol-oracle")
    for _ in range(count):
        a, b, p = _oracle_triple(rng)
        k = suggested_oracle_precision(a, b, p)
        expected = hilbert_symbol(a, b, p)
        got = hilbert_oracle(a, b, p, k)
        tally.record(
            got == expected,
            f"(a={a}, b={b}, p={p}, k={k}): formula {expected}, search {got}",
        )
    return tally.result()


def check_symbol_identities(rng: random.Random, count: int = 1000) -> SuiteResult:
    """Bilinearity, symmetry, (a, -a) = 0, and (a, s^2) = 0 at random places."""
    tally = _Tally("symbol-identities")
    for _ in range(count):
        place = rng.choice(_PLACE_POOL)
        a = random_rational(rng)
        b = random_rational(rng)
        c = random_rational(rng)
        s = random_rational(rng)
        problems = []
        if hilbert_symbol(a, b, place) != hilbert_symbol(b, a, place):
            problems.append("symmetry")
        total = (
            hilbert_symbol(a, b * c, place)
            + hilbert_symbol(a, b, place)
            + hilbert_symbol(a, c, place)
        )
        if total % 2 != 0:
            problems.append("bilinearity")
        if hilbert_symbol(a, -a, place) != 0:
            problems.append("(a,-a)")
        if hilbert_symbol(a, s * s, place) != 0:
            problems.append("(a,s^2)")
        tally.record(
            not problems,
            f"(a={a}, b={b}, c={c}, s={s}, v={place}): {', '.join(problems)}",
        )
    return tally.result()


def check_reciprocity(rng: random.Random, count: int = 200) -> SuiteResult:
    """Product formula: local symbols of a rational pair sum to zero."""
    tally = _Tally("reciprocity")
    for _ in range(count):
        a = random_rational(rng)
        b = random_rational(rng)
        report = reciprocity_check(a, b)
        tally.record(
            report.ok, f"(a={a}, b={b}): local sum {report.total} from {report.symbols}"
        )
    return tally.result()


# ---------------------------------------------------------------------------
# enumerator suites


def check_order_agreement(rng: random.Random, count: int = 200) -> SuiteResult:
    """Enumerated subgroup order equals the classifier prediction, per family.

    local_chow performs the order cross-check internally and raises on any
    disagreement; this suite additionally verifies the directed constructions
    land in their intended family.
    """
    tally = _Tally("order-agreement")
    bins: Counter = Counter()
    for family in CASE_FAMILIES:
        heavy_budget = max(1, count // 100) if family.startswith("Prop3") else 0
        for i in range(count):
            d, roots, place = random_surface(rng, family, heavy=i < heavy_budget)
            where = f"{family} d={d} roots={roots} v={place}"
            try:
                report = local_chow(d, *roots, place)
            except ContradictionError as exc:
                tally.record(False, f"{where}: {exc}")
                continue
            bins[report.case_label] += 1
            tally.record(
                report.case_label == family,
                f"{where}: landed in {report.case_label}",
            )
    return tally.result(details=sorted(bins.items()))


_ENUMERABLE_FAMILIES = (
    "Prop1-i",
    "Prop1-ii",
    "Prop1-iii",
    "Prop2-i",
    "Prop2-ii",
    "Prop2-iii",
    "Prop3-i",
    "Prop3-ii",
    "Prop3-iii",
)


def check_truncation_stability(rng: random.Random, count: int = 200) -> SuiteResult:
    """Inflating the valuation window and residue modulus never changes the
    enumerated subgroup."""
    tally = _Tally("truncation-stability")
    for i in range(count):
        family = _ENUMERABLE_FAMILIES[i % len(_ENUMERABLE_FAMILIES)]
        d, roots, place = random_surface(rng, family, small=True)
        surface = normalize_roots(*roots, place)
        tight = characteristic_subgroup(d, surface.e1, surface.e2, place, 0)
        wide = characteristic_subgroup(d, surface.e1, surface.e2, place, 2)
        tally.record(
            tight == wide,
            f"{family} d={d} roots={roots} v={place}: "
            f"{tight.basis} widened to {wide.basis}",
        )
    return tally.result()


_PERMUTATIONS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def check_equivariance(rng: random.Random, count: int = 200) -> SuiteResult:
    """Permuting the roots permutes the subgroup coordinates the same way."""
    tally = _Tally("equivariance")
    for i in range(count):
        family = CASE_FAMILIES[i % len(CASE_FAMILIES)]
        d, roots, place = random_surface(rng, family, small=True)
        sigma = rng.choice(_PERMUTATIONS)
        permuted = tuple(roots[s] for s in sigma)
        base = local_chow(d, *roots, place)
        moved = local_chow(d, *permuted, place)
        # position i of the permuted call holds original root sigma[i]
        mapped = Subgroup3.span(
            tuple(g[sigma[i]] for i in range(3)) for g in base.subgroup.basis
        )
        tally.record(
            moved.subgroup == mapped and moved.case_label == base.case_label,
            f"{family} d={d} roots={roots} sigma={sigma} v={place}: "
            f"{moved.subgroup.basis} expected {mapped.basis}",
        )
    return tally.result()


def check_square_scaling(rng: random.Random, count: int = 200) -> SuiteResult:
    """Multiplying d by a nonzero rational square changes nothing."""
    tally = _Tally("square-scaling")
    for i in range(count):
        family = CASE_FAMILIES[i % len(CASE_FAMILIES)]
        d, roots, place = random_surface(rng, family, small=True)
        s = random_rational(rng, 1)
        base = local_chow(d, *roots, place)
        scaled = local_chow(d * s * s, *roots, place)
        tally.record(
            scaled == base,
            f"{family} d={d} s={s} roots={roots} v={place}: reports differ",
        )
    return tally.result()


_CLI_SUITES: Tuple[Tuple[str, Callable[[random.Random, int], SuiteResult]], ...] = (
    ("order-agreement", check_order_agreement),
    ("reciprocity", check_reciprocity),
    ("truncation-stability", check_truncation_stability),
    ("equivariance", check_equivariance),
)


def run_check(seed: int = 0, fuzz_count: int = 50) -> CheckReport:
    """The self-check suites behind the CLI, deterministically seeded.

    order-agreement interprets fuzz_count per case family; the other suites
    treat it as a total.
    """
    suites = tuple(
        suite(random.Random(f"{seed}:{name}"), fuzz_count)
        for name, suite in _CLI_SUITES
    )
    return CheckReport(seed=seed, fuzz_count=fuzz_count, suites=suites)
