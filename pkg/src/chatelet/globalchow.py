"""Global degree-zero class group over Q from the finite set of relevant places."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .factorint import factorize, primes_below
from .gf2 import gf2_rank
from .local import (
    ContradictionError,
    LocalReport,
    Subgroup3,
    _distinct_roots,
    _triple_bits,
    local_chow,
)
from .padic import REAL_PLACE, Place, Rational, hilbert_symbol, is_rational_square

__all__ = [
    "GlobalReport",
    "ReciprocityReport",
    "candidate_places",
    "global_chow",
    "kernel_dimension",
    "reciprocity_check",
]

_SAMPLE_POOL_LIMIT = 2_000


def _place_sort_key(place: Place) -> Tuple[int, int]:
    return (0, 0) if place == REAL_PLACE else (1, place)


def _odd_prime_support(values: Iterable[Fraction]) -> set:
    primes: set = set()
    for value in values:
        for n in (value.numerator, value.denominator):
            for p in factorize(n):
                if p != 2:
                    primes.add(p)
    return primes


def candidate_places(d: Rational, c1: Rational, c2: Rational, c3: Rational) -> List[Place]:
    """Places where the local group can possibly be nontrivial: the real place, 2,
    and odd primes dividing d or a root difference.  Empty if d is a square in Q."""
    d = Fraction(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    roots = _distinct_roots(c1, c2, c3)
    if is_rational_square(d):
        return []
    diffs = [roots[0] - roots[1], roots[0] - roots[2], roots[1] - roots[2]]
    places: List[Place] = [REAL_PLACE, 2]
    places.extend(_odd_prime_support([d, *diffs]))
    return sorted(places, key=_place_sort_key)


def kernel_dimension(subgroups: Iterable[Subgroup3]) -> int:
    """Dimension of the kernel of summation from the direct sum of the given
    subgroups of (Z/2)^3 into (Z/2)^3."""
    total = 0
    rows: List[int] = []
    for sub in subgroups:
        bits = [_triple_bits(t) for t in sub.basis]
        if any(b == 0 for b in bits) or gf2_rank(bits) != len(bits):
            raise ValueError(f"subgroup basis is not independent: {sub.basis}")
        for t in sub.basis:
            if sum(t) % 2 != 0:
                raise ValueError(f"basis vector {t} does not sum to zero")
        total += sub.dim
        rows.extend(bits)
    return total - gf2_rank(rows)


@dataclass(frozen=True)
class GlobalReport:
    d: Fraction
    roots: Tuple[Fraction, Fraction, Fraction]
    kernel_dim: int
    local_reports: Tuple[LocalReport, ...]  # nontrivial places only
    checked_places: Tuple[Place, ...]
    sampled_primes: Tuple[int, ...]

    @property
    def group(self) -> str:
        return f"(Z/2)^{self.kernel_dim}"

    @property
    def place_orders(self) -> Dict[Place, int]:
        return {rep.place: rep.subgroup.order for rep in self.local_reports}


def global_chow(
    d: Rational,
    c1: Rational,
    c2: Rational,
    c3: Rational,
    sample_primes: int = 20,
    rng: Optional[random.Random] = None,
    buffer: int = 0,
) -> GlobalReport:
    """Global group as the kernel of the summation map over all candidate places,
    with a sanity sample of non-candidate primes asserted trivial."""
    d = Fraction(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    roots = _distinct_roots(c1, c2, c3)
    places = candidate_places(d, *roots)
    if not places:  # d is a square in Q: every completion splits
        return GlobalReport(d, roots, 0, (), (), ())

    reports = [local_chow(d, *roots, place, buffer) for place in places]
    nontrivial = tuple(rep for rep in reports if rep.subgroup.dim > 0)
    kernel = kernel_dimension([rep.subgroup for rep in nontrivial])

    rng = rng if rng is not None else random.Random(0)
    pool = [p for p in primes_below(_SAMPLE_POOL_LIMIT) if p != 2 and p not in places]
    sampled = tuple(sorted(rng.sample(pool, min(sample_primes, len(pool)))))
    for q in sampled:
        rep = local_chow(d, *roots, q, buffer)
        if rep.subgroup.dim != 0:
            raise ContradictionError(
                f"non-candidate prime {q} has a nontrivial local group; "
                f"the candidate place set {places} is incomplete",
                predicted_order=1,
                enumerated_order=rep.subgroup.order,
            )
    return GlobalReport(d, roots, kernel, nontrivial, tuple(places), sampled)


@dataclass(frozen=True)
class ReciprocityReport:
    symbols: Dict[Place, int]
    total: int

    @property
    def ok(self) -> bool:
        return self.total == 0


def reciprocity_check(a: Rational, b: Rational) -> ReciprocityReport:
    """Hilbert symbols of (a, b) over every place that can be nonzero; their F2
    sum must vanish."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("reciprocity needs nonzero arguments")
    places: List[Place] = [REAL_PLACE, 2]
    places.extend(_odd_prime_support([a, b]))
    places.sort(key=_place_sort_key)
    symbols = {place: hilbert_symbol(a, b, place) for place in places}
    return ReciprocityReport(symbols, sum(symbols.values()) % 2)
