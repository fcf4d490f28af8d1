"""Norm characters of local quadratic extensions Q_v(sqrt(d)) / Q_v.

chi(d, x, v) = hilbert_symbol(d, x, v) in additive F2 form: chi(x) = 0 exactly
when x is a norm from the extension.  The dyadic conductor exponent and the
stability modulus drive the truncation windows used by the local enumerator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padic import (
    REAL_PLACE,
    Place,
    Rational,
    hilbert_symbol,
    is_local_square,
    legendre,
    unit_residue,
    valuation,
)

__all__ = [
    "ExtKind",
    "QuadExtClass",
    "chi",
    "classify_extension",
    "conductor_n",
    "norm_uniformizer",
    "stability_modulus",
]

_CONDUCTOR_CAP = 8


class ExtKind(enum.Enum):
    SPLIT = "split"
    UNRAMIFIED = "unramified"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class QuadExtClass:
    """Isomorphism class of Q_v(sqrt(d)) over Q_v.

    conductor_n is the dyadic conductor exponent (0 by convention at odd p and
    at the real place); stability_m is the modulus with chi(1 + t) = 0 for all
    v(t) > stability_m.
    """

    kind: ExtKind
    conductor_n: int = 0
    stability_m: int = 0


def _check_not_zero(d: Rational) -> Fraction:
    d = Fraction(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    return d


def classify_extension(d: Rational, place: Place) -> QuadExtClass:
    """Classify Q_v(sqrt(d)) as Split / Unramified / Ramified with conductor data."""
    d = _check_not_zero(d)
    if place == REAL_PLACE:
        if d > 0:
            return QuadExtClass(ExtKind.SPLIT)
        return QuadExtClass(ExtKind.RAMIFIED)  # conductor data unused here
    p = place
    if is_local_square(d, p):
        return QuadExtClass(ExtKind.SPLIT)
    if p != 2:
        if valuation(d, p) % 2 == 0:
            return QuadExtClass(ExtKind.UNRAMIFIED)
        return QuadExtClass(ExtKind.RAMIFIED, conductor_n=0, stability_m=1)
    if valuation(d, 2) % 2 == 0 and unit_residue(d, 2, 3) == 5:
        return QuadExtClass(ExtKind.UNRAMIFIED)
    n = conductor_n(d)
    return QuadExtClass(ExtKind.RAMIFIED, conductor_n=n, stability_m=n + 1)


@lru_cache(maxsize=512)
def norm_char_fn(d: Fraction, place: Place):
    """chi(d, -, place) partially evaluated for speed: a valuation coefficient
    plus a unit-class table, both derived from hilbert_symbol itself.

    The returned callable accepts a nonzero int or Fraction."""
    if place == REAL_PLACE:
        negative = d < 0

        def ev_real(x) -> int:
            return 1 if negative and x < 0 else 0

        return ev_real
    p = place
    c = hilbert_symbol(d, p, p)
    if p == 2:
        table = {u: hilbert_symbol(d, u, 2) for u in (1, 3, 5, 7)}

        def ev_dyadic(x) -> int:
            # x and numerator*denominator differ by the square denominator^2
            t = x if isinstance(x, int) else x.numerator * x.denominator
            v = 0
            while not t & 1:
                t >>= 1
                v += 1
            return (c * v + table[t & 7]) % 2

        return ev_dyadic
    nonsquare_value = hilbert_symbol(d, _least_nonresidue(p), p)
    residues = frozenset(x * x % p for x in range(1, p))

    def ev_odd(x) -> int:
        t = x if isinstance(x, int) else x.numerator * x.denominator
        v = 0
        while t % p == 0:
            t //= p
            v += 1
        return (c * v + (0 if t % p in residues else nonsquare_value)) % 2

    return ev_odd


def _least_nonresidue(p: int) -> int:
    n = 2
    while legendre(n, p) == 0:
        n += 1
    return n


def chi(d: Rational, x: Rational, place: Place) -> int:
    """Norm character of Q_v(sqrt(d)): 0 iff x is a norm (equals (d, x)_v)."""
    d = _check_not_zero(d)
    x = Fraction(x)
    if x == 0:
        raise ValueError("chi is undefined at zero")
    return norm_char_fn(d, place)(x)


def conductor_n(d: Rational) -> int:
    """Dyadic conductor exponent: least n >= 1 with chi trivial on 1 + 2^(n+1) Z_2
    and nontrivial on 1 + 2^n Z_2.  Brute force over odd residues."""
    d = _check_not_zero(d)
    if is_local_square(d, 2):
        raise ValueError("d is a square in Q_2; the character is trivial")
    if valuation(d, 2) % 2 == 0 and unit_residue(d, 2, 3) == 5:
        raise ValueError("Q_2(sqrt(d)) is unramified; no dyadic conductor here")
    for n in range(1, _CONDUCTOR_CAP + 1):
        modulus = 2 ** (n + 3)
        trivial_above = all(chi(d, u, 2) == 0 for u in range(1, modulus, 2 ** (n + 1)))
        nontrivial_at = any(chi(d, u, 2) == 1 for u in range(1, modulus, 2**n))
        if trivial_above:
            if not nontrivial_at:
                raise ArithmeticError("character trivial on all units; not ramified?")
            return n
    raise ArithmeticError(f"conductor exponent exceeds hard cap {_CONDUCTOR_CAP}")


def stability_modulus(ext: QuadExtClass) -> int:
    """Least m with chi(1 + t) = 0 whenever v(t) > m."""
    if ext.kind is ExtKind.SPLIT:
        raise ValueError("split extensions have no norm character to stabilize")
    return ext.stability_m


def norm_uniformizer(d: Rational, p: int) -> Fraction:
    """A uniformizer p*u with chi(d, p*u, p) = 0, for ramified Q_p(sqrt(d))."""
    ext = classify_extension(d, p)
    if ext.kind is not ExtKind.RAMIFIED:
        raise ValueError("norm uniformizers are only sought in the ramified case")
    span = p ** (ext.stability_m + 1)
    for u in range(1, span):
        if u % p == 0:
            continue
        if chi(d, p * u, p) == 0:
            return Fraction(p * u)
    raise ArithmeticError("no norm uniformizer found; the character table is broken")
