"""Small GF(2) linear algebra helpers using int bitsets."""

from __future__ import annotations

from typing import Iterable, List

__all__ = ["gf2_rank", "member", "reduce_rows"]


def reduce_rows(rows: Iterable[int]) -> List[int]:
    """Canonical reduced echelon basis of the F2 span of the given bitmask rows.

    Each pivot bit appears in exactly one basis row and rows come out sorted by
    leading bit, so the result is independent of input order and multiplicity.
    """
    pivots: dict[int, int] = {}
    for row in rows:
        r = row
        for lead in sorted(pivots, reverse=True):
            if r >> lead & 1:
                r ^= pivots[lead]
        if r:
            lead = r.bit_length() - 1
            for other in pivots:
                if pivots[other] >> lead & 1:
                    pivots[other] ^= r
            pivots[lead] = r
    return [pivots[lead] for lead in sorted(pivots, reverse=True)]


def gf2_rank(rows: Iterable[int]) -> int:
    return len(reduce_rows(rows))


def member(vector: int, basis: Iterable[int]) -> bool:
    """Whether the bitmask vector lies in the span of a reduced basis."""
    r = vector
    for b in basis:
        lead = b.bit_length() - 1
        if r >> lead & 1:
            r ^= b
    return r == 0
