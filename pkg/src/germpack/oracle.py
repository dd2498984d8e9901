"""Brute-force ground truth for small instances.

Exhaustively enumerates avoiding strings and periodic avoiding sets and picks
germ-maxima by direct comparison.  Deliberately shares nothing with the
dynamic programs in `search` except the polynomial comparator, so the two
routes stay independent checks of each other.  Desk-scale only; the caps can
be overridden at the cost of a warning.
"""

from __future__ import annotations

import warnings

from .germs import GREATER, IntPolynomial, poly_germ_compare
from .sets import DistanceSet, RationalSet, is_avoiding, set_compare

MAX_LENGTH = 32
MAX_PERIOD = 24


def enumerate_avoiding(distances: DistanceSet, length: int, force: bool = False):
    """Yield every avoiding string of the given length, lexicographically.

    Backtracking over positions; appending a 1 is checked against the last
    norm bits only, which is where any new violation must live.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    if length > MAX_LENGTH:
        if not force:
            raise ValueError(f"length {length} over the enumeration cap; pass force=True")
        warnings.warn(f"enumerating avoiding strings of length {length} > {MAX_LENGTH}")
    dists = tuple(distances)
    prefix: list[str] = []

    def extend():
        if len(prefix) == length:
            yield "".join(prefix)
            return
        pos = len(prefix)
        prefix.append("0")
        yield from extend()
        prefix.pop()
        if all(d > pos or prefix[pos - d] == "0" for d in dists):
            prefix.append("1")
            yield from extend()
            prefix.pop()

    yield from extend()


def brute_best(distances: DistanceSet, length: int, force: bool = False) -> str:
    """Germ-maximal avoiding string of the given length, by full enumeration."""
    best = None
    best_poly = None
    for candidate in enumerate_avoiding(distances, length, force):
        poly = IntPolynomial.from_bits(candidate)
        if best is None or poly_germ_compare(poly, best_poly) == GREATER:
            best, best_poly = candidate, poly
    return best


def brute_best_periodic(
    distances: DistanceSet, max_period: int, force: bool = False
) -> RationalSet:
    """Germ-maximal purely periodic avoiding set with repetend up to max_period.

    Tries every repetend whose infinite repetition avoids the distances.  The
    empty set (all-zero repetend) is always a candidate, so a best always
    exists.
    """
    if max_period < 1:
        raise ValueError("max period must be >= 1")
    if max_period > MAX_PERIOD:
        if not force:
            raise ValueError(f"period {max_period} over the enumeration cap; pass force=True")
        warnings.warn(f"enumerating repetends of length {max_period} > {MAX_PERIOD}")
    best = RationalSet.empty()
    for period in range(1, max_period + 1):
        for repetend in enumerate_avoiding(distances, period, force):
            candidate = RationalSet("", repetend)
            if not is_avoiding(candidate, distances):
                continue
            if set_compare(candidate, best) == GREATER:
                best = candidate
    return best
