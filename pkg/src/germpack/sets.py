"""Eventually periodic subsets of the naturals and their germ-order toolkit.

A set is stored as an indicator bit string split into a finite preperiod and
a repetend that repeats forever.  The representation is canonicalized on
construction (primitive repetend, shortest preperiod), so two values are ==
exactly when they denote the same set.

Also here: forbidden-distance sets, the avoidance predicate, the greedy
construction with period detection, translation, the generating function,
and the two-coefficient valuation (density, constant term) that refines
density comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .germs import (
    IntPolynomial,
    RationalGF,
    germ_compare,
    laurent_prefix,
    one_minus_power,
)


def _check_bits(bits: str, what: str) -> str:
    if any(ch not in "01" for ch in bits):
        raise ValueError(f"{what} must be a string of 0s and 1s, got {bits!r}")
    return bits


@dataclass(frozen=True)
class DistanceSet:
    """A finite set of forbidden distances (positive integers).

    May be empty, in which case nothing is forbidden.  Input is sorted and
    deduplicated on construction; non-positive or non-integer entries are
    rejected.
    """

    distances: tuple[int, ...] = ()

    def __post_init__(self):
        seen = sorted(set(self.distances))
        for d in seen:
            if not isinstance(d, int) or isinstance(d, bool) or d < 1:
                raise ValueError(f"forbidden distances must be positive integers, got {d!r}")
        object.__setattr__(self, "distances", tuple(seen))

    @classmethod
    def of(cls, *distances: int) -> DistanceSet:
        return cls(tuple(distances))

    @classmethod
    def from_text(cls, text: str) -> DistanceSet:
        """Parse a comma list like "3,5"; empty/blank text means empty set."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad distance list {text!r}: {exc}") from None

    def to_text(self) -> str:
        return ",".join(str(d) for d in self.distances)

    @property
    def norm(self) -> int:
        """Largest forbidden distance; 0 for the empty set."""
        return self.distances[-1] if self.distances else 0

    def __iter__(self):
        return iter(self.distances)

    def __contains__(self, d) -> bool:
        return d in self.distances

    def __len__(self) -> int:
        return len(self.distances)

    def __bool__(self) -> bool:
        return bool(self.distances)


def _primitive_root(word: str) -> str:
    """Shortest u with word == u * k."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


@dataclass(frozen=True)
class RationalSet:
    """An eventually periodic subset of the naturals, canonical on construction.

    The indicator sequence is `preperiod` followed by `repetend` repeated
    forever.  Canonical means: the repetend is primitive (not a power of a
    shorter string) and the preperiod is as short as possible.  Finite sets
    end up with repetend "0"; the full set of naturals is ("", "1").
    """

    preperiod: str
    repetend: str

    def __post_init__(self):
        pre = _check_bits(self.preperiod, "preperiod")
        rep = _check_bits(self.repetend, "repetend")
        if not rep:
            raise ValueError("repetend must be nonempty")
        rep = _primitive_root(rep)
        while pre and pre[-1] == rep[-1]:
            pre = pre[:-1]
            rep = rep[-1] + rep[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "repetend", rep)

    @classmethod
    def from_text(cls, text: str) -> RationalSet:
        """Parse "pre|rep", e.g. "|10" for the evens or "111|0" for {0,1,2}."""
        if "|" not in text:
            raise ValueError(f"set text must look like 'pre|rep', got {text!r}")
        pre, _, rep = text.partition("|")
        return cls(pre, rep)

    def to_text(self) -> str:
        return f"{self.preperiod}|{self.repetend}"

    @classmethod
    def empty(cls) -> RationalSet:
        return cls("", "0")

    @classmethod
    def naturals(cls) -> RationalSet:
        return cls("", "1")

    @classmethod
    def from_finite(cls, elements) -> RationalSet:
        """The finite set containing the given naturals."""
        elems = sorted(set(elements))
        if not elems:
            return cls.empty()
        bits = ["0"] * (elems[-1] + 1)
        for n in elems:
            bits[n] = "1"
        return cls("".join(bits), "0")

    @classmethod
    def arithmetic(cls, first: int, step: int) -> RationalSet:
        """The progression {first, first+step, first+2*step, ...}."""
        if step < 1:
            raise ValueError("step must be >= 1")
        return cls("0" * first, "1" + "0" * (step - 1))

    def __contains__(self, n) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        if n < len(self.preperiod):
            return self.preperiod[n] == "1"
        return self.repetend[(n - len(self.preperiod)) % len(self.repetend)] == "1"

    def bits(self, count: int) -> str:
        """The first `count` indicator bits."""
        pre, rep = self.preperiod, self.repetend
        if count <= len(pre):
            return pre[:count]
        tail = count - len(pre)
        reps = tail // len(rep) + 1
        return (pre + rep * reps)[:count]

    @property
    def is_finite(self) -> bool:
        return self.repetend == "0"

    @property
    def is_empty(self) -> bool:
        return self.repetend == "0" and "1" not in self.preperiod

    def elements(self, limit: int):
        """Yield the members below `limit`."""
        for n, bit in enumerate(self.bits(limit)):
            if bit == "1":
                yield n


def normalize(preperiod: str, repetend: str) -> RationalSet:
    """Canonical form of the set with the given indicator pieces; idempotent."""
    return RationalSet(preperiod, repetend)


def generating_function(s: RationalSet) -> RationalGF:
    """Exact rational generating function sum_{n in S} q**n.

    Written over the denominator 1 - q**len(repetend): the preperiod
    contributes its indicator polynomial times the denominator, and the
    repetend its indicator polynomial delayed past the preperiod.
    """
    d = len(s.repetend)
    pre_poly = IntPolynomial.from_bits(s.preperiod)
    rep_poly = IntPolynomial.from_bits(s.repetend)
    numerator = pre_poly * one_minus_power(d) + rep_poly.shifted(len(s.preperiod))
    return RationalGF(numerator, d)


def is_avoiding(subject, distances: DistanceSet) -> bool:
    """True iff no two members differ by a forbidden distance.

    `subject` is a finite indicator string or a RationalSet.  For a set, the
    check runs on the window preperiod + repetend repeated ceil(norm/|rep|)+2
    times: any violating pair sits within one period of the preperiod once
    the tail is periodic, so with distances capped by the norm this window
    already exhibits it.
    """
    if isinstance(subject, RationalSet):
        if not distances:
            return True
        reps = -(-distances.norm // len(subject.repetend)) + 2
        window = subject.preperiod + subject.repetend * reps
        return is_avoiding(window, distances)
    bits = _check_bits(subject, "indicator string")
    n = len(bits)
    for p, bit in enumerate(bits):
        if bit != "1":
            continue
        for d in distances:
            if p + d < n and bits[p + d] == "1":
                return False
    return True


def greedy_avoiding(distances: DistanceSet, horizon: int):
    """First-fit avoiding set: scan 0, 1, 2, ... and keep n when legal.

    Returns (bits, detected) where bits is the indicator string of the first
    `horizon` naturals and detected is the eventually periodic set proven to
    continue it, or None if no proof was found within the horizon.  The proof
    is a recurrence of the trailing norm-bit state: the greedy decision at n
    depends only on that window, so a repeated state repeats forever after.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    norm = distances.norm
    bits: list[str] = []
    seen: dict[str, int] = {}
    detected = None
    for n in range(horizon):
        if detected is None and n >= norm:
            state = "".join(bits[n - norm: n])
            if state in seen:
                start = seen[state]
                detected = RationalSet("".join(bits[:start]), "".join(bits[start:n]))
            else:
                seen[state] = n
        ok = all(d > n or bits[n - d] == "0" for d in distances)
        bits.append("1" if ok else "0")
    text = "".join(bits)
    if detected is None and norm <= horizon:
        # the state after the final bit may close the loop
        state = text[horizon - norm:] if norm else ""
        if state in seen:
            start = seen[state]
            detected = RationalSet(text[:start], text[start:])
    return text, detected


def shift(s: RationalSet, offset: int) -> RationalSet:
    """The translated set S + offset."""
    if offset < 0:
        raise ValueError("offset must be >= 0")
    return RationalSet("0" * offset + s.preperiod, s.repetend)


@dataclass(frozen=True, order=True)
class Valuation:
    """Truncated germ of a set: (density, constant term), ordered lexicographically.

    For sets these pairs only come in three shapes, enforced here: (0, k)
    for finite sets of size k, (1, -k) for cofinite sets missing k elements,
    and (p, anything) with 0 < p < 1 otherwise.
    """

    density: Fraction
    a0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "density", Fraction(self.density))
        object.__setattr__(self, "a0", Fraction(self.a0))
        d, a = self.density, self.a0
        if d == 0:
            ok = a.denominator == 1 and a >= 0
        elif d == 1:
            ok = a.denominator == 1 and a <= 0
        else:
            ok = 0 < d < 1
        if not ok:
            raise ValueError(f"impossible valuation pair ({d}, {a})")

    def classify(self) -> str:
        if self.density == 0:
            return "finite"
        if self.density == 1:
            return "cofinite"
        return "fractional"


def valuation(s: RationalSet) -> Valuation:
    """Density and constant term of the set's germ, as exact rationals."""
    prefix = laurent_prefix(generating_function(s), 2)
    return Valuation(prefix.density, prefix.a0)


def set_compare(a: RationalSet, b: RationalSet) -> int:
    """Germ order on sets; EQUAL exactly when the canonical forms coincide."""
    return germ_compare(generating_function(a), generating_function(b))
