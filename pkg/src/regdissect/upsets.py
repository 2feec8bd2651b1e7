"""Exact algebra of ultimately periodic subsets of the naturals.

An ultimately periodic set is described by an explicit finite part below a
threshold ``t`` and, from ``t`` on, by a set of residues modulo a period
``q``.  These are exactly the length sets of unary regular languages, which
makes them the working representation for every length-pattern argument in
this toolkit.  All values are immutable and kept in a canonical form
(minimal period, then minimal threshold), so structural equality decides
set equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Callable, Iterable, Iterator


@dataclass(frozen=True)
class ArithmeticProgression:
    """The set ``{step*n + offset : n >= start}`` with ``step >= 1``."""

    step: int
    offset: int
    start: int = 0

    def __post_init__(self) -> None:
        if self.step < 1:
            raise ValueError(f"progression step must be >= 1, got {self.step}")
        if self.offset < 0 or self.start < 0:
            raise ValueError("progression offset and start must be naturals")

    def __contains__(self, n: int) -> bool:
        return n >= self.step * self.start + self.offset and (n - self.offset) % self.step == 0

    def as_upset(self) -> "UltimatelyPeriodicSet":
        return UltimatelyPeriodicSet(
            threshold=self.step * self.start + self.offset,
            period=self.step,
            finite_part=frozenset(),
            residues=frozenset({self.offset % self.step}),
        ).normalize()


def _divisors(q: int) -> Iterator[int]:
    for d in range(1, q + 1):
        if q % d == 0:
            yield d


@dataclass(frozen=True)
class UltimatelyPeriodicSet:
    """Subset of the naturals: ``n`` is a member iff ``n < threshold`` and
    ``n in finite_part``, or ``n >= threshold`` and ``n % period in residues``.

    Use :meth:`normalize` (or the operation functions in this module, which
    always return normalized values) to obtain the canonical representative.
    """

    threshold: int
    period: int
    finite_part: frozenset[int] = field(default_factory=frozenset)
    residues: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.threshold < 0:
            raise ValueError("threshold must be a natural")
        if any(n < 0 or n >= self.threshold for n in self.finite_part):
            raise ValueError("finite part must lie strictly below the threshold")
        if any(r < 0 or r >= self.period for r in self.residues):
            raise ValueError("residues must lie in [0, period)")

    # -- membership ------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return n in self.finite_part
        return (n % self.period) in self.residues

    def is_empty(self) -> bool:
        return not self.finite_part and not self.residues

    def is_infinite(self) -> bool:
        """A set in this representation is infinite iff its residue set is
        nonempty (progressions with step >= 1 never thin out)."""
        return bool(self.residues)

    def members_upto(self, limit: int) -> Iterator[int]:
        """Yield all members ``n <= limit`` in increasing order."""
        for n in range(limit + 1):
            if n in self:
                yield n

    def bitmask(self, size: int) -> int:
        """Membership of ``0..size-1`` packed into an int, bit ``n`` = ``n in self``."""
        mask = 0
        for n in sorted(self.finite_part):
            if n < size:
                mask |= 1 << n
        if self.residues:
            for r in sorted(self.residues):
                n = self.threshold + ((r - self.threshold) % self.period)
                while n < size:
                    mask |= 1 << n
                    n += self.period
        return mask

    # -- canonical form ----------------------------------------------------

    def normalize(self) -> "UltimatelyPeriodicSet":
        """Canonical representative: minimal period, then minimal threshold.

        Idempotent; two values with the same membership function normalize
        to structurally equal values.
        """
        t, q = self.threshold, self.period
        finite = set(self.finite_part)
        residues = set(self.residues)

        if not residues:
            q = 1
        else:
            for d in _divisors(q):
                folded = {r % d for r in residues}
                if {r for r in range(q) if (r % d) in folded} == residues:
                    q, residues = d, folded
                    break

        while t > 0:
            n = t - 1
            if (n in finite) == ((n % q) in residues):
                finite.discard(n)
                t = n
            else:
                break

        return UltimatelyPeriodicSet(t, q, frozenset(finite), frozenset(residues))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def empty() -> "UltimatelyPeriodicSet":
        return UltimatelyPeriodicSet(0, 1, frozenset(), frozenset())

    @staticmethod
    def naturals() -> "UltimatelyPeriodicSet":
        return UltimatelyPeriodicSet(0, 1, frozenset(), frozenset({0}))

    @staticmethod
    def from_finite(values: Iterable[int]) -> "UltimatelyPeriodicSet":
        vals = frozenset(values)
        if any(v < 0 for v in vals):
            raise ValueError("members must be naturals")
        t = max(vals) + 1 if vals else 0
        return UltimatelyPeriodicSet(t, 1, vals, frozenset()).normalize()

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "period": self.period,
            "finite_part": sorted(self.finite_part),
            "residues": sorted(self.residues),
        }

    @staticmethod
    def from_dict(record: dict) -> "UltimatelyPeriodicSet":
        return UltimatelyPeriodicSet(
            threshold=record["threshold"],
            period=record["period"],
            finite_part=frozenset(record["finite_part"]),
            residues=frozenset(record["residues"]),
        )

    def describe(self) -> str:
        if self.is_empty():
            return "{}"
        parts = [str(n) for n in sorted(self.finite_part)]
        for r in sorted(self.residues):
            parts.append(f"n>={self.threshold}, n=%{self.period}={r}")
        return "{" + "; ".join(parts) + "}"


def from_progressions(progressions: Iterable[ArithmeticProgression]) -> UltimatelyPeriodicSet:
    """Union of arithmetic progressions, in canonical form.

    The empty list yields the canonical empty set.
    """
    result = UltimatelyPeriodicSet.empty()
    for p in progressions:
        result = union(result, p.as_upset())
    return result


def _combine(
    x: UltimatelyPeriodicSet,
    y: UltimatelyPeriodicSet,
    op: Callable[[bool, bool], bool],
) -> UltimatelyPeriodicSet:
    """Pointwise boolean combination, exact.

    Beyond max(t_x, t_y) both membership functions are determined by the
    residue modulo lcm(q_x, q_y), so the combination is too.
    """
    period = lcm(x.period, y.period)
    threshold = max(x.threshold, y.threshold)
    finite = frozenset(n for n in range(threshold) if op(n in x, n in y))
    residues = frozenset(
        r
        for r in range(period)
        if op((r % x.period) in x.residues, (r % y.period) in y.residues)
    )
    return UltimatelyPeriodicSet(threshold, period, finite, residues).normalize()


def union(x: UltimatelyPeriodicSet, y: UltimatelyPeriodicSet) -> UltimatelyPeriodicSet:
    return _combine(x, y, lambda a, b: a or b)


def intersect(x: UltimatelyPeriodicSet, y: UltimatelyPeriodicSet) -> UltimatelyPeriodicSet:
    return _combine(x, y, lambda a, b: a and b)


def difference(x: UltimatelyPeriodicSet, y: UltimatelyPeriodicSet) -> UltimatelyPeriodicSet:
    return _combine(x, y, lambda a, b: a and not b)


def complement(x: UltimatelyPeriodicSet) -> UltimatelyPeriodicSet:
    """Complement relative to the naturals."""
    finite = frozenset(n for n in range(x.threshold) if n not in x.finite_part)
    residues = frozenset(r for r in range(x.period) if r not in x.residues)
    return UltimatelyPeriodicSet(x.threshold, x.period, finite, residues).normalize()


def minkowski_sum(x: UltimatelyPeriodicSet, y: UltimatelyPeriodicSet) -> UltimatelyPeriodicSet:
    """The sumset ``{m + n : m in x, n in y}``, exact.

    Sums stabilize to residue classes modulo lcm(q_x, q_y) at
    ``t_x + t_y + 2*lcm``: below that bound they are enumerated outright,
    above it every residue-reachable value is realized by shifting one
    summand a full period down.
    """
    if x.is_empty() or y.is_empty():
        return UltimatelyPeriodicSet.empty()

    period = lcm(x.period, y.period)
    threshold = x.threshold + y.threshold + 2 * period

    lifted_x = [r for r in range(period) if (r % x.period) in x.residues]
    lifted_y = [r for r in range(period) if (r % y.period) in y.residues]
    residues = set()
    for a in lifted_x:
        for b in lifted_y:
            residues.add((a + b) % period)
        for f in y.finite_part:
            residues.add((a + f) % period)
    for b in lifted_y:
        for f in x.finite_part:
            residues.add((f + b) % period)

    mask_x = x.bitmask(threshold)
    mask_y = y.bitmask(threshold)
    acc = 0
    n = 0
    while mask_x >> n:
        if (mask_x >> n) & 1:
            acc |= mask_y << n
        n += 1
    acc &= (1 << threshold) - 1
    finite = frozenset(n for n in range(threshold) if (acc >> n) & 1)

    return UltimatelyPeriodicSet(threshold, period, finite, frozenset(residues)).normalize()


def infinite_residues(x: UltimatelyPeriodicSet, modulus: int) -> frozenset[int]:
    """Residues ``r`` modulo ``modulus`` whose class ``{n in x : n = r (mod m)}``
    is infinite, decided exactly by intersecting with the full residue class."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    out = set()
    for r in range(modulus):
        cls = ArithmeticProgression(modulus, r, 0).as_upset()
        if intersect(x, cls).is_infinite():
            out.add(r)
    return frozenset(out)
