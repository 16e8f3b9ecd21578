"""Subsets of ``{base, base+1, ...}`` as boundary lists.

``IntervalSet((b0, b1, b2, ...))`` is ``[b0, b1) ∪ [b2, b3) ∪ ...``; an odd
number of boundaries leaves the last interval unbounded.  Boundaries are
``Affine`` thresholds, so one value describes a whole parametrised family for
large ``n``; constant boundaries give an ordinary concrete set.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .affine import Affine, const


@dataclass(frozen=True)
class IntervalSet:
    base: int
    bounds: tuple[Affine, ...] = ()

    # -- constructors
    @classmethod
    def empty(cls, base: int) -> "IntervalSet":
        return cls(base)

    @classmethod
    def full(cls, base: int) -> "IntervalSet":
        return cls(base, (const(base),))

    @classmethod
    def span(cls, base: int, lo: Affine, hi: Affine | None) -> "IntervalSet":
        """``[lo, hi)``, or ``[lo, ∞)`` when ``hi`` is None."""
        if hi is None:
            return cls._norm(base, [lo])
        return cls._norm(base, [lo, hi])

    @classmethod
    def point(cls, base: int, x: Affine) -> "IntervalSet":
        return cls.span(base, x, x + 1)

    @classmethod
    def points(cls, base: int, xs: Iterable[int]) -> "IntervalSet":
        out = cls.empty(base)
        for x in xs:
            out = out | cls.point(base, const(x))
        return out

    @classmethod
    def _norm(cls, base: int, bounds: list[Affine]) -> "IntervalSet":
        floor = const(base)
        out = cls(base)
        for i in range(0, len(bounds), 2):
            lo = max(bounds[i], floor)
            hi = bounds[i + 1] if i + 1 < len(bounds) else None
            if hi is None:
                out = out | cls(base, (lo,))
            elif lo < hi:
                out = out | cls(base, (lo, hi))
        return out

    # -- queries
    def contains(self, x: int | Affine) -> bool:
        if isinstance(x, int):
            x = const(x)
        if x < const(self.base):
            return False
        return sum(1 for b in self.bounds if b <= x) % 2 == 1

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def is_empty(self) -> bool:
        return not self.bounds

    def is_finite(self) -> bool:
        return len(self.bounds) % 2 == 0

    def is_full(self) -> bool:
        return self.bounds == (const(self.base),)

    def intervals(self) -> list[tuple[Affine, Affine | None]]:
        b = list(self.bounds)
        return [(b[i], b[i + 1] if i + 1 < len(b) else None) for i in range(0, len(b), 2)]

    def min(self) -> Affine | None:
        return self.bounds[0] if self.bounds else None

    def affines(self) -> set[Affine]:
        return set(self.bounds)

    def constant(self) -> bool:
        return all(b.constant for b in self.bounds)

    # -- algebra
    def complement(self) -> "IntervalSet":
        floor = const(self.base)
        if self.bounds and self.bounds[0] == floor:
            return IntervalSet(self.base, self.bounds[1:])
        return IntervalSet(self.base, (floor,) + self.bounds)

    def __invert__(self) -> "IntervalSet":
        return self.complement()

    def _sweep(self, other: "IntervalSet", keep) -> "IntervalSet":
        assert self.base == other.base
        floor = const(self.base)
        cuts = sorted(self.affines() | other.affines() | {floor})
        a, b = self.bounds, other.bounds
        i = j = 0
        out: list[Affine] = []
        inside = False
        for c in cuts:
            # bounds are sorted, so membership at c is the parity of bounds <= c
            while i < len(a) and a[i] <= c:
                i += 1
            while j < len(b) and b[j] <= c:
                j += 1
            above = not c < floor
            now = keep(above and i % 2 == 1, above and j % 2 == 1)
            if now != inside:
                out.append(c)
                inside = now
        return IntervalSet(self.base, tuple(out))

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return self._sweep(other, lambda p, q: p or q)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return self._sweep(other, lambda p, q: p and q)

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return self._sweep(other, lambda p, q: p and not q)

    def __le__(self, other: "IntervalSet") -> bool:
        return (self - other).is_empty()

    # -- parameter handling
    def at(self, n: int) -> "IntervalSet":
        return IntervalSet._norm(self.base, [const(b(n)) for b in self.bounds])

    def shifted(self) -> "IntervalSet":
        return IntervalSet(self.base, tuple(b.shifted() for b in self.bounds))

    def limit(self) -> "IntervalSet":
        """Points eventually inside: only constant boundaries survive."""
        return IntervalSet(self.base, tuple(b for b in self.bounds if b.constant))

    def members(self, upto: int) -> list[int]:
        """Concrete members below ``upto`` (constant boundaries only)."""
        return [x for x in range(self.base, upto) if self.contains(x)]
