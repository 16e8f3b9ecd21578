"""Set representations for the four infinite spaces.

Each class is a boolean algebra built from ``IntervalSet`` components plus a
few flags, so complements, unions and intersections stay exact.  Thresholds
may be affine in a parameter; then a value describes a family for large
``n`` and ``at``/``shifted``/``limit`` move between the family and its
members.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import UnrepresentableSet
from .affine import Affine, const
from .intervals import IntervalSet

OMEGA = "w"
REST = "r"          # an unnamed point of the uncountable carrier


class _Algebra:
    """Shared derived operations; subclasses supply ``_map``, ``_zip`` and ``__invert__``."""

    def __sub__(self, other):
        return self & ~other

    def __le__(self, other) -> bool:
        return (self - other).is_empty()

    def at(self, n: int):
        return self._map(lambda s: s.at(n), lambda k: const(k(n)))

    def shifted(self):
        return self._map(lambda s: s.shifted(), lambda k: k.shifted())

    def constant(self) -> bool:
        return all(a.constant for a in self.affines())


# ------------------------------------------------------------------ ℕ with the cofinite topology

@dataclass(frozen=True)
class NatSet(_Algebra):
    s: IntervalSet

    def _map(self, f, _keys=None):
        return NatSet(f(self.s))

    def __invert__(self):
        return NatSet(~self.s)

    def __or__(self, o):
        return NatSet(self.s | o.s)

    def __and__(self, o):
        return NatSet(self.s & o.s)

    def is_empty(self) -> bool:
        return self.s.is_empty()

    def is_finite(self) -> bool:
        return self.s.is_finite()

    def contains(self, x) -> bool:
        return isinstance(x, (int, Affine)) and self.s.contains(x)

    def affines(self) -> set[Affine]:
        return self.s.affines() | {const(0)}

    def limit(self):
        return NatSet(self.s.limit())

    def components(self) -> dict:
        return {"s": self.s}

    def with_components(self, comps: dict):
        return NatSet(comps["s"])


# ------------------------------------------------------------------ uncountable set, co-countable topology

@dataclass(frozen=True)
class CocSet(_Algebra):
    """``rest`` says whether the unnamed uncountable remainder is included.

    Representable sets are finite sets of named points (``rest`` false) and
    their complements (``rest`` true); the algebra is closed on that fragment.
    """

    rest: bool
    pool: IntervalSet

    def __post_init__(self):
        if self.rest == self.pool.is_finite():
            raise UnrepresentableSet("co-countable sets are finite or co-finite over the named pool")

    def _map(self, f, _keys=None):
        return CocSet(self.rest, f(self.pool))

    def __invert__(self):
        return CocSet(not self.rest, ~self.pool)

    def __or__(self, o):
        return CocSet(self.rest or o.rest, self.pool | o.pool)

    def __and__(self, o):
        return CocSet(self.rest and o.rest, self.pool & o.pool)

    def is_empty(self) -> bool:
        return not self.rest and self.pool.is_empty()

    def is_countable(self) -> bool:
        return not self.rest

    def contains(self, x) -> bool:
        if x == REST:
            return self.rest
        return isinstance(x, (int, Affine)) and self.pool.contains(x)

    def affines(self) -> set[Affine]:
        return self.pool.affines() | {const(0)}

    def limit(self):
        return CocSet(self.rest, self.pool.limit())

    def components(self) -> dict:
        return {"pool": self.pool}

    def with_components(self, comps: dict):
        return CocSet(self.rest, comps["pool"])


# ------------------------------------------------------------------ Johnstone's dcpo ℕ × (ℕ ∪ {ω})

def _col_base() -> IntervalSet:
    return IntervalSet.empty(1)


@dataclass(frozen=True)
class JSet(_Algebra):
    """Finite points column by column, plus the ω row.

    ``generic`` is the finite part of every column not listed in ``cols``;
    ``cols`` holds the exceptional columns keyed by column index; ``omega``
    holds the ``m`` with ``(m, ω)`` in the set.
    """

    generic: IntervalSet
    cols: tuple[tuple[Affine, IntervalSet], ...]
    omega: IntervalSet

    @classmethod
    def make(cls, generic: IntervalSet, cols: dict, omega: IntervalSet) -> "JSet":
        kept = tuple(sorted((k, v) for k, v in cols.items() if v != generic))
        return cls(generic, kept, omega)

    @classmethod
    def empty(cls) -> "JSet":
        return cls(_col_base(), (), IntervalSet.empty(1))

    @classmethod
    def all(cls) -> "JSet":
        return cls(IntervalSet.full(1), (), IntervalSet.full(1))

    @property
    def coldict(self) -> dict:
        return dict(self.cols)

    def col(self, j: Affine) -> IntervalSet:
        return self.coldict.get(j, self.generic)

    def keys(self) -> list[Affine]:
        return [k for k, _ in self.cols]

    def _zip(self, o: "JSet", f: Callable) -> "JSet":
        keys = set(self.keys()) | set(o.keys())
        return JSet.make(f(self.generic, o.generic), {k: f(self.col(k), o.col(k)) for k in keys},
                         f(self.omega, o.omega))

    def __or__(self, o):
        return self._zip(o, lambda p, q: p | q)

    def __and__(self, o):
        return self._zip(o, lambda p, q: p & q)

    def __invert__(self):
        return JSet.make(~self.generic, {k: ~v for k, v in self.cols}, ~self.omega)

    def _map(self, f, keyf):
        cols: dict = {}
        for k, v in self.cols:
            nk = keyf(k)
            if nk in cols:
                raise AssertionError("column keys collide at this parameter value")
            cols[nk] = f(v)
        return JSet.make(f(self.generic), cols, f(self.omega))

    def is_empty(self) -> bool:
        return self.generic.is_empty() and all(v.is_empty() for _, v in self.cols) and self.omega.is_empty()

    def contains(self, p) -> bool:
        j, k = p
        j = const(j) if isinstance(j, int) else j
        if k == OMEGA:
            return self.omega.contains(j)
        if j < const(1):
            return False
        return self.col(j).contains(k)

    def affines(self) -> set[Affine]:
        out = self.generic.affines() | self.omega.affines() | {const(1)}
        for k, v in self.cols:
            out |= v.affines() | {k, k + 1}
        return out

    def limit(self):
        cols = {k: v.limit() for k, v in self.cols if k.constant}
        return JSet.make(self.generic.limit(), cols, self.omega.limit())

    def is_finite(self) -> bool:
        return (self.generic.is_empty() and self.omega.is_finite()
                and all(v.is_finite() for _, v in self.cols))

    def components(self) -> dict:
        out = {"generic": self.generic, "omega": self.omega}
        for k, v in self.cols:
            if not k.constant:
                raise UnrepresentableSet("column index depends on the parameter")
            out[("col", k)] = v
        return out

    def with_components(self, comps: dict):
        cols = {key[1]: v for key, v in comps.items() if isinstance(key, tuple)}
        return JSet.make(comps["generic"], cols, comps["omega"])


# ------------------------------------------------------------------ the dcpo with a_n, b, ω_0, ω_n

@dataclass(frozen=True)
class ESet(_Algebra):
    a: IntervalSet
    b: bool
    w0: bool
    w: IntervalSet

    @classmethod
    def empty(cls) -> "ESet":
        return cls(IntervalSet.empty(1), False, False, IntervalSet.empty(1))

    @classmethod
    def all(cls) -> "ESet":
        return cls(IntervalSet.full(1), True, True, IntervalSet.full(1))

    def _map(self, f, _keys=None):
        return ESet(f(self.a), self.b, self.w0, f(self.w))

    def __or__(self, o):
        return ESet(self.a | o.a, self.b or o.b, self.w0 or o.w0, self.w | o.w)

    def __and__(self, o):
        return ESet(self.a & o.a, self.b and o.b, self.w0 and o.w0, self.w & o.w)

    def __invert__(self):
        return ESet(~self.a, not self.b, not self.w0, ~self.w)

    def is_empty(self) -> bool:
        return self.a.is_empty() and not self.b and not self.w0 and self.w.is_empty()

    def contains(self, p) -> bool:
        tag, i = p
        if tag == "a":
            return self.a.contains(i)
        if tag == "w":
            return self.w.contains(i)
        return self.b if tag == "b" else self.w0

    def affines(self) -> set[Affine]:
        return self.a.affines() | self.w.affines() | {const(1)}

    def limit(self):
        return ESet(self.a.limit(), self.b, self.w0, self.w.limit())

    def is_finite(self) -> bool:
        return self.a.is_finite() and self.w.is_finite()

    def components(self) -> dict:
        return {"a": self.a, "w": self.w}

    def with_components(self, comps: dict):
        return ESet(comps["a"], self.b, self.w0, comps["w"])
