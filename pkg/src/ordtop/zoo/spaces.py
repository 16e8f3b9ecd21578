"""Oracles for the infinite spaces.

=====================  ===========================================================
id                     carrier and topology
=====================  ===========================================================
``cofinite-nat``       ℕ = {0, 1, ...}, co-finite topology
``cocountable``        uncountable set with named points 0, 1, ...; co-countable
``johnstone-scott``    ℕ × (ℕ ∪ {ω}) with ℕ = {1, 2, ...}; Scott topology
``johnstone-upper``    same order; upper topology
``ex334-scott``        a_1 < a_2 < ... < ω_0, b, ω_1, ω_2, ...; Scott topology
``ex334-upper``        same order; upper topology
=====================  ===========================================================

Johnstone order: ``(j,k) ≤ (m,n)`` iff ``j = m, k ≤ n`` or ``n = ω, k ≤ m``.
So ``↑(j,k)`` is column ``j`` from row ``k``, plus ``(j,ω)``, plus every
``(m,ω)`` with ``m ≥ k``; and ``↑(j,ω) = {(j,ω)}``.

a/b/ω order: the a's form a chain below ω_0; ``b < ω_n`` and ``a_m < ω_n``
for ``m ≤ n`` (n ≥ 1).

Decisions that hold only on part of a space raise ``UnrepresentableSet``
instead of guessing.  The short argument behind each rule sits next to it.
"""
from __future__ import annotations

import enum
import random
from typing import Iterable

from ..errors import UnrepresentableSet, WrongGrammar
from .affine import Affine, const
from .grammar import OM, Rng, fold, format_point, parse, parse_point
from .intervals import IntervalSet
from .sets import OMEGA, REST, CocSet, ESet, JSet, NatSet


class ZooSpaceId(enum.Enum):
    COFINITE_NAT = "cofinite-nat"
    COCOUNTABLE = "cocountable"
    JOHNSTONE_SCOTT = "johnstone-scott"
    JOHNSTONE_UPPER = "johnstone-upper"
    EX334_SCOTT = "ex334-scott"
    EX334_UPPER = "ex334-upper"


def _items(s: IntervalSet) -> str:
    parts = []
    for lo, hi in s.intervals():
        if hi is None:
            raise UnrepresentableSet("open-ended run inside a finite list")
        parts.append(str(lo) if hi == lo + 1 else f"{lo}..{hi - 1}")
    return ",".join(parts)


def _span_of(arg, base: int) -> IntervalSet:
    """A single affine term or an inclusive range as an interval set."""
    if isinstance(arg, Rng):
        if arg.hi is None:
            return IntervalSet.span(base, arg.lo, None)
        if arg.lo.constant and arg.hi.constant and arg.hi < arg.lo:
            raise WrongGrammar(f"empty range {arg.lo}..{arg.hi}")
        return IntervalSet.span(base, arg.lo, arg.hi + 1)
    if isinstance(arg, Affine):
        return IntervalSet.point(base, arg)
    raise WrongGrammar("expected a number or a range")


def _check_index(x: Affine, base: int, what: str) -> None:
    if x.constant and x.b < base:
        raise WrongGrammar(f"{what} index {x} is below {base}")


def _args(args, count: int | None, name: str):
    if args is None:
        args = ()
    if count is not None and len(args) != count:
        raise WrongGrammar(f"{name} takes {count} argument(s)")
    return args


def _list(args, base: int, name: str) -> IntervalSet:
    out = IntervalSet.empty(base)
    for a in _args(args, None, name):
        for x in ((a.lo, a.hi) if isinstance(a, Rng) else (a,)):
            if x is not None:
                if x is OM:
                    raise WrongGrammar(f"{name} does not take w")
                _check_index(x, base, name)
        if isinstance(a, Rng) and a.hi is None:
            raise WrongGrammar(f"{name} takes bounded ranges only")
        out = out | _span_of(a, base)
    return out


def _one(args, base: int, name: str) -> Affine:
    (a,) = _args(args, 1, name)
    if not isinstance(a, Affine):
        raise WrongGrammar(f"{name} takes a single index")
    _check_index(a, base, name)
    return a


def _nullary(args, name: str) -> None:
    if args is not None:
        raise WrongGrammar(f"{name} takes no arguments")


def _points_of(s: IntervalSet) -> list[Affine]:
    """Members of a finite interval set whose runs have parameter-free length."""
    out = []
    for lo, hi in s.intervals():
        if hi is None or hi.a != lo.a:
            raise UnrepresentableSet("cannot list the points of this run")
        out.extend(lo + i for i in range(hi.b - lo.b))
    return out


def _last(s: IntervalSet) -> Affine:
    """One past the largest member of a nonempty finite interval set."""
    return s.bounds[-1]


class ZooSpace:
    """Common surface: parsing, formatting, points and the decision rules."""

    id: ZooSpaceId
    base: int
    point_kind: str
    t1: bool = False
    topology: str = ""

    # -- expressions
    def parse(self, text: str):
        return parse(text, self.point_kind)

    def fold(self, node, n=None, seen=None):
        return fold(node, self, n, seen)

    def expr(self, text: str):
        return self.fold(self.parse(text))

    def point(self, text: str) -> tuple:
        p = parse_point(text, self.point_kind)
        if any(isinstance(x, Affine) and not x.constant for x in p):
            raise WrongGrammar("a concrete point cannot mention n")
        return p

    def format_point(self, p: tuple) -> str:
        return format_point(p)

    def contains(self, s, p: tuple) -> bool:
        return s.contains(self._concrete_point(p))

    def _concrete_point(self, p: tuple):
        raise NotImplementedError

    # -- derived decisions
    def is_open(self, s) -> bool:
        return self.is_closed(~s)

    def intersect(self, s, t):
        return s & t

    def union(self, s, t):
        return s | t

    def is_empty(self, s) -> bool:
        return s.is_empty()

    def is_scott_open_symbolic(self, s) -> bool:
        if self.topology != "scott":
            raise WrongGrammar(f"{self.id.value} is not a Scott space")
        return self.is_open(s)


# ------------------------------------------------------------------ ℕ, co-finite

class CofiniteNat(ZooSpace):
    id = ZooSpaceId.COFINITE_NAT
    base = 0
    point_kind = "nat"
    t1 = True

    def empty(self):
        return NatSet(IntervalSet.empty(0))

    def all(self):
        return NatSet(IntervalSet.full(0))

    def atom(self, name: str, args):
        if name in ("FIN", "COFIN"):
            s = NatSet(_list(args, 0, name))
            return s if name == "FIN" else ~s
        if name == "EMPTY":
            _nullary(args, name)
            return self.empty()
        if name == "ALL":
            _nullary(args, name)
            return self.all()
        raise WrongGrammar(f"unknown atom {name} for {self.id.value}")

    def up(self, p):
        return NatSet(IntervalSet.point(0, p[1]))

    def _concrete_point(self, p):
        return p[1].b

    def format(self, s: NatSet) -> str:
        if s.is_empty():
            return "EMPTY"
        if s == self.all():
            return "ALL"
        if s.is_finite():
            return f"FIN({_items(s.s)})"
        return f"COFIN({_items((~s).s)})"

    def is_closed(self, s) -> bool:
        # C = {∅, X} ∪ finite sets
        return s.is_finite() or s == self.all()

    def closure(self, s):
        return s if s.is_finite() else self.all()

    def is_upper(self, s) -> bool:
        return True

    def is_compact_saturated(self, s) -> bool:
        # every subset is compact; T1 makes every subset saturated
        return not s.is_empty()

    def sample_points(self, bound: int) -> list:
        return [("nat", const(i)) for i in range(bound)]

    def random_set(self, rng: random.Random, bound: int = 30):
        pts = IntervalSet.points(0, rng.sample(range(bound), rng.randint(0, 6)))
        s = NatSet(pts)
        return s if rng.random() < 0.5 else ~s


# ------------------------------------------------------------------ co-countable

class Cocountable(ZooSpace):
    id = ZooSpaceId.COCOUNTABLE
    base = 0
    point_kind = "nat"
    t1 = True

    def empty(self):
        return CocSet(False, IntervalSet.empty(0))

    def all(self):
        return CocSet(True, IntervalSet.full(0))

    def atom(self, name: str, args):
        if name in ("FIN", "COFIN"):
            s = CocSet(False, _list(args, 0, name))
            return s if name == "FIN" else ~s
        if name == "EMPTY":
            _nullary(args, name)
            return self.empty()
        if name == "ALL":
            _nullary(args, name)
            return self.all()
        raise WrongGrammar(f"unknown atom {name} for {self.id.value}")

    def up(self, p):
        return CocSet(False, IntervalSet.point(0, p[1]))

    def _concrete_point(self, p):
        return p[1].b if p != REST else REST

    def contains(self, s, p) -> bool:
        return s.contains(REST if p == REST else p[1].b)

    def format(self, s: CocSet) -> str:
        if s.is_empty():
            return "EMPTY"
        if s == self.all():
            return "ALL"
        if not s.rest:
            return f"FIN({_items(s.pool)})"
        return f"COFIN({_items((~s).pool)})"

    def is_closed(self, s) -> bool:
        # closed = countable or everything; the representable countable sets are finite
        return s.is_countable() or s == self.all()

    def closure(self, s):
        return s if s.is_countable() else self.all()

    def is_upper(self, s) -> bool:
        return True

    def is_compact_saturated(self, s) -> bool:
        # an infinite set contains a countably infinite D; the opens X \ (D minus one point)
        # cover it without a finite subcover, so compact means finite
        return not s.is_empty() and s.is_countable()

    def sample_points(self, bound: int) -> list:
        return [("nat", const(i)) for i in range(bound)] + [REST]

    def random_set(self, rng: random.Random, bound: int = 30):
        pts = IntervalSet.points(0, rng.sample(range(bound), rng.randint(0, 6)))
        s = CocSet(False, pts)
        return s if rng.random() < 0.5 else ~s


# ------------------------------------------------------------------ Johnstone

def _is_tail(s: IntervalSet) -> bool:
    return len(s.bounds) <= 1


def _is_prefix(s: IntervalSet) -> bool:
    return s.is_empty() or (s.bounds[0] == const(1) and len(s.bounds) <= 2)


def _prefix_hull(s: IntervalSet) -> IntervalSet:
    if s.is_empty():
        return s
    if not s.is_finite():
        return IntervalSet.full(1)
    return IntervalSet.span(1, const(1), _last(s))


class Johnstone(ZooSpace):
    base = 1
    point_kind = "j"

    def __init__(self, topology: str):
        self.topology = topology
        self.id = ZooSpaceId.JOHNSTONE_SCOTT if topology == "scott" else ZooSpaceId.JOHNSTONE_UPPER

    def empty(self):
        return JSet.empty()

    def all(self):
        return JSet.all()

    def _column(self, j: Affine, s: IntervalSet) -> JSet:
        return JSet.make(IntervalSet.empty(1), {j: s}, IntervalSet.empty(1))

    def _omega(self, s: IntervalSet) -> JSet:
        return JSet.make(IntervalSet.empty(1), {}, s)

    def atom(self, name: str, args):
        e = IntervalSet.empty(1)
        if name == "PT":
            x, y = _args(args, 2, name)
            if y is OM:
                return self._omega(_list((x,), 1, name))
            ks = _list((y,), 1, name)
            if isinstance(x, Rng):
                cols = _list((x,), 1, name)
                return JSet.make(e, {j: ks for j in _points_of(cols)}, e)
            _check_index(x, 1, name)
            return self._column(x, ks)
        if name == "COLTAIL":
            j, k = _args(args, 2, name)
            for v in (j, k):
                if not isinstance(v, Affine):
                    raise WrongGrammar("COLTAIL takes a column and a row")
                _check_index(v, 1, name)
            return self._column(j, IntervalSet.span(1, k, None))
        if name == "OMEGATAIL":
            return self._omega(IntervalSet.span(1, _one(args, 1, name), None))
        if name == "COL":
            return self._column(_one(args, 1, name), IntervalSet.full(1))
        if name == "ROWS":
            (r,) = _args(args, 1, name)
            if isinstance(r, Affine):
                _check_index(r, 1, name)
            elif isinstance(r, Rng):
                _check_index(r.lo, 1, name)
            return JSet.make(_span_of(r, 1), {}, e)
        if name == "EMPTY":
            _nullary(args, name)
            return self.empty()
        if name == "ALL":
            _nullary(args, name)
            return self.all()
        raise WrongGrammar(f"unknown atom {name} for {self.id.value}")

    def up(self, p):
        _, j, k = p
        _check_index(j, 1, "column")
        if k is OM or k == OMEGA:
            return self._omega(IntervalSet.point(1, j))
        _check_index(k, 1, "row")
        tail = IntervalSet.span(1, k, None)
        return JSet.make(IntervalSet.empty(1), {j: tail}, IntervalSet.point(1, j) | tail)

    def _concrete_point(self, p):
        _, j, k = p
        return (j, OMEGA if k is OM or k == OMEGA else k)

    def format(self, s: JSet) -> str:
        if s.is_empty():
            return "EMPTY"
        if s == self.all():
            return "ALL"
        parts = []
        gen = []
        for lo, hi in s.generic.intervals():
            gen.append(f"ROWS({lo}..)" if hi is None else f"ROWS({lo}..{hi - 1})")
        if gen:
            head = " | ".join(gen)
            for k in s.keys():
                head += f" - COL({k})"
            parts.append(head)
        for k, v in s.cols:
            for lo, hi in v.intervals():
                if hi is None:
                    parts.append(f"COLTAIL({k},{lo})")
                else:
                    parts.append(f"PT({k},{lo if hi == lo + 1 else f'{lo}..{hi - 1}'})")
        for lo, hi in s.omega.intervals():
            if hi is None:
                parts.append(f"OMEGATAIL({lo})")
            else:
                parts.append(f"PT({lo if hi == lo + 1 else f'{lo}..{hi - 1}'},w)")
        return " | ".join(parts)

    # -- order
    def _non_key_columns(self, s: JSet) -> IntervalSet:
        keys = IntervalSet.empty(1)
        for k in s.keys():
            keys = keys | IntervalSet.point(1, k)
        return ~keys

    def is_upper(self, s: JSet) -> bool:
        columns = [s.generic] + [v for _, v in s.cols]
        if not all(_is_tail(c) for c in columns):
            return False
        need = IntervalSet.empty(1)
        for k, v in s.cols:
            if not v.is_empty():
                need = need | IntervalSet.point(1, k) | IntervalSet.span(1, v.min(), None)
        if not s.generic.is_empty():
            need = need | self._non_key_columns(s) | IntervalSet.span(1, s.generic.min(), None)
        return need <= s.omega

    def is_lower(self, s: JSet) -> bool:
        columns = [s.generic] + [v for _, v in s.cols]
        if not all(_is_prefix(c) for c in columns):
            return False
        if s.omega.is_empty():
            return True
        if not s.omega.is_finite():
            return all(c.is_full() for c in columns)
        rows = IntervalSet.span(1, const(1), _last(s.omega))
        if not all(rows <= c for c in columns):
            return False
        for k, v in s.cols:
            if s.omega.contains(k) and not v.is_full():
                return False
        stray = s.omega & self._non_key_columns(s)
        return stray.is_empty() or s.generic.is_full()

    def down(self, s: JSet) -> JSet:
        if not s.omega.is_finite():
            return JSet.make(IntervalSet.full(1), {}, s.omega)
        generic = _prefix_hull(s.generic)
        cols = {k: _prefix_hull(v) for k, v in s.cols}
        for m in _points_of(s.omega & self._non_key_columns(s)):
            cols[m] = IntervalSet.full(1)
        for k in list(cols):
            if s.omega.contains(k):
                cols[k] = IntervalSet.full(1)
        if not s.omega.is_empty():
            rows = IntervalSet.span(1, const(1), _last(s.omega))
            generic = generic | rows
            cols = {k: v | rows for k, v in cols.items()}
        return JSet.make(generic, cols, s.omega)

    def _sups_missing(self, s: JSet) -> IntervalSet:
        """ω points that are sups of columns unbounded in ``s`` but absent from ``s``."""
        need = IntervalSet.empty(1)
        if not s.generic.is_finite():
            need = need | self._non_key_columns(s)
        for k, v in s.cols:
            if not v.is_finite():
                need = need | IntervalSet.point(1, k)
        return need - s.omega

    def is_closed(self, s: JSet) -> bool:
        if self.topology == "scott":
            # Scott closed: lower, and closed under sups of directed sets; the
            # directed sets without a top are the infinite runs up a column
            return self.is_lower(s) and self._sups_missing(s).is_empty()
        if s.is_empty() or s == self.all():
            return True
        if not self.is_lower(s):
            return False
        if s.is_finite():
            # a finite lower set of finite points is ↓F, closed by definition
            return True
        raise UnrepresentableSet("upper-topology closedness decided only for finite or trivial sets")

    def closure(self, s: JSet) -> JSet:
        if self.topology == "scott":
            t = self.down(s)
            while True:
                missing = self._sups_missing(t)
                if missing.is_empty():
                    return t
                t = self.down(JSet.make(t.generic, t.coldict, t.omega | missing))
        if s.omega.is_finite() and s.generic.is_empty() and all(v.is_finite() for _, v in s.cols):
            # ↓F is the least closed set containing a finite F
            return self.down(s)
        raise UnrepresentableSet("upper-topology closure decided only for finite sets")

    def is_compact_saturated(self, s: JSet) -> bool:
        if s.is_empty() or not self.is_upper(s):
            return False
        if s.generic.is_empty():
            # finitely many minimal finite points; a set of ω points is compact since
            # every nonempty Scott open set contains a whole tail of the ω row
            return True
        if self.topology == "scott":
            # infinitely many columns: the opens keeping columns 1..j low and the other
            # columns high form a cover without a finite subcover
            return False
        raise UnrepresentableSet("upper-topology compactness undecided for sets meeting infinitely many columns")

    def sample_points(self, bound: int) -> list:
        out = []
        for j in range(1, bound + 1):
            out.append(("j", const(j), OM))
            out.extend(("j", const(j), const(k)) for k in range(1, bound + 1))
        return out

    def random_set(self, rng: random.Random, bound: int = 12):
        def iv():
            pts = rng.sample(range(1, bound), rng.randint(0, 3))
            s = IntervalSet.points(1, pts)
            if rng.random() < 0.3:
                s = s | IntervalSet.span(1, const(rng.randint(1, bound)), None)
            return ~s if rng.random() < 0.2 else s

        cols = {const(j): iv() for j in rng.sample(range(1, bound), rng.randint(0, 3))}
        generic = iv() if rng.random() < 0.3 else IntervalSet.empty(1)
        return JSet.make(generic, cols, iv())


# ------------------------------------------------------------------ a/b/ω dcpo

class Ex334(ZooSpace):
    base = 1
    point_kind = "e"

    def __init__(self, topology: str):
        self.topology = topology
        self.id = ZooSpaceId.EX334_SCOTT if topology == "scott" else ZooSpaceId.EX334_UPPER

    def empty(self):
        return ESet.empty()

    def all(self):
        return ESet.all()

    def atom(self, name: str, args):
        e = IntervalSet.empty(1)
        if name == "A_PT":
            return ESet(_list(args, 1, name), False, False, e)
        if name == "W_PT":
            return ESet(e, False, False, _list(args, 1, name))
        if name == "ATAIL":
            return ESet(IntervalSet.span(1, _one(args, 1, name), None), False, False, e)
        if name == "WTAIL":
            return ESet(e, False, False, IntervalSet.span(1, _one(args, 1, name), None))
        if name in ("B_PT", "W0_PT", "EMPTY", "ALL"):
            _nullary(args, name)
            if name == "ALL":
                return self.all()
            return ESet(e, name == "B_PT", name == "W0_PT", e)
        raise WrongGrammar(f"unknown atom {name} for {self.id.value}")

    def up(self, p):
        tag = p[0]
        e = IntervalSet.empty(1)
        if tag == "a":
            _check_index(p[1], 1, "a")
            tail = IntervalSet.span(1, p[1], None)
            return ESet(tail, False, True, tail)
        if tag == "b":
            return ESet(e, True, False, IntervalSet.full(1))
        if tag == "w0":
            return ESet(e, False, True, e)
        _check_index(p[1], 1, "w")
        return ESet(e, False, False, IntervalSet.point(1, p[1]))

    def _concrete_point(self, p):
        if p[0] in ("a", "w"):
            return (p[0], p[1])
        return (p[0], 0)

    def format(self, s: ESet) -> str:
        if s.is_empty():
            return "EMPTY"
        if s == self.all():
            return "ALL"
        parts = []

        def runs(iv: IntervalSet, pt: str, tail: str):
            finite = IntervalSet(1, iv.bounds[:len(iv.bounds) // 2 * 2])
            if not finite.is_empty():
                parts.append(f"{pt}({_items(finite)})")
            if not iv.is_finite():
                parts.append(f"{tail}({iv.bounds[-1]})")

        runs(s.a, "A_PT", "ATAIL")
        if s.b:
            parts.append("B_PT")
        if s.w0:
            parts.append("W0_PT")
        runs(s.w, "W_PT", "WTAIL")
        return " | ".join(parts)

    # -- order
    def is_upper(self, s: ESet) -> bool:
        if not _is_tail(s.a):
            return False
        if not s.a.is_empty() and not (s.w0 and IntervalSet.span(1, s.a.min(), None) <= s.w):
            return False
        return not s.b or s.w.is_full()

    def is_lower(self, s: ESet) -> bool:
        if not _is_prefix(s.a):
            return False
        if s.w0 and not s.a.is_full():
            return False
        if s.w.is_empty():
            return True
        if not s.b:
            return False
        if not s.w.is_finite():
            return s.a.is_full()
        return IntervalSet.span(1, const(1), _last(s.w)) <= s.a

    def down(self, s: ESet) -> ESet:
        if s.w0 or not s.a.is_finite() or not s.w.is_finite():
            a = IntervalSet.full(1)
        else:
            a = _prefix_hull(s.a) | _prefix_hull(s.w)
        return ESet(a, s.b or not s.w.is_empty(), s.w0, s.w)

    def is_closed(self, s: ESet) -> bool:
        if self.topology == "scott":
            # the directed sets without a top are the infinite chains of a's,
            # whose sup is ω_0
            return self.is_lower(s) and (s.a.is_finite() or s.w0)
        if s == self.all():
            return True
        # closed sets are intersections of ↓F, F finite: ↓F holds finitely many ω_n,
        # and holds infinitely many a's only through ω_0
        return self.is_lower(s) and s.w.is_finite() and (s.a.is_finite() or s.w0)

    def closure(self, s: ESet) -> ESet:
        d = self.down(s)
        if self.topology == "upper" and not d.w.is_finite():
            return self.all()
        if not d.a.is_finite():
            d = ESet(d.a, d.b, True, d.w)
        return d

    def minimal_points_finite(self, s: ESet) -> bool:
        if s.b:
            return True
        if not s.a.is_empty():
            return True   # ω_n with n below the least a form a finite set
        return s.w.is_finite()

    def is_compact_saturated(self, s: ESet) -> bool:
        if s.is_empty() or not self.is_upper(s):
            return False
        if self.minimal_points_finite(s):
            return True   # ↑ of finitely many points
        if self.topology == "scott":
            # infinitely many minimal ω_n, each ↑ω_n = {ω_n} Scott open: no finite subcover
            return False
        raise UnrepresentableSet("upper-topology compactness undecided for infinitely many minimal points")

    def sample_points(self, bound: int) -> list:
        return ([("a", const(i)) for i in range(1, bound + 1)] + [("b",), ("w0",)]
                + [("w", const(i)) for i in range(1, bound + 1)])

    def random_set(self, rng: random.Random, bound: int = 12):
        def iv():
            s = IntervalSet.points(1, rng.sample(range(1, bound), rng.randint(0, 3)))
            if rng.random() < 0.3:
                s = s | IntervalSet.span(1, const(rng.randint(1, bound)), None)
            return ~s if rng.random() < 0.2 else s

        return ESet(iv(), rng.random() < 0.5, rng.random() < 0.5, iv())


_SPACES = {
    ZooSpaceId.COFINITE_NAT: CofiniteNat,
    ZooSpaceId.COCOUNTABLE: Cocountable,
    ZooSpaceId.JOHNSTONE_SCOTT: lambda: Johnstone("scott"),
    ZooSpaceId.JOHNSTONE_UPPER: lambda: Johnstone("upper"),
    ZooSpaceId.EX334_SCOTT: lambda: Ex334("scott"),
    ZooSpaceId.EX334_UPPER: lambda: Ex334("upper"),
}


def space_id(name: str | ZooSpaceId) -> ZooSpaceId:
    if isinstance(name, ZooSpaceId):
        return name
    for sid in ZooSpaceId:
        if name in (sid.value, sid.name):
            return sid
    raise WrongGrammar(f"unknown zoo space {name!r}")


def zoo(name: str | ZooSpaceId) -> ZooSpace:
    return _SPACES[space_id(name)]()


def is_scott_open_symbolic(name: str | ZooSpaceId, e) -> bool:
    sp = zoo(name)
    if sp.id not in (ZooSpaceId.JOHNSTONE_SCOTT, ZooSpaceId.EX334_SCOTT):
        raise WrongGrammar("Scott-openness is decided for the Johnstone and a/b/ω Scott spaces")
    if isinstance(e, str):
        e = sp.expr(e)
    return sp.is_scott_open_symbolic(e)
