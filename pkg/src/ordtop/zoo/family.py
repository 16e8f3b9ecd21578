"""Families ``n ↦ member(n)`` given by a template whose thresholds are affine in ``n``.

The analysis splits the index range at a bound ``N0`` past every crossing of
the thresholds involved.  Below ``N0`` members are evaluated one by one; from
``N0`` on a single symbolic value (the *eventual form*) describes every member
exactly, so statements about all ``n ≥ N0`` reduce to eventual comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import NonMonotoneFamily, UnrepresentableSet
from .affine import N, Affine, stable_from
from .grammar import format_ast, mentions_parameter
from .intervals import IntervalSet


class NotDecidable(Exception):
    """A sub-check falls outside what the symbolic procedures decide."""


@dataclass(frozen=True)
class FamilySpec:
    member_text: str
    start: int = 0
    sample_bound: int = 20
    space: object = field(default=None, compare=False, repr=False)

    @cached_property
    def template(self):
        return self.space.parse(self.member_text)

    @property
    def text(self) -> str:
        return format_ast(self.template)

    def member(self, n: int):
        if n < self.start:
            raise ValueError(f"index {n} below the family start {self.start}")
        return self.space.fold(self.template, n)

    @cached_property
    def pool(self) -> set[Affine]:
        seen: list = []
        self.space.fold(self.template, N, seen)
        out: set[Affine] = set()
        for s in seen:
            out |= s.affines()
        return out

    @cached_property
    def stable(self) -> int:
        """``N0``: the eventual form is exact for every ``n ≥ N0``."""
        pool = self.pool | {a.shifted() for a in self.pool}
        return max(self.start, stable_from(pool))

    @cached_property
    def eventual(self):
        form = self.space.fold(self.template, N)
        for n in range(self.stable, self.stable + 4):
            assert form.at(n) == self.member(n), f"eventual form disagrees with member({n})"
        return form

    @property
    def parametric(self) -> bool:
        return mentions_parameter(self.template)

    def stable_with(self, *others) -> int:
        """``N0`` widened so comparisons against ``others`` are exact from there on."""
        pool = set(self.pool)
        for o in others:
            pool |= o.affines()
        pool |= {a.shifted() for a in pool}
        return max(self.stable, stable_from(pool))

    def stages(self, upto: int | None = None):
        """Members evaluated one by one below ``upto`` (default ``N0``)."""
        end = self.stable if upto is None else upto
        return ((n, self.member(n)) for n in range(self.start, end))

    def check_decreasing(self) -> None:
        """member(n+1) ⊆ member(n) for every n ≥ start, or NonMonotoneFamily."""
        for n in range(self.start, self.stable + 1):
            if not self.member(n + 1) <= self.member(n):
                raise NonMonotoneFamily(f"member({n + 1}) is not inside member({n})")
        if not self.eventual.shifted() <= self.eventual:
            raise NonMonotoneFamily("the eventual form is not decreasing")

    def limit(self):
        """⋂ of all members (a decreasing family)."""
        self.check_decreasing()
        return self.eventual.limit()

    def holds_for_all(self, pred, *others) -> tuple[bool, int | None]:
        """``pred`` on every member; returns (ok, first failing index or None).

        ``pred`` must be exact on eventual forms as well as on concrete sets;
        ``others`` lists the fixed sets it compares members against.
        """
        end = self.stable_with(*others)
        for n, m in self.stages(end):
            if not pred(m):
                return False, n
        if not pred(self.eventual):
            return False, end
        return True, None


def filtered_family_intersection(space, fam: FamilySpec):
    """Exact ⋂ of a decreasing family; thresholds that diverge drop out."""
    return fam.limit()


def _run_union(lo: Affine, hi: Affine | None, first: int) -> tuple[Affine, Affine | None]:
    """⋃_{first ≤ n ≤ N} [lo(n), hi(n)) as a single run with ends affine in N."""
    if lo.a and hi is not None and not (lo.shifted() <= hi):
        raise NotDecidable("runs of consecutive members leave gaps")
    start = Affine(0, lo(first))
    return start, hi


def prefix_union(fam: FamilySpec):
    """``n ↦ ⋃_{start ≤ m ≤ n} member(m)`` as a symbolic value valid for ``n ≥ N0``.

    Supported when each component of the eventual form is a union of runs
    whose consecutive members overlap or abut.
    """
    if not fam.parametric:
        return fam.eventual
    try:
        comps = fam.eventual.components()
    except UnrepresentableSet as exc:
        raise NotDecidable(str(exc)) from None
    head = fam.space.empty()
    for _, m in fam.stages():
        head = head | m
    out = {}
    for key, iv in comps.items():
        acc = IntervalSet.empty(iv.base)
        for lo, hi in iv.intervals():
            if hi is not None and hi.a < lo.a:
                raise NotDecidable("a run shrinks as n grows")
            s, e = _run_union(lo, hi, fam.stable)
            acc = acc | IntervalSet.span(iv.base, s, e)
        out[key] = acc
    tail = fam.eventual.with_components(out)
    return head | tail
