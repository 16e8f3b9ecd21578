"""Smyth, Hoare and Alexandroff power spaces, sobrification and the canonical maps.

Points of a power space are subsets of the base space.  Each point is labelled
by the text ``{x,y,...}`` of its sorted members so a power space is an ordinary
``FiniteSpace`` and every other module can work on it unchanged.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .order import bits
from .space import (
    FiniteSpace,
    generate_topology,
    is_embedding,
    is_homeomorphism,
    is_sober,
    subspace,
)


class PowerKind(enum.Enum):
    SMYTH = "smyth"
    HOARE = "hoare"
    ALEX_POWER = "alexandroff-power"
    SOBRIFICATION = "sobrification"


def label(ids: Iterable[str]) -> str:
    return "{" + ",".join(sorted(ids)) + "}"


@dataclass(frozen=True)
class PowerSpace:
    base: FiniteSpace
    kind: PowerKind
    space: FiniteSpace
    members: tuple[tuple[str, int], ...]   # (label, mask in base)

    @cached_property
    def subset_of(self) -> dict[str, int]:
        return dict(self.members)

    @cached_property
    def point_of(self) -> dict[int, str]:
        return {m: lab for lab, m in self.members}

    def family_mask(self, family: Iterable[Iterable[str]]) -> int:
        """Mask in ``space`` of a family of base subsets."""
        return self.space.mask(self.point_of[self.base.mask(s)] for s in family)

    def sets(self, m: int) -> list[int]:
        return [self.subset_of[self.space.carrier[i]] for i in bits(m)]


def _build(X: FiniteSpace, kind: PowerKind, points: Iterable[int], subbase_of) -> PowerSpace:
    pts = sorted(set(points))
    labelled = sorted((label(X.ids(m)), m) for m in pts)
    carrier = tuple(lab for lab, _ in labelled)
    masks = [m for _, m in labelled]
    sub = [sum(1 << i for i, m in enumerate(masks) if subbase_of(m, u)) for u in sorted(X.opens)]
    space = FiniteSpace(carrier, generate_topology(len(carrier), sub))
    return PowerSpace(X, kind, space, tuple(labelled))


def _box(k: int, u: int) -> bool:
    return k & ~u == 0


def _diamond(c: int, u: int) -> bool:
    return bool(c & u)


@lru_cache(maxsize=512)
def smyth(X: FiniteSpace) -> PowerSpace:
    """Upper Vietoris topology on K(X); specialization is reverse inclusion."""
    ps = _build(X, PowerKind.SMYTH, X.k_masks(), _box)
    _check_reverse_inclusion(ps)
    big = alexandroff_power(X)
    sub = subspace(big.space, ps.space.carrier)
    assert sub == ps.space, "P_S(X) is not a subspace of P_S(up X)"
    return ps


@lru_cache(maxsize=512)
def alexandroff_power(X: FiniteSpace) -> PowerSpace:
    ups = [u for u in X.opens if u and X.saturate_mask(u) == u]
    ps = _build(X, PowerKind.ALEX_POWER, ups, _box)
    _check_reverse_inclusion(ps)
    return ps


@lru_cache(maxsize=512)
def hoare(X: FiniteSpace) -> PowerSpace:
    ps = _build(X, PowerKind.HOARE, [c for c in X.closed if c], _diamond)
    assert is_sober(ps.space), "Hoare power space failed the sobriety decision"
    return ps


@lru_cache(maxsize=512)
def sobrification(X: FiniteSpace) -> PowerSpace:
    return _build(X, PowerKind.SOBRIFICATION, X.irr_c_masks(), _diamond)


def _check_reverse_inclusion(ps: PowerSpace) -> None:
    sp = ps.space
    for i, a in enumerate(sp.carrier):
        for j, b in enumerate(sp.carrier):
            rev = ps.subset_of[b] & ~ps.subset_of[a] == 0
            assert sp.order.le(i, j) == rev, "Smyth order is not reverse inclusion"


def smyth_order_is_reverse_inclusion(X: FiniteSpace) -> bool:
    ps = smyth(X)
    sp = ps.space
    return all(sp.order.le(i, j) == (ps.subset_of[b] & ~ps.subset_of[a] == 0)
               for i, a in enumerate(sp.carrier) for j, b in enumerate(sp.carrier))


# ------------------------------------------------------------------ canonical maps

def eta(X: FiniteSpace) -> dict[str, str]:
    """``x ↦ cl{x}`` into the sobrification; a homeomorphism for finite X."""
    S = sobrification(X)
    f = {x: label(X.ids(X.closure_mask(1 << i))) for i, x in enumerate(X.carrier)}
    assert is_embedding(f, X, S.space)
    assert is_homeomorphism(f, X, S.space)
    return f


def xi(X: FiniteSpace) -> dict[str, str]:
    """``x ↦ ↑x`` into the Smyth power space; a topological embedding."""
    S = smyth(X)
    f = {x: label(X.ids(X.saturate_mask(1 << i))) for i, x in enumerate(X.carrier)}
    assert is_embedding(f, X, S.space)
    return f


def point_saturation_subspace(X: FiniteSpace) -> FiniteSpace:
    """Subspace of the Smyth space on the point saturations ``↑x``."""
    S = smyth(X)
    return subspace(S.space, xi(X).values())


# ------------------------------------------------------------------ theorem instances

def intersection_closure_check(X: FiniteSpace, family: Iterable[Iterable[str]]) -> bool:
    """⋂𝒜 = ⋂cl(𝒜), with the closure taken in the Smyth space and in the Alexandroff power space."""
    family = [X.mask(s) for s in family]
    if not family:
        raise ValueError("family must be nonempty")
    meet = X.full
    for k in family:
        meet &= k
    ok = True
    for ps in (smyth(X), alexandroff_power(X)):
        fm = ps.space.mask(ps.point_of[k] for k in family)
        closed = ps.space.closure_by_definition(fm)
        other = X.full
        for k in ps.sets(closed):
            other &= k
        ok = ok and other == meet
    return ok


def smyth_sober_iff_check(X: FiniteSpace) -> bool:
    return bool(is_sober(X)) == bool(is_sober(smyth(X).space))
