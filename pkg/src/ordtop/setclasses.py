"""The set-class tower S_c ⊆ D_c ⊆ RD ⊆ WD ⊆ Irr_c on finite spaces.

RD is computed twice: by brute force over every subfamily of K(X) that passes
the pairwise filtered test, and by the least-member reduction (a finite
filtered family has a least member, and meeting that member is the same as
meeting them all).  The two must agree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    NotClosed,
    NotCompactSaturated,
    NotContinuous,
    NotFiltered,
    NotIrreducibleClosed,
    NotRudinSet,
    SizeLimit,
)
from .order import bits, enumerate_unlabeled, set_key
from .space import (
    FiniteSpace,
    all_maps,
    alexandroff,
    image_mask,
    is_continuous,
    is_locally_compact,
    is_locally_hypercompact,
)

DEFAULT_FAMILY_LIMIT = 16


def sc_masks(X: FiniteSpace) -> list[int]:
    return sorted(X.point_closures())


def dc_masks(X: FiniteSpace) -> list[int]:
    return sorted({X.closure_mask(d) for d in X.order.directed_subsets()})


def sc(X: FiniteSpace) -> tuple[frozenset, ...]:
    return X.family(sc_masks(X))


def dc(X: FiniteSpace) -> tuple[frozenset, ...]:
    found = dc_masks(X)
    # every finite directed set has a top element
    assert found == sc_masks(X)
    return X.family(found)


# ------------------------------------------------------------------ filtered families

def is_filtered(members: Iterable[int]) -> bool:
    """Pairwise definition: each two members contain a third member in their meet."""
    ms = list(members)
    if not ms:
        return False
    for k1, k2 in itertools.combinations_with_replacement(ms, 2):
        meet = k1 & k2
        if not any(k3 & ~meet == 0 for k3 in ms):
            return False
    return True


def minimal_meeting(X: FiniteSpace, members: Iterable[int], within: int | None = None) -> list[int]:
    """``m(K)``: minimal closed sets meeting every member (optionally inside ``within``)."""
    ms = list(members)
    cands = [c for c in X.closed
             if (within is None or c & ~within == 0) and all(c & k for k in ms)]
    return [c for c in cands if not any(d != c and d & ~c == 0 for d in cands)]


class _KTable:
    """Index tables over K(X) shared by the brute-force searches."""

    def __init__(self, X: FiniteSpace, family_size_limit: int = DEFAULT_FAMILY_LIMIT):
        self.X = X
        self.ks = X.k_masks()
        if len(self.ks) > family_size_limit:
            raise SizeLimit(f"|K(X)| = {len(self.ks)} exceeds {family_size_limit}")
        r = len(self.ks)
        self.below = [[sum(1 << c for c in range(r) if self.ks[c] & ~(self.ks[a] & self.ks[b]) == 0)
                       for b in range(r)] for a in range(r)]
        self.meets = {c: sum(1 << i for i, k in enumerate(self.ks) if k & c) for c in X.closed}
        self.inside = {u: sum(1 << i for i, k in enumerate(self.ks) if k & ~u == 0) for u in X.opens}

    def filtered(self, fam: int) -> bool:
        idx = list(bits(fam))
        below = self.below
        for p, a in enumerate(idx):
            row = below[a]
            for b in idx[p:]:
                if not row[b] & fam:
                    return False
        return True

    def filtered_families(self):
        for fam in range(1, 1 << len(self.ks)):
            if self.filtered(fam):
                yield fam

    def meet(self, fam: int) -> int:
        out = self.X.full
        for i in bits(fam):
            out &= self.ks[i]
        return out

    def minimal_meeting(self, fam: int) -> list[int]:
        cands = [c for c, m in self.meets.items() if fam & ~m == 0]
        return [c for c in cands if not any(d != c and d & ~c == 0 for d in cands)]


def rd_masks(X: FiniteSpace, family_size_limit: int = DEFAULT_FAMILY_LIMIT) -> list[int]:
    table = _KTable(X, family_size_limit)
    found = set()
    for fam in table.filtered_families():
        found.update(table.minimal_meeting(fam))
    return sorted(found)


def rd_reduced_masks(X: FiniteSpace) -> list[int]:
    found = set()
    for k in X.k_masks():
        found.update(minimal_meeting(X, [k]))
    return sorted(found)


def rd(X: FiniteSpace, family_size_limit: int = DEFAULT_FAMILY_LIMIT) -> tuple[frozenset, ...]:
    return X.family(rd_masks(X, family_size_limit))


def rd_reduced(X: FiniteSpace) -> tuple[frozenset, ...]:
    return X.family(rd_reduced_masks(X))


def rudin_witness_check(X: FiniteSpace, A: Iterable[str], K: Iterable[Iterable[str]]) -> bool:
    """True iff closed ``A`` is a minimal closed set meeting every member of ``K``."""
    a = X.mask(A)
    if not X.is_closed(a):
        raise NotClosed(sorted(X.ids(a)))
    members = [X.mask(k) for k in K]
    for k in members:
        if not k or k not in X.opens:
            raise NotCompactSaturated(sorted(X.ids(k)))
    if not is_filtered(members):
        raise NotFiltered("family is not filtered")
    if not all(a & k for k in members):
        return False
    return not any(c != a and c & ~a == 0 and all(c & k for k in members) for c in X.closed)


# ------------------------------------------------------------------ well-filtered determined sets

@dataclass(frozen=True)
class WdWitness:
    """A continuous map whose image closure of ``A`` is not a point closure."""

    target: FiniteSpace
    mapping: dict
    image_closure: frozenset


def target_pool(max_target_size: int) -> list[FiniteSpace]:
    return [alexandroff(P) for P in enumerate_unlabeled(max_target_size)]


def wd_refute(X: FiniteSpace, A: Iterable[str], max_target_size: int = 3) -> WdWitness | None:
    """Search continuous maps into finite (hence well-filtered) spaces.

    The identity map is tried first; then every map into each space of the
    target pool.  Returns ``None`` when no map refutes membership in WD.
    """
    a = X.mask(A)
    if not a:
        raise NotIrreducibleClosed("A must be nonempty")
    if max_target_size > 4:
        raise SizeLimit("target pool limited to size 4")
    identity = [(X, {x: x for x in X.carrier})]
    pooled = ((Y, f) for Y in target_pool(max_target_size) for f in all_maps(X, Y))
    for Y, f in itertools.chain(identity, pooled):
        if not is_continuous(f, X, Y):
            continue
        img = Y.closure_mask(image_mask(f, X, Y, a))
        if img not in Y.point_closures():
            return WdWitness(Y, f, Y.ids(img))
    return None


def wd_finite(X: FiniteSpace, max_target_size: int = 3) -> tuple[frozenset, ...]:
    """WD(X) for finite X, which is well-filtered: the point closures.

    Cross-check: every nonempty closed set outside S_c is refuted by a map.
    """
    points = set(sc_masks(X))
    for c in X.closed:
        if c and c not in points:
            assert wd_refute(X, X.ids(c), max_target_size) is not None, X.ids(c)
    return X.family(points)


def push_forward_class_check(f: Mapping[str, str], X: FiniteSpace, Y: FiniteSpace,
                             A: Iterable[str]) -> dict[str, bool]:
    if not is_continuous(f, X, Y):
        raise NotContinuous("map is not continuous")
    a = X.mask(A)
    if not X.is_closed(a):
        raise NotClosed(sorted(X.ids(a)))
    img = Y.closure_mask(image_mask(f, X, Y, a))
    rd_x, rd_y = set(rd_masks(X)), set(rd_masks(Y))
    wd_x, wd_y = set(X.mask(s) for s in wd_finite(X)), set(Y.mask(s) for s in wd_finite(Y))
    return {
        "in_rd_source": a in rd_x,
        "in_rd_target": img in rd_y,
        "rd_preserved": a not in rd_x or img in rd_y,
        "in_wd_source": a in wd_x,
        "in_wd_target": img in wd_y,
        "wd_preserved": a not in wd_x or img in wd_y,
    }


def _require_irr_closed(X: FiniteSpace, a: int) -> None:
    if not (a and X.is_closed(a) and X.irreducible_mask(a)):
        raise NotIrreducibleClosed(sorted(X.ids(a)))


def extract_directed_dense(X: FiniteSpace, A: Iterable[str]) -> frozenset[str]:
    """Smallest directed ``D ⊆ A`` with ``cl D = A`` (ties: canonical set order)."""
    a = X.mask(A)
    _require_irr_closed(X, a)
    assert is_locally_hypercompact(X)
    subsets = sorted(X.order.subsets(a), key=lambda m: set_key(X.ids(m)))
    for d in subsets:
        if X.order.directed_mask(d) and X.closure_mask(d) == a:
            return X.ids(d)
    raise AssertionError("irreducible closed set without a dense directed subset")


def build_lc_rudin_family(X: FiniteSpace, A: Iterable[str]) -> tuple[frozenset, ...]:
    """``K_A = {K ∈ K(X) : A ∩ int K ≠ ∅}``, with its three defining properties asserted."""
    a = X.mask(A)
    _require_irr_closed(X, a)
    assert is_locally_compact(X)
    fam = [k for k in X.k_masks() if a & X.interior_mask(k)]
    assert fam, "K_A is empty"
    assert is_filtered(fam), "K_A is not filtered"
    assert minimal_meeting(X, fam) and a in minimal_meeting(X, fam), "A is not in m(K_A)"
    return X.family(fam)


def singleton_image_check(f: Mapping[str, str], X: FiniteSpace, A: Iterable[str],
                          Y: FiniteSpace) -> str | None:
    """The point ``y_A`` with ``cl f(A) = cl{y_A}``; ``None`` if there is none."""
    a = X.mask(A)
    if a not in rd_masks(X):
        raise NotRudinSet(sorted(X.ids(a)))
    if not is_continuous(f, X, Y):
        raise NotContinuous("map is not continuous")
    img = Y.closure_mask(image_mask(f, X, Y, a))
    hits = [y for y in range(Y.n) if Y.order.down[y] == img]
    assert len(hits) <= 1  # T0
    return Y.carrier[hits[0]] if hits else None


def tower(X: FiniteSpace) -> dict[str, list[int]]:
    """All five classes as mask lists; used by the suites."""
    return {
        "sc": sc_masks(X),
        "dc": dc_masks(X),
        "rd": rd_masks(X),
        "wd": sorted(X.mask(s) for s in wd_finite(X)),
        "irr_c": sorted(X.irr_c_masks()),
    }


def tower_holds(t: dict[str, list[int]]) -> bool:
    chain = [set(t[k]) for k in ("sc", "dc", "rd", "wd", "irr_c")]
    return all(a <= b for a, b in zip(chain, chain[1:]))


__all__ = [
    "sc", "dc", "rd", "rd_reduced", "rudin_witness_check", "wd_refute", "wd_finite",
    "push_forward_class_check", "extract_directed_dense", "build_lc_rudin_family",
    "singleton_image_check", "is_filtered", "minimal_meeting",
]
