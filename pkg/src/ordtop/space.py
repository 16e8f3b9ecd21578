"""Finite T0 spaces: topology validation, closure calculus, irreducible and
compact saturated sets.

A ``FiniteSpace`` keeps its open-set family explicitly even though every finite
topology is the Alexandroff topology of its specialization order; construction
checks that collapse law, so later code may use the order as a shortcut while
tests compare against the open-set definitions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import EmptySet, InvalidTopology, SizeLimit, UnknownElement
from .order import (
    FinitePoset,
    _closed_family,
    bits,
    guard,
    poset_from_masks,
    popcount,
    Witnessed,
    sort_family,
)


@dataclass(frozen=True)
class FiniteSpace:
    carrier: tuple[str, ...]
    opens: frozenset[int]

    def __post_init__(self):
        if list(self.carrier) != sorted(set(self.carrier)):
            raise InvalidTopology("carrier must be sorted and duplicate free")
        full = (1 << len(self.carrier)) - 1
        if 0 not in self.opens or full not in self.opens:
            raise InvalidTopology("opens must contain the empty set and the carrier")
        if any(u & ~full for u in self.opens):
            raise InvalidTopology("open set outside the carrier")
        ops = sorted(self.opens)
        for i, u in enumerate(ops):
            for v in ops[i + 1:]:
                if u | v not in self.opens or u & v not in self.opens:
                    raise InvalidTopology("opens not closed under union and intersection")
        nb = self.neighborhoods
        if len(set(nb)) != len(nb):
            raise InvalidTopology("space is not T0")
        if set(_closed_family(len(self.carrier), nb)) != set(self.opens):
            raise InvalidTopology("opens differ from the upper sets of the specialization order")

    # -- conversions
    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.carrier)}

    @property
    def n(self) -> int:
        return len(self.carrier)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def mask(self, ids: Iterable[str]) -> int:
        m = 0
        for e in ids:
            try:
                m |= 1 << self.index[e]
            except KeyError:
                raise UnknownElement(e) from None
        return m

    def ids(self, mask: int) -> frozenset[str]:
        return frozenset(self.carrier[i] for i in bits(mask))

    # -- order structure
    @cached_property
    def neighborhoods(self) -> tuple[int, ...]:
        """Least open neighbourhood of each point (= its saturation)."""
        out = []
        for i in range(self.n):
            m = self.full
            for u in self.opens:
                if u >> i & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    @cached_property
    def order(self) -> FinitePoset:
        return poset_from_masks(self.carrier, self.neighborhoods)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        return tuple(sorted(self.full & ~u for u in self.opens))

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closed)

    def is_open(self, m: int) -> bool:
        return m in self.opens

    def is_closed(self, m: int) -> bool:
        return self.full & ~m in self.opens

    def closure_mask(self, m: int) -> int:
        return self.order.down_mask(m)

    def saturate_mask(self, m: int) -> int:
        return self.order.up_mask(m)

    def interior_mask(self, m: int) -> int:
        return sum(1 << i for i in range(self.n) if self.neighborhoods[i] & ~m == 0)

    def closure_by_definition(self, m: int) -> int:
        out = self.full
        for c in self.closed:
            if c & m == m:
                out &= c
        return out

    def irreducible_mask(self, m: int) -> bool:
        """Definitional irreducibility, reduced to one closed set at a time.

        ``A ⊆ F1 ∪ F2`` with ``A ⊄ F1`` forces ``F2 ⊇ cl(A \\ F1)``, so a
        reducing pair exists iff some closed ``F1`` with ``A ⊄ F1`` has
        ``A ⊄ cl(A \\ F1)``.
        """
        if not m:
            raise EmptySet("irreducibility of the empty set")
        for f1 in self.closed:
            rest = m & ~f1
            if rest and m & ~self.closure_mask(rest):
                return False
        return True

    def irreducible_by_pairs(self, m: int) -> bool:
        if not m:
            raise EmptySet("irreducibility of the empty set")
        for f1 in self.closed:
            for f2 in self.closed:
                if m & ~(f1 | f2) == 0 and m & ~f1 and m & ~f2:
                    return False
        return True

    def point_closures(self) -> tuple[int, ...]:
        return tuple(sorted({self.order.down[i] for i in range(self.n)}))

    def irr_c_masks(self) -> list[int]:
        return [c for c in self.closed if c and self.irreducible_mask(c)]

    def k_masks(self) -> list[int]:
        """Nonempty compact saturated sets: on a finite space, the nonempty upper sets."""
        return [u for u in sorted(self.opens) if u]

    def subspace(self, m: int) -> FiniteSpace:
        return subspace(self, self.ids(m))

    def family(self, masks: Iterable[int]) -> tuple[frozenset, ...]:
        return sort_family(self.ids(m) for m in masks)

    def __repr__(self) -> str:
        return f"FiniteSpace({list(self.carrier)}, opens={len(self.opens)})"


def make_space(carrier: Iterable[str], opens: Iterable[Iterable[str]]) -> FiniteSpace:
    carrier = tuple(sorted(carrier))
    index = {e: i for i, e in enumerate(carrier)}
    masks = set()
    for u in opens:
        m = 0
        for e in u:
            if e not in index:
                raise UnknownElement(e)
            m |= 1 << index[e]
        masks.add(m)
    return FiniteSpace(carrier, frozenset(masks))


def alexandroff(P: FinitePoset) -> FiniteSpace:
    guard(P.n)
    return FiniteSpace(P.elements, frozenset(P.upper_sets()))


def specialization(X: FiniteSpace) -> FinitePoset:
    return X.order


def closure(X: FiniteSpace, S: Iterable[str]) -> frozenset[str]:
    return X.ids(X.closure_mask(X.mask(S)))


def interior(X: FiniteSpace, S: Iterable[str]) -> frozenset[str]:
    return X.ids(X.interior_mask(X.mask(S)))


def saturate(X: FiniteSpace, S: Iterable[str]) -> frozenset[str]:
    return X.ids(X.saturate_mask(X.mask(S)))


def is_irreducible(X: FiniteSpace, A: Iterable[str]) -> bool:
    return X.irreducible_mask(X.mask(A))


def irr_c(X: FiniteSpace) -> tuple[frozenset, ...]:
    found = X.irr_c_masks()
    assert sorted(found) == sorted(X.point_closures()), "finite T0 space failed sobriety"
    return X.family(found)


def compact_saturated(X: FiniteSpace) -> tuple[frozenset, ...]:
    ks = X.k_masks()
    for k in ks:
        assert is_compact(X, X.ids(k))
    return X.family(ks)


def finite_subcover(X: FiniteSpace, S: Iterable[str], cover: Iterable[Iterable[str]]):
    """Greedy subcover of ``S`` from ``cover``; ``None`` when ``cover`` does not cover ``S``."""
    target = X.mask(S)
    members = [X.mask(u) for u in cover]
    for u in members:
        if u not in X.opens:
            raise InvalidTopology("cover member is not open")
    chosen, left = [], target
    while left:
        best = max(members, key=lambda u: popcount(u & left), default=0)
        if not best & left:
            return None
        chosen.append(X.ids(best))
        left &= ~best
    return chosen


def is_compact(X: FiniteSpace, S: Iterable[str]) -> bool:
    """Every open cover of ``S`` has a finite subcover.

    A cover is a subfamily of ``X.opens``, which is finite, so the cover itself
    is the finite subcover.  The check still validates ``S`` and confirms the
    full open family reduces to a finite subcover.
    """
    m = X.mask(S)
    return finite_subcover(X, X.ids(m), [X.ids(u) for u in X.opens]) is not None


def is_continuous(f: Mapping[str, str], X: FiniteSpace, Y: FiniteSpace) -> bool:
    for x in X.carrier:
        if f.get(x) not in Y.index:
            raise UnknownElement(f"map undefined or out of range at {x}")
    for v in Y.opens:
        pre = sum(1 << X.index[x] for x in X.carrier if v >> Y.index[f[x]] & 1)
        if pre not in X.opens:
            return False
    return True


def is_monotone(f: Mapping[str, str], X: FiniteSpace, Y: FiniteSpace) -> bool:
    return all(Y.order.le(Y.index[f[X.carrier[i]]], Y.index[f[X.carrier[j]]])
               for i in range(X.n) for j in bits(X.order.up[i]))


def image_mask(f: Mapping[str, str], X: FiniteSpace, Y: FiniteSpace, m: int) -> int:
    return Y.mask(f[X.carrier[i]] for i in bits(m))


def subspace(X: FiniteSpace, S: Iterable[str]) -> FiniteSpace:
    keep = list(bits(X.mask(S)))
    carrier = tuple(X.carrier[i] for i in keep)
    opens = set()
    for u in X.opens:
        opens.add(sum(1 << k for k, i in enumerate(keep) if u >> i & 1))
    return FiniteSpace(carrier, frozenset(opens))


def discrete(carrier: Iterable[str]) -> FiniteSpace:
    carrier = tuple(sorted(carrier))
    return FiniteSpace(carrier, frozenset(range(1 << len(carrier))))


def all_maps(X: FiniteSpace, Y: FiniteSpace):
    """Every total map ``X → Y`` as a dict, in lexicographic order of images."""
    for images in itertools.product(Y.carrier, repeat=X.n):
        yield dict(zip(X.carrier, images))


def is_locally_compact(X: FiniteSpace) -> Witnessed:
    """Each ``x ∈ U`` open has some ``K ∈ K(X)`` with ``x ∈ int K ⊆ K ⊆ U``."""
    ks = X.k_masks()
    for u in sorted(X.opens):
        for x in bits(u):
            if not any(k & ~u == 0 and X.interior_mask(k) >> x & 1 for k in ks):
                return Witnessed(False, (X.carrier[x], X.ids(u)))
    return Witnessed(True)


def is_locally_hypercompact(X: FiniteSpace) -> Witnessed:
    """Each ``x ∈ U`` open has a finite ``F`` with ``x ∈ int ↑F ⊆ ↑F ⊆ U``."""
    guard(X.n)
    for u in sorted(X.opens):
        for x in bits(u):
            found = False
            for f in X.order.subsets(u):
                upf = X.saturate_mask(f)
                if upf & ~u == 0 and X.interior_mask(upf) >> x & 1:
                    found = True
                    break
            if not found:
                return Witnessed(False, (X.carrier[x], X.ids(u)))
    return Witnessed(True)


def is_sober(X: FiniteSpace) -> Witnessed:
    """Every irreducible closed set is the closure of a point (unique by T0)."""
    points = set(X.point_closures())
    for c in X.irr_c_masks():
        if c not in points:
            return Witnessed(False, X.ids(c))
    return Witnessed(True)


def is_embedding(f: Mapping[str, str], X: FiniteSpace, Y: FiniteSpace) -> bool:
    """Injective, continuous, and open onto its image."""
    if len(set(f[x] for x in X.carrier)) != X.n or not is_continuous(f, X, Y):
        return False
    image = image_mask(f, X, Y, X.full)
    traces = {v & image for v in Y.opens}
    return all(image_mask(f, X, Y, u) in traces for u in X.opens)


def is_homeomorphism(f: Mapping[str, str], X: FiniteSpace, Y: FiniteSpace) -> bool:
    return is_embedding(f, X, Y) and image_mask(f, X, Y, X.full) == Y.full


def generate_topology(n: int, subbase, cap: int = 200_000) -> frozenset[int]:
    """Topology on ``n`` points generated by ``subbase`` (finite meets, then unions)."""
    full = (1 << n) - 1
    meets = {full}
    for s in subbase:
        meets |= {m & s for m in meets}
        if len(meets) > cap:
            raise SizeLimit("generated topology exceeds the family cap")
    opens = {0}
    for b in sorted(meets):
        opens |= {u | b for u in opens}
        if len(opens) > cap:
            raise SizeLimit("generated topology exceeds the family cap")
    return frozenset(opens)
