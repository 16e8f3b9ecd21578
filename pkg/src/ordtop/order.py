"""Finite posets and the order-theoretic predicates the rest of the package builds on.

Elements are opaque string ids kept in lexicographic order.  Subsets are passed
in and out of the public functions as ``frozenset`` of ids; internally every
subset is an ``int`` bitmask over that canonical order (bit ``i`` is
``elements[i]``).
"""
from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import CycleDetected, DuplicateId, EmptySet, SizeLimit, UnknownElement

DEFAULT_SIZE_LIMIT = 12


def size_limit() -> int:
    """Carrier bound for operations that enumerate all subsets."""
    raw = os.environ.get("ORDTOP_SIZE_LIMIT")
    return int(raw) if raw else DEFAULT_SIZE_LIMIT


def guard(n: int, what: str = "carrier", limit: int | None = None) -> None:
    limit = size_limit() if limit is None else limit
    if n > limit:
        raise SizeLimit(f"{what} of size {n} exceeds the limit {limit}")


class Witnessed(NamedTuple):
    """A boolean verdict with an optional witness explaining a failure."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def set_key(s: Iterable[str]) -> tuple:
    """Canonical set order: by size, then by the sorted element tuple."""
    t = tuple(sorted(s))
    return (len(t), t)


def sort_family(family: Iterable[Iterable[str]]) -> tuple[frozenset, ...]:
    return tuple(sorted({frozenset(s) for s in family}, key=set_key))


@dataclass(frozen=True)
class FinitePoset:
    elements: tuple[str, ...]
    leq: frozenset[tuple[str, str]]

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[i]`` is the mask of ``↑elements[i]``."""
        masks = [0] * self.n
        for x, y in self.leq:
            masks[self.index[x]] |= 1 << self.index[y]
        return tuple(masks)

    @cached_property
    def down(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for x, y in self.leq:
            masks[self.index[y]] |= 1 << self.index[x]
        return tuple(masks)

    def mask(self, ids: Iterable[str]) -> int:
        m = 0
        for e in ids:
            try:
                m |= 1 << self.index[e]
            except KeyError:
                raise UnknownElement(e) from None
        return m

    def ids(self, mask: int) -> frozenset[str]:
        return frozenset(self.elements[i] for i in bits(mask))

    def le(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def up_mask(self, m: int) -> int:
        out = 0
        for i in bits(m):
            out |= self.up[i]
        return out

    def down_mask(self, m: int) -> int:
        out = 0
        for i in bits(m):
            out |= self.down[i]
        return out

    def is_upper(self, m: int) -> bool:
        return self.up_mask(m) == m

    def is_lower(self, m: int) -> bool:
        return self.down_mask(m) == m

    def upper_bounds(self, m: int) -> int:
        out = self.full
        for i in bits(m):
            out &= self.up[i]
        return out

    def lower_bounds(self, m: int) -> int:
        out = self.full
        for i in bits(m):
            out &= self.down[i]
        return out

    def least(self, m: int) -> int | None:
        """Index of the least element of the subset ``m``, if it has one."""
        for i in bits(m):
            if self.up[i] & m == m:
                return i
        return None

    def greatest(self, m: int) -> int | None:
        for i in bits(m):
            if self.down[i] & m == m:
                return i
        return None

    def sup(self, m: int) -> int | None:
        return self.least(self.upper_bounds(m))

    def inf(self, m: int) -> int | None:
        return self.greatest(self.lower_bounds(m))

    def max_mask(self, m: int) -> int:
        return sum(1 << i for i in bits(m) if self.up[i] & m == 1 << i)

    def min_mask(self, m: int) -> int:
        return sum(1 << i for i in bits(m) if self.down[i] & m == 1 << i)

    def directed_mask(self, m: int) -> bool:
        if not m:
            return False
        idx = list(bits(m))
        for a, b in itertools.combinations(idx, 2):
            if not self.up[a] & self.up[b] & m:
                return False
        return True

    def filtered_mask(self, m: int) -> bool:
        if not m:
            return False
        idx = list(bits(m))
        for a, b in itertools.combinations(idx, 2):
            if not self.down[a] & self.down[b] & m:
                return False
        return True

    def subsets(self, within: int | None = None) -> Iterator[int]:
        """All submasks of ``within`` (default: the whole carrier), guarded."""
        within = self.full if within is None else within
        guard(popcount(within))
        sub = within
        while True:
            yield sub
            if sub == 0:
                return
            sub = (sub - 1) & within

    def directed_subsets(self) -> list[int]:
        return sorted(m for m in self.subsets() if self.directed_mask(m))

    def upper_sets(self) -> list[int]:
        """All upper sets (including the empty set), in increasing mask order."""
        return _closed_family(self.n, self.up)

    def lower_sets(self) -> list[int]:
        return _closed_family(self.n, self.down)

    def __repr__(self) -> str:
        covers = sorted((x, y) for x, y in self.leq if x != y and not any(
            (x, z) in self.leq and (z, y) in self.leq for z in self.elements if z not in (x, y)))
        return f"FinitePoset({list(self.elements)}, covers={covers})"


def _closed_family(n: int, gen: tuple[int, ...]) -> list[int]:
    # Every set closed under gen is a union of generator masks; no 2^n sweep needed.
    family = {0}
    for g in gen:
        family |= {f | g for f in family}
    return sorted(family)


def build_poset(elements: Iterable[str], base_pairs: Iterable[tuple[str, str]] = ()) -> FinitePoset:
    """Reflexive-transitive closure of ``base_pairs`` over ``elements``."""
    elements = list(elements)
    if len(set(elements)) != len(elements):
        dup = next(e for e in elements if elements.count(e) > 1)
        raise DuplicateId(dup)
    elements = sorted(elements)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    up = [1 << i for i in range(n)]
    for x, y in base_pairs:
        for e in (x, y):
            if e not in index:
                raise UnknownElement(e)
        up[index[x]] |= 1 << index[y]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            closed = up[i]
            for j in bits(up[i]):
                closed |= up[j]
            if closed != up[i]:
                up[i] = closed
                changed = True
    for i in range(n):
        for j in bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleDetected(f"{elements[i]} <= {elements[j]} <= {elements[i]}")
    leq = frozenset((elements[i], elements[j]) for i in range(n) for j in bits(up[i]))
    return FinitePoset(tuple(elements), leq)


def poset_from_masks(elements: tuple[str, ...], up: Iterable[int]) -> FinitePoset:
    """Trusted constructor for already closed ``up`` masks (used by enumerators)."""
    leq = frozenset((elements[i], elements[j]) for i, m in enumerate(up) for j in bits(m))
    return FinitePoset(tuple(elements), leq)


@dataclass(frozen=True)
class MonotoneMap:
    source: FinitePoset
    target: FinitePoset
    assignment: dict

    def __post_init__(self):
        for x in self.source.elements:
            if self.assignment.get(x) not in self.target.index:
                raise UnknownElement(f"map undefined or out of range at {x}")

    def is_monotone(self) -> bool:
        return all((self.assignment[x], self.assignment[y]) in self.target.leq
                   for x, y in self.source.leq)


# ---------------------------------------------------------------- predicates

def down_set(P: FinitePoset, S: Iterable[str]) -> frozenset[str]:
    return P.ids(P.down_mask(P.mask(S)))


def up_set(P: FinitePoset, S: Iterable[str]) -> frozenset[str]:
    return P.ids(P.up_mask(P.mask(S)))


def is_directed(P: FinitePoset, D: Iterable[str]) -> bool:
    return P.directed_mask(P.mask(D))


def maximal_in(P: FinitePoset, S: Iterable[str]) -> frozenset[str]:
    m = P.mask(S)
    if not m:
        raise EmptySet("max of the empty set")
    return P.ids(P.max_mask(m))


def minimal_in(P: FinitePoset, S: Iterable[str]) -> frozenset[str]:
    m = P.mask(S)
    if not m:
        raise EmptySet("min of the empty set")
    return P.ids(P.min_mask(m))


def has_property_D(P: FinitePoset) -> Witnessed:
    """Every lower-bounded nonempty S has ``⋂_{x∈S} ↓x`` directed.

    On failure the witness is the offending subset S.
    """
    for S in sorted(P.subsets(), key=lambda m: (popcount(m), m)):
        if not S:
            continue
        common = P.lower_bounds(S)
        if common and not P.directed_mask(common):
            return Witnessed(False, P.ids(S))
    return Witnessed(True)


def lattice_flags(P: FinitePoset) -> dict[str, bool]:
    idx = range(P.n)
    pairs = list(itertools.combinations(idx, 2))
    sup_semi = all(P.sup(1 << a | 1 << b) is not None for a, b in pairs)
    inf_semi = all(P.inf(1 << a | 1 << b) is not None for a, b in pairs)
    bounded_complete = all(P.sup(S) is not None for S in P.subsets() if P.upper_bounds(S))
    # Finite posets are dcpos, so complete semilattice = every nonempty subset has an inf.
    complete_semi = P.n == 0 or all(P.inf(S) is not None for S in P.subsets() if S)
    assert complete_semi == bounded_complete, P
    return {
        "sup_semilattice": sup_semi,
        "inf_semilattice": inf_semi,
        "bounded_complete": bounded_complete,
        "complete_semilattice": complete_semi,
    }


# ---------------------------------------------------------------- generators

def chain(n: int) -> FinitePoset:
    els = [str(i) for i in range(n)]
    return build_poset(els, zip(els, els[1:]))


def antichain(n: int, names: str = "abcdefghijkl") -> FinitePoset:
    return build_poset(names[:n])


def named(name: str) -> FinitePoset:
    """Small posets used throughout the docs and tests."""
    if name == "one":
        return build_poset(["*"])
    if name == "C2":
        return chain(2)
    if name == "A2":
        return antichain(2)
    if name == "P3":
        return build_poset(["bot", "a", "b"], [("bot", "a"), ("bot", "b")])
    if name == "M4":
        return build_poset("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    raise KeyError(name)


def enumerate_posets(n: int) -> Iterator[FinitePoset]:
    """All labeled posets on ``{"0", ..., str(n-1)}``, deterministic order."""
    if n > 5:
        raise SizeLimit("labeled poset enumeration is limited to n <= 5")
    els = tuple(str(i) for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k in bits(choice):
            i, j = pairs[k]
            up[i] |= 1 << j
        if _is_partial_order(up):
            yield poset_from_masks(els, up)


def _is_partial_order(up: list[int]) -> bool:
    for i, m in enumerate(up):
        for j in bits(m):
            if up[j] & ~m:
                return False
            if j != i and up[j] >> i & 1:
                return False
    return True


def canonical_form(P: FinitePoset) -> tuple:
    """Isomorphism-invariant key: lexicographically least relation matrix."""
    n = P.n
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(int(P.le(perm[i], perm[j])) for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return (n, best)


def enumerate_unlabeled(max_n: int) -> list[FinitePoset]:
    seen = {}
    for n in range(1, max_n + 1):
        for P in enumerate_posets(n):
            seen.setdefault(canonical_form(P), P)
    return list(seen.values())


def random_poset(n: int, rng: random.Random, density: float | None = None) -> FinitePoset:
    """Random transitively closed DAG.

    A random permutation fixes a topological order; each forward pair becomes
    a base edge with probability ``density`` (drawn uniformly when omitted),
    and the order is the reflexive-transitive closure.
    """
    els = [str(i) for i in range(n)]
    order = els[:]
    rng.shuffle(order)
    p = rng.random() if density is None else density
    edges = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_poset(els, edges)
