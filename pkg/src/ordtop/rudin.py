"""Topological and poset Rudin lemmas as extraction procedures on finite data.

Where the lemma appeals to Zorn's lemma we search exhaustively over the closed
subsets of ``C``; with several minimal candidates the least one in canonical
set order is returned.
"""
from __future__ import annotations

from typing import Iterable

from .errors import MissesMember, NotClosed, NotCompactSaturated, NotFiltered, NotIrreducibleFamily
from .order import FinitePoset, set_key
from .powerspace import alexandroff_power, smyth
from .setclasses import is_filtered
from .space import FiniteSpace, alexandroff


def _family_masks(X: FiniteSpace, family: Iterable[Iterable[str]]) -> list[int]:
    masks = [X.mask(k) for k in family]
    for k in masks:
        if not k or X.saturate_mask(k) != k:
            raise NotCompactSaturated(sorted(X.ids(k)))
    return masks


# materializing P_S(X) costs about (number of its opens)^2; past this many
# points only the two cheap readings run
SMYTH_MATERIALIZE_LIMIT = 15


def _basic_open_reading(X: FiniteSpace, masks: list[int]) -> bool:
    # □U ∩ □V = □(U ∩ V): the basic opens are closed under finite meets
    hit = [u for u in X.opens if any(k & ~u == 0 for k in masks)]
    return all(any(k & ~(u & v) == 0 for k in masks) for u in hit for v in hit)


def is_irreducible_smyth(X: FiniteSpace, family: Iterable[Iterable[str]]) -> bool:
    """Irreducibility of a family in the Smyth space.

    Readings that must agree: pairwise on the basic opens □U; directedness
    under reverse inclusion (P_S(X) is finite, so Alexandroff); and, for
    small K(X), irreducibility computed in the materialized Smyth and
    Alexandroff power spaces.
    """
    masks = _family_masks(X, family)
    if not masks:
        raise NotIrreducibleFamily("empty family")
    readings = [_basic_open_reading(X, masks), is_filtered(masks)]
    if len(X.k_masks()) <= SMYTH_MATERIALIZE_LIMIT:
        S, A = smyth(X), alexandroff_power(X)
        readings.append(S.space.irreducible_mask(S.space.mask(S.point_of[k] for k in masks)))
        am = A.space.mask(A.point_of[k] for k in masks)
        readings.append(A.space.irreducible_mask(am))
        readings.append(A.space.irreducible_mask(A.space.closure_mask(am)))
    assert len(set(readings)) == 1, "irreducibility readings disagree"
    return readings[0]


def minimal_closed_meeting_all(X: FiniteSpace, members: list[int], c: int) -> list[int]:
    """Every closed ``A ⊆ C`` meeting all members and minimal with that property."""
    cands = [a for a in X.closed if a & ~c == 0 and all(a & k for k in members)]
    return [a for a in cands if not any(b != a and b & ~a == 0 for b in cands)]


def minimal_irr_closed(X: FiniteSpace, family: Iterable[Iterable[str]], C: Iterable[str]) -> frozenset[str]:
    masks = _family_masks(X, family)
    family = [X.ids(k) for k in masks]
    if not masks or not is_irreducible_smyth(X, family):
        raise NotIrreducibleFamily("family is not irreducible in the Smyth power space")
    c = X.mask(C)
    if not X.is_closed(c):
        raise NotClosed(sorted(X.ids(c)))
    for k in masks:
        if not c & k:
            raise MissesMember(sorted(X.ids(k)))
    minimal = minimal_closed_meeting_all(X, masks, c)
    irreducible = [a for a in minimal if X.irreducible_mask(a)]
    assert irreducible, "no minimal closed set is irreducible"
    best = min(irreducible, key=lambda a: set_key(X.ids(a)))
    assert best in X.point_closures()
    return X.ids(best)


def poset_rudin(P: FinitePoset, family: Iterable[Iterable[str]], C: Iterable[str]) -> frozenset[str]:
    """Directed ``D ⊆ C`` whose down-closure meets every member of a filtered family of ``↑F`` sets."""
    X = alexandroff(P)
    masks = _family_masks(X, family)
    if not is_filtered(masks):
        raise NotFiltered("family is not filtered")
    c = X.mask(C)
    if not c or not P.is_lower(c):
        raise NotClosed("C must be a nonempty lower set")
    for k in masks:
        if not c & k:
            raise MissesMember(sorted(X.ids(k)))
    a = X.mask(minimal_irr_closed(X, [X.ids(k) for k in masks], X.ids(c)))
    top = P.greatest(a)
    assert top is not None, "minimal irreducible closed set is not principal"
    return frozenset({P.elements[top]})
