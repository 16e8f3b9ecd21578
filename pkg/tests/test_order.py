import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import posets_upto
from oracles import Ord, subsets
from ordtop.errors import CycleDetected, DuplicateId, EmptySet, SizeLimit, UnknownElement
from ordtop.order import (
    build_poset,
    canonical_form,
    down_set,
    enumerate_posets,
    enumerate_unlabeled,
    has_property_D,
    is_directed,
    lattice_flags,
    maximal_in,
    minimal_in,
    named,
    random_poset,
    up_set,
)


def test_build_one_point():
    P = build_poset(["a"])
    assert P.leq == {("a", "a")}


def test_build_closes_reflexively():
    P = named("P3")
    assert len(P.leq) == 5
    assert ("bot", "a") in P.leq and ("a", "b") not in P.leq


def test_build_transitive_closure():
    P = build_poset("xyz", [("x", "y"), ("y", "z")])
    assert ("x", "z") in P.leq


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        build_poset(["x", "y"], [("x", "y"), ("y", "x")])


def test_duplicates_and_unknowns():
    with pytest.raises(DuplicateId):
        build_poset(["a", "a"])
    with pytest.raises(UnknownElement):
        build_poset(["a"], [("a", "z")])


def test_elements_sorted():
    assert named("P3").elements == ("a", "b", "bot")


def test_up_down_examples():
    P3, M4 = named("P3"), named("M4")
    assert down_set(P3, {"a"}) == {"bot", "a"}
    assert up_set(P3, {"bot"}) == {"bot", "a", "b"}
    assert up_set(M4, {"c"}) == {"c"}


def test_directed_examples():
    P3 = named("P3")
    assert is_directed(P3, {"bot", "a"})
    assert not is_directed(P3, {"a", "b"})
    assert not is_directed(P3, set())


def test_extremal_examples():
    assert maximal_in(named("P3"), {"bot", "a", "b"}) == {"a", "b"}
    assert maximal_in(named("C2"), {"0", "1"}) == {"1"}
    assert minimal_in(named("M4"), set("abcd")) == {"a", "b"}
    with pytest.raises(EmptySet):
        maximal_in(named("C2"), set())


def test_property_D_examples():
    assert has_property_D(named("P3")).ok
    res = has_property_D(named("M4"))
    assert not res.ok and set(res.witness) == {"c", "d"}
    for n in range(1, 6):
        assert has_property_D(build_poset([str(i) for i in range(n)],
                                          [(str(i), str(i + 1)) for i in range(n - 1)])).ok


def test_lattice_flag_examples():
    assert all(lattice_flags(named("C2")).values())
    p3 = lattice_flags(named("P3"))
    assert p3["bounded_complete"] and not p3["sup_semilattice"]
    assert not lattice_flags(named("M4"))["bounded_complete"]


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 19), (4, 219), (5, 4231)])
def test_labeled_counts(n, count):
    assert sum(1 for _ in enumerate_posets(n)) == count


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 16)])
def test_unlabeled_counts(n, count):
    assert sum(1 for P in enumerate_unlabeled(n) if len(P.elements) == n) == count


def test_enumeration_guard():
    with pytest.raises(SizeLimit):
        next(enumerate_posets(6))


def test_canonical_form_is_isomorphism_invariant():
    P = build_poset("abc", [("a", "b")])
    Q = build_poset("abc", [("c", "a")])
    R = build_poset("abc", [("a", "b"), ("a", "c")])
    assert canonical_form(P) == canonical_form(Q) != canonical_form(R)


def _bf_property_D(o: Ord):
    for S in subsets(o.carrier):
        if not S:
            continue
        meet = o.carrier
        for x in S:
            meet &= o.down({x})
        if meet and not all(any(o.le(a, c) and o.le(b, c) for c in meet) for a in meet for b in meet):
            return False
    return True


def test_orders_and_derived_predicates_brute_force():
    for P in posets_upto(4):
        o = Ord.of(P)
        els = list(o.carrier)
        for x, y, z in itertools.product(els, repeat=3):
            if o.le(x, y) and o.le(y, z):
                assert o.le(x, z)
            if x != y:
                assert not (o.le(x, y) and o.le(y, x))
        assert has_property_D(P).ok == _bf_property_D(o)
        if lattice_flags(P)["bounded_complete"]:
            assert has_property_D(P).ok
        for S in subsets(els):
            assert down_set(P, S) == o.down(S)
            assert up_set(P, S) == o.up(S)
            assert is_directed(P, S) == o.is_directed(S)
            if S:
                assert maximal_in(P, S) == {x for x in S if not any(o.le(x, y) and x != y for y in S)}
                assert minimal_in(P, S)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1), st.data())
def test_up_down_idempotent_and_monotone(n, seed, data):
    P = random_poset(n, random.Random(seed))
    S = set(data.draw(st.sets(st.sampled_from(P.elements))))
    T = S | set(data.draw(st.sets(st.sampled_from(P.elements))))
    for op in (down_set, up_set):
        assert op(P, op(P, S)) == op(P, S)
        assert op(P, S) <= op(P, T)


def test_random_poset_is_reproducible():
    a = random_poset(6, random.Random(3))
    b = random_poset(6, random.Random(3))
    assert a == b
