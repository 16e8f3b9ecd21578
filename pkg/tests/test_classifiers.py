import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import posets_upto, space, spaces_upto
from oracles import (
    Ord,
    Top,
    d_space,
    fs,
    generated_topology,
    sober,
    strong_d,
    strongly_scott_open as sso_bf,
    subsets,
    well_filtered,
)
from ordtop.classifiers import (
    CATALOG,
    PASS,
    classify,
    d_space_conditions,
    is_filter_in,
    is_strong_d,
    is_well_filtered,
    psi,
    scott_opens,
    sigma_s,
    sober_characterization_check,
    strongly_scott_open,
    theorem_suite,
    topologies,
    upper_opens,
    wf_characterization_check,
)
from ordtop.errors import NotUpperSet
from ordtop.order import named, random_poset
from ordtop.space import alexandroff, discrete, make_space

SIERPINSKI = make_space(["0", "1"], [[], ["1"], ["0", "1"]])
ALL_BUT_T1 = {"d_space", "strong_d", "well_filtered", "sober", "coherent",
              "locally_compact", "locally_hypercompact"}


def _fam(X, masks):
    return {X.ids(m) for m in masks}


def test_classify_examples():
    for X, t1 in ((space("P3"), False), (discrete("ab"), True), (SIERPINSKI, False)):
        flags = classify(X).flags()
        assert flags["t1"] is t1
        assert all(flags[k] for k in ALL_BUT_T1)


def test_classify_brute_force():
    for X in spaces_upto(3):
        T = Top.of(X)
        rep = classify(X)
        assert rep.t1 == T.is_t1()
        assert rep.d_space == d_space(T)
        assert rep.strong_d == strong_d(T)
        assert rep.well_filtered == well_filtered(T)
        assert rep.sober == sober(T)
        assert rep.implications_hold()


def test_d_space_conditions_agree_exhaustive():
    for X in spaces_upto(4):
        assert len({c.ok for c in d_space_conditions(X)}) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(5, 5), st.integers(0, 2**32 - 1))
def test_d_space_conditions_agree_random(n, seed):
    X = alexandroff(random_poset(n, random.Random(seed)))
    assert len({c.ok for c in d_space_conditions(X)}) == 1
    assert classify(X).implications_hold()


def test_wf_characterization_examples():
    X = space("P3")
    results = wf_characterization_check(X)
    assert results and all(r.status == PASS for r in results)
    assert classify(X).well_filtered
    # A = ↓a, K = {a, b}: ↓(A ∩ K) = ↓a is closed
    A, K = X.mask({"bot", "a"}), X.mask({"a", "b"})
    assert X.ids(X.order.down_mask(A & K)) == {"bot", "a"}
    assert X.is_closed(X.order.down_mask(A & K))
    assert all(r.status == PASS for r in wf_characterization_check(space("one")))


def test_sober_characterization_examples():
    X = space("P3")
    ks = X.k_masks()
    got = _fam(X, psi(X, X.mask({"bot", "a"}), ks))
    assert got == {fs({"a"}), fs({"a", "b"}), fs({"bot", "a", "b"})}
    assert is_filter_in(psi(X, X.mask({"bot", "a"}), ks), ks)
    D = discrete("ab")
    assert _fam(D, psi(D, D.mask({"a"}), D.k_masks())) == {fs("a"), fs("ab")}
    one = space("one")
    assert psi(one, one.full, one.k_masks()) == one.k_masks()
    for Y in (X, D, one):
        assert all(r.status == PASS for r in sober_characterization_check(Y))


def test_strongly_scott_open_examples():
    M4 = named("M4")
    assert strongly_scott_open(M4, {"c", "d"})
    assert strongly_scott_open(M4, set())
    P3 = named("P3")
    assert set(sigma_s(P3)) == set(Ord.of(P3).upper_sets())
    assert len(sigma_s(P3)) == 5
    with pytest.raises(NotUpperSet):
        strongly_scott_open(P3, {"bot"})


def test_strongly_scott_open_brute_force_and_meets():
    for P in posets_upto(4):
        o = Ord.of(P)
        sso = [U for U in o.upper_sets() if strongly_scott_open(P, U)]
        assert sso == [U for U in o.upper_sets() if sso_bf(o, U)]
        for U in sso:
            for V in sso:
                assert strongly_scott_open(P, U & V)


def test_order_topologies_brute_force():
    for P in posets_upto(3):
        o = Ord.of(P)
        tops = topologies(P)
        nu = generated_topology(o.carrier, [o.carrier - o.down(F) for F in subsets(o.carrier)])
        omega = generated_topology(o.carrier, [o.carrier - o.up({x}) for x in o.carrier])
        sigma = set(o.scott_opens())
        lawson = generated_topology(o.carrier, sigma | omega)
        assert {fs(P.ids(u)) for u in upper_opens(P)} == nu
        assert _fam(P, scott_opens(P)) == sigma
        assert _fam(tops["upper"], tops["upper"].opens) == nu
        assert _fam(tops["scott"], tops["scott"].opens) == sigma
        assert _fam(tops["lower"], tops["lower"].opens) == omega
        assert _fam(tops["lawson"], tops["lawson"].opens) == lawson
        assert _fam(tops["alexandroff"], tops["alexandroff"].opens) == set(o.upper_sets())
        assert nu <= set(sigma_s(P)) <= sigma


def test_topology_examples():
    C2 = topologies(named("C2"))
    assert len(C2["lawson"].opens) == 4
    assert _fam(C2["lawson"], C2["lawson"].opens) == {fs(), fs("0"), fs("1"), fs("01")}
    P3 = topologies(named("P3"))
    assert _fam(P3["scott"], P3["scott"].opens) == set(Ord.of(named("P3")).upper_sets())
    one = topologies(named("one"))
    for X in one.values():
        assert _fam(X, X.opens) == {fs(), fs("*")}


def test_strong_d_and_wf_readings_agree():
    for X in spaces_upto(4):
        assert is_strong_d(X).ok
        assert is_well_filtered(X).ok


def test_catalog_examples():
    P3 = named("P3")
    res = {r.check_id: r for r in theorem_suite(P3)}
    assert set(res) == set(CATALOG)
    assert res["L1.3"].status == PASS
    X = alexandroff(P3)
    assert X.ids(X.order.max_mask(X.full)) == {"a", "b"}
    assert {r.check_id: r for r in theorem_suite(named("M4"))}["R3.27"].status == PASS


def test_catalog_exhaustive_upto_3():
    for P in posets_upto(3):
        bad = [r for r in theorem_suite(P) if r.status != PASS]
        assert not bad, (P, bad)
