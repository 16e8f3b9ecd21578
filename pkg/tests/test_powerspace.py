from conftest import space, spaces_upto
from oracles import Top, fs, generated_topology, nonempty_families, sober
from ordtop.powerspace import (
    alexandroff_power,
    eta,
    hoare,
    intersection_closure_check,
    label,
    point_saturation_subspace,
    smyth,
    smyth_order_is_reverse_inclusion,
    smyth_sober_iff_check,
    sobrification,
    xi,
)
from ordtop.space import is_homeomorphism, make_space

SIERPINSKI = make_space(["0", "1"], [[], ["1"], ["0", "1"]])


def _opens(ps):
    return {ps.space.ids(u) for u in ps.space.opens}


def test_carrier_sizes():
    X = space("P3")
    assert len(smyth(X).space.carrier) == 4
    # nonempty closed sets of P3 are its nonempty down-sets: ↓bot, ↓a, ↓b, P3
    assert hoare(X).space.carrier == ("{a,b,bot}", "{a,bot}", "{b,bot}", "{bot}")


def test_smyth_of_sierpinski_is_sierpinski():
    S = smyth(SIERPINSKI)
    assert S.space.carrier == ("{0,1}", "{1}")
    f = {"0": "{0,1}", "1": "{1}"}
    assert is_homeomorphism(f, SIERPINSKI, S.space)


def test_one_point_constructions():
    X = space("one")
    for build in (smyth, hoare, alexandroff_power, sobrification):
        assert build(X).space.carrier == ("{*}",)


def test_canonical_maps():
    assert eta(space("P3")) == {"bot": "{bot}", "a": "{a,bot}", "b": "{b,bot}"}
    assert xi(space("A2")) == {"a": "{a}", "b": "{b}"}
    assert eta(space("one")) == {"*": "{*}"}


def test_vietoris_topologies_brute_force():
    for X in spaces_upto(3):
        T = Top.of(X)
        ks = T.k()
        box = [{label(k) for k in ks if k <= u} for u in T.opens]
        assert _opens(smyth(X)) == generated_topology({label(k) for k in ks}, box)
        cs = {c for c in T.closed if c}
        dia = [{label(c) for c in cs if c & u} for u in T.opens]
        assert _opens(hoare(X)) == generated_topology({label(c) for c in cs}, dia)
        irr = T.irr_c()
        dia = [{label(c) for c in irr if c & u} for u in T.opens]
        assert _opens(sobrification(X)) == generated_topology({label(c) for c in irr}, dia)


def test_structural_invariants_upto_4():
    for X in spaces_upto(4):
        assert smyth_order_is_reverse_inclusion(X)
        H = hoare(X).space
        assert sober(Top.of(H))
        assert smyth_sober_iff_check(X)
        sub = point_saturation_subspace(X)
        f = xi(X)
        assert is_homeomorphism(f, X, sub)


def test_intersection_closure_examples():
    X = space("P3")
    assert intersection_closure_check(X, [{"a"}])
    assert intersection_closure_check(X, [X.ids(k) for k in X.k_masks()])
    assert intersection_closure_check(space("one"), [{"*"}])


def _smyth_closure_meet(T, family):
    # closure in the upper Vietoris topology, then the intersection of its members
    ks = T.k()
    opens = generated_topology({label(k) for k in ks}, [{label(k) for k in ks if k <= u} for u in T.opens])
    labels = {label(k) for k in family}
    closed = set.intersection(*[set({label(k) for k in ks}) - o for o in opens
                               if not (labels & o)] or [{label(k) for k in ks}])
    by_label = {label(k): k for k in ks}
    meet = T.carrier
    for lab in closed:
        meet &= by_label[lab]
    return meet


def test_intersection_of_closure_brute_force():
    for X in spaces_upto(3):
        T = Top.of(X)
        ks = sorted(T.k(), key=lambda s: (len(s), sorted(s)))
        for fam in nonempty_families(ks):
            meet = fs.intersection(*fam)
            assert _smyth_closure_meet(T, fam) == meet
            assert intersection_closure_check(X, fam)
