import random

import pytest

from conftest import posets_upto, space
from instances import (
    confirm_minimal_irr_closed,
    confirm_poset_rudin,
    filtered_upper_families,
    rudin_instances,
    smyth_irreducible,
)
from oracles import Ord, Top, nonempty_families, smyth_top
from ordtop.errors import MissesMember, NotClosed, NotCompactSaturated, NotFiltered, NotIrreducibleFamily
from ordtop.order import named
from ordtop.rudin import is_irreducible_smyth, minimal_irr_closed, poset_rudin
from ordtop.space import alexandroff

UP_BOT, UP_A, UP_B = {"bot", "a", "b"}, {"a"}, {"b"}


def test_smyth_irreducibility_examples():
    X = space("P3")
    assert is_irreducible_smyth(X, [UP_BOT, UP_A])
    assert not is_irreducible_smyth(X, [UP_A, UP_B])
    assert is_irreducible_smyth(X, [UP_B])
    with pytest.raises(NotCompactSaturated):
        is_irreducible_smyth(X, [{"bot"}])


def test_minimal_irr_closed_examples():
    X = space("P3")
    assert minimal_irr_closed(X, [UP_BOT, UP_A], X.carrier) == {"bot", "a"}
    assert minimal_irr_closed(space("A2"), [{"a"}], {"a"}) == {"a"}
    with pytest.raises(NotIrreducibleFamily):
        minimal_irr_closed(X, [UP_A, UP_B], X.carrier)
    with pytest.raises(NotClosed):
        minimal_irr_closed(X, [UP_A], {"a"})
    with pytest.raises(MissesMember):
        minimal_irr_closed(X, [UP_A], {"bot", "b"})


def test_poset_rudin_examples():
    assert poset_rudin(named("P3"), [UP_BOT, UP_A], {"bot", "a"}) == {"a"}
    assert poset_rudin(named("C2"), [{"0", "1"}], {"0"}) == {"0"}
    assert poset_rudin(named("one"), [{"*"}], {"*"}) == {"*"}
    with pytest.raises(NotFiltered):
        poset_rudin(named("P3"), [UP_A, UP_B], {"bot", "a", "b"})


def test_smyth_irreducibility_matches_plain_sets():
    for P in posets_upto(3):
        X = alexandroff(P)
        T = Top.of(X)
        ks = sorted(T.k(), key=lambda s: (len(s), sorted(s)))
        S, lab = smyth_top(T)
        for fam in nonempty_families(ks, 3):
            expected = S.irreducible({lab[k] for k in fam})
            assert is_irreducible_smyth(X, fam) == smyth_irreducible(T, fam) == expected


def test_minimal_irr_closed_exhaustive_small():
    for P in posets_upto(3):
        X = alexandroff(P)
        T = Top.of(X)
        ks = sorted(T.k(), key=lambda s: (len(s), sorted(s)))
        for fam in nonempty_families(ks, 2):
            if not smyth_irreducible(T, fam):
                continue
            for C in T.closed:
                if all(C & k for k in fam):
                    A = minimal_irr_closed(X, fam, C)
                    assert confirm_minimal_irr_closed(T, fam, C, A) == []
                    assert A in T.point_closures()


def test_minimal_irr_closed_random():
    for P, X, T, fam, C in rudin_instances(120, seed=11):
        A = minimal_irr_closed(X, fam, C)
        assert confirm_minimal_irr_closed(T, fam, C, A) == [], (P, fam, C)


def test_poset_rudin_exhaustive():
    for P in posets_upto(4):
        o = Ord.of(P)
        lowers = [c for c in o.lower_sets() if c]
        for fam in filtered_upper_families(o, 2):
            for C in lowers:
                if all(C & k for k in fam):
                    D = poset_rudin(P, fam, C)
                    assert confirm_poset_rudin(o, fam, C, D) == []


def test_random_instances_are_reproducible():
    a = rudin_instances(5, seed=3)
    b = rudin_instances(5, seed=3)
    assert [(x[0], x[3], x[4]) for x in a] == [(x[0], x[3], x[4]) for x in b]
    assert random.Random(3).random() == random.Random(3).random()
