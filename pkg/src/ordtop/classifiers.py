"""Space classifications, order topologies and the theorem-instance catalog.

Every decision here is a brute-force reading of a definition on a finite
space.  Where two characterizations are available (the five d-space
conditions, strong d-space over points versus finite sets) both are computed
and required to agree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .errors import NotUpperSet, SizeLimit
from .order import FinitePoset, Witnessed, bits, has_property_D, lattice_flags, popcount
from .setclasses import _KTable, dc_masks, rd_masks, rd_reduced_masks, sc_masks
from .space import (
    FiniteSpace,
    all_maps,
    alexandroff,
    generate_topology,
    is_compact,
    is_continuous,
    is_locally_compact,
    is_locally_hypercompact,
    is_sober,
    subspace,
)

PASS, FAIL = "PASS", "FAIL"

FLAGS = ("t1", "d_space", "strong_d", "well_filtered", "sober", "coherent",
         "locally_compact", "locally_hypercompact")


@dataclass
class PropertyReport:
    t1: bool
    d_space: bool
    strong_d: bool
    well_filtered: bool
    sober: bool
    coherent: bool
    locally_compact: bool
    locally_hypercompact: bool
    witnesses: dict = field(default_factory=dict)
    d_space_conditions: tuple = ()

    def flags(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in FLAGS}

    def implications_hold(self) -> bool:
        f = self.flags()
        arrows = [("t1", "strong_d"), ("sober", "well_filtered"), ("well_filtered", "d_space"),
                  ("strong_d", "d_space")]
        return all(f[b] or not f[a] for a, b in arrows)


@dataclass
class CheckCatalogResult:
    check_id: str
    status: str
    witness: object = None
    detail: str = ""


# ------------------------------------------------------------------ order topologies

def _space(P: FinitePoset, opens) -> FiniteSpace:
    return FiniteSpace(P.elements, frozenset(opens))


def scott_opens(P: FinitePoset) -> frozenset[int]:
    directed = P.directed_subsets()
    out = set()
    for u in P.upper_sets():
        ok = True
        for d in directed:
            s = P.sup(d)
            if s is not None and u >> s & 1 and not d & u:
                ok = False
                break
        if ok:
            out.add(u)
    return frozenset(out)


def upper_opens(P: FinitePoset) -> frozenset[int]:
    return generate_topology(P.n, [P.full & ~P.down[i] for i in range(P.n)])


def lower_opens(P: FinitePoset) -> frozenset[int]:
    return generate_topology(P.n, [P.full & ~P.up[i] for i in range(P.n)])


def strongly_scott_open_mask(P: FinitePoset, u: int) -> bool:
    if not P.is_upper(u):
        raise NotUpperSet(sorted(P.ids(u)))
    for d in P.directed_subsets():
        top = P.upper_bounds(d)
        for x in range(P.n):
            if top & P.up[x] & ~u == 0 and not any(P.up[e] & P.up[x] & ~u == 0 for e in bits(d)):
                return False
    return True


def strongly_scott_open(P: FinitePoset, U) -> bool:
    return strongly_scott_open_mask(P, P.mask(U))


def sigma_s_masks(P: FinitePoset) -> frozenset[int]:
    base = [u for u in P.upper_sets() if strongly_scott_open_mask(P, u)]
    opens = {0}
    for b in base:
        opens |= {o | b for o in opens}
    return frozenset(opens)


def sigma_s(P: FinitePoset) -> tuple[frozenset, ...]:
    nu, ss, sg = upper_opens(P), sigma_s_masks(P), scott_opens(P)
    assert nu <= ss <= sg
    assert ss == frozenset(P.upper_sets())
    return tuple(P.ids(u) for u in sorted(ss))


@lru_cache(maxsize=4096)
def topologies(P: FinitePoset) -> dict[str, FiniteSpace]:
    nu, sg, om = upper_opens(P), scott_opens(P), lower_opens(P)
    lam = generate_topology(P.n, sorted(sg | om))
    alpha = frozenset(P.upper_sets())
    assert nu == sg == alpha, "finite upper/Scott/Alexandroff topologies differ"
    assert len(lam) == 1 << P.n, "finite Lawson topology is not discrete"
    return {
        "upper": _space(P, nu),
        "scott": _space(P, sg),
        "lower": FiniteSpace(P.elements, om),
        "lawson": FiniteSpace(P.elements, lam),
        "alexandroff": _space(P, alpha),
    }


# ------------------------------------------------------------------ d-spaces

def d_space_conditions(X: FiniteSpace) -> list[Witnessed]:
    P = X.order
    directed = P.directed_subsets()
    scott = scott_opens(P)
    out = []

    dcpo_fail = next((d for d in directed if P.sup(d) is None), None)
    not_scott = next((u for u in sorted(X.opens) if u not in scott), None)
    if dcpo_fail is not None:
        out.append(Witnessed(False, ("no sup", X.ids(dcpo_fail))))
    elif not_scott is not None:
        out.append(Witnessed(False, ("open not Scott open", X.ids(not_scott))))
    else:
        out.append(Witnessed(True))

    dc, sc = dc_masks(X), sc_masks(X)
    extra = sorted(set(dc) - set(sc))
    out.append(Witnessed(not extra, X.ids(extra[0]) if extra else None))

    w3 = None
    for d in directed:
        top = P.upper_bounds(d)
        for u in sorted(X.opens):
            if top & ~u == 0 and not d & u:
                w3 = (X.ids(d), X.ids(u))
                break
        if w3:
            break
    out.append(Witnessed(w3 is None, w3))

    w4 = None
    for d in directed:
        top = P.upper_bounds(d)
        for a in X.closed:
            if d & ~a == 0 and not a & top:
                w4 = (X.ids(d), X.ids(a))
                break
        if w4:
            break
    out.append(Witnessed(w4 is None, w4))

    w5 = next((d for d in directed if not X.closure_mask(d) & P.upper_bounds(d)), None)
    out.append(Witnessed(w5 is None, X.ids(w5) if w5 is not None else None))
    return out


def is_d_space(X: FiniteSpace) -> Witnessed:
    conds = d_space_conditions(X)
    assert len({c.ok for c in conds}) == 1, f"d-space conditions disagree on {X}"
    return conds[0] if not conds[0] else Witnessed(True)


# ------------------------------------------------------------------ strong d-spaces

def _strong_d_points(X: FiniteSpace) -> Witnessed:
    P = X.order
    for d in P.directed_subsets():
        top = P.upper_bounds(d)
        for x in range(P.n):
            for u in sorted(X.opens):
                if top & P.up[x] & ~u == 0 and not any(P.up[e] & P.up[x] & ~u == 0 for e in bits(d)):
                    return Witnessed(False, (X.ids(d), X.carrier[x], X.ids(u)))
    return Witnessed(True)


def _strong_d_finite_sets(X: FiniteSpace) -> Witnessed:
    P = X.order
    for d in P.directed_subsets():
        top = P.upper_bounds(d)
        for f in P.subsets():
            if not f:
                continue
            upf = P.up_mask(f)
            for u in sorted(X.opens):
                if top & upf & ~u == 0 and not any(P.up[e] & upf & ~u == 0 for e in bits(d)):
                    return Witnessed(False, (X.ids(d), X.ids(f), X.ids(u)))
    return Witnessed(True)


def is_strong_d(X: FiniteSpace) -> Witnessed:
    a, b = _strong_d_points(X), _strong_d_finite_sets(X)
    assert a.ok == b.ok, "strong d-space readings disagree"
    return a


# ------------------------------------------------------------------ well-filtered spaces

def is_well_filtered(X: FiniteSpace) -> Witnessed:
    """``⋂K ⊆ U`` implies some ``K ⊆ U``, over every filtered subfamily of K(X).

    The brute force runs when |K(X)| is within the family guard; the
    least-member reduction always runs and the two must agree.
    """
    ks = X.k_masks()
    # least-member route: the meet of a finite filtered family is its least member
    reduced = all(k & ~u == 0 for k in ks for u in X.opens if k & ~u == 0)
    try:
        table = _KTable(X)
    except SizeLimit:
        return Witnessed(reduced)
    for fam in table.filtered_families():
        meet = table.meet(fam)
        for u in sorted(X.opens):
            if meet & ~u == 0 and not table.inside[u] & fam:
                assert not reduced
                return Witnessed(False, ([X.ids(table.ks[i]) for i in bits(fam)], X.ids(u)))
    assert reduced
    return Witnessed(True)


def is_coherent(X: FiniteSpace) -> Witnessed:
    ks = X.k_masks()
    for k1, k2 in itertools.combinations_with_replacement(ks, 2):
        if not is_compact(X, X.ids(k1 & k2)):
            return Witnessed(False, (X.ids(k1), X.ids(k2)))
    return Witnessed(True)


def is_t1(X: FiniteSpace) -> Witnessed:
    for i in range(X.n):
        if not X.is_closed(1 << i):
            return Witnessed(False, X.carrier[i])
    return Witnessed(True)


@lru_cache(maxsize=8192)
def classify(X: FiniteSpace) -> PropertyReport:
    checks = {
        "t1": is_t1(X),
        "d_space": is_d_space(X),
        "strong_d": is_strong_d(X),
        "well_filtered": is_well_filtered(X),
        "sober": is_sober(X),
        "coherent": is_coherent(X),
        "locally_compact": is_locally_compact(X),
        "locally_hypercompact": is_locally_hypercompact(X),
    }
    report = PropertyReport(
        **{k: v.ok for k, v in checks.items()},
        witnesses={k: v.witness for k, v in checks.items() if not v.ok},
        d_space_conditions=tuple(c.ok for c in d_space_conditions(X)),
    )
    assert report.implications_hold(), report
    return report


# ------------------------------------------------------------------ characterization checks

def _down_meet_closed(X: FiniteSpace, a: int, k: int) -> bool:
    return X.is_closed(X.order.down_mask(a & k))


def _pair_condition(X: FiniteSpace, sets_a, sets_k, need_max: bool):
    for a in sets_a:
        if need_max and not X.order.max_mask(a):
            return Witnessed(False, ("max empty", X.ids(a)))
        for k in sets_k:
            if not _down_meet_closed(X, a, k):
                return Witnessed(False, (X.ids(a), X.ids(k)))
    return Witnessed(True)


def _wd_masks(X: FiniteSpace) -> list[int]:
    from .setclasses import wd_finite
    return sorted(X.mask(s) for s in wd_finite(X))


def _rd_or_reduced(X: FiniteSpace) -> list[int]:
    try:
        return rd_masks(X)
    except SizeLimit:
        return rd_reduced_masks(X)


def _ups(X: FiniteSpace) -> list[int]:
    return [u for u in sorted(X.opens) if u]


def wf_characterization_check(X: FiniteSpace) -> list[CheckCatalogResult]:
    wf = classify(X).well_filtered
    d = classify(X).d_space
    wd, rd = _wd_masks(X), _rd_or_reduced(X)
    ups, ks = _ups(X), X.k_masks()
    out = []
    variants = [("T3.9(2)", wd, ups), ("T3.9(3)", rd, ups), ("T3.9(4)", wd, ks), ("T3.9(5)", rd, ks)]
    for cid, sa, sk in variants:
        res = _pair_condition(X, sa, sk, need_max=True)
        out.append(CheckCatalogResult(cid, PASS if res.ok == wf else FAIL, res.witness))
    if d:
        for cid, sa, sk in variants:
            res = _pair_condition(X, sa, sk, need_max=False)
            cid = cid.replace("T3.9", "C3.10")
            out.append(CheckCatalogResult(cid, PASS if res.ok == wf else FAIL, res.witness))
    return out


def psi(X: FiniteSpace, a: int, universe: list[int]) -> list[int]:
    return [k for k in universe if k & a]


def is_filter_in(members: list[int], universe: list[int]) -> bool:
    """Filter of the poset ``(universe, ⊆)``: nonempty, upward closed, down-directed."""
    if not members:
        return False
    mset = set(members)
    for k in members:
        if any(v not in mset for v in universe if k & ~v == 0):
            return False
    return all(any(k3 & ~(k1 & k2) == 0 for k3 in members) for k1 in members for k2 in members)


def sober_characterization_check(X: FiniteSpace) -> list[CheckCatalogResult]:
    sober = classify(X).sober
    irr = X.irr_c_masks()
    out = []
    for cid, universe in (("T3.38(2)", _ups(X)), ("T3.38(3)", X.k_masks())):
        witness = None
        for a in irr:
            fam = psi(X, a, universe)
            if not is_filter_in(fam, universe):
                witness = ("psi not a filter", X.ids(a))
                break
            res = _pair_condition(X, [a], universe, need_max=True)
            if not res.ok:
                witness = res.witness
                break
        holds = witness is None
        out.append(CheckCatalogResult(cid, PASS if holds == sober else FAIL, witness))
    return out


# ------------------------------------------------------------------ theorem catalog

class _Ctx:
    def __init__(self, P: FinitePoset):
        self.P = P
        self.X = alexandroff(P)
        self.tops = topologies(P)
        self.report = classify(self.X)


def _implication(cid: str, premise: bool, conclusion: bool, witness=None) -> CheckCatalogResult:
    ok = conclusion or not premise
    return CheckCatalogResult(cid, PASS if ok else FAIL, None if ok else witness,
                              f"premise={premise} conclusion={conclusion}")


def _l13(c: _Ctx):
    X = c.X
    bad = next((a for a in X.closed if a and not X.order.max_mask(a)), None)
    return _implication("L1.3", c.report.d_space, bad is None, X.ids(bad) if bad else None)


def _c33(c: _Ctx):
    return _implication("C3.3", c.report.well_filtered, c.report.d_space)


def retractions(X: FiniteSpace):
    """Continuous idempotent self-maps ``r`` together with their image subspaces."""
    for r in all_maps(X, X):
        if all(r[r[x]] == r[x] for x in X.carrier) and is_continuous(r, X, X):
            yield r, subspace(X, set(r.values()))


def _c34(c: _Ctx):
    for r, Y in retractions(c.X):
        if c.report.well_filtered and not classify(Y).well_filtered:
            return CheckCatalogResult("C3.4", FAIL, r)
    return CheckCatalogResult("C3.4", PASS)


def _c35(c: _Ctx):
    r = c.report
    return _implication("C3.5", r.locally_compact and r.well_filtered, r.sober)


def _l314(c: _Ctx):
    P, L = c.P, c.tops["lawson"]
    scott = c.tops["scott"]
    semiclosed = all(L.is_closed(P.up[x]) for x in range(P.n))
    if not semiclosed:
        return CheckCatalogResult("L3.14", PASS, detail="premise=False")
    for a in P.subsets():
        if is_compact(L, L.ids(a)) and not scott.is_closed(P.down_mask(a)):
            return CheckCatalogResult("L3.14", FAIL, P.ids(a))
    return CheckCatalogResult("L3.14", PASS, detail="premise=True")


def _l315(c: _Ctx):
    X, P = c.X, c.X.order
    sigma = FiniteSpace(P.elements, scott_opens(P))
    if not classify(sigma).d_space:
        return CheckCatalogResult("L3.15", PASS, detail="premise=False")
    for a in X.closed:
        if not all(sigma.is_closed(P.down_mask(P.up[x] & a)) for x in range(P.n)):
            continue
        for k in sigma.k_masks():
            lhs = P.down_mask(k & a)
            rhs = 0
            for e in bits(k):
                rhs |= P.down_mask(P.up[e] & a)
            if lhs != rhs or not sigma.is_closed(lhs):
                return CheckCatalogResult("L3.15", FAIL, (X.ids(a), X.ids(k)))
    return CheckCatalogResult("L3.15", PASS, detail="premise=True")


def _weakly_upper_semicompact(P: FinitePoset, L: FiniteSpace) -> bool:
    return all(is_compact(L, L.ids(P.up[x] & a)) for x in range(P.n) for a in L.irr_c_masks())


def _upper_semicompact(P: FinitePoset, L: FiniteSpace) -> bool:
    return all(is_compact(L, L.ids(P.up[x])) for x in range(P.n))


def _c316(c: _Ctx):
    prem = _weakly_upper_semicompact(c.P, c.tops["lawson"])
    return _implication("C3.16", prem, classify(c.tops["scott"]).well_filtered)


def _c317(c: _Ctx):
    prem = _upper_semicompact(c.P, c.tops["lawson"])
    bc = lattice_flags(c.P)["bounded_complete"]
    concl = classify(c.tops["scott"]).well_filtered
    ok = (concl or not prem) and (prem or not bc)
    return CheckCatalogResult("C3.17", PASS if ok else FAIL, detail=f"premise={prem} bounded_complete={bc}")


def _p322(c: _Ctx):
    X, r = c.X, c.report
    ss = sigma_s_masks(X.order)
    cond2 = r.d_space and X.opens <= ss
    sup_semi = lattice_flags(X.order)["sup_semilattice"]
    ok = (cond2 or not r.strong_d) and (not sup_semi or cond2 == r.strong_d)
    return CheckCatalogResult("P3.22", PASS if ok else FAIL,
                              detail=f"strong_d={r.strong_d} cond2={cond2} sup_semilattice={sup_semi}")


def _down_f_meets(P: FinitePoset) -> list[int]:
    """All masks of the form ``⋂_i ↓F_i`` for nonempty families of nonempty finite F_i."""
    gens = {P.down_mask(f) for f in P.subsets() if f}
    meets = set(gens)
    frontier = set(gens)
    while frontier:
        new = {a & g for a in frontier for g in gens} - meets
        meets |= new
        frontier = new
    return sorted(meets)


def _l324(c: _Ctx):
    P = c.P
    lhs = classify(c.tops["upper"]).strong_d
    scott = c.tops["scott"]
    dcpo = all(P.sup(d) is not None for d in P.directed_subsets())
    rhs = dcpo and all(scott.is_closed(P.down_mask(P.up[x] & m))
                       for m in _down_f_meets(P) for x in range(P.n))
    return CheckCatalogResult("L3.24", PASS if lhs == rhs else FAIL, detail=f"lhs={lhs} rhs={rhs}")


def _l325(c: _Ctx):
    P, scott = c.P, c.tops["scott"]
    lhs = classify(scott).strong_d
    dcpo = all(P.sup(d) is not None for d in P.directed_subsets())
    rhs = dcpo and all(scott.is_closed(P.down_mask(P.up[x] & a)) for a in scott.closed for x in range(P.n))
    return CheckCatalogResult("L3.25", PASS if lhs == rhs else FAIL, detail=f"lhs={lhs} rhs={rhs}")


def _c326(c: _Ctx):
    return _implication("C3.26", has_property_D(c.P).ok, classify(c.tops["upper"]).strong_d)


def distributivity_holds(P: FinitePoset, max_family: int = 3) -> Witnessed:
    """``↓⋂(↑x ∩ ↓F_i) = ⋂↓(↑x ∩ ↓F_i)`` for every family of at most ``max_family`` sets."""
    # only ↓F_i enters, so ranging over distinct nonempty lower sets is enough
    lowers = sorted({P.down_mask(f) for f in P.subsets() if f})
    down: dict[int, int] = {}

    def dn(m: int) -> int:
        if m not in down:
            down[m] = P.down_mask(m)
        return down[m]

    for size in range(1, max_family + 1):
        for fam in itertools.combinations(lowers, size):
            for x in range(P.n):
                parts = [P.up[x] & f for f in fam]
                inner = P.full
                rhs = P.full
                for p in parts:
                    inner &= p
                    rhs &= dn(p)
                if dn(inner) != rhs:
                    return Witnessed(False, ([P.ids(f) for f in fam], P.elements[x]))
    return Witnessed(True)


def _r327(c: _Ctx):
    d = has_property_D(c.P).ok
    dist = distributivity_holds(c.P)
    nu_d = classify(c.tops["upper"]).d_space
    ok = (dist.ok or not d) and (nu_d or not dist.ok)
    return CheckCatalogResult("R3.27", PASS if ok else FAIL, dist.witness,
                              f"property_D={d} distributive={dist.ok} upper_d_space={nu_d}")


def _down_up_closed(X: FiniteSpace) -> bool:
    P = X.order
    return all(X.is_closed(P.down_mask(P.up[x] & a)) for a in X.closed for x in range(P.n))


def _p328(c: _Ctx):
    r = c.report
    return _implication("P3.28", r.d_space and _down_up_closed(c.X), r.strong_d)


def _all_down_meets_closed(X: FiniteSpace) -> bool:
    return all(_down_meet_closed(X, a, k) for a in X.closed for k in X.k_masks())


def _c329(c: _Ctx):
    X, r = c.X, c.report
    prem = all(X.order.max_mask(b) for b in _wd_masks(X)) and _all_down_meets_closed(X)
    return _implication("C3.29", prem, r.well_filtered and r.strong_d)


def _c330(c: _Ctx):
    X, r = c.X, c.report
    prem = all(X.order.max_mask(b) for b in _rd_or_reduced(X)) and _all_down_meets_closed(X)
    return _implication("C3.30", prem, r.well_filtered and r.strong_d)


def _c331(c: _Ctx):
    r = c.report
    return _implication("C3.31", r.d_space and _all_down_meets_closed(c.X), r.well_filtered and r.strong_d)


def _c332(c: _Ctx):
    prem = _upper_semicompact(c.P, c.tops["lawson"])
    return _implication("C3.32", prem, classify(c.tops["scott"]).strong_d)


def _c29(c: _Ctx):
    X = c.X
    if not c.report.locally_hypercompact:
        return CheckCatalogResult("C2.9", PASS, detail="premise=False")
    classes = [sorted(X.irr_c_masks()), _wd_masks(X), _rd_or_reduced(X), dc_masks(X)]
    ok = all(cl == classes[0] for cl in classes)
    return CheckCatalogResult("C2.9", PASS if ok else FAIL, None if ok else [[sorted(X.ids(m)) for m in cl] for cl in classes])


CATALOG: dict[str, Callable[[_Ctx], CheckCatalogResult]] = {
    "L1.3": _l13,
    "C3.3": _c33,
    "C3.4": _c34,
    "C3.5": _c35,
    "L3.14": _l314,
    "L3.15": _l315,
    "C3.16": _c316,
    "C3.17": _c317,
    "P3.22": _p322,
    "L3.24": _l324,
    "L3.25": _l325,
    "C3.26": _c326,
    "R3.27": _r327,
    "P3.28": _p328,
    "C3.29": _c329,
    "C3.30": _c330,
    "C3.31": _c331,
    "C3.32": _c332,
    "C2.9": _c29,
}


def theorem_suite(P: FinitePoset) -> list[CheckCatalogResult]:
    ctx = _Ctx(P)
    return [check(ctx) for check in CATALOG.values()]
