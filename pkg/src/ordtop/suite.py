"""Exhaustive and randomized runs of every finite check, with replayable failures."""
from __future__ import annotations

import itertools
import random
from collections import Counter
from typing import Iterable

from .classifiers import (
    classify,
    d_space_conditions,
    sober_characterization_check,
    theorem_suite,
    wf_characterization_check,
)
from .errors import SizeLimit
from .order import FinitePoset, canonical_form, enumerate_posets, random_poset
from .powerspace import intersection_closure_check
from .setclasses import dc_masks, rd_reduced_masks, sc_masks, tower, wd_finite
from .space import alexandroff

LABELED_COUNTS = {1: 1, 2: 3, 3: 19, 4: 219}
MAX_SUITE_SIZE = 6


def jsonable(x):
    """Frozensets and sets become sorted lists, tuples become lists, recursively."""
    if isinstance(x, (frozenset, set)):
        items = [jsonable(v) for v in x]
        return sorted(items, key=lambda v: (len(v), v) if isinstance(v, list) else (0, [str(v)]))
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


def poset_descriptor(P: FinitePoset) -> dict:
    pairs = [[P.elements[i], P.elements[j]] for i in range(P.n) for j in range(P.n)
             if i != j and P.le(i, j)]
    return {"kind": "finite-poset", "elements": list(P.elements), "order": pairs}


def instance_checks(P: FinitePoset, remark_18: bool) -> tuple[list[tuple[str, bool, object]], list[str]]:
    """Every finite check on one poset: (check id, passed, witness) plus notes."""
    X = alexandroff(P)
    out: list[tuple[str, bool, object]] = []
    notes: list[str] = []

    conds = [c.ok for c in d_space_conditions(X)]
    out.append(("d-space-agreement", len(set(conds)) == 1, None if len(set(conds)) == 1 else conds))
    report = classify(X)
    out.append(("implications", report.implications_hold(), None if report.implications_hold() else report.flags()))

    try:
        t = tower(X)
        rd_reduced = rd_reduced_masks(X)
        same = t["rd"] == rd_reduced
        out.append(("rd-double-oracle", same, None if same else [X.family(t["rd"]), X.family(rd_reduced)]))
    except SizeLimit:
        notes.append(f"|K(X)| = {len(X.k_masks())}: rd by least-member reduction only")
        t = {"sc": sc_masks(X), "dc": dc_masks(X), "rd": rd_reduced_masks(X),
             "wd": sorted(X.mask(s) for s in wd_finite(X)), "irr_c": sorted(X.irr_c_masks())}
    chain = [t[k] for k in ("sc", "dc", "rd", "wd", "irr_c")]
    collapse = all(c == chain[0] for c in chain)
    out.append(("tower-collapse", collapse, None if collapse else {k: X.family(v) for k, v in t.items()}))

    for r in wf_characterization_check(X) + sober_characterization_check(X) + theorem_suite(P):
        out.append((r.check_id, r.status == "PASS", r.witness if r.status != "PASS" else None))

    if remark_18:
        ks = X.k_masks()
        bad = None
        for size in range(1, len(ks) + 1):
            for fam in itertools.combinations(ks, size):
                if not intersection_closure_check(X, [X.ids(k) for k in fam]):
                    bad = [X.ids(k) for k in fam]
                    break
            if bad:
                break
        out.append(("intersection-closure", bad is None, bad))
    return out, notes


def _run(posets: Iterable[FinitePoset], remark_18_max: int, tally: Counter, failures: list,
         notes: list, label: str) -> int:
    count = 0
    for idx, P in enumerate(posets):
        count += 1
        results, inst_notes = instance_checks(P, P.n <= remark_18_max)
        for cid, ok, witness in results:
            tally[(cid, ok)] += 1
            if not ok:
                failures.append({"instance": f"{label}[{idx}]", "check": cid,
                                 "space": poset_descriptor(P), "witness": jsonable(witness)})
        for note in inst_notes:
            notes.append(f"{label}[{idx}]: {note}")
    return count


def run_suite(max_size: int, seed: int, samples: int, dedup: bool = False) -> dict:
    if not 1 <= max_size <= MAX_SUITE_SIZE:
        raise SizeLimit(f"suite size must be between 1 and {MAX_SUITE_SIZE}")
    if samples < 0:
        raise SizeLimit("sample count must be nonnegative")
    tally: Counter = Counter()
    failures: list = []
    notes: list = []
    counts = {}
    exhaustive = 0
    for n in range(1, min(max_size, 4) + 1):
        posets = list(enumerate_posets(n))
        if len(posets) != LABELED_COUNTS[n]:
            raise AssertionError(f"enumerator produced {len(posets)} labeled posets of size {n}")
        counts[str(n)] = len(posets)
        if dedup:
            seen, kept = set(), []
            for P in posets:
                key = canonical_form(P)
                if key not in seen:
                    seen.add(key)
                    kept.append(P)
            posets = kept
        exhaustive += _run(posets, 3, tally, failures, notes, f"size{n}")

    randomized = 0
    if max_size >= 5 and samples:
        rng = random.Random(seed)
        sizes = list(range(5, max_size + 1))
        drawn = [random_poset(rng.choice(sizes), rng) for _ in range(samples)]
        randomized = _run(drawn, 0, tally, failures, notes, "random")

    checks = {}
    for (cid, ok), k in sorted(tally.items()):
        entry = checks.setdefault(cid, {"pass": 0, "fail": 0})
        entry["pass" if ok else "fail"] += k
    return {
        "labeled_counts": counts,
        "exhaustive_instances": exhaustive,
        "random_instances": randomized,
        "dedup": dedup,
        "checks": checks,
        "failures": failures,
        "notes": notes,
        "status": "FAIL" if failures else "PASS",
    }


def replay(P: FinitePoset) -> dict:
    """All checks on one poset, for feeding a serialized failure back in."""
    tally: Counter = Counter()
    failures: list = []
    notes: list = []
    _run([P], 3, tally, failures, notes, "replay")
    return {"failures": failures, "notes": notes, "status": "FAIL" if failures else "PASS",
            "checks": {cid: ok for (cid, ok) in sorted(tally)}}
