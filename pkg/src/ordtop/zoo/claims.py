"""Certificates for properties of the zoo spaces and their checker.

A claim names a space, a kind and a witness payload written in the atom
grammar.  ``verify_claim`` replays every sub-check symbolically and returns a
``Verdict``: Verified only if every sub-check passes, Refuted with the first
failing sub-check, NotDecidable with the first sub-check outside the decided
fragment.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..errors import NotCoarser, OrdTopError, UnrepresentableSet, WrongGrammar
from .family import FamilySpec, NotDecidable, prefix_union
from .grammar import format_ast, format_point, parse_point
from .spaces import ZooSpaceId, space_id, zoo


class ClaimKind(enum.Enum):
    NOT_WELL_FILTERED = "NOT_WELL_FILTERED"
    NOT_STRONG_D = "NOT_STRONG_D"
    NOT_COHERENT = "NOT_COHERENT"
    NOT_SOBER = "NOT_SOBER"
    RUDIN_MEMBER = "RUDIN_MEMBER"
    IRR_FRAGMENT = "IRR_FRAGMENT"


VERIFIED, REFUTED, NOT_DECIDABLE = "Verified", "Refuted", "NotDecidable"


class UnverifiedClaim(OrdTopError):
    pass


@dataclass(frozen=True)
class Claim:
    space: ZooSpaceId
    kind: ClaimKind
    witness: dict
    note: str = ""

    def to_json(self) -> dict:
        out = {"space": self.space.value, "kind": self.kind.value, "witness": self.witness}
        if self.note:
            out["note"] = self.note
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "Claim":
        try:
            sid = space_id(data["space"])
            kind = ClaimKind(data["kind"])
            witness = data["witness"]
        except (KeyError, ValueError, TypeError) as exc:
            raise WrongGrammar(f"malformed claim: {exc}") from None
        if not isinstance(witness, dict):
            raise WrongGrammar("claim witness must be an object")
        return cls(sid, kind, witness, data.get("note", ""))

    @classmethod
    def loads(cls, text: str) -> "Claim":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise WrongGrammar(f"claim is not JSON: {exc}") from None
        if not isinstance(data, dict):
            raise WrongGrammar("claim must be a JSON object")
        return cls.from_json(data)


def load_claim(path: str | Path) -> Claim:
    return Claim.loads(Path(path).read_text(encoding="utf-8"))


def shipped_claims() -> dict[str, Claim]:
    root = resources.files("ordtop") / "claims"
    out = {}
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            out[entry.name[:-5]] = Claim.loads(entry.read_text(encoding="utf-8"))
    return out


def shipped_claim(name: str) -> Claim:
    claims = shipped_claims()
    if name not in claims:
        raise WrongGrammar(f"no shipped claim named {name!r}")
    return claims[name]


@dataclass
class Verdict:
    status: str
    reason: str = ""
    checks: list = field(default_factory=list)   # (name, "pass" | "fail" | "undecided", detail)

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def to_json(self) -> dict:
        return {"status": self.status, "reason": self.reason,
                "checks": [list(c) for c in self.checks]}


class _Refuted(Exception):
    pass


class _Checks:
    def __init__(self):
        self.log: list = []

    def require(self, name: str, ok: bool, detail: str = "") -> None:
        self.log.append((name, "pass" if ok else "fail", detail))
        if not ok:
            raise _Refuted(f"{name}: {detail}" if detail else name)


# ------------------------------------------------------------------ payload helpers

def _expr(sp, payload: dict, key: str):
    text = payload.get(key)
    if not isinstance(text, str):
        raise WrongGrammar(f"witness field {key!r} must be an expression string")
    return sp.expr(text)


def _family(sp, payload) -> FamilySpec:
    if not isinstance(payload, dict) or not isinstance(payload.get("member"), str):
        raise WrongGrammar("a family needs a 'member' template")
    start = payload.get("start", sp.base)
    bound = payload.get("sample_bound", 20)
    if not isinstance(start, int) or start < sp.base or not isinstance(bound, int):
        raise WrongGrammar("family start must be an index of the space")
    fam = FamilySpec(payload["member"], start, bound, sp)
    _ = fam.template
    return fam


def _all_members(c: _Checks, fam: FamilySpec, name: str, pred, *others) -> None:
    ok, n = fam.holds_for_all(pred, *others)
    c.require(name, ok, "" if ok else f"fails at n = {n}")


# ------------------------------------------------------------------ per-kind checks

def _not_well_filtered(sp, w: dict, c: _Checks) -> None:
    fam = _family(sp, w.get("family"))
    u = _expr(sp, w, "open")
    c.require("open set", sp.is_open(u))
    _all_members(c, fam, "members compact saturated", sp.is_compact_saturated)
    fam.check_decreasing()
    c.require("filtered (decreasing)", True)
    lim = fam.limit()
    c.require("intersection inside the open set", lim <= u, f"⋂ = {sp.format(lim)}")
    _all_members(c, fam, "no member inside the open set", lambda m: not m <= u, u)


def _point_family(sp, seq: dict, x_text: str) -> tuple[FamilySpec, FamilySpec]:
    if not isinstance(seq, dict) or not isinstance(seq.get("point"), str):
        raise WrongGrammar("a sequence needs a 'point' template")
    start = seq.get("start", sp.base)
    bound = seq.get("sample_bound", 20)
    if not isinstance(start, int) or start < sp.base:
        raise WrongGrammar("sequence start must be an index of the space")
    ups = FamilySpec(f"UP({seq['point']})", start, bound, sp)
    stages = FamilySpec(f"UP({seq['point']}) & UP({x_text})", start, bound, sp)
    _ = ups.template, stages.template
    return ups, stages


def _not_strong_d(sp, w: dict, c: _Checks) -> None:
    x = w.get("point")
    if not isinstance(x, str):
        raise WrongGrammar("witness field 'point' must be a point")
    sp.point(x)
    ups, stages = _point_family(sp, w.get("sequence"), x)
    u = _expr(sp, w, "open")
    c.require("open set", sp.is_open(u))
    try:
        ups.check_decreasing()
        chain = True
    except OrdTopError:
        chain = False
    c.require("sequence is a chain (hence directed)", chain)
    lim = stages.limit()
    c.require("⋂ ↑d ∩ ↑x inside the open set", lim <= u, f"⋂ = {sp.format(lim)}")
    _all_members(c, stages, "no ↑d ∩ ↑x inside the open set", lambda m: not m <= u, u)


def _not_coherent(sp, w: dict, c: _Checks) -> None:
    k1, k2 = _expr(sp, w, "k1"), _expr(sp, w, "k2")
    cover = _family(sp, w.get("cover"))
    c.require("K1 compact saturated", sp.is_compact_saturated(k1))
    c.require("K2 compact saturated", sp.is_compact_saturated(k2))
    _all_members(c, cover, "cover members open", sp.is_open)
    target = k1 & k2
    acc = prefix_union(cover)
    whole = acc.limit()
    c.require("cover covers K1 ∩ K2", target <= whole, f"K1 ∩ K2 = {sp.format(target)}")
    # every finite subfamily sits inside a prefix member(start..n)
    head = sp.empty()
    end = max(cover.stable_with(target, acc), cover.start)
    for n in range(cover.start, end):
        head = head | cover.member(n)
        c.require("no finite prefix covers", not target <= head, f"prefix up to {n} covers")
    residue = target - acc
    c.require("no finite prefix covers", not residue.is_empty(), "eventual prefixes cover")


def _t1_only(sp) -> None:
    if not sp.t1:
        raise NotDecidable(f"{sp.id.value}: this check is implemented for T1 spaces")


def _small(sp, s) -> bool:
    """Finite (co-finite space) or countable (co-countable space): the proper closed sets."""
    return s.is_finite() if sp.id is ZooSpaceId.COFINITE_NAT else s.is_countable()


def _finite_points(s) -> list[int]:
    iv = s.s if hasattr(s, "s") else s.pool
    return iv.members(iv.bounds[-1].b if iv.bounds else 0)


def _rudin_member(sp, w: dict, c: _Checks) -> None:
    _t1_only(sp)
    a = _expr(sp, w, "closed")
    fam = _family(sp, w.get("family"))
    c.require("A closed", sp.is_closed(a))
    _all_members(c, fam, "members compact saturated", sp.is_compact_saturated)
    fam.check_decreasing()
    c.require("filtered (decreasing)", True)
    _all_members(c, fam, "A meets every member", lambda m: not (a & m).is_empty(), a)
    lim = fam.limit()
    # T1: a finite closed F meets every member of a decreasing family iff F meets ⋂,
    # since F ∩ member(n) is a decreasing sequence of finite sets
    if _small(sp, a):
        single = len(_finite_points(a)) == 1
        c.require("no proper closed subset meets every member", single,
                  "" if single else "a singleton of A meets every member")
        return
    meet = a & lim
    c.require("no finite closed subset meets every member", meet.is_empty(),
              f"a point of {sp.format(meet)} gives a singleton meeting every member")
    if sp.id is ZooSpaceId.COCOUNTABLE:
        raise NotDecidable("countably infinite closed subsets are not representable")


def _irreducible_t1(sp, a) -> bool:
    # T1: proper closed sets are small; two of them cannot cover a set that is not
    # small, and a small set of two or more points splits off one point
    return not _small(sp, a) or len(_finite_points(a)) == 1


def _not_sober(sp, w: dict, c: _Checks) -> None:
    _t1_only(sp)
    a = _expr(sp, w, "closed")
    c.require("A closed", sp.is_closed(a))
    c.require("A nonempty", not a.is_empty())
    c.require("A irreducible", _irreducible_t1(sp, a))
    singleton = _small(sp, a) and len(_finite_points(a)) == 1
    c.require("A is not a point closure (points are closed)", not singleton)


def _irr_fragment(sp, w: dict, c: _Checks) -> None:
    _t1_only(sp)
    c.require("ALL irreducible", _irreducible_t1(sp, sp.all()))
    samples = w.get("samples", [])
    if not isinstance(samples, list):
        raise WrongGrammar("'samples' must be a list of expressions")
    for text in samples:
        s = sp.expr(text)
        if not sp.is_closed(s) or s.is_empty() or s == sp.all():
            raise WrongGrammar(f"sample {text!r} is not a nonempty proper closed set")
        pts = _finite_points(s)
        if len(pts) == 1:
            c.require(f"{text} irreducible", _irreducible_t1(sp, s))
            continue
        first = sp.expr(f"FIN({pts[0]})")
        rest = s - first
        split = (sp.is_closed(first) and sp.is_closed(rest) and (first | rest) == s
                 and not s <= first and not s <= rest)
        c.require(f"{text} reducible", split, f"{sp.format(first)} ∪ {sp.format(rest)}")
        c.require(f"{text} rejected as irreducible", not _irreducible_t1(sp, s))


_CHECKERS = {
    ClaimKind.NOT_WELL_FILTERED: _not_well_filtered,
    ClaimKind.NOT_STRONG_D: _not_strong_d,
    ClaimKind.NOT_COHERENT: _not_coherent,
    ClaimKind.RUDIN_MEMBER: _rudin_member,
    ClaimKind.NOT_SOBER: _not_sober,
    ClaimKind.IRR_FRAGMENT: _irr_fragment,
}


def verify_claim(claim: Claim) -> Verdict:
    sp = zoo(claim.space)
    c = _Checks()
    try:
        _CHECKERS[claim.kind](sp, claim.witness, c)
    except _Refuted as exc:
        return Verdict(REFUTED, str(exc), c.log)
    except (NotDecidable, UnrepresentableSet) as exc:
        c.log.append(("decidability", "undecided", str(exc)))
        return Verdict(NOT_DECIDABLE, str(exc), c.log)
    return Verdict(VERIFIED, "", c.log)


# ------------------------------------------------------------------ transfer along finer topologies

FINER = {
    ZooSpaceId.JOHNSTONE_UPPER: (ZooSpaceId.JOHNSTONE_SCOTT,),
    ZooSpaceId.EX334_UPPER: (ZooSpaceId.EX334_SCOTT,),
}


def strong_d_transfer(verified: Claim, finer_id) -> Claim:
    """Carry a NOT_STRONG_D witness from the upper topology to a finer order-compatible one.

    The witness speaks about ``↑d``, ``↑x`` and one open ``U``; a finer
    topology between the upper and the Alexandroff topology has the same
    order and still contains ``U``, so the same witness works there.
    """
    finer = space_id(finer_id)
    if verified.kind is not ClaimKind.NOT_STRONG_D:
        raise WrongGrammar("only NOT_STRONG_D claims transfer")
    if finer not in FINER.get(verified.space, ()):
        raise NotCoarser(f"{verified.space.value} is not known to be coarser than {finer.value}")
    coarse = zoo(verified.space)
    try:
        u_open = coarse.is_open(_expr(coarse, verified.witness, "open"))
    except UnrepresentableSet as exc:
        raise NotCoarser(f"openness of U undecided in {verified.space.value}: {exc}") from None
    if not u_open:
        raise NotCoarser(f"U is not open in {verified.space.value}")
    verdict = verify_claim(verified)
    if not verdict.verified:
        raise UnverifiedClaim(f"source claim is {verdict.status}: {verdict.reason}")
    note = (f"transferred from {verified.space.value}: U is open in the upper topology, "
            f"which is contained in every topology between it and the Alexandroff topology")
    return Claim(finer, ClaimKind.NOT_STRONG_D, dict(verified.witness), note)


def canonical_witness(claim: Claim) -> Claim:
    """The same claim with every expression and point reprinted canonically."""
    sp = zoo(claim.space)
    w = json.loads(json.dumps(claim.witness))
    for key in ("open", "closed", "k1", "k2"):
        if isinstance(w.get(key), str):
            w[key] = format_ast(sp.parse(w[key]))
    for key in ("family", "cover"):
        if isinstance(w.get(key), dict) and isinstance(w[key].get("member"), str):
            w[key]["member"] = format_ast(sp.parse(w[key]["member"]))
    if isinstance(w.get("samples"), list):
        w["samples"] = [format_ast(sp.parse(s)) for s in w["samples"]]
    if isinstance(w.get("point"), str):
        w["point"] = format_point(sp.point(w["point"]))
    seq = w.get("sequence")
    if isinstance(seq, dict) and isinstance(seq.get("point"), str):
        seq["point"] = format_point(parse_point(seq["point"], sp.point_kind))
    return Claim(claim.space, claim.kind, w, claim.note)
