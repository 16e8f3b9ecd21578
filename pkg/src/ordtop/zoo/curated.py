"""Curated property tables for the zoo spaces.

VERIFIED rows are backed by a claim that is replayed every time the table is
built.  ASSUMED rows record facts taken from the literature without a
certificate here.  A VERIFIED row may only rest on VERIFIED rows; building
a table that breaks this rule raises.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import OrdTopError
from .claims import Claim, shipped_claim, strong_d_transfer, verify_claim
from .spaces import ZooSpaceId, space_id

VERIFIED, ASSUMED = "VERIFIED", "ASSUMED"


class CuratedTableError(OrdTopError):
    pass


@dataclass(frozen=True)
class CuratedEntry:
    key: str
    space: ZooSpaceId
    description: str
    status: str
    claim: str | None = None          # shipped claim name, or "transfer:<claim>"
    premises: tuple[str, ...] = ()
    source: str = ""

    def to_json(self) -> dict:
        return {"key": self.key, "description": self.description, "status": self.status,
                "claim": self.claim, "premises": list(self.premises), "source": self.source}


_ROWS = [
    CuratedEntry("cof-not-wf", ZooSpaceId.COFINITE_NAT, "not well-filtered", VERIFIED,
                 "cofinite-not-well-filtered"),
    CuratedEntry("cof-rd", ZooSpaceId.COFINITE_NAT, "X ∈ RD", VERIFIED, "cofinite-rudin-member"),
    CuratedEntry("cof-irr", ZooSpaceId.COFINITE_NAT, "Irr_c fragment: finite closed sets of two or more "
                 "points are reducible, X is irreducible", VERIFIED, "cofinite-irr-fragment"),
    CuratedEntry("coc-not-sober", ZooSpaceId.COCOUNTABLE, "not sober", VERIFIED, "cocountable-not-sober"),
    CuratedEntry("coc-wf", ZooSpaceId.COCOUNTABLE, "well-filtered", ASSUMED,
                 source="quantifies over all filtered families of an uncountable space"),
    CuratedEntry("j-upper-not-sd", ZooSpaceId.JOHNSTONE_UPPER, "not strong d", VERIFIED,
                 "johnstone-upper-not-strong-d"),
    CuratedEntry("j-scott-not-sd", ZooSpaceId.JOHNSTONE_SCOTT, "not strong d", VERIFIED,
                 "transfer:johnstone-upper-not-strong-d", premises=("j-upper-not-sd",)),
    CuratedEntry("j-scott-not-wf", ZooSpaceId.JOHNSTONE_SCOTT, "not well-filtered", ASSUMED,
                 source="external exercise; no witness is given"),
    CuratedEntry("e-upper-not-sd", ZooSpaceId.EX334_UPPER, "not strong d", VERIFIED,
                 "ex334-upper-not-strong-d"),
    CuratedEntry("e-scott-not-coherent", ZooSpaceId.EX334_SCOTT, "not coherent", VERIFIED,
                 "ex334-scott-not-coherent"),
    CuratedEntry("e-scott-not-sd", ZooSpaceId.EX334_SCOTT, "not strong d", VERIFIED,
                 "ex334-scott-not-strong-d"),
    CuratedEntry("e-strong-scott-not-sd", ZooSpaceId.EX334_SCOTT,
                 "strong Scott topology not strong d (upper ⊆ strong Scott ⊆ Scott)", VERIFIED,
                 "transfer:ex334-upper-not-strong-d", premises=("e-upper-not-sd",)),
    CuratedEntry("e-scott-sober", ZooSpaceId.EX334_SCOTT, "sober (continuous dcpo)", ASSUMED,
                 source="continuity of the dcpo is argued, not certified"),
]


def _claim_for(entry: CuratedEntry) -> Claim:
    name = entry.claim or ""
    if name.startswith("transfer:"):
        return strong_d_transfer(shipped_claim(name[len("transfer:"):]), entry.space)
    return shipped_claim(name)


def check_premises(rows=_ROWS) -> None:
    by_key = {r.key: r for r in rows}
    for r in rows:
        for p in r.premises:
            if p not in by_key:
                raise CuratedTableError(f"{r.key} rests on unknown row {p}")
            if r.status == VERIFIED and by_key[p].status != VERIFIED:
                raise CuratedTableError(f"VERIFIED row {r.key} rests on ASSUMED row {p}")


def curated_results(name, rows=_ROWS) -> list[CuratedEntry]:
    sid = space_id(name)
    check_premises(rows)
    out = []
    for r in rows:
        if r.space is not sid:
            continue
        if r.status == VERIFIED:
            verdict = verify_claim(_claim_for(r))
            if not verdict.verified:
                raise CuratedTableError(f"{r.key} failed to replay: {verdict.status} {verdict.reason}")
        out.append(r)
    return out
