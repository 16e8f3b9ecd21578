"""Exact set algebras and certificate checking for four infinite spaces."""
from .affine import Affine, parse_affine
from .claims import (
    Claim,
    ClaimKind,
    Verdict,
    canonical_witness,
    load_claim,
    shipped_claim,
    shipped_claims,
    strong_d_transfer,
    verify_claim,
)
from .curated import curated_results
from .family import FamilySpec, NotDecidable, filtered_family_intersection, prefix_union
from .intervals import IntervalSet
from .spaces import ZooSpaceId, is_scott_open_symbolic, zoo

__all__ = [
    "Affine", "parse_affine", "Claim", "ClaimKind", "Verdict", "canonical_witness", "load_claim",
    "shipped_claim", "shipped_claims", "strong_d_transfer", "verify_claim", "curated_results",
    "FamilySpec", "NotDecidable", "filtered_family_intersection", "prefix_union", "IntervalSet",
    "ZooSpaceId", "is_scott_open_symbolic", "zoo",
]
