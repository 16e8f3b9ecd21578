"""Affine thresholds ``a*n + b`` in one parameter, compared for large ``n``.

Comparisons are eventual: ``(a, b)`` is ordered lexicographically, which is the
order of ``a*n + b`` for every ``n`` past the crossing points.  ``stable_from``
gives an index past every crossing of a pool of thresholds.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable

from ..errors import WrongGrammar


@total_ordering
@dataclass(frozen=True)
class Affine:
    a: int
    b: int

    def __lt__(self, other: "Affine") -> bool:
        return (self.a, self.b) < (other.a, other.b)

    def __call__(self, n: int) -> int:
        return self.a * n + self.b

    def __add__(self, k: int) -> "Affine":
        return Affine(self.a, self.b + k)

    def __sub__(self, k: int) -> "Affine":
        return Affine(self.a, self.b - k)

    @property
    def constant(self) -> bool:
        return self.a == 0

    def shifted(self) -> "Affine":
        """The threshold at ``n + 1``."""
        return Affine(self.a, self.b + self.a)

    def __str__(self) -> str:
        if self.a == 0:
            return str(self.b)
        head = "n" if self.a == 1 else f"{self.a}n"
        if self.b == 0:
            return head
        return f"{head}{self.b:+d}"

    def __repr__(self) -> str:
        return f"Affine({self})"


def const(k: int) -> Affine:
    return Affine(0, k)


N = Affine(1, 0)

_AFFINE = re.compile(r"^(?:(\d*)n([+-]\d+)?|(\d+))$")


def parse_affine(text: str) -> Affine:
    m = _AFFINE.match(text.strip())
    if not m:
        raise WrongGrammar(f"not an affine term: {text!r}")
    if m.group(3) is not None:
        return const(int(m.group(3)))
    a = int(m.group(1)) if m.group(1) else 1
    if a == 0:
        raise WrongGrammar(f"zero slope written with n: {text!r}")
    return Affine(a, int(m.group(2) or 0))


def stable_from(pool: Iterable[Affine], margin: int = 3) -> int:
    """An index past which every pair in ``pool`` compares as it does eventually."""
    pool = sorted(set(pool))
    bound = 0
    for i, p in enumerate(pool):
        for q in pool[i + 1:]:
            if p.a != q.a:
                # p(n) and q(n) cross at (q.b - p.b) / (p.a - q.a)
                num, den = q.b - p.b, p.a - q.a
                bound = max(bound, num // den + 1)
    return bound + margin
