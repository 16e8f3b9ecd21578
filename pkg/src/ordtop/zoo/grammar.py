"""Expression grammar shared by the zoo spaces.

::

    expr   := term (("|" | "-") term)*
    term   := factor ("&" factor)*
    factor := "(" expr ")" | "UP" "(" point ")" | NAME ["(" [arg ("," arg)*] ")"]
    arg    := "w" | affine [".." [affine]]
    affine := 5 | n | 3n | 2n+1 | n-1

Points depend on the space: ``7`` (ℕ), ``(2,n)`` or ``(3,w)`` (Johnstone),
``a_n``, ``b``, ``w0``, ``w_3`` (the a/b/ω space).  Which names are atoms,
and what they mean, is up to the space; this module only parses, prints and
folds.  Printing is canonical, so ``format_ast(parse(format_ast(t))) == format_ast(t)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import WrongGrammar
from .affine import Affine, const, parse_affine


@dataclass(frozen=True)
class Rng:
    lo: Affine
    hi: Affine | None     # inclusive; None for an open-ended range


class _Omega:
    def __repr__(self):
        return "w"


OM = _Omega()
Arg = Union[Affine, Rng, _Omega]


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple | None     # None: written without parentheses


@dataclass(frozen=True)
class Up:
    point: tuple


@dataclass(frozen=True)
class Op:
    op: str
    left: object
    right: object


_TOKEN = re.compile(r"""\s*(?:
    (?P<pt>[aw]_(?:\d*n(?:[+-]\d+)?|\d+))
  | (?P<name>[A-Z][A-Z0-9_]*)
  | (?P<aff>\d*n(?:[+-]\d+)?|\d+)
  | (?P<sym>w0|w|b|\.\.|[()|&,-])
)""", re.VERBOSE)


def tokenize(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WrongGrammar(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, point_kind: str):
        self.toks = tokenize(text)
        self.i = 0
        self.point_kind = point_kind

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else (None, None)

    def take(self, value: str | None = None, kind: str | None = None) -> str:
        k, v = self.peek()
        if (value is not None and v != value) or (kind is not None and k != kind) or k is None:
            raise WrongGrammar(f"expected {value or kind}, found {v!r}")
        self.i += 1
        return v

    def done(self):
        if self.i != len(self.toks):
            raise WrongGrammar(f"trailing input: {self.peek()[1]!r}")

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("|", "-"):
            op = self.take()
            node = Op(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] == "&":
            self.take("&")
            node = Op("&", node, self.factor())
        return node

    def factor(self):
        k, v = self.peek()
        if v == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if v == "UP":
            self.take("UP")
            self.take("(")
            p = self.point()
            self.take(")")
            return Up(p)
        name = self.take(kind="name")
        if self.peek()[1] != "(":
            return Atom(name, None)
        self.take("(")
        args = []
        if self.peek()[1] != ")":
            args.append(self.arg())
            while self.peek()[1] == ",":
                self.take(",")
                args.append(self.arg())
        self.take(")")
        return Atom(name, tuple(args))

    def affine(self) -> Affine:
        return parse_affine(self.take(kind="aff"))

    def arg(self) -> Arg:
        if self.peek()[1] == "w":
            self.take("w")
            return OM
        lo = self.affine()
        if self.peek()[1] != "..":
            return lo
        self.take("..")
        hi = self.affine() if self.peek()[0] == "aff" else None
        return Rng(lo, hi)

    def point(self) -> tuple:
        kind = self.point_kind
        if kind == "nat":
            return ("nat", self.affine())
        if kind == "j":
            self.take("(")
            j = self.affine()
            self.take(",")
            if self.peek()[1] == "w":
                self.take("w")
                k = OM
            else:
                k = self.affine()
            self.take(")")
            return ("j", j, k)
        k, v = self.peek()
        if k == "pt":
            self.take()
            return (v[0], parse_affine(v[2:]))
        if v in ("b", "w0"):
            self.take()
            return (v,)
        raise WrongGrammar(f"expected a point, found {v!r}")


def parse(text: str, point_kind: str):
    p = _Parser(text, point_kind)
    node = p.expr()
    p.done()
    return node


def parse_point(text: str, point_kind: str) -> tuple:
    p = _Parser(text, point_kind)
    pt = p.point()
    p.done()
    return pt


# ------------------------------------------------------------------ printing

def format_arg(a: Arg) -> str:
    if a is OM:
        return "w"
    if isinstance(a, Rng):
        return f"{a.lo}.." + ("" if a.hi is None else str(a.hi))
    return str(a)


def format_point(p: tuple) -> str:
    tag = p[0]
    if tag == "nat":
        return str(p[1])
    if tag == "j":
        return f"({p[1]},{format_arg(p[2])})"
    if tag in ("a", "w"):
        return f"{tag}_{p[1]}"
    return tag


_PREC = {"|": 1, "-": 1, "&": 2}


def format_ast(node) -> str:
    if isinstance(node, Atom):
        if node.args is None:
            return node.name
        return f"{node.name}({','.join(format_arg(a) for a in node.args)})"
    if isinstance(node, Up):
        return f"UP({format_point(node.point)})"
    prec = _PREC[node.op]
    left, right = format_ast(node.left), format_ast(node.right)
    if isinstance(node.left, Op) and _PREC[node.left.op] < prec:
        left = f"({left})"
    if isinstance(node.right, Op) and _PREC[node.right.op] <= prec:
        right = f"({right})"
    return f"{left} {node.op} {right}"


# ------------------------------------------------------------------ folding

def substitute(a: Affine, n: int | Affine) -> Affine:
    """``a`` with the parameter replaced by ``n`` (an integer or another affine term)."""
    if isinstance(n, int):
        n = const(n)
    return Affine(a.a * n.a, a.a * n.b + a.b)


def subst_arg(a: Arg, n) -> Arg:
    if a is OM:
        return a
    if isinstance(a, Rng):
        return Rng(substitute(a.lo, n), None if a.hi is None else substitute(a.hi, n))
    return substitute(a, n)


def subst_point(p: tuple, n) -> tuple:
    return tuple(subst_arg(x, n) if isinstance(x, Affine) or x is OM else x for x in p)


def mentions_parameter(node) -> bool:
    def args_of(nd):
        if isinstance(nd, Atom):
            return list(nd.args or ())
        if isinstance(nd, Up):
            return [x for x in nd.point if isinstance(x, Affine)]
        return []

    def aff_of(a):
        if isinstance(a, Rng):
            return [a.lo] + ([a.hi] if a.hi is not None else [])
        return [a] if isinstance(a, Affine) else []

    if isinstance(node, Op):
        return mentions_parameter(node.left) or mentions_parameter(node.right)
    return any(not x.constant for a in args_of(node) for x in aff_of(a))


def fold(node, space, n=None, seen: list | None = None):
    """Evaluate ``node`` in ``space`` with the parameter set to ``n``.

    ``n`` may be an integer, an affine term (``N`` for the symbolic reading),
    or None for parameter-free expressions.  When ``seen`` is a list, every
    intermediate set is appended to it.
    """
    if isinstance(node, Op):
        left = fold(node.left, space, n, seen)
        right = fold(node.right, space, n, seen)
        out = left | right if node.op == "|" else left & right if node.op == "&" else left - right
    elif isinstance(node, Up):
        pt = node.point if n is None else subst_point(node.point, n)
        _check_free(pt, n)
        out = space.up(pt)
    else:
        args = node.args
        if args is not None and n is not None:
            args = tuple(subst_arg(a, n) for a in args)
        if args is not None and n is None:
            for a in args:
                _check_free((a.lo, a.hi) if isinstance(a, Rng) else (a,), None)
        out = space.atom(node.name, args)
    if seen is not None:
        seen.append(out)
    return out


def _check_free(parts, n) -> None:
    if n is None and any(isinstance(x, Affine) and not x.constant for x in parts):
        raise WrongGrammar("parameter n used outside a family template")
