"""Symbolic bundle expressions and their parser.

Grammar (whitespace is ignored between tokens)::

    expr   := term { "+" term } ;
    term   := atom { suffix } ;
    atom   := "O" "(" int ")" | "T" | "Omega" [ "^" int ] | "Triv" "(" int ")"
            | "wedge2" "(" expr ")" | "quot" "(" expr "," expr ")" | "(" expr ")" ;
    suffix := "(" int ")" | "*" ;
    int    := [ "-" ] digit { digit } ;

Suffixes apply left to right, so ``Omega^2(2)*`` is the dual of the twist.
``Omega`` alone means ``Omega^1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import BundleSyntaxError


@dataclass(frozen=True)
class LineBundle:
    a: int

    def __str__(self):
        return f"O({self.a})"


@dataclass(frozen=True)
class Tangent:
    def __str__(self):
        return "T"


@dataclass(frozen=True)
class CotangentPower:
    p: int = 1

    def __str__(self):
        return "Omega" if self.p == 1 else f"Omega^{self.p}"


@dataclass(frozen=True)
class Trivial:
    r: int

    def __str__(self):
        return f"Triv({self.r})"


@dataclass(frozen=True)
class Twist:
    e: "BundleExpr"
    k: int

    def __str__(self):
        return f"{_wrap(self.e)}({self.k})"


@dataclass(frozen=True)
class Dual:
    e: "BundleExpr"

    def __str__(self):
        return f"{_wrap(self.e)}*"


@dataclass(frozen=True)
class Sum:
    left: "BundleExpr"
    right: "BundleExpr"

    def __str__(self):
        return f"{self.left}+{self.right}"


@dataclass(frozen=True)
class Wedge2:
    e: "BundleExpr"

    def __str__(self):
        return f"wedge2({self.e})"


@dataclass(frozen=True)
class Quot:
    total: "BundleExpr"
    sub: "BundleExpr"

    def __str__(self):
        return f"quot({self.total}, {self.sub})"


BundleExpr = Union[LineBundle, Tangent, CotangentPower, Trivial,
                   Twist, Dual, Sum, Wedge2, Quot]

ATOMS = (LineBundle, Tangent, CotangentPower, Trivial)


def _wrap(e) -> str:
    # a Sum under a suffix needs parentheses to round-trip
    return f"({e})" if isinstance(e, Sum) else str(e)


def direct_sum(*parts) -> BundleExpr:
    """Left-nested :class:`Sum` of one or more expressions."""
    if not parts:
        raise ValueError("direct_sum needs at least one summand")
    out = parts[0]
    for p in parts[1:]:
        out = Sum(out, p)
    return out


def summands(e) -> list:
    """Flatten nested sums into a list of summands."""
    if isinstance(e, Sum):
        return summands(e.left) + summands(e.right)
    return [e]


# -- tokenizer --------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>-?\d+)|(?P<word>[A-Za-z][A-Za-z0-9]*)|(?P<punct>[()+,*^]))")

KEYWORDS = ("O", "T", "Omega", "Triv", "wedge2", "quot")
_ATOM_START = frozenset(KEYWORDS) | {"("}


@dataclass(frozen=True)
class _Tok:
    kind: str      # "int", "word", "punct", "eof"
    value: str
    offset: int


def tokenize(text: str) -> list:
    toks = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if not rest.strip():
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise BundleSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected, what=None):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.value)
        raise BundleSyntaxError(what or f"unexpected {found}", self.text,
                                t.offset, expected)

    def at(self, value: str) -> bool:
        t = self.tok
        return t.kind in ("word", "punct") and t.value == value

    def expect(self, value: str):
        if not self.at(value):
            self.fail({repr(value)})
        self.i += 1

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.fail({"integer"})
        v = int(self.tok.value)
        self.i += 1
        return v

    def parse(self):
        e = self.expr()
        if self.tok.kind != "eof":
            self.fail({"'+'", "'('", "'*'", "end of input"})
        return e

    def expr(self):
        e = self.term()
        while self.at("+"):
            self.i += 1
            e = Sum(e, self.term())
        return e

    def term(self):
        e = self.atom()
        while True:
            if self.at("*"):
                self.i += 1
                e = Dual(e)
            elif self.at("("):
                self.i += 1
                k = self.integer()
                self.expect(")")
                e = Twist(e, k)
            else:
                return e

    def atom(self):
        t = self.tok
        v = t.value if t.kind in ("word", "punct") else None
        if v == "O":
            self.i += 1
            self.expect("(")
            a = self.integer()
            self.expect(")")
            return LineBundle(a)
        if v == "T":
            self.i += 1
            return Tangent()
        if v == "Omega":
            self.i += 1
            p = 1
            if self.at("^"):
                self.i += 1
                at = self.tok.offset
                p = self.integer()
                if p < 1:
                    raise BundleSyntaxError("exterior power must be >= 1",
                                            self.text, at, {"positive integer"})
            return CotangentPower(p)
        if v == "Triv":
            self.i += 1
            self.expect("(")
            at = self.tok.offset
            r = self.integer()
            if r < 0:
                raise BundleSyntaxError("trivial rank must be >= 0",
                                        self.text, at, {"nonnegative integer"})
            self.expect(")")
            return Trivial(r)
        if v == "wedge2":
            self.i += 1
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return Wedge2(e)
        if v == "quot":
            self.i += 1
            self.expect("(")
            total = self.expr()
            self.expect(",")
            sub = self.expr()
            self.expect(")")
            return Quot(total, sub)
        if v == "(":
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        self.fail({repr(k) for k in _ATOM_START})


def parse(text: str) -> BundleExpr:
    """Parse a bundle expression such as ``"O(1)+Omega(2)"`` into an AST.

    >>> parse("T(-1)+O(1)")
    Sum(left=Twist(e=Tangent(), k=-1), right=LineBundle(a=1))
    """
    return _Parser(text).parse()


def as_expr(e) -> BundleExpr:
    """Accept either an AST or DSL text."""
    return parse(e) if isinstance(e, str) else e
