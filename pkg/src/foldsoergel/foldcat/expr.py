"""expr.py - folded diagrams as composite expressions

Grammar (whitespace is insignificant)::

    sum    := term (('+' | '-') term)*
    term   := ['-'] (coef '*')* comp
    coef   := INT ['/' INT] | 'poly[' POLY ']'
    comp   := tensor ('.' tensor)*          right operand applied first
    tensor := atom ('x' atom)*
    atom   := '(' sum ')' | 'id(' WORD ')' | 'poly[' POLY ']' | GENERATOR

WORD is a string over X, Y, Z (empty or '1' for the unit); POLY is the
polynomial syntax of polyring. `x` binds tighter than `.`.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Union

from sympy.polys.domains import QQ

from .. import polyring as pr
from ..errors import NotInvariantError, ParseError, ShapeError, UnknownNameError
from ..polyring import Poly

logger = logging.getLogger(__name__)

# name -> (source word, target word, degree)
GENERATORS: dict[str, tuple[str, str, int]] = {
    "dotu_g": ("Y", "", 1),
    "dotd_g": ("", "Y", 1),
    "dotu_o": ("X", "", 2),
    "dotd_o": ("", "X", 2),
    "dotu_b": ("Z", "", 2),
    "dotd_b": ("", "Z", 2),
    "cap_g": ("YY", "", 0),
    "cup_g": ("", "YY", 0),
    "cap_o": ("XX", "", 0),
    "cup_o": ("", "XX", 0),
    "cap_b": ("ZZ", "", 0),
    "cup_b": ("", "ZZ", 0),
    "merge_ggg": ("YY", "Y", -1),
    "split_ggg": ("Y", "YY", -1),
    "merge_bbb": ("ZZ", "Z", -2),
    "split_bbb": ("Z", "ZZ", -2),
    "tri_u_gbb": ("ZZ", "Y", -1),
    "tri_d_gbb": ("Y", "ZZ", -1),
    "tri_u_bgg": ("YY", "Z", 0),
    "tri_d_bgg": ("Z", "YY", 0),
    "land_u_ogg": ("YY", "X", 0),
    "land_d_ogg": ("X", "YY", 0),
    "x_bo": ("ZX", "XZ", 0),
    "x_ob": ("XZ", "ZX", 0),
    "x_go": ("YX", "XY", 0),
    "x_og": ("XY", "YX", 0),
    "x_oo": ("XX", "XX", 0),
    "biv_gb": ("Z", "Y", 1),
    "biv_bg": ("Y", "Z", 1),
    "biv_og": ("Y", "X", 1),
    "biv_go": ("X", "Y", 1),
}

_WORD_LETTERS = set("XYZ")


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Gen:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Id:
    word: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PolyBox:
    poly: Poly
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Compose:
    """outer . inner"""

    outer: "Expr"
    inner: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Scale:
    scalar: object  # QQ element
    expr: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ScalePoly:
    poly: Poly
    expr: "Expr"
    pos: int = field(default=0, compare=False)


Expr = Union[Gen, Id, PolyBox, Compose, Tensor, Add, Scale, ScalePoly]


# ---------------------------------------------------------------- shapes


@dataclass(frozen=True)
class Shape:
    source: str
    target: str
    degree: int


def _invariant_degree(f: Poly, pos: int) -> int:
    if not pr.is_invariant(f):
        raise NotInvariantError(f"polynomial box {pr.format_poly(f)} at offset {pos} is not tau-invariant")
    deg = pr.degree(f)
    return 0 if deg is None else deg


def _check_word(word: str, pos: int, text: str = "") -> str:
    if word == "1":
        return ""
    bad = set(word) - _WORD_LETTERS
    if bad:
        raise ParseError(f"object words use X, Y, Z; got {word!r}", pos, text)
    return word


def shape(e: Expr) -> Shape:
    """Boundary words and degree, raising ShapeError on the first mismatch."""
    if isinstance(e, Gen):
        try:
            src, tgt, deg = GENERATORS[e.name]
        except KeyError:
            raise UnknownNameError(f"unknown generator {e.name!r} at offset {e.pos}") from None
        return Shape(src, tgt, deg)
    if isinstance(e, Id):
        return Shape(e.word, e.word, 0)
    if isinstance(e, PolyBox):
        return Shape("", "", _invariant_degree(e.poly, e.pos))
    if isinstance(e, Compose):
        outer, inner = shape(e.outer), shape(e.inner)
        if inner.target != outer.source:
            raise ShapeError(
                f"composition at offset {e.pos}: inner target {inner.target or '1'!r} "
                f"is not outer source {outer.source or '1'!r}"
            )
        return Shape(inner.source, outer.target, inner.degree + outer.degree)
    if isinstance(e, Tensor):
        a, b = shape(e.left), shape(e.right)
        return Shape(a.source + b.source, a.target + b.target, a.degree + b.degree)
    if isinstance(e, Add):
        a, b = shape(e.left), shape(e.right)
        if (a.source, a.target) != (b.source, b.target):
            raise ShapeError(
                f"sum at offset {e.pos}: {a.source or '1'} -> {a.target or '1'} "
                f"vs {b.source or '1'} -> {b.target or '1'}"
            )
        if a.degree != b.degree:
            raise ShapeError(f"sum at offset {e.pos}: degrees {a.degree} and {b.degree}")
        return a
    if isinstance(e, Scale):
        return shape(e.expr)
    if isinstance(e, ScalePoly):
        inner = shape(e.expr)
        return Shape(inner.source, inner.target, inner.degree + _invariant_degree(e.poly, e.pos))
    raise TypeError(f"not an expression: {e!r}")


# ---------------------------------------------------------------- parser

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<poly>poly\[)"
    r"|(?P<id>id\()"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>\d+)"
    r"|(?P<op>[-+*/.()])"
    r")"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "poly":
            close = text.find("]", m.end())
            if close < 0:
                raise ParseError("unterminated 'poly['", start, text)
            try:
                value = pr.parse_poly(text[m.end():close])
            except ParseError as exc:
                raise ParseError(f"in polynomial box: {exc}", start, text) from None
            tokens.append(("poly", value, start))
            pos = close + 1
        elif kind == "id":
            close = text.find(")", m.end())
            if close < 0:
                raise ParseError("unterminated 'id('", start, text)
            tokens.append(("id", _check_word(text[m.end():close].strip(), start, text), start))
            pos = close + 1
        elif kind == "name":
            word = m.group("name")
            tokens.append(("op", "x", start) if word == "x" else ("name", word, start))
            pos = m.end()
        elif kind == "int":
            tokens.append(("int", int(m.group("int")), start))
            pos = m.end()
        else:
            tokens.append(("op", m.group("op"), start))
            pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def is_op(self, value: str, k: int = 0) -> bool:
        kind, val, _ = self.peek(k)
        return kind == "op" and val == value

    def expect(self, value: str):
        kind, val, pos = self.take()
        if kind != "op" or val != value:
            raise ParseError(f"expected {value!r}", pos, self.text)

    def parse(self) -> Expr:
        e = self.sum()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos, self.text)
        return e

    def sum(self) -> Expr:
        e = self.term()
        while self.is_op("+") or self.is_op("-"):
            _, op, pos = self.take()
            rhs = self.term()
            e = Add(e, rhs if op == "+" else Scale(QQ(-1), rhs, pos), pos)
        return e

    def term(self) -> Expr:
        pos = self.peek()[2]
        negate = False
        if self.is_op("-"):
            self.take()
            negate = True
        coefs = []
        while True:
            kind, val, cpos = self.peek()
            if kind == "int":
                coefs.append((self.scalar(), cpos))
                self.expect("*")
            elif kind == "poly" and self.is_op("*", 1):
                self.take()
                self.take()
                coefs.append((val, cpos))
            else:
                break
        e = self.comp()
        for coef, cpos in reversed(coefs):
            e = Scale(coef, e, cpos) if not isinstance(coef, Poly) else ScalePoly(coef, e, cpos)
        return Scale(QQ(-1), e, pos) if negate else e

    def scalar(self):
        _, num, _ = self.take()
        if self.is_op("/"):
            self.take()
            kind, den, pos = self.take()
            if kind != "int" or den == 0:
                raise ParseError("expected a nonzero integer denominator", pos, self.text)
            return QQ(num, den)
        return QQ(num)

    def comp(self) -> Expr:
        e = self.tensor()
        while self.is_op("."):
            _, _, pos = self.take()
            e = Compose(e, self.tensor(), pos)
        return e

    def tensor(self) -> Expr:
        e = self.atom()
        while self.is_op("x"):
            _, _, pos = self.take()
            e = Tensor(e, self.atom(), pos)
        return e

    def atom(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "op" and val == "(":
            e = self.sum()
            self.expect(")")
            return e
        if kind == "id":
            return Id(val, pos)
        if kind == "poly":
            return PolyBox(val, pos)
        if kind == "name":
            if val not in GENERATORS:
                raise ParseError(f"unknown generator {val!r}", pos, self.text)
            return Gen(val, pos)
        raise ParseError(f"unexpected {'end of input' if kind == 'end' else repr(val)}", pos, self.text)


def parse_expr(text: str, check: bool = True) -> Expr:
    """Parse a diagram expression; with `check`, reject shape violations."""
    e = _ExprParser(text).parse()
    if check:
        s = shape(e)
        logger.debug("parsed %r as %s -> %s, degree %d", text, s.source or "1", s.target or "1", s.degree)
    return e


# ---------------------------------------------------------------- printing


def _scalar_text(c) -> str:
    num, den = QQ.numer(c), QQ.denom(c)
    return f"{num}/{den}" if den != 1 else f"{num}"


def to_text(e: Expr) -> str:
    """Fully parenthesized text; parsing it back gives an expression with the same value."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Id):
        return f"id({e.word})"
    if isinstance(e, PolyBox):
        return f"poly[{pr.format_poly(e.poly)}]"
    if isinstance(e, Compose):
        return f"({to_text(e.outer)} . {to_text(e.inner)})"
    if isinstance(e, Tensor):
        return f"({to_text(e.left)} x {to_text(e.right)})"
    if isinstance(e, Add):
        return f"({to_text(e.left)} + {to_text(e.right)})"
    if isinstance(e, Scale):
        if e.scalar < 0:
            return f"(-{_scalar_text(-e.scalar)} * {to_text(e.expr)})"
        return f"({_scalar_text(e.scalar)} * {to_text(e.expr)})"
    if isinstance(e, ScalePoly):
        return f"(poly[{pr.format_poly(e.poly)}] * {to_text(e.expr)})"
    raise TypeError(f"not an expression: {e!r}")
