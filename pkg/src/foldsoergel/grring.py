"""grring.py - the Grothendieck ring on the basis 1, X, Y, Z, XZ over Z[v, v^-1]

Shifts become powers of v: [M[k]] = v^k [M]. The multiplication table is
generated by

    X^2 = 1    XY = Y    Y^2 = (v+v^-1)Y + Z + XZ
    YZ = (v+v^-1)(Z + XZ)    Z^2 = (v^2+1+v^-2)Z + XZ

and is commutative. `decompose_word` applies the matching direct sum
decompositions of tensor products to a word of indecomposables.
"""

from __future__ import annotations

import itertools
import logging
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, UnknownNameError
from .polyring import LaurentInt, format_laurent

logger = logging.getLogger(__name__)

BASIS = ("1", "X", "Y", "Z", "XZ")
_INDEX = {name: i for i, name in enumerate(BASIS)}
_ALIASES = {"1": "1", "One": "1", "X": "X", "Y": "Y", "Z": "Z", "XZ": "XZ"}

_ZERO = LaurentInt()
_ONE = LaurentInt.const(1)
_QUANTUM_2 = LaurentInt({-1: 1, 1: 1})  # v + v^-1
_QUANTUM_3 = LaurentInt({-2: 1, 0: 1, 2: 1})  # v^2 + 1 + v^-2


def _coerce(c) -> LaurentInt:
    return LaurentInt.const(c) if isinstance(c, int) else c


@dataclass(frozen=True)
class RingElem:
    """Normal form sum of coeffs[i] * BASIS[i]."""

    coeffs: tuple[LaurentInt, ...] = (_ZERO,) * 5

    def __post_init__(self):
        if len(self.coeffs) != len(BASIS):
            raise ValueError(f"expected {len(BASIS)} coefficients, got {len(self.coeffs)}")

    @classmethod
    def one(cls) -> RingElem:
        return cls.basis("1")

    @classmethod
    def zero(cls) -> RingElem:
        return cls()

    @classmethod
    def basis(cls, name: str, coeff=1) -> RingElem:
        key = _ALIASES.get(name)
        if key is None:
            raise UnknownNameError(f"unknown basis element {name!r}; expected one of {BASIS}")
        coeffs = [_ZERO] * len(BASIS)
        coeffs[_INDEX[key]] = _coerce(coeff)
        return cls(tuple(coeffs))

    @classmethod
    def scalar(cls, c) -> RingElem:
        return cls.basis("1", c)

    def coeff(self, name: str) -> LaurentInt:
        return self.coeffs[_INDEX[_ALIASES[name]]]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: RingElem) -> RingElem:
        return RingElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RingElem:
        return RingElem(tuple(-a for a in self.coeffs))

    def __sub__(self, other: RingElem) -> RingElem:
        return self + (-other)

    def scale(self, c) -> RingElem:
        c = _coerce(c)
        return RingElem(tuple(a * c for a in self.coeffs))

    def shift(self, k: int) -> RingElem:
        return RingElem(tuple(a.shift(k) for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def bar(self) -> RingElem:
        return RingElem(tuple(a.bar() for a in self.coeffs))

    def terms(self) -> Iterator[tuple[str, LaurentInt]]:
        for name, c in zip(BASIS, self.coeffs):
            if c:
                yield name, c

    def to_json(self) -> dict:
        return {
            "normal_form": str(self),
            "coefficients": {name: format_laurent(c) for name, c in self.terms()},
        }

    def __str__(self):
        return _render(self.terms())


def _render_coeff(c: LaurentInt, name: str) -> tuple[bool, str]:
    """(negative, text) for one term."""
    if c.is_monomial() and c.valuation() == 0:
        value = c.coeff(0)
        mag = abs(value)
        if name == "1":
            return value < 0, str(mag)
        return value < 0, (name if mag == 1 else f"{mag}{name}")
    if name == "1":
        return False, f"({format_laurent(c)})"
    return False, f"({format_laurent(c)}){name}"


def _render(terms: Iterable[tuple[str, LaurentInt]]) -> str:
    out = ""
    for name, c in terms:
        neg, body = _render_coeff(c, name)
        if not out:
            out = f"-{body}" if neg else body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out or "0"


def _table() -> dict[tuple[str, str], RingElem]:
    b = RingElem.basis
    yz = b("Z", _QUANTUM_2) + b("XZ", _QUANTUM_2)
    zz = b("Z", _QUANTUM_3) + b("XZ")
    z_xz = b("XZ", _QUANTUM_3) + b("Z")
    table = {
        ("X", "X"): b("1"),
        ("X", "Y"): b("Y"),
        ("X", "Z"): b("XZ"),
        ("X", "XZ"): b("Z"),
        ("Y", "Y"): b("Y", _QUANTUM_2) + b("Z") + b("XZ"),
        ("Y", "Z"): yz,
        ("Y", "XZ"): yz,
        ("Z", "Z"): zz,
        ("Z", "XZ"): z_xz,
        ("XZ", "XZ"): zz,
    }
    for name in BASIS:
        table[("1", name)] = b(name)
    for (p, q), val in list(table.items()):
        table[(q, p)] = val
    return table


_TABLE = _table()


def multiply(a: RingElem, b: RingElem) -> RingElem:
    out = RingElem.zero()
    for p, cp in a.terms():
        for q, cq in b.terms():
            out = out + _TABLE[(p, q)].scale(cp * cq)
    return out


# ---------------------------------------------------------------- specialization


@dataclass(frozen=True)
class QuotElem:
    """Element of the rank-3 quotient X = +-1, on the basis 1, Y, Z."""

    x: int
    coeffs: tuple[LaurentInt, LaurentInt, LaurentInt]

    def terms(self) -> Iterator[tuple[str, LaurentInt]]:
        for name, c in zip(("1", "Y", "Z"), self.coeffs):
            if c:
                yield name, c

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "normal_form": str(self),
            "coefficients": {name: format_laurent(c) for name, c in self.terms()},
        }

    def __str__(self):
        return _render(self.terms())


def specialize(a: RingElem, x: int) -> QuotElem:
    """Substitute X -> x, so XZ -> x Z."""
    if x not in (1, -1):
        raise ValueError(f"X specializes to +1 or -1, not {x}")
    c1, cx, cy, cz, cxz = a.coeffs
    return QuotElem(x, (c1 + cx * x, cy, cz + cxz * x))


# ---------------------------------------------------------------- words and decompositions

Summand = tuple[str, int]  # (indecomposable, shift)

_DECOMPOSITIONS: dict[tuple[str, str], tuple[Summand, ...]] = {
    ("X", "X"): (("1", 0),),
    ("X", "Y"): (("Y", 0),),
    ("X", "Z"): (("XZ", 0),),
    ("X", "XZ"): (("Z", 0),),
    ("Y", "Y"): (("Y", -1), ("Y", 1), ("Z", 0), ("XZ", 0)),
    ("Y", "Z"): (("Z", -1), ("Z", 1), ("XZ", -1), ("XZ", 1)),
    ("Y", "XZ"): (("Z", -1), ("Z", 1), ("XZ", -1), ("XZ", 1)),
    ("Z", "Z"): (("Z", -2), ("Z", 0), ("Z", 2), ("XZ", 0)),
    ("Z", "XZ"): (("XZ", -2), ("XZ", 0), ("XZ", 2), ("Z", 0)),
    ("XZ", "XZ"): (("Z", -2), ("Z", 0), ("Z", 2), ("XZ", 0)),
}
for _name in BASIS:
    _DECOMPOSITIONS[("1", _name)] = ((_name, 0),)
for (_p, _q), _val in list(_DECOMPOSITIONS.items()):
    _DECOMPOSITIONS[(_q, _p)] = _val

_FACTOR = re.compile(r"\s*(XZ|One|1|X|Y|Z)(?:\[\s*([+-]?\d+)\s*\])?\s*")


def parse_word(text: str) -> list[Summand]:
    """'Y*Z[2]' or 'YZ' -> [('Y', 0), ('Z', 2)]; '' and '1' give the unit."""
    factors: list[Summand] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError(f"expected one of {BASIS} in word {text!r}", pos, text)
        factors.append((_ALIASES[m.group(1)], int(m.group(2) or 0)))
        pos = m.end()
        if pos < len(text) and text[pos] == "*":
            pos += 1
            if pos >= len(text):
                raise ParseError("dangling '*'", pos, text)
    return factors


def decompose_word(word: str | Iterable[Summand]) -> Counter:
    """Multiset {(indecomposable, shift): multiplicity} of a tensor word."""
    factors = parse_word(word) if isinstance(word, str) else list(word)
    state: Counter = Counter({("1", 0): 1})
    for name, k in factors:
        nxt: Counter = Counter()
        for (m, s), mult in state.items():
            for out, t in _DECOMPOSITIONS[(m, name)]:
                nxt[(out, s + k + t)] += mult
        state = nxt
    logger.debug("decomposed %s into %d summands", word, sum(state.values()))
    return state


def sorted_summands(summands: Counter) -> list[tuple[str, int, int]]:
    return sorted(
        ((name, shift, mult) for (name, shift), mult in summands.items() if mult),
        key=lambda row: (_INDEX[row[0]], row[1]),
    )


def ring_class(summands: Counter) -> RingElem:
    out = RingElem.zero()
    for (name, shift), mult in summands.items():
        out = out + RingElem.basis(name, LaurentInt.v(shift, mult))
    return out


def class_of_word(word: str | Iterable[Summand]) -> RingElem:
    """Product of the classes of the factors, shifts included."""
    factors = parse_word(word) if isinstance(word, str) else list(word)
    out = RingElem.one()
    for name, k in factors:
        out = out * RingElem.basis(name, LaurentInt.v(k))
    return out


def all_words(max_len: int, min_len: int = 1, letters: str = "XYZ") -> list[str]:
    return [
        "".join(w)
        for n in range(min_len, max_len + 1)
        for w in itertools.product(letters, repeat=n)
    ]


# ---------------------------------------------------------------- oracle trace

EPSILON = {
    "1": LaurentInt.const(1),
    "X": LaurentInt.v(2),
    "Y": LaurentInt({1: 1, 3: 1}),
    "Z": LaurentInt.v(2),
    "XZ": LaurentInt.v(4),
}


def epsilon(a: RingElem) -> LaurentInt:
    """Linear trace sending each basis element to the degrees of its maps to 1."""
    out = LaurentInt()
    for name, c in a.terms():
        out = out + c * EPSILON[name]
    return out


def predicted_grdim(a: RingElem, b: RingElem) -> LaurentInt:
    """Predicted numerator of grdim Hom(A, B) over R^tau."""
    return epsilon(a * b)


# ---------------------------------------------------------------- ring expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|(XZ|One|[1XYZv])|(\*\*|[-+*^()\[\]]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos, text)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _RingParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind == "end":
            raise ParseError(f"expected {value!r}", pos, self.text)

    def parse(self) -> RingElem:
        out = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos, self.text)
        return out

    def expr(self) -> RingElem:
        negate = False
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            negate = True
        out = self.term()
        if negate:
            out = -out
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            _, op, _ = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def _starts_atom(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("int", "name") or (kind == "op" and val == "(")

    def term(self) -> RingElem:
        out = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
            elif not self._starts_atom():
                return out
            out = out * self.factor()

    def _int(self) -> int:
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected an integer", pos, self.text)
        return sign * int(val)

    def factor(self) -> RingElem:
        base, is_v = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            _, _, pos = self.take()
            n = self._int()
            if is_v:
                base = RingElem.scalar(LaurentInt.v(n))
            elif n < 0:
                raise ParseError("negative powers are only defined for v", pos, self.text)
            else:
                acc = RingElem.one()
                for _ in range(n):
                    acc = acc * base
                base = acc
        if self.peek()[1] == "[" and self.peek()[0] == "op":
            self.take()
            k = self._int()
            self.expect("]")
            base = base.shift(k)
        return base

    def atom(self) -> tuple[RingElem, bool]:
        kind, val, pos = self.take()
        if kind == "int":
            return RingElem.scalar(int(val)), False
        if kind == "name":
            if val == "v":
                return RingElem.scalar(LaurentInt.v(1)), True
            return RingElem.basis(val), False
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner, False
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos, self.text)


def parse_ring(text: str) -> RingElem:
    """'Y*Y', '(v+v^-1)Y + Z', 'Z[2]*XZ' -> normal form."""
    return _RingParser(text).parse()
