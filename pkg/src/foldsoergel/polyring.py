"""polyring.py - the polynomial ring R = Q[as, at] and Laurent polynomials in v

Polynomials are sympy ring elements over QQ (exponent tuple -> rational).
Grading doubles the usual degree: deg(as) = deg(at) = 2.

The text syntax used across the package:

    (as - at)^2        3/2*as*at + at^2        -as + 1/3

`as` is a Python keyword, so text never goes through sympify; it has its own
small recursive-descent parser below.
"""

from __future__ import annotations

import logging
import re
from typing import Iterable, Iterator

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .errors import ExactDivisionError, InhomogeneousError, ParseError

logger = logging.getLogger(__name__)

R, AS, AT = ring("as,at", QQ)
Poly = PolyElement

SIMPLE = ("s", "t")
ALPHA = {"s": AS, "t": AT}
HALF = QQ(1, 2)
ALT_ROOT = AS - AT


def const(p: int, q: int = 1) -> Poly:
    return R.ground_new(QQ(p, q))


def _check_gen(gen: str) -> None:
    if gen not in ALPHA:
        raise ValueError(f"simple reflection must be 's' or 't', got {gen!r}")


# ---------------------------------------------------------------- grading


def monomial_degree(monom: tuple[int, int]) -> int:
    return 2 * (monom[0] + monom[1])


def is_homogeneous(f: Poly) -> bool:
    return len({monomial_degree(m) for m in f.keys()}) <= 1


def degree(f: Poly) -> int | None:
    """Graded degree of a homogeneous polynomial, None for zero."""
    degs = {monomial_degree(m) for m in f.keys()}
    if not degs:
        return None
    if len(degs) > 1:
        raise InhomogeneousError(f"polynomial {format_poly(f)} is not homogeneous")
    return degs.pop()


def monomials(k: int) -> list[tuple[int, int]]:
    """Exponent pairs of graded degree k, as-exponent descending."""
    if k < 0 or k % 2:
        return []
    n = k // 2
    return [(i, n - i) for i in range(n, -1, -1)]


def monomial(exps: tuple[int, int]) -> Poly:
    return R.from_dict({tuple(exps): QQ.one})


# ---------------------------------------------------------------- actions


def act_simple(gen: str, f: Poly) -> Poly:
    """s negates as and fixes at; t the other way round."""
    _check_gen(gen)
    pos = 0 if gen == "s" else 1
    return R.from_dict({m: (-c if m[pos] % 2 else c) for m, c in f.items()})


def act_word(word: str, f: Poly) -> Poly:
    """Apply a product of simple reflections, rightmost letter first."""
    for gen in reversed(word):
        f = act_simple(gen, f)
    return f


def tau(f: Poly) -> Poly:
    return R.from_dict({(m[1], m[0]): c for m, c in f.items()})


def demazure(gen: str, f: Poly) -> Poly:
    _check_gen(gen)
    num = f - act_simple(gen, f)
    try:
        return num.exquo(ALPHA[gen])
    except ExactQuotientFailed:
        logger.error("Demazure operator d_%s left a remainder on %s", gen, format_poly(f))
        raise ExactDivisionError(
            f"Demazure numerator {format_poly(num)} not divisible by alpha_{gen}"
        ) from None


def demazure_word(word: str, f: Poly) -> Poly:
    """d_{w1 w2 ...}(f) = d_w1(d_w2(...f)); rightmost letter acts first."""
    for gen in reversed(word):
        f = demazure(gen, f)
    return f


def sym_alt(f: Poly) -> tuple[Poly, Poly]:
    tf = tau(f)
    return (f + tf) * HALF, (f - tf) * HALF


def split_over_invariants(gen: str, f: Poly) -> tuple[Poly, Poly]:
    """f = a + b*alpha_gen with a, b fixed by gen."""
    a = (f + act_simple(gen, f)) * HALF
    b = demazure(gen, f) * HALF
    return a, b


def is_invariant(f: Poly) -> bool:
    return tau(f) == f


def is_anti_invariant(f: Poly) -> bool:
    return tau(f) == -f


def divide_by_alt_root(f: Poly) -> Poly:
    """Exact division by as - at."""
    try:
        return f.exquo(ALT_ROOT)
    except ExactQuotientFailed:
        logger.debug("no exact quotient of %s by as - at", format_poly(f))
        raise ExactDivisionError(
            f"{format_poly(f)} is not divisible by as - at"
        ) from None


# ---------------------------------------------------------------- R^tau


def rtau_monomials(k: int) -> list[Poly]:
    """Basis of the degree-k part of R^tau: (as+at)^a (as*at)^b, 2a + 4b = k."""
    if k < 0 or k % 2:
        return []
    e1, e2 = AS + AT, AS * AT
    out = []
    for b in range(k // 4 + 1):
        rest = k - 4 * b
        if rest % 2 == 0:
            out.append(e1 ** (rest // 2) * e2**b)
    return out


def rtau_hilbert(bound: int) -> LaurentInt:
    """dim R^tau_k for k <= bound, by symmetrizing monomials."""
    coeffs = {}
    for k in range(0, bound + 1, 2):
        orbits = {tuple(sorted(m)) for m in monomials(k)}
        coeffs[k] = len(orbits)
    return LaurentInt(coeffs)


# ---------------------------------------------------------------- text


def _format_coeff(c) -> str:
    num, den = QQ.numer(c), QQ.denom(c)
    return f"{num}/{den}" if den != 1 else f"{num}"


def sorted_terms(f: Poly) -> list[tuple[tuple[int, int], object]]:
    """Canonical order: degree descending, then as-exponent descending."""
    return sorted(f.items(), key=lambda mc: (-(mc[0][0] + mc[0][1]), -mc[0][0]))


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    parts = []
    for (i, j), c in sorted_terms(f):
        factors = []
        if i:
            factors.append("as" if i == 1 else f"as^{i}")
        if j:
            factors.append("at" if j == 1 else f"at^{j}")
        neg = c < 0
        mag = -c if neg else c
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(as|at)\b|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _PolyParser:
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
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos, self.text)

    def parse(self) -> Poly:
        f = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos, self.text)
        return f

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        f = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Poly:
        f = self.power()
        while self.peek()[1] in ("*", "/"):
            op, pos = self.peek()[1], self.peek()[2]
            self.take()
            g = self.power()
            if op == "*":
                f = f * g
            else:
                if not g.is_ground or not g:
                    raise ParseError("division only by a nonzero constant", pos, self.text)
                f = f * (QQ.one / g.get((0, 0)))
        return f

    def power(self) -> Poly:
        f = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos, self.text)
            f = f ** int(val)
        return f

    def atom(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "int":
            return R.ground_new(QQ(int(val)))
        if kind == "var":
            return AS if val == "as" else AT
        if val == "(":
            f = self.expr()
            self.expect(")")
            return f
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos, self.text)


def parse_poly(text: str) -> Poly:
    return _PolyParser(text).parse()


# ---------------------------------------------------------------- Laurent


class LaurentInt:
    """Integer Laurent polynomial in v, stored as {power: coefficient}.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | Iterable[tuple[int, int]] | None = None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        acc: dict[int, int] = {}
        for k, c in items:
            acc[int(k)] = acc.get(int(k), 0) + int(c)
        object.__setattr__(self, "_terms", {k: c for k, c in sorted(acc.items()) if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentInt is immutable")

    @classmethod
    def v(cls, k: int = 1, c: int = 1) -> LaurentInt:
        return cls({k: c})

    @classmethod
    def const(cls, c: int) -> LaurentInt:
        return cls({0: c})

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def coeff(self, k: int) -> int:
        return self._terms.get(k, 0)

    def to_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        return isinstance(other, LaurentInt) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        return LaurentInt(list(self.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt({k: -c for k, c in self.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        return LaurentInt(
            (a + b, c * d) for a, c in self.items() for b, d in other.items()
        )

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentInt:
        """Multiply by v^k."""
        return LaurentInt({a + k: c for a, c in self.items()})

    def bar(self) -> LaurentInt:
        return LaurentInt({-a: c for a, c in self.items()})

    def truncate(self, bound: int) -> LaurentInt:
        return LaurentInt({a: c for a, c in self.items() if a <= bound})

    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def evaluate(self, v: int) -> int:
        if v == 0 and any(k < 0 for k in self._terms):
            raise ZeroDivisionError("negative power of v at v = 0")
        return sum(c * v**k for k, c in self.items())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __repr__(self):
        return f"LaurentInt({self._terms!r})"

    def __str__(self):
        return format_laurent(self)


def _format_vpow(k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "v"
    return f"v^{k}"


def format_laurent(p: LaurentInt) -> str:
    """Descending powers: 'v^2+1+v^-2', '-v', '2v^3'."""
    if not p:
        return "0"
    out = []
    for k, c in sorted(p.items(), reverse=True):
        mag = abs(c)
        vp = _format_vpow(k)
        body = vp if (mag == 1 and vp) else f"{mag}{vp}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"-{body}" if c < 0 else f"+{body}")
    return "".join(out)


def series_mul(p: LaurentInt, q: LaurentInt, bound: int) -> LaurentInt:
    return (p * q).truncate(bound)


RTAU_DENOMINATOR = LaurentInt({0: 1, 2: -1, 4: -1, 6: 1})  # (1 - v^2)(1 - v^4)


def rtau_series(bound: int) -> LaurentInt:
    """Truncation of 1/((1 - v^2)(1 - v^4)) through degree `bound`."""
    return LaurentInt(
        {k: len(rtau_monomials(k)) for k in range(0, bound + 1, 2)}
    )
