"""equiv.py - the Z/2-equivariantization of the A1 x A1 Hecke category

An equivariant object is a sum of shifted Bott-Samelson bimodules S together
with a structure map f: tau(S) -> S of degree 0 satisfying f . tau(f) = id.
A morphism T: (S, f) -> (S', f') must intertwine: T . f = f' . tau(T).

The five indecomposables up to shift:

    One = (1, id)            X  = (1, -id)
    Y   = (B_s + B_t, swap)
    Z   = (B_s B_t, crossing_ts)     XZ = (B_s B_t, -crossing_ts)
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterable

from . import bimod as bm
from .bimod import Obj, SumMor, SumObj
from .errors import ParseError, ShapeError, UnknownNameError

logger = logging.getLogger(__name__)

INDECOMPOSABLES = ("One", "X", "Y", "Z", "XZ")
_ALIASES = {"1": "One", "One": "One", "X": "X", "Y": "Y", "Z": "Z", "XZ": "XZ"}
FOLDED_LETTERS = {"o": "X", "g": "Y", "b": "Z"}


def _shift_summor(m: SumMor, k: int) -> SumMor:
    if k == 0:
        return m
    blocks = {
        key: bm.Morphism(b.source.shifted(k), b.target.shifted(k), b.degree, b.entries)
        for key, b in m.blocks.items()
    }
    return SumMor(m.source.shifted(k), m.target.shifted(k), m.degree, blocks)


@dataclass(frozen=True, eq=False)
class EqObj:
    underlying: SumObj
    f_tau: SumMor
    name: str = ""

    def __post_init__(self):
        if self.f_tau.source != bm.tau_sum(self.underlying) or self.f_tau.target != self.underlying:
            raise ShapeError(
                f"structure map must go {bm.tau_sum(self.underlying)} -> {self.underlying}, "
                f"got {self.f_tau.source} -> {self.f_tau.target}"
            )
        if self.f_tau.blocks and self.f_tau.degree != 0:
            raise ShapeError(f"structure map has degree {self.f_tau.degree}, expected 0")

    def __eq__(self, other):
        if not isinstance(other, EqObj):
            return NotImplemented
        return self.underlying == other.underlying and self.f_tau == other.f_tau

    __hash__ = None

    def __str__(self):
        return self.name or f"({self.underlying}, f)"

    def is_coherent(self) -> bool:
        return bm.compose_sum(self.f_tau, bm.tau_summor(self.f_tau)) == SumMor.identity(self.underlying)

    def shifted(self, k: int) -> EqObj:
        name = f"{self.name}[{k}]" if self.name and k else self.name
        return EqObj(self.underlying.shifted(k), _shift_summor(self.f_tau, k), name)

    def negated(self) -> EqObj:
        """Same underlying object with structure map -f (tensoring with X)."""
        return EqObj(self.underlying, -self.f_tau)


def inverse_structure(e: EqObj) -> SumMor:
    """f^{-1} = tau(f): S -> tau(S)."""
    return bm.tau_summor(e.f_tau)


def is_equivariant(source: EqObj, target: EqObj, mor: SumMor) -> bool:
    if mor.source != source.underlying or mor.target != target.underlying:
        return False
    lhs = bm.compose_sum(mor, source.f_tau)
    rhs = bm.compose_sum(target.f_tau, bm.tau_summor(mor))
    return (lhs - rhs).is_zero()


class EqMor:
    __slots__ = ("source", "target", "mor")

    def __init__(self, source: EqObj, target: EqObj, mor: SumMor, check: bool = False):
        if mor.source != source.underlying or mor.target != target.underlying:
            raise ShapeError(
                f"map {mor.source} -> {mor.target} does not fit {source} -> {target}"
            )
        if check and not is_equivariant(source, target, mor):
            raise ValueError(f"map {source} -> {target} does not intertwine the structure maps")
        self.source = source
        self.target = target
        self.mor = mor

    @property
    def degree(self) -> int:
        return self.mor.degree

    def __repr__(self):
        return f"EqMor({self.source} -> {self.target}, deg={self.degree})"

    def __eq__(self, other):
        if not isinstance(other, EqMor):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.mor == other.mor

    __hash__ = None

    def is_zero(self) -> bool:
        return self.mor.is_zero()

    def is_equivariant(self) -> bool:
        return is_equivariant(self.source, self.target, self.mor)

    def __add__(self, other: EqMor) -> EqMor:
        _same_ends(self, other)
        return EqMor(self.source, self.target, self.mor + other.mor)

    def __neg__(self) -> EqMor:
        return EqMor(self.source, self.target, -self.mor)

    def __sub__(self, other: EqMor) -> EqMor:
        return self + (-other)

    def scale(self, c) -> EqMor:
        return EqMor(self.source, self.target, self.mor.scale(c))

    def left_mul(self, f) -> EqMor:
        """Multiply by an invariant polynomial in the leftmost region."""
        return EqMor(self.source, self.target, self.mor.left_mul(f))


def _same_ends(a: EqMor, b: EqMor) -> None:
    if a.source != b.source or a.target != b.target:
        raise ShapeError(f"sum: {a.source} -> {a.target} vs {b.source} -> {b.target}")


def eq_identity(e: EqObj) -> EqMor:
    return EqMor(e, e, SumMor.identity(e.underlying))


def eq_zero(a: EqObj, b: EqObj, degree: int = 0) -> EqMor:
    return EqMor(a, b, SumMor.zero(a.underlying, b.underlying, degree))


def compose_eq(g: EqMor, f: EqMor) -> EqMor:
    if f.target != g.source:
        raise ShapeError(f"cannot compose: {f.target} is not {g.source}")
    return EqMor(f.source, g.target, bm.compose_sum(g.mor, f.mor))


# ---------------------------------------------------------------- objects


def _unit() -> SumObj:
    return SumObj((Obj(),))


def indecomposable(name: str, shift: int = 0) -> EqObj:
    """One of the five named indecomposables, shifted by `shift`."""
    key = _ALIASES.get(name)
    if key is None:
        raise UnknownNameError(f"unknown indecomposable {name!r}; expected one of {INDECOMPOSABLES}")
    if key in ("One", "X"):
        f = SumMor.identity(_unit())
        e = EqObj(_unit(), f if key == "One" else -f, key)
    elif key == "Y":
        e = induce(SumObj((Obj("s"),)))
        e = EqObj(e.underlying, e.f_tau, "Y")
    else:
        cross = SumMor.single(bm.generator("crossing", "ts"))
        e = EqObj(SumObj((Obj("st"),)), cross if key == "Z" else -cross, key)
    return e.shifted(shift) if shift else e


def tensor_eq(a: EqObj, b: EqObj) -> EqObj:
    name = f"{a.name}{b.name}" if a.name and b.name else ""
    if a.name == "One":
        name = b.name
    elif b.name == "One":
        name = a.name
    return EqObj(a.underlying.tensor(b.underlying), bm.tensor_sum(a.f_tau, b.f_tau), name)


def tensor_eq_mor(f: EqMor, g: EqMor) -> EqMor:
    return EqMor(
        tensor_eq(f.source, g.source),
        tensor_eq(f.target, g.target),
        bm.tensor_sum(f.mor, g.mor),
    )


def tensor_all(objs: Iterable[EqObj]) -> EqObj:
    out = indecomposable("One")
    for o in objs:
        out = tensor_eq(out, o)
    return out


def fold_word(word: str) -> EqObj:
    """Tensor product over the folded alphabet: o -> X, g -> Y, b -> Z."""
    try:
        return tensor_all(indecomposable(FOLDED_LETTERS[c]) for c in word)
    except KeyError as exc:
        raise UnknownNameError(f"folded letters are 'o', 'g', 'b', got {exc.args[0]!r}") from None


_FACTOR = re.compile(r"\s*(XZ|One|1|X|Y|Z)(?:\[\s*([-+]?\d+)\s*\])?\s*")


def parse_object(text: str) -> EqObj:
    """'Y*Z[1]' -> Y (x) Z[1]; '1' or 'One' is the unit."""
    parts, pos = [], 0
    while True:
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError(f"expected one of 1, X, Y, Z, XZ in {text!r}", pos, text)
        parts.append(indecomposable(m.group(1), int(m.group(2) or 0)))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise ParseError(f"expected '*' in {text!r}", pos, text)
        pos += 1
    return tensor_all(parts)


# ---------------------------------------------------------------- induction


def induce(m: SumObj) -> EqObj:
    """Ind(M) = (M + tau(M), block swap)."""
    n = len(m)
    underlying = m + bm.tau_sum(m)
    source = bm.tau_sum(underlying)
    blocks = {}
    for i, o in enumerate(m):
        blocks[(i, n + i)] = bm.identity(o)
        blocks[(n + i, i)] = bm.identity(bm.tau_obj(o))
    return EqObj(underlying, SumMor(source, underlying, 0, blocks))


def induce_mor(h: SumMor) -> EqMor:
    """Ind(h) = diag(h, tau(h))."""
    n, n2 = len(h.source), len(h.target)
    th = bm.tau_summor(h)
    blocks = dict(h.blocks)
    for (r, c), b in th.blocks.items():
        blocks[(n2 + r, n + c)] = b
    src, tgt = induce(h.source), induce(h.target)
    return EqMor(src, tgt, SumMor(src.underlying, tgt.underlying, h.degree, blocks))


def restrict(e: EqObj) -> SumObj:
    return e.underlying


def adjunction_phi(phi: SumMor, n: EqObj) -> EqMor:
    """Hom(M, Res N) -> Hom_eq(Ind M, N): phi |-> (phi, f_N . tau(phi))."""
    if phi.target != n.underlying:
        raise ShapeError(f"map lands in {phi.target}, not in {n.underlying}")
    second = bm.compose_sum(n.f_tau, bm.tau_summor(phi))
    return EqMor(induce(phi.source), n, bm.hstack(phi, second))


def adjunction_psi(psi: EqMor) -> SumMor:
    """Inverse of adjunction_phi: restrict to the first block of Ind M."""
    n = len(psi.source.underlying) // 2
    return psi.mor.select(cols=range(n))


def adjunction_phi_prime(phi: SumMor, n: EqObj) -> EqMor:
    """Hom(Res N, M) -> Hom_eq(N, Ind M): phi |-> (phi ; tau(phi . f_N))."""
    if phi.source != n.underlying:
        raise ShapeError(f"map starts at {phi.source}, not at {n.underlying}")
    second = bm.tau_summor(bm.compose_sum(phi, n.f_tau))
    return EqMor(n, induce(phi.target), bm.vstack(phi, second))


def adjunction_psi_prime(psi: EqMor) -> SumMor:
    n = len(psi.target.underlying) // 2
    return psi.mor.select(rows=range(n))


def adjunction_naturality(phi: SumMor, n: EqObj, g: SumMor | None = None, h: EqMor | None = None) -> bool:
    """Both naturality squares of adjunction_phi at phi: M -> Res N.

    g: M' -> M is precomposed on the induced side, h: N -> N' is an
    equivariant map postcomposed on the other.
    """
    base = adjunction_phi(phi, n)
    ok = True
    if g is not None:
        ok = ok and adjunction_phi(bm.compose_sum(phi, g), n) == compose_eq(base, induce_mor(g))
    if h is not None:
        if h.source != n:
            raise ShapeError(f"{h!r} does not start at {n}")
        ok = ok and adjunction_phi(bm.compose_sum(h.mor, phi), h.target) == compose_eq(h, base)
    if not ok:
        logger.debug("adjunction_phi is not natural at %r", phi)
    return ok


def adjunction_prime_naturality(phi: SumMor, n: EqObj, g: SumMor | None = None, h: EqMor | None = None) -> bool:
    """Same squares for adjunction_phi_prime at phi: Res N -> M, with g: M -> M' and h: N' -> N."""
    base = adjunction_phi_prime(phi, n)
    ok = True
    if g is not None:
        ok = ok and adjunction_phi_prime(bm.compose_sum(g, phi), n) == compose_eq(induce_mor(g), base)
    if h is not None:
        if h.target != n:
            raise ShapeError(f"{h!r} does not end at {n}")
        ok = ok and adjunction_phi_prime(bm.compose_sum(phi, h.mor), h.source) == compose_eq(base, h)
    if not ok:
        logger.debug("adjunction_phi_prime is not natural at %r", phi)
    return ok


def splitting_maps(e: EqObj) -> tuple[EqMor, EqMor]:
    """(iota: E -> Ind Res E, p: Ind Res E -> E) with p . iota = 2 id."""
    ident = SumMor.identity(e.underlying)
    iota = adjunction_phi_prime(ident, e)
    p = adjunction_phi(ident, e)
    logger.debug("splitting maps for %s", e)
    return iota, p


def isomorphism_xy_y() -> tuple[EqMor, EqMor]:
    """X (x) Y -> Y and back, both diag(1, -1)."""
    xy = tensor_eq(indecomposable("X"), indecomposable("Y"))
    y = indecomposable("Y")
    s, t = Obj("s"), Obj("t")
    diag = SumMor(y.underlying, y.underlying, 0, {(0, 0): bm.identity(s), (1, 1): -bm.identity(t)})
    fwd = EqMor(xy, y, diag, check=True)
    back = EqMor(y, xy, diag, check=True)
    return fwd, back
