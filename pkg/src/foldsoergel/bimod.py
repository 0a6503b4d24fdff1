"""bimod.py - Bott-Samelson bimodules of type A1 x A1 as exact matrices

B_w = R (x)_{R^{w1}} R (x) ... (x)_{R^{wn}} R is free as a left R-module on
the 2^n elements 1 (x) x1 (x) ... (x) xn with xk in {1, alpha_{wk}}. The slot
vector eps (eps_k = 1 when slot k holds its root) is packed into an int with
the first slot as the most significant bit, so the basis of a tensor product
is the lexicographic product of the factors' bases.

Morphisms are sparse matrices {(row, col): Poly}; columns index the source
basis, rows the target basis. Degrees follow

    deg(basis eps of M[k]) = 2*sum(eps) - len(w) - k
    deg(entry[i, j]) = degree + deg(source basis j) - deg(target basis i)
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from sympy.polys.domains import QQ

from . import polyring as pr
from .errors import InhomogeneousError, ShapeError, UnknownNameError
from .polyring import ALPHA, R, Poly

logger = logging.getLogger(__name__)

COLORS = "st"
_SWAP = str.maketrans("st", "ts")


def _check_word(word: str) -> None:
    bad = set(word) - set(COLORS)
    if bad:
        raise ValueError(f"word letters must be 's' or 't', got {word!r}")


def eps_of(idx: int, n: int) -> tuple[int, ...]:
    return tuple((idx >> (n - 1 - k)) & 1 for k in range(n))


def index_of(eps: Iterable[int]) -> int:
    idx = 0
    for bit in eps:
        idx = (idx << 1) | bit
    return idx


@dataclass(frozen=True)
class Obj:
    """A shifted Bott-Samelson bimodule B_word[shift]."""

    word: str = ""
    shift: int = 0

    def __post_init__(self):
        _check_word(self.word)

    @property
    def rank(self) -> int:
        return 1 << len(self.word)

    def basis_degree(self, idx: int) -> int:
        return 2 * bin(idx).count("1") - len(self.word) - self.shift

    def tensor(self, other: Obj) -> Obj:
        return Obj(self.word + other.word, self.shift + other.shift)

    def shifted(self, k: int) -> Obj:
        return Obj(self.word, self.shift + k)

    def __str__(self):
        body = "".join(f"B_{c}" for c in self.word) or "1"
        return f"{body}[{self.shift}]" if self.shift else body


def tau_obj(o: Obj) -> Obj:
    return Obj(o.word.translate(_SWAP), o.shift)


# ---------------------------------------------------------------- right action


def _normalize(word: str, outer: Poly, slots: tuple[Poly, ...]) -> dict[tuple, Poly]:
    """Left normal form of outer (x) slots[0] (x) ... (x) slots[-1]."""
    if not word:
        return {(): outer} if outer else {}
    a, b = pr.split_over_invariants(word[-1], slots[-1])
    out: dict[tuple, Poly] = {}
    for bit, part in ((0, a), (1, b)):
        if not part:
            continue
        head = slots[:-1]
        if head:
            sub = _normalize(word[:-1], outer, head[:-1] + (head[-1] * part,))
        else:
            sub = {(): outer * part}
        for eps, c in sub.items():
            if c:
                out[eps + (bit,)] = c
    return out


@lru_cache(maxsize=None)
def _right_mul_basis(word: str, idx: int, f: Poly) -> tuple[tuple[int, Poly], ...]:
    if not f:
        return ()
    if not word:
        return ((0, f),)
    if f.is_ground:
        return ((idx, f),)
    eps = eps_of(idx, len(word))
    slots = tuple(ALPHA[c] if e else R.one for c, e in zip(word, eps))
    slots = slots[:-1] + (slots[-1] * f,)
    return tuple(sorted((index_of(e), c) for e, c in _normalize(word, R.one, slots).items()))


@dataclass(frozen=True)
class BSElement:
    """sum_idx terms[idx] * basis(idx) in obj."""

    obj: Obj
    terms: Mapping[int, Poly]

    @classmethod
    def basis(cls, obj: Obj, eps: Iterable[int]) -> BSElement:
        return cls(obj, {index_of(eps): R.one})

    def __eq__(self, other):
        if not isinstance(other, BSElement):
            return NotImplemented
        return self.obj == other.obj and _clean(self.terms) == _clean(other.terms)

    def is_homogeneous(self) -> bool:
        degs = {
            pr.degree(c) + self.obj.basis_degree(i)
            for i, c in self.terms.items()
            if c
        }
        return len(degs) <= 1


def _clean(entries: Mapping) -> dict:
    return {k: v for k, v in entries.items() if v}


def right_mul(x: BSElement, f: Poly) -> BSElement:
    acc: dict[int, Poly] = defaultdict(lambda: R.zero)
    for idx, c in x.terms.items():
        for k, d in _right_mul_basis(x.obj.word, idx, f):
            acc[k] = acc[k] + c * d
    return BSElement(x.obj, _clean(acc))


# ---------------------------------------------------------------- morphisms


class Morphism:
    """Degree-homogeneous left-R-linear map between shifted BS objects."""

    __slots__ = ("source", "target", "degree", "entries")

    def __init__(self, source: Obj, target: Obj, degree: int, entries: Mapping[tuple[int, int], Poly] | None = None):
        self.source = source
        self.target = target
        self.degree = degree
        self.entries = {k: R(v) if not isinstance(v, Poly) else v for k, v in (entries or {}).items() if v}

    def __repr__(self):
        return f"Morphism({self.source} -> {self.target}, deg={self.degree}, nnz={len(self.entries)})"

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.degree == other.degree
            and self.entries == other.entries
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.entries

    def entry(self, i: int, j: int) -> Poly:
        return self.entries.get((i, j), R.zero)

    def column(self, j: int) -> BSElement:
        return BSElement(self.target, {i: c for (i, jj), c in self.entries.items() if jj == j})

    def apply(self, x: BSElement) -> BSElement:
        if x.obj != self.source:
            raise ShapeError(f"element lives in {x.obj}, map starts at {self.source}")
        acc: dict[int, Poly] = defaultdict(lambda: R.zero)
        for (i, j), c in self.entries.items():
            if j in x.terms:
                acc[i] = acc[i] + c * x.terms[j]
        return BSElement(self.target, _clean(acc))

    def __add__(self, other: Morphism) -> Morphism:
        _same_shape(self, other, "sum")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc.get(k, R.zero) + v
        degree = self.degree if self.entries else other.degree
        return Morphism(self.source, self.target, degree, acc)

    def __neg__(self) -> Morphism:
        return Morphism(self.source, self.target, self.degree, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: Morphism) -> Morphism:
        return self + (-other)

    def scale(self, c) -> Morphism:
        c = QQ.convert(c) if not isinstance(c, Poly) else c
        return Morphism(self.source, self.target, self.degree, {k: v * c for k, v in self.entries.items()})

    def left_mul(self, f: Poly) -> Morphism:
        """Multiply by f in the leftmost region."""
        deg = pr.degree(f)
        return Morphism(
            self.source,
            self.target,
            self.degree + (deg or 0),
            {k: f * v for k, v in self.entries.items()},
        )


def _same_shape(a: Morphism, b: Morphism, what: str) -> None:
    if a.source != b.source or a.target != b.target:
        raise ShapeError(
            f"{what}: boundaries differ ({a.source} -> {a.target} vs {b.source} -> {b.target})"
        )
    if a.degree != b.degree and a.entries and b.entries:
        raise ShapeError(f"{what}: degrees differ ({a.degree} vs {b.degree})")


def identity(obj: Obj) -> Morphism:
    return Morphism(obj, obj, 0, {(i, i): R.one for i in range(obj.rank)})


def zero(source: Obj, target: Obj, degree: int = 0) -> Morphism:
    return Morphism(source, target, degree, {})


def poly_box(f: Poly, obj: Obj = Obj()) -> Morphism:
    """Left multiplication by f on obj (a polynomial box in the leftmost region)."""
    return identity(obj).left_mul(f) if f else zero(obj, obj, 0)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.target != g.source:
        raise ShapeError(f"cannot compose: {f.target} is not {g.source}")
    rows_f: dict[int, list[tuple[int, Poly]]] = defaultdict(list)
    for (k, j), c in f.entries.items():
        rows_f[k].append((j, c))
    acc: dict[tuple[int, int], Poly] = defaultdict(lambda: R.zero)
    for (i, k), a in g.entries.items():
        for j, c in rows_f.get(k, ()):
            acc[(i, j)] = acc[(i, j)] + a * c
    return Morphism(f.source, g.target, f.degree + g.degree, acc)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """Horizontal concatenation f | g."""
    src = f.source.tensor(g.source)
    tgt = f.target.tensor(g.target)
    nb, nb2 = g.source.rank, g.target.rank
    cols_f: dict[int, list[tuple[int, Poly]]] = defaultdict(list)
    for (k, i), c in f.entries.items():
        cols_f[i].append((k, c))
    word = f.target.word
    acc: dict[tuple[int, int], Poly] = defaultdict(lambda: R.zero)
    for (l, j), cg in g.entries.items():
        for i, image in cols_f.items():
            for k, c in image:
                for k2, c2 in _right_mul_basis(word, k, cg):
                    key = (k2 * nb2 + l, i * nb + j)
                    acc[key] = acc[key] + c * c2
    return Morphism(src, tgt, f.degree + g.degree, acc)


def tau_morphism(m: Morphism) -> Morphism:
    return Morphism(
        tau_obj(m.source),
        tau_obj(m.target),
        m.degree,
        {k: pr.tau(v) for k, v in m.entries.items()},
    )


def right_mul_matrix(obj: Obj, f: Poly) -> Morphism:
    """x |-> x * f as an endomorphism of obj."""
    entries = {}
    for j in range(obj.rank):
        for i, c in _right_mul_basis(obj.word, j, f):
            entries[(i, j)] = c
    return Morphism(obj, obj, pr.degree(f) or 0, entries)


def check_bimodule_map(m: Morphism) -> bool:
    for alpha in (pr.AS, pr.AT):
        lhs = compose(m, right_mul_matrix(m.source, alpha))
        rhs = compose(right_mul_matrix(m.target, alpha), m)
        if lhs.entries != rhs.entries:
            logger.debug("%r fails to commute with right multiplication by %s", m, pr.format_poly(alpha))
            return False
    return True


def degree_of(m: Morphism) -> int:
    """The unique d with deg(Mx) = deg(x) + d on basis elements."""
    found = set()
    for (i, j), c in m.entries.items():
        if not pr.is_homogeneous(c):
            raise InhomogeneousError(f"entry ({i}, {j}) of {m!r} is not homogeneous")
        found.add(pr.degree(c) - m.source.basis_degree(j) + m.target.basis_degree(i))
    if len(found) > 1:
        raise InhomogeneousError(f"{m!r} mixes degrees {sorted(found)}")
    return found.pop() if found else m.degree


# ---------------------------------------------------------------- generators

GENERATOR_DEGREES = {
    "dotu": 1,
    "dotd": 1,
    "merge": -1,
    "split": -1,
    "crossing": 0,
    "cap": 0,
    "cup": 0,
}


def _dotu(c: str) -> Morphism:
    return Morphism(Obj(c), Obj(), 1, {(0, 0): R.one, (0, 1): ALPHA[c]})


def _dotd(c: str) -> Morphism:
    return Morphism(Obj(), Obj(c), 1, {(0, 0): ALPHA[c] * pr.HALF, (1, 0): R.one * pr.HALF})


def _merge(c: str) -> Morphism:
    # f (x) g (x) h -> f d(g) (x) h; only the slot holding alpha survives, with d(alpha) = 2
    return Morphism(Obj(c + c), Obj(c), -1, {(y, 2 + y): pr.const(2) for y in (0, 1)})


def _split(c: str) -> Morphism:
    return Morphism(Obj(c), Obj(c + c), -1, {(y, y): R.one for y in (0, 1)})


def _crossing(colors: str) -> Morphism:
    a, b = colors
    return Morphism(
        Obj(a + b),
        Obj(b + a),
        0,
        {(index_of((y, x)), index_of((x, y))): R.one for x in (0, 1) for y in (0, 1)},
    )


@lru_cache(maxsize=None)
def generator(name: str, colors: str, poly: Poly | None = None) -> Morphism:
    """Matrix of a diagrammatic generator of the A1 x A1 category.

    `colors` is the colorization: one letter for dots, trivalent vertices,
    cups and caps; the source word ("st" or "ts") for the crossing.
    """
    _check_word(colors)
    if name == "poly":
        if poly is None:
            raise ValueError("polynomial box needs a polynomial")
        return poly_box(poly, Obj(colors) if colors else Obj())
    if name == "crossing":
        if len(colors) != 2 or colors[0] == colors[1]:
            raise ValueError(f"crossing needs two distinct colors, got {colors!r}")
        return _crossing(colors)
    if len(colors) != 1:
        raise ValueError(f"{name} takes a single color, got {colors!r}")
    c = colors
    if name == "dotu":
        return _dotu(c)
    if name == "dotd":
        return _dotd(c)
    if name == "merge":
        return _merge(c)
    if name == "split":
        return _split(c)
    if name == "cap":
        return compose(_dotu(c), _merge(c))
    if name == "cup":
        return compose(_split(c), _dotd(c))
    logger.debug("no generator %s for color %s", name, c)
    raise UnknownNameError(f"unknown generator {name!r}")


def bs_square_idempotents(c: str) -> list[tuple[Morphism, Morphism, Obj]]:
    """(projection, inclusion, summand) for B_c B_c = B_c[-1] + B_c[1]."""
    mid = tensor(tensor(identity(Obj(c)), poly_box(ALPHA[c])), identity(Obj(c)))
    merge, split = generator("merge", c), generator("split", c)
    return [
        (merge, compose(mid, split).scale(pr.HALF), Obj(c, -1)),
        (compose(merge, mid), split.scale(pr.HALF), Obj(c, 1)),
    ]


# ---------------------------------------------------------------- sums


@dataclass(frozen=True)
class SumObj:
    """Ordered direct sum of shifted BS objects."""

    summands: tuple[Obj, ...] = ()

    def __len__(self):
        return len(self.summands)

    def __iter__(self) -> Iterator[Obj]:
        return iter(self.summands)

    def __getitem__(self, i: int) -> Obj:
        return self.summands[i]

    def tensor(self, other: SumObj) -> SumObj:
        return SumObj(tuple(a.tensor(b) for a in self for b in other))

    def shifted(self, k: int) -> SumObj:
        return SumObj(tuple(o.shifted(k) for o in self))

    def __add__(self, other: SumObj) -> SumObj:
        return SumObj(self.summands + other.summands)

    def __str__(self):
        return " + ".join(str(o) for o in self) or "0"


def tau_sum(s: SumObj) -> SumObj:
    return SumObj(tuple(tau_obj(o) for o in s))


class SumMor:
    """Block matrix of Morphisms; blocks[(r, c)] maps source[c] to target[r]."""

    __slots__ = ("source", "target", "degree", "blocks")

    def __init__(self, source: SumObj, target: SumObj, degree: int, blocks: Mapping[tuple[int, int], Morphism] | None = None):
        self.source = source
        self.target = target
        self.degree = degree
        clean = {}
        for (r, c), m in (blocks or {}).items():
            if m.source != source[c] or m.target != target[r]:
                raise ShapeError(
                    f"block ({r}, {c}) is {m.source} -> {m.target}, expected {source[c]} -> {target[r]}"
                )
            if m.entries:
                if m.degree != degree:
                    raise ShapeError(f"block ({r}, {c}) has degree {m.degree}, expected {degree}")
                clean[(r, c)] = m
        self.blocks = clean

    def __repr__(self):
        return f"SumMor({self.source} -> {self.target}, deg={self.degree}, blocks={sorted(self.blocks)})"

    def __eq__(self, other):
        if not isinstance(other, SumMor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.degree == other.degree
            and self.blocks.keys() == other.blocks.keys()
            and all(self.blocks[k].entries == other.blocks[k].entries for k in self.blocks)
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.blocks

    def block(self, r: int, c: int) -> Morphism:
        return self.blocks.get((r, c)) or zero(self.source[c], self.target[r], self.degree)

    @classmethod
    def single(cls, m: Morphism) -> SumMor:
        return cls(SumObj((m.source,)), SumObj((m.target,)), m.degree, {(0, 0): m})

    @classmethod
    def identity(cls, s: SumObj) -> SumMor:
        return cls(s, s, 0, {(i, i): identity(o) for i, o in enumerate(s)})

    @classmethod
    def zero(cls, source: SumObj, target: SumObj, degree: int = 0) -> SumMor:
        return cls(source, target, degree, {})

    def __add__(self, other: SumMor) -> SumMor:
        if self.source != other.source or self.target != other.target:
            raise ShapeError(
                f"sum: boundaries differ ({self.source} -> {self.target} vs {other.source} -> {other.target})"
            )
        if self.degree != other.degree and self.blocks and other.blocks:
            raise ShapeError(f"sum: degrees differ ({self.degree} vs {other.degree})")
        degree = self.degree if self.blocks else other.degree
        acc = {k: _retag(m, degree) for k, m in self.blocks.items()}
        for k, m in other.blocks.items():
            acc[k] = acc[k] + _retag(m, degree) if k in acc else _retag(m, degree)
        return SumMor(self.source, self.target, degree, acc)

    def __neg__(self) -> SumMor:
        return SumMor(self.source, self.target, self.degree, {k: -m for k, m in self.blocks.items()})

    def __sub__(self, other: SumMor) -> SumMor:
        return self + (-other)

    def scale(self, c) -> SumMor:
        return SumMor(self.source, self.target, self.degree, {k: m.scale(c) for k, m in self.blocks.items()})

    def left_mul(self, f: Poly) -> SumMor:
        degree = self.degree + (pr.degree(f) or 0)
        return SumMor(self.source, self.target, degree, {k: m.left_mul(f) for k, m in self.blocks.items()})

    def select(self, rows: Iterable[int] | None = None, cols: Iterable[int] | None = None) -> SumMor:
        """Sub-block matrix on the given target rows and source columns."""
        rows = list(range(len(self.target))) if rows is None else list(rows)
        cols = list(range(len(self.source))) if cols is None else list(cols)
        rpos = {r: i for i, r in enumerate(rows)}
        cpos = {c: j for j, c in enumerate(cols)}
        return SumMor(
            SumObj(tuple(self.source[c] for c in cols)),
            SumObj(tuple(self.target[r] for r in rows)),
            self.degree,
            {(rpos[r], cpos[c]): m for (r, c), m in self.blocks.items() if r in rpos and c in cpos},
        )


def _retag(m: Morphism, degree: int) -> Morphism:
    if m.degree == degree:
        return m
    return Morphism(m.source, m.target, degree, m.entries)


def hstack(*parts: SumMor) -> SumMor:
    """[A | B | ...] with a common target."""
    target = parts[0].target
    degree = next((p.degree for p in parts if p.blocks), parts[0].degree)
    blocks, offset, source = {}, 0, SumObj()
    for p in parts:
        if p.target != target:
            raise ShapeError(f"hstack: target {p.target} is not {target}")
        for (r, c), m in p.blocks.items():
            blocks[(r, c + offset)] = m
        offset += len(p.source)
        source = source + p.source
    return SumMor(source, target, degree, blocks)


def vstack(*parts: SumMor) -> SumMor:
    """[A ; B ; ...] with a common source."""
    source = parts[0].source
    degree = next((p.degree for p in parts if p.blocks), parts[0].degree)
    blocks, offset, target = {}, 0, SumObj()
    for p in parts:
        if p.source != source:
            raise ShapeError(f"vstack: source {p.source} is not {source}")
        for (r, c), m in p.blocks.items():
            blocks[(r + offset, c)] = m
        offset += len(p.target)
        target = target + p.target
    return SumMor(source, target, degree, blocks)


def compose_sum(g: SumMor, f: SumMor) -> SumMor:
    if f.target != g.source:
        raise ShapeError(f"cannot compose: {f.target} is not {g.source}")
    by_row: dict[int, list[tuple[int, Morphism]]] = defaultdict(list)
    for (k, j), m in f.blocks.items():
        by_row[k].append((j, m))
    acc: dict[tuple[int, int], Morphism] = {}
    for (i, k), a in g.blocks.items():
        for j, b in by_row.get(k, ()):
            term = compose(a, b)
            acc[(i, j)] = acc[(i, j)] + term if (i, j) in acc else term
    return SumMor(f.source, g.target, f.degree + g.degree, acc)


def tensor_sum(f: SumMor, g: SumMor) -> SumMor:
    nb, nb2 = len(g.source), len(g.target)
    blocks = {}
    for (k, i), a in f.blocks.items():
        for (l, j), b in g.blocks.items():
            blocks[(k * nb2 + l, i * nb + j)] = tensor(a, b)
    return SumMor(
        f.source.tensor(g.source), f.target.tensor(g.target), f.degree + g.degree, blocks
    )


def tau_summor(m: SumMor) -> SumMor:
    return SumMor(
        tau_sum(m.source),
        tau_sum(m.target),
        m.degree,
        {k: tau_morphism(b) for k, b in m.blocks.items()},
    )


def check_bimodule_summor(m: SumMor) -> bool:
    return all(check_bimodule_map(b) for b in m.blocks.values())


# ---------------------------------------------------------------- JSON


def obj_to_json(o: Obj) -> dict:
    return {"word": o.word, "shift": o.shift}


def morphism_to_json(m: Morphism) -> dict:
    return {
        "source": obj_to_json(m.source),
        "target": obj_to_json(m.target),
        "degree": m.degree,
        "entries": [
            [i, j, pr.format_poly(c)] for (i, j), c in sorted(m.entries.items())
        ],
    }


def morphism_from_json(data: Mapping) -> Morphism:
    src = Obj(data["source"]["word"], data["source"].get("shift", 0))
    tgt = Obj(data["target"]["word"], data["target"].get("shift", 0))
    entries = {(int(i), int(j)): pr.parse_poly(text) for i, j, text in data["entries"]}
    return Morphism(src, tgt, int(data["degree"]), entries)


def summor_to_json(m: SumMor) -> dict:
    return {
        "source": [obj_to_json(o) for o in m.source],
        "target": [obj_to_json(o) for o in m.target],
        "degree": m.degree,
        "blocks": [
            {"row": r, "col": c, "map": morphism_to_json(b)}
            for (r, c), b in sorted(m.blocks.items())
        ],
    }
