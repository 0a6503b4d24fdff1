"""functor.py - the strict monoidal functor F from folded diagrams to equivariant bimodules

Every generator is sent to a block matrix of Bott-Samelson maps between the
underlying objects of its folded boundary words:

    orange X -> (1, -id)      green Y -> (B_s + B_t, swap)      brown Z -> (B_s B_t, crossing)

Orange cups, caps and crossings become identities; an orange dot is the
polynomial as - at; a brown dot is a red dot next to a blue dot.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from .. import bimod as bm
from .. import equiv as eq
from .. import polyring as pr
from ..bimod import Morphism, Obj, SumMor
from ..equiv import EqMor, EqObj
from ..errors import NotInvariantError, UnknownNameError
from ..utils.canonicalize import canonical_digest, canonicalize_json
from . import expr as ex

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def fold(word: str) -> EqObj:
    """Equivariant object of a word over X, Y, Z."""
    return eq.tensor_all(eq.indecomposable(c) for c in word)


def _gen(name: str, colors: str) -> Morphism:
    return bm.generator(name, colors)


def _id(word: str) -> Morphism:
    return bm.identity(Obj(word))


def _t(*maps: Morphism) -> Morphism:
    out = maps[0]
    for m in maps[1:]:
        out = bm.tensor(out, m)
    return out


def _c(*maps: Morphism) -> Morphism:
    """_c(a, b, c) = a . b . c"""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = bm.compose(m, out)
    return out


def _middle_crossing(colors: str) -> Morphism:
    """id_s (x) crossing (x) id_t on B_s B_{colors} B_t."""
    return _t(_id("s"), _gen("crossing", colors), _id("t"))


def _block_map(name: str) -> dict[tuple[int, int], Morphism]:
    du = {c: _gen("dotu", c) for c in "st"}
    dd = {c: _gen("dotd", c) for c in "st"}
    cap = {c: _gen("cap", c) for c in "st"}
    cup = {c: _gen("cup", c) for c in "st"}
    merge = {c: _gen("merge", c) for c in "st"}
    split = {c: _gen("split", c) for c in "st"}
    # YY is ordered ss, st, ts, tt
    if name == "dotu_g":
        return {(0, 0): du["s"], (0, 1): du["t"]}
    if name == "dotd_g":
        return {(0, 0): dd["s"], (1, 0): dd["t"]}
    if name in ("dotu_o", "dotd_o"):
        return {(0, 0): bm.poly_box(pr.ALT_ROOT)}
    if name == "dotu_b":
        return {(0, 0): _t(du["s"], du["t"])}
    if name == "dotd_b":
        return {(0, 0): _t(dd["s"], dd["t"])}
    if name == "cap_g":
        return {(0, 0): cap["s"], (0, 3): cap["t"]}
    if name == "cup_g":
        return {(0, 0): cup["s"], (3, 0): cup["t"]}
    if name in ("cap_o", "cup_o", "x_oo"):
        return {(0, 0): _id("")}
    if name == "cap_b":
        return {(0, 0): _c(_t(cap["s"], cap["t"]), _middle_crossing("ts"))}
    if name == "cup_b":
        return {(0, 0): _c(_middle_crossing("st"), _t(cup["s"], cup["t"]))}
    if name == "merge_ggg":
        return {(0, 0): merge["s"], (1, 3): merge["t"]}
    if name == "split_ggg":
        return {(0, 0): split["s"], (3, 1): split["t"]}
    if name == "merge_bbb":
        return {(0, 0): _c(_t(merge["s"], merge["t"]), _middle_crossing("ts"))}
    if name == "split_bbb":
        return {(0, 0): _c(_middle_crossing("st"), _t(split["s"], split["t"]))}
    if name == "tri_u_gbb":
        return {
            (0, 0): _c(_t(merge["s"], cap["t"]), _middle_crossing("ts")),
            (1, 0): _c(_t(cap["s"], merge["t"]), _middle_crossing("ts")),
        }
    if name == "tri_d_gbb":
        return {
            (0, 0): _c(_middle_crossing("st"), _t(split["s"], cup["t"])),
            (0, 1): _c(_middle_crossing("st"), _t(cup["s"], split["t"])),
        }
    if name == "tri_u_bgg":
        return {(0, 1): _id("st"), (0, 2): _gen("crossing", "ts")}
    if name == "tri_d_bgg":
        return {(1, 0): _id("st"), (2, 0): _gen("crossing", "st")}
    if name == "land_u_ogg":
        return {(0, 0): cap["s"], (0, 3): -cap["t"]}
    if name == "land_d_ogg":
        return {(0, 0): cup["s"], (3, 0): -cup["t"]}
    if name in ("x_og", "x_go"):
        return {(0, 0): _id("s"), (1, 1): _id("t")}
    if name in ("x_ob", "x_bo"):
        return {(0, 0): _id("st")}
    if name == "biv_gb":
        return {(0, 0): _t(_id("s"), du["t"]), (1, 0): _t(du["s"], _id("t"))}
    if name == "biv_bg":
        return {(0, 0): _t(_id("s"), dd["t"]), (0, 1): _t(dd["s"], _id("t"))}
    if name == "biv_og":
        return {(0, 0): du["s"], (0, 1): -du["t"]}
    if name == "biv_go":
        return {(0, 0): dd["s"], (1, 0): -dd["t"]}
    raise UnknownNameError(f"unknown generator {name!r}")


@lru_cache(maxsize=None)
def generator_image(name: str) -> EqMor:
    """F on a single generator."""
    if name not in ex.GENERATORS:
        raise UnknownNameError(f"unknown generator {name!r}")
    src_word, tgt_word, degree = ex.GENERATORS[name]
    src, tgt = fold(src_word), fold(tgt_word)
    mor = SumMor(src.underlying, tgt.underlying, degree, _block_map(name))
    return EqMor(src, tgt, mor)


def poly_image(f: pr.Poly) -> EqMor:
    if not pr.is_invariant(f):
        raise NotInvariantError(f"polynomial box {pr.format_poly(f)} is not tau-invariant")
    one = fold("")
    return EqMor(one, one, SumMor.single(bm.poly_box(f)))


@lru_cache(maxsize=4096)
def f_eval(e: ex.Expr) -> EqMor:
    """Evaluate a diagram expression under F."""
    if isinstance(e, ex.Gen):
        return generator_image(e.name)
    if isinstance(e, ex.Id):
        return eq.eq_identity(fold(e.word))
    if isinstance(e, ex.PolyBox):
        return poly_image(e.poly)
    if isinstance(e, ex.Compose):
        return eq.compose_eq(f_eval(e.outer), f_eval(e.inner))
    if isinstance(e, ex.Tensor):
        return eq.tensor_eq_mor(f_eval(e.left), f_eval(e.right))
    if isinstance(e, ex.Add):
        return f_eval(e.left) + f_eval(e.right)
    if isinstance(e, ex.Scale):
        return f_eval(e.expr).scale(e.scalar)
    if isinstance(e, ex.ScalePoly):
        if not pr.is_invariant(e.poly):
            raise NotInvariantError(f"coefficient {pr.format_poly(e.poly)} is not tau-invariant")
        return f_eval(e.expr).left_mul(e.poly)
    raise TypeError(f"not an expression: {e!r}")


def evaluate_text(text: str) -> EqMor:
    return f_eval(ex.parse_expr(text))


def eqmor_to_json(m: EqMor) -> dict:
    out = bm.summor_to_json(m.mor)
    out["degree"] = m.degree
    return out


def export_table() -> dict:
    """F on every generator, with a digest of the canonical serialization."""
    rows = []
    for name, (src, tgt, degree) in sorted(ex.GENERATORS.items()):
        rows.append(
            {
                "name": name,
                "source": src or "1",
                "target": tgt or "1",
                "degree": degree,
                "map": eqmor_to_json(generator_image(name)),
            }
        )
    logger.debug("exported %d generator images", len(rows))
    return {"generators": rows, "digest": canonical_digest(rows)}


def export_table_text() -> str:
    return canonicalize_json(export_table())
