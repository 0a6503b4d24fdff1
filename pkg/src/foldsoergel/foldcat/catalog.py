"""catalog.py - relations of the folded diagram category and their verification under F

A relation is a pair of expression texts. The catalog is built in code; it can
be exported to (and loaded from) JSON lines, one object per relation::

    {"id": "barbell.green", "lhs": "dotu_g . dotd_g", "rhs": "poly[as + at]",
     "origin": "defining: barbell", "kind": "defining"}

An rhs of "0" stands for the zero map with the boundaries of the lhs.
"""

from __future__ import annotations

import json
import logging
import multiprocessing as mp
import os
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import jsonschema
from sympy.polys.domains import QQ

from .. import config
from .. import polyring as pr
from ..errors import ParseError, ShapeError
from ..polyring import ALT_ROOT, AS, AT, HALF, Poly
from ..utils.canonicalize import canonical_digest, dump_jsonl
from . import expr as ex
from . import isotopy
from .functor import f_eval

logger = logging.getLogger(__name__)

KINDS = ("defining", "derived")
SCHEMA_FILE = "relation.v1.json"


@dataclass(frozen=True)
class Relation:
    id: str
    lhs: str
    rhs: str
    origin: str
    kind: str = "defining"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"relation {self.id}: kind must be one of {KINDS}, got {self.kind!r}")

    def lhs_expr(self) -> ex.Expr:
        return ex.parse_expr(self.lhs)

    def rhs_expr(self) -> ex.Expr:
        if self.rhs.strip() == "0":
            return ex.Scale(QQ(0), self.lhs_expr())
        return ex.parse_expr(self.rhs)

    def check_shape(self) -> ex.Shape:
        a, b = ex.shape(self.lhs_expr()), ex.shape(self.rhs_expr())
        if (a.source, a.target) != (b.source, b.target):
            raise ShapeError(
                f"relation {self.id}: lhs is {a.source or '1'} -> {a.target or '1'}, "
                f"rhs is {b.source or '1'} -> {b.target or '1'}"
            )
        if a.degree != b.degree:
            raise ShapeError(f"relation {self.id}: lhs degree {a.degree}, rhs degree {b.degree}")
        return a

    def to_json(self) -> dict:
        return asdict(self)


def verify_relation(r: Relation) -> bool:
    """True iff both sides have the same image under F."""
    r.check_shape()
    diff = f_eval(r.lhs_expr()) - f_eval(r.rhs_expr())
    ok = diff.is_zero()
    logger.debug("relation %s: %s", r.id, "ok" if ok else "FAILED")
    return ok


# ---------------------------------------------------------------- text macros

LIN = "((id(Y) x cap_g) . (land_d_ogg x id(Y)))"  # XY -> Y
LOUT = "((land_u_ogg x id(Y)) . (id(Y) x cup_g))"  # Y -> XY
ROUT = "((id(Y) x land_u_ogg) . (cup_g x id(Y)))"  # Y -> YX
RIN = "((cap_g x id(Y)) . (id(Y) x land_d_ogg))"  # YX -> Y
D_RIGHT = f"((id(Y) x dotu_o) . {ROUT})"  # orange dot right of a green strand
D_LEFT = f"((dotu_o x id(Y)) . {LOUT})"
GREEN_DOTS = "(dotd_g . dotu_g + biv_go . biv_og)"
GREEN_MIXED = "(biv_go . dotd_o . dotu_g + dotd_g . dotu_o . biv_og)"
ORANGE_ON_BROWN = "(id(Z) x dotu_o x id(Z)) . (x_ob x id(Z))"
ORANGE_ON_GREEN = "(id(Y) x dotu_o x id(Y)) . (x_og x id(Y))"


def _p(f: Poly) -> str:
    return f"poly[{pr.format_poly(f)}]"


def _combo(terms: Iterable[tuple[Poly, str]]) -> str:
    """sum of coefficient * diagram, dropping zero coefficients; '0' if nothing is left."""
    parts = [f"{_p(c)} * ({text})" for c, text in terms if c]
    return " + ".join(parts) if parts else "0"


def _alt_quotient(f: Poly) -> Poly:
    return pr.divide_by_alt_root(f)


def _middle(color: str, f: Poly) -> str:
    w = {"g": "Y", "b": "Z"}[color]
    return f"(id({w}) x {_p(f)} x id({w}))"


def _rel(rid, lhs, rhs, origin, kind="defining") -> Relation:
    return Relation(rid, lhs, rhs, origin, kind)


# ---------------------------------------------------------------- defining


def _barbells() -> list[Relation]:
    return [
        _rel("barbell.green", "dotu_g . dotd_g", "poly[as + at]", "defining: barbell"),
        _rel("barbell.brown", "dotu_b . dotd_b", "poly[as*at]", "defining: barbell"),
        _rel("barbell.orange", "dotu_o . dotd_o", "poly[(as - at)^2]", "defining: barbell"),
    ]


def _vertices() -> list[Relation]:
    v = "((cap_g x id(Y)) . (id(Y) x tri_d_bgg))"
    bottom = f"((id(Y) x {v}) . (land_d_ogg x id(Z)))"
    top = f"((tri_u_bgg x id(X)) . (id(Y) x {ROUT}))"
    o = "defining: vertex definitions"
    return [
        _rel("vertex.og_crossing", "x_og", f"{ROUT} . {LIN}", o),
        _rel("vertex.go_crossing", "x_go", f"{LOUT} . {RIN}", o),
        _rel("vertex.oo_crossing", "x_oo", "id(XX)", o),
        _rel(
            "vertex.gbb_triangle",
            "tri_u_gbb",
            "merge_ggg . (id(Y) x cap_g x id(Y)) . (tri_d_bgg x tri_d_bgg)",
            o,
        ),
        _rel("vertex.ob_crossing", "x_ob", f"-1/2 * ({top} . {bottom})", o),
    ]


def _bivalents() -> list[Relation]:
    o = "defining: bivalent vertex definitions"
    return [
        _rel("bivalent.bg_right", "biv_bg", "tri_u_bgg . (id(Y) x dotd_g)", o),
        _rel("bivalent.bg_left", "biv_bg", "tri_u_bgg . (dotd_g x id(Y))", o),
        _rel("bivalent.gb_right", "biv_gb", "(id(Y) x dotu_g) . tri_d_bgg", o),
        _rel("bivalent.gb_left", "biv_gb", "(dotu_g x id(Y)) . tri_d_bgg", o),
        _rel("bivalent.og_right", "biv_og", "land_u_ogg . (id(Y) x dotd_g)", o),
        _rel("bivalent.og_left", "biv_og", "land_u_ogg . (dotd_g x id(Y))", o),
        _rel("bivalent.go_right", "biv_go", "(id(Y) x dotu_g) . land_d_ogg", o),
    ]


def _circles_needles() -> list[Relation]:
    o = "defining: circles and needles"
    d = "derived: circles and needles"
    return [
        _rel("circle.orange", "cap_o . cup_o", "id()", o),
        _rel("needle.green", "cap_g . split_ggg", "0", o),
        _rel("needle.green_brown", "cap_g . tri_d_bgg", "0", o),
        _rel("needle.brown", "cap_b . split_bbb", "0", o),
        _rel("needle.merge_split_green", "merge_ggg . split_ggg", "0", d, "derived"),
        _rel("needle.merge_split_brown", "merge_bbb . split_bbb", "0", d, "derived"),
        _rel("needle.gbb", "tri_u_gbb . tri_d_gbb", "0", d, "derived"),
        _rel("needle.merge_bgg", "merge_ggg . tri_d_bgg", "0", d, "derived"),
        _rel("circle.green", "cap_g . cup_g", "0", d, "derived"),
        _rel("circle.brown", "cap_b . cup_b", "0", d, "derived"),
    ]


def _units() -> list[Relation]:
    w = "((dotu_b x id(Y)) . (tri_u_bgg x id(Y)) . (id(Y) x cup_g))"
    o = "defining: unit relations"
    d = "derived: unit relations"
    return [
        _rel("unit.green", "merge_ggg . (dotd_g x id(Y))", "id(Y)", o),
        _rel("unit.green_right", "merge_ggg . (id(Y) x dotd_g)", "id(Y)", d, "derived"),
        _rel("unit.brown", "merge_bbb . (dotd_b x id(Z))", "id(Z)", o),
        _rel("unit.brown_right", "merge_bbb . (id(Z) x dotd_b)", "id(Z)", d, "derived"),
        _rel("unit.brown_green", f"2 * {w}", "dotd_g . dotu_g - biv_go . biv_og", o),
        _rel("unit.ogb_zero", "biv_og . biv_gb", "0", o),
        _rel("unit.green_orange", "dotu_g . biv_go", "dotu_o", o),
        _rel("unit.gbb", "tri_u_gbb . (dotd_b x id(Z))", "biv_gb", d, "derived"),
        _rel("unit.gbb_right", "tri_u_gbb . (id(Z) x dotd_b)", "biv_gb", d, "derived"),
    ]


def _forcing() -> list[Relation]:
    o = "defining: polynomial forcing"
    d = "derived: polynomial forcing"
    return [
        _rel("forcing.green", f"poly[as + at] x id(Y) + {D_RIGHT}", GREEN_DOTS, o),
        _rel(
            "forcing.green_2",
            "2 * (poly[as*at] x id(Y) + id(Y) x poly[as*at])",
            f"poly[as + at] x (dotd_g . dotu_g) + poly[as + at] x (biv_go . biv_og) - {GREEN_MIXED}",
            d,
            "derived",
        ),
        _rel(
            "forcing.brown_1",
            "poly[as + at] x id(Z) + id(Z) x poly[as + at]",
            "2 * (biv_bg . biv_gb)",
            d,
            "derived",
        ),
        _rel(
            "forcing.brown_2",
            "(id(Z) x dotu_o) . x_ob + (dotu_o x id(Z))",
            f"-2 * (biv_bg . {LIN} . (id(X) x biv_gb))",
            d,
            "derived",
        ),
    ]


def _landings() -> list[Relation]:
    o = "defining: orange landings"
    return [
        _rel("landing.XY", f"{LOUT} . {LIN}", "id(XY)", o),
        _rel("landing.YX", f"{ROUT} . {RIN}", "id(YX)", o),
        _rel("landing.GGG", f"{ROUT} . merge_ggg", f"(merge_ggg x id(X)) . (id(Y) x {ROUT})", o),
        _rel("landing.GGB_1", f"tri_u_bgg . ({RIN} x id(Y))", f"-(tri_u_bgg . (id(Y) x {LIN}))", o),
        _rel(
            "landing.GGB_2",
            f"x_ob . (id(X) x tri_u_bgg) . ({LOUT} x id(Y))",
            f"-((tri_u_bgg x id(X)) . (id(Y) x {ROUT}))",
            o,
        ),
    ]


def _bigons_hi() -> list[Relation]:
    u = "((id(Y) x tri_u_bgg) . (cup_g x id(Y)))"
    wm = "((id(Y) x cap_g) . (tri_d_bgg x id(Y)))"
    h = f"((id(Y) x {wm}) . ({u} x id(Y)))"
    i_or = f"(({LIN} x id(Y)) . (id(X) x (tri_d_bgg . tri_u_bgg)) . ({LOUT} x id(Y)))"
    o = "defining: bigons and H=I"
    d = "derived: H=I"
    return [
        _rel("bigon.brown", "tri_u_bgg . tri_d_bgg", "2 * id(Z)", o),
        _rel(
            "bigon.brown_orange",
            "land_u_ogg . (id(Y) x cap_g x id(Y)) . (tri_d_bgg x tri_d_bgg)",
            "0",
            o,
        ),
        _rel("HI.green", "(id(Y) x merge_ggg) . (split_ggg x id(Y))", "split_ggg . merge_ggg", o),
        _rel(
            "HI.green_mirror",
            "(merge_ggg x id(Y)) . (id(Y) x split_ggg)",
            "split_ggg . merge_ggg",
            d,
            "derived",
        ),
        _rel("HI.brown", "(id(Z) x merge_bbb) . (split_bbb x id(Z))", "split_bbb . merge_bbb", o),
        _rel(
            "HI.brown_mirror",
            "(merge_bbb x id(Z)) . (id(Z) x split_bbb)",
            "split_bbb . merge_bbb",
            d,
            "derived",
        ),
        _rel(
            "HI.gbb_assoc",
            "tri_u_gbb . (merge_bbb x id(Z))",
            "tri_u_gbb . (id(Z) x merge_bbb)",
            d,
            "derived",
        ),
        _rel(
            "HI.middle_brown",
            f"2 * {h}",
            f"cup_g . cap_g - land_d_ogg . land_u_ogg + tri_d_bgg . tri_u_bgg - {i_or}",
            o,
        ),
    ]


def _orange() -> list[Relation]:
    d = "derived: orange strand"
    return [
        _rel("orange.X2", "x_oo", "cup_o . cap_o", d, "derived"),
        _rel("orange.X2_identity", "id(XX)", "cup_o . cap_o", d, "derived"),
        _rel("orange.dot_jump", "dotu_o x id(X)", "id(X) x dotu_o", d, "derived"),
        _rel("orange.dot_jump_crossing", "(dotu_o x id(X)) . x_oo", "id(X) x dotu_o", d, "derived"),
        _rel("orange.dots_merger", "poly[(as - at)^2] x id(X)", "dotd_o . dotu_o", d, "derived"),
        _rel("orange.dots_merger_right", "id(X) x poly[(as - at)^2]", "dotd_o . dotu_o", d, "derived"),
        _rel("orange.green_uncross", "x_go . x_og", "id(XY)", d, "derived"),
        _rel("orange.green_uncross_2", "x_og . x_go", "id(YX)", d, "derived"),
        _rel("orange.brown_uncross", "x_bo . x_ob", "id(XZ)", d, "derived"),
        _rel("orange.brown_uncross_2", "x_ob . x_bo", "id(ZX)", d, "derived"),
        _rel("orange.green_dot", "id(X) x dotu_g", "(dotu_g x id(X)) . x_og", d, "derived"),
        _rel("orange.brown_dot", "id(X) x dotu_b", "(dotu_b x id(X)) . x_ob", d, "derived"),
    ]


def _slides() -> list[Relation]:
    out = []
    for name in isotopy.slide_generators():
        left, right = isotopy.slide_sides(name)
        out.append(_rel(f"orange.slide.{name}", left, right, "derived: orange strand slides", "derived"))
    return out


# ---------------------------------------------------------------- general families


def _green_forcing_rhs(h: Poly) -> str:
    sym, alt = pr.sym_alt(pr.act_simple("s", h))
    dsym, dalt = pr.sym_alt(pr.demazure("s", h))
    return _combo(
        [
            (sym, "id(Y)"),
            (_alt_quotient(alt), D_LEFT),
            (dsym * HALF, GREEN_DOTS),
            (_alt_quotient(dalt) * HALF, GREEN_MIXED),
        ]
    )


def _general_forcing(f: Poly, tag: str) -> list[Relation]:
    g = f * ALT_ROOT
    st_f = pr.act_word("st", f)
    o = "derived: general polynomial forcing"
    tds_f = pr.act_simple("t", pr.demazure("s", f))
    tds_g = pr.act_simple("t", pr.demazure("s", g))
    sym_f, alt_f = pr.sym_alt(tds_f)
    sym_g, alt_g = pr.sym_alt(tds_g)
    brown_1 = _combo(
        [
            (st_f, "id(Z)"),
            (sym_f, "biv_bg . biv_gb"),
            (-_alt_quotient(alt_f), f"biv_bg . {D_LEFT} . biv_gb"),
            (pr.demazure_word("st", f), "dotd_b . dotu_b"),
        ]
    )
    brown_2 = _combo(
        [
            (-st_f, "dotu_o x id(Z)"),
            (-sym_g, f"biv_bg . {LIN} . (id(X) x biv_gb)"),
            (_alt_quotient(alt_g), "dotu_o x (biv_bg . biv_gb)"),
            (_alt_quotient(pr.demazure_word("st", g)), "dotu_o x (dotd_b . dotu_b)"),
        ]
    )
    return [
        _rel(f"general_forcing.green@{tag}", f"id(Y) x {_p(f)}", _green_forcing_rhs(f), o, "derived"),
        _rel(
            f"general_forcing.green_orange@{tag}",
            f"(id(Y) x {_p(f)}) . {D_RIGHT}",
            _green_forcing_rhs(g),
            o,
            "derived",
        ),
        _rel(f"general_forcing.brown@{tag}", f"id(Z) x {_p(f)}", brown_1, o, "derived"),
        _rel(
            f"general_forcing.brown_orange@{tag}",
            f"(id(Z) x {_p(f)}) . (id(Z) x dotu_o) . x_ob",
            brown_2,
            o,
            "derived",
        ),
    ]


def _general_needles(f: Poly, tag: str) -> list[Relation]:
    g = f * ALT_ROOT
    mg, mb = _middle("g", f), _middle("b", f)
    o = "derived: general needle relations"

    def green(h):
        sym, alt = pr.sym_alt(pr.demazure("s", h))
        return sym, _alt_quotient(alt)

    sf, af = green(f)
    sg, ag = green(g)
    dst_f, dst_g = pr.demazure_word("st", f), pr.demazure_word("st", g)
    e1 = AS + AT
    return [
        _rel(
            f"general_needle.green@{tag}",
            f"cap_g . {mg} . split_ggg",
            _combo([(sf, "dotu_g"), (af, "dotu_o . biv_og")]),
            o,
            "derived",
        ),
        _rel(
            f"general_needle.green_orange@{tag}",
            f"cap_g . {mg} . ({D_RIGHT} x id(Y)) . split_ggg",
            _combo([(sg, "dotu_g"), (ag, "dotu_o . biv_og")]),
            o,
            "derived",
        ),
        _rel(
            f"general_needle.green_landing@{tag}",
            f"cap_g . {mg} . split_ggg . {LIN}",
            _combo([(sf, f"dotu_g . {LIN}"), (af, "dotu_o x dotu_g")]),
            o,
            "derived",
        ),
        _rel(
            f"general_needle.green_landing_orange@{tag}",
            f"cap_g . {mg} . {ORANGE_ON_GREEN} . (id(X) x split_ggg)",
            _combo([(sg, f"dotu_g . {LIN}"), (ag, "dotu_o x dotu_g")]),
            o,
            "derived",
        ),
        _rel(f"general_needle.green_brown@{tag}", f"cap_g . {mg} . tri_d_bgg", "0", o, "derived"),
        _rel(
            f"general_needle.green_brown_orange@{tag}",
            f"cap_g . {mg} . ({D_RIGHT} x id(Y)) . tri_d_bgg",
            "0",
            o,
            "derived",
        ),
        _rel(
            f"general_needle.brown_green@{tag}",
            f"cap_b . {mb} . tri_d_gbb",
            _combo([(dst_f * HALF, "poly[as + at] x dotu_g - dotu_o . biv_og")]),
            o,
            "derived",
        ),
        _rel(
            f"general_needle.brown_green_orange@{tag}",
            f"cap_b . {mb} . {ORANGE_ON_BROWN} . (id(X) x tri_d_gbb)",
            _combo(
                [
                    (-dst_g * ALT_ROOT * HALF, f"dotu_g . {LIN}"),
                    (_alt_quotient(e1 * dst_g) * HALF, "dotu_o x dotu_g"),
                ]
            ),
            o,
            "derived",
        ),
        _rel(
            f"general_needle.brown@{tag}",
            f"cap_b . {mb} . split_bbb",
            _combo([(dst_f, "dotu_b")]),
            o,
            "derived",
        ),
        _rel(
            f"general_needle.brown_orange@{tag}",
            f"cap_b . {mb} . {ORANGE_ON_BROWN} . (id(X) x split_bbb)",
            _combo([(_alt_quotient(dst_g), "dotu_o x dotu_b")]),
            o,
            "derived",
        ),
    ]


def _general_circles(f: Poly, tag: str) -> list[Relation]:
    g = f * ALT_ROOT
    mg, mb = _middle("g", f), _middle("b", f)
    e1, e2 = AS + AT, AS * AT
    o = "derived: general circle relations"

    def closed(h):
        sym, alt = pr.sym_alt(pr.demazure("s", h))
        return sym * e1 + alt * ALT_ROOT

    def landed(h):
        sym, alt = pr.sym_alt(pr.demazure("s", h))
        return sym + _alt_quotient(alt * e1)

    def scalar(c: Poly) -> str:
        return _p(c) if c else "0"

    return [
        _rel(f"general_circle.green@{tag}", f"cap_g . {mg} . cup_g", scalar(closed(f)), o, "derived"),
        _rel(
            f"general_circle.green_landing@{tag}",
            f"cap_g . {mg} . land_d_ogg",
            _combo([(landed(f), "dotu_o")]),
            o,
            "derived",
        ),
        _rel(
            f"general_circle.green_orange@{tag}",
            f"cap_g . {mg} . ({D_RIGHT} x id(Y)) . cup_g",
            scalar(closed(g)),
            o,
            "derived",
        ),
        _rel(
            f"general_circle.green_landing_orange@{tag}",
            f"cap_g . {mg} . {ORANGE_ON_GREEN} . (id(X) x cup_g)",
            _combo([(landed(g), "dotu_o")]),
            o,
            "derived",
        ),
        _rel(
            f"general_circle.brown@{tag}",
            f"cap_b . {mb} . cup_b",
            scalar(pr.demazure_word("st", f) * e2),
            o,
            "derived",
        ),
        _rel(
            f"general_circle.brown_orange@{tag}",
            f"cap_b . {mb} . {ORANGE_ON_BROWN} . (id(X) x cup_b)",
            _combo([(_alt_quotient(pr.demazure_word("st", g) * e2), "dotu_o")]),
            o,
            "derived",
        ),
    ]


def _family(f: Poly) -> list[Relation]:
    tag = pr.format_poly(f).replace(" ", "")
    return [
        _rel(
            f"orange.poly_slide@{tag}",
            f"{_p(f)} x id(X)",
            f"id(X) x {_p(f)}",
            "derived: polynomials slide over the orange strand",
            "derived",
        ),
        *_general_forcing(f, tag),
        *_general_needles(f, tag),
        *_general_circles(f, tag),
    ]


def parse_family(texts: Sequence[str]) -> list[Poly]:
    """Parse and check the polynomials the general families are instantiated at."""
    out = []
    for text in texts:
        f = pr.parse_poly(text)
        if not pr.is_invariant(f):
            raise ValueError(f"family polynomial {text!r} is not tau-invariant")
        if not pr.is_homogeneous(f) or not f:
            raise ValueError(f"family polynomial {text!r} must be nonzero and homogeneous")
        out.append(f)
    return out


def relation_catalog(family: Sequence[str] = config.DEFAULT_FAMILY) -> list[Relation]:
    """Every relation, defining ones first, each family instantiated at `family`."""
    rels = [
        *_barbells(),
        *_vertices(),
        *_bivalents(),
        *_circles_needles(),
        *_units(),
        *_forcing(),
        *_landings(),
        *_bigons_hi(),
        *_orange(),
        *_slides(),
    ]
    for f in parse_family(family):
        rels.extend(_family(f))
    seen = set()
    for r in rels:
        if r.id in seen:
            raise ValueError(f"duplicate relation id {r.id!r}")
        seen.add(r.id)
    logger.debug("catalog has %d relations", len(rels))
    return rels


# ---------------------------------------------------------------- verification


def _verify_one(r: Relation) -> dict:
    try:
        ok = verify_relation(r)
        return {"id": r.id, "ok": ok, "origin": r.origin, "kind": r.kind}
    except (ParseError, ShapeError, ValueError) as exc:
        return {"id": r.id, "ok": False, "origin": r.origin, "kind": r.kind, "error": str(exc)}


def verify_catalog(relations: Sequence[Relation], workers: int = 1) -> list[dict]:
    """Per-relation results sorted by id; a process pool when workers > 1."""
    if workers > 1 and len(relations) > 1:
        ctx = mp.get_context("spawn")
        with ctx.Pool(processes=workers) as pool:
            results = pool.map(_verify_one, relations)
    else:
        results = [_verify_one(r) for r in relations]
    failed = [res["id"] for res in results if not res["ok"]]
    if failed:
        logger.warning("%d relation(s) failed: %s", len(failed), ", ".join(failed))
    return sorted(results, key=lambda res: res["id"])


# ---------------------------------------------------------------- files


def _schema() -> dict:
    with open(os.path.join(config.schema_dir(), SCHEMA_FILE), "r", encoding="utf-8") as fh:
        return json.load(fh)


def load_catalog(path: str) -> list[Relation]:
    """Read a JSON-lines catalog, validating every line against the relation schema."""
    schema = _schema()
    rels = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                jsonschema.validate(instance=rec, schema=schema)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: not JSON ({exc.msg})") from None
            except jsonschema.ValidationError as exc:
                raise ValueError(f"{path}:{lineno}: {exc.message}") from None
            rels.append(Relation(rec["id"], rec["lhs"], rec["rhs"], rec["origin"], rec.get("kind", "defining")))
    return rels


def dump_catalog(relations: Sequence[Relation], path: str) -> str:
    """Write one canonical JSON object per line; return the digest of the records."""
    records = [r.to_json() for r in relations]
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_jsonl(records))
    return canonical_digest(records)
