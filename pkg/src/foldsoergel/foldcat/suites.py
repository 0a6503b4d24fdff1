"""suites.py - orthogonal idempotent decompositions of YY, ZZ and YZ

Each summand is given by a projection pi and an inclusion iota (expression
text) with pi . iota = id on the summand; the idempotent is iota . pi.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .. import equiv as eq
from ..equiv import EqMor
from ..errors import UnknownNameError
from . import expr as ex
from .catalog import D_RIGHT, LIN, LOUT
from .functor import f_eval, fold

logger = logging.getLogger(__name__)

# right multiplication by alpha_s on B_s and by alpha_t on B_t
RIGHT_ROOT = f"(1/2 * (id(Y) x poly[as + at] + {D_RIGHT}))"

_BROWN_MERGE = "((id(Z) x cap_b) . (tri_d_gbb x id(Z)))"  # YZ -> Z
_BROWN_SPLIT = "((tri_u_gbb x id(Z)) . (id(Z) x cup_b))"  # Z -> YZ
_BROWN_MERGE_OR = f"((id(X) x {_BROWN_MERGE}) . ({LOUT} x id(Z)))"  # YZ -> XZ
_BROWN_SPLIT_OR = f"(({LIN} x id(Z)) . (id(X) x {_BROWN_SPLIT}))"  # XZ -> YZ


def _mid(poly: str) -> str:
    return f"(id(Z) x poly[{poly}] x id(Z))"


@dataclass(frozen=True)
class SuiteEntry:
    projection: str
    inclusion: str
    through: str
    shift: int

    def idempotent(self) -> ex.Expr:
        return ex.Compose(ex.parse_expr(self.inclusion), ex.parse_expr(self.projection))

    def label(self) -> str:
        return f"{self.through}[{self.shift}]" if self.shift else self.through


SUITES: dict[str, list[SuiteEntry]] = {
    "YY": [
        SuiteEntry("merge_ggg", f"1/2 * (({RIGHT_ROOT} x id(Y)) . split_ggg)", "Y", -1),
        SuiteEntry(f"merge_ggg . ({RIGHT_ROOT} x id(Y))", "1/2 * split_ggg", "Y", 1),
        SuiteEntry("tri_u_bgg", "1/2 * tri_d_bgg", "Z", 0),
        SuiteEntry(
            f"(id(X) x tri_u_bgg) . ({LOUT} x id(Y))",
            f"1/2 * (({LIN} x id(Y)) . (id(X) x tri_d_bgg))",
            "XZ",
            0,
        ),
    ],
    "ZZ": [
        SuiteEntry("merge_bbb", f"1/4 * ({_mid('as*at')} . split_bbb)", "Z", -2),
        SuiteEntry(f"merge_bbb . {_mid('as + at')}", f"1/8 * ({_mid('as + at')} . split_bbb)", "Z", 0),
        SuiteEntry(f"1/4 * (merge_bbb . {_mid('as*at')})", "split_bbb", "Z", 2),
        SuiteEntry(
            "(id(X) x merge_bbb) . (x_bo x id(Z)) . (id(Z) x dotd_o x id(Z))",
            "-1/8 * ((id(Z) x dotu_o x id(Z)) . (x_ob x id(Z)) . (id(X) x split_bbb))",
            "XZ",
            0,
        ),
    ],
    "YZ": [
        SuiteEntry(_BROWN_MERGE, f"1/4 * (({RIGHT_ROOT} x id(Z)) . {_BROWN_SPLIT})", "Z", -1),
        SuiteEntry(f"{_BROWN_MERGE} . ({RIGHT_ROOT} x id(Z))", f"1/4 * {_BROWN_SPLIT}", "Z", 1),
        SuiteEntry(_BROWN_MERGE_OR, f"1/4 * (({RIGHT_ROOT} x id(Z)) . {_BROWN_SPLIT_OR})", "XZ", -1),
        SuiteEntry(f"{_BROWN_MERGE_OR} . ({RIGHT_ROOT} x id(Z))", f"1/4 * {_BROWN_SPLIT_OR}", "XZ", 1),
    ],
}


def idempotent_suite(pair: str) -> list[SuiteEntry]:
    try:
        return SUITES[pair]
    except KeyError:
        raise UnknownNameError(f"no idempotent suite for {pair!r}; expected one of {sorted(SUITES)}") from None


def _word(through: str) -> str:
    return through.replace("*", "")


def check_suite(pair: str) -> dict:
    """Completeness, orthogonality, factorization and degree checks, all exact."""
    entries = idempotent_suite(pair)
    ident = eq.eq_identity(fold(pair))
    idems: list[EqMor] = [f_eval(e.idempotent()) for e in entries]

    total = idems[0]
    for m in idems[1:]:
        total = total + m
    complete = total == ident

    orthogonal = True
    for i, a in enumerate(idems):
        for j, b in enumerate(idems):
            prod = eq.compose_eq(a, b)
            if i == j:
                orthogonal &= prod == a
            else:
                orthogonal &= prod.is_zero()

    factors, degrees = [], []
    for e in entries:
        pi, iota = ex.parse_expr(e.projection), ex.parse_expr(e.inclusion)
        back = f_eval(ex.Compose(pi, iota))
        factors.append(back == eq.eq_identity(fold(_word(e.through))))
        degrees.append(ex.shape(pi).degree == e.shift and ex.shape(iota).degree == -e.shift)

    report = {
        "pair": pair,
        "summands": [e.label() for e in entries],
        "complete": complete,
        "orthogonal": orthogonal,
        "factor_through": factors,
        "degrees": degrees,
    }
    report["ok"] = complete and orthogonal and all(factors) and all(degrees)
    logger.debug("suite %s: %s", pair, report)
    return report
