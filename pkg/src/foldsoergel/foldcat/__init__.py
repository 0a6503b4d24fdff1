"""Folded diagram category: expressions, the functor F, relations and suites."""

from .catalog import Relation, relation_catalog, verify_catalog, verify_relation
from .expr import GENERATORS, parse_expr, shape
from .functor import export_table, f_eval, fold
from .suites import check_suite, idempotent_suite

__all__ = [
    "GENERATORS",
    "Relation",
    "check_suite",
    "export_table",
    "f_eval",
    "fold",
    "idempotent_suite",
    "parse_expr",
    "relation_catalog",
    "shape",
    "verify_catalog",
    "verify_relation",
]
