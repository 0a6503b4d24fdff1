"""cli.py - batch command line front end

Every command prints one report on stdout (canonical JSON by default) and
returns an exit status: 0 on success, 1 when a check fails, 2 on parse,
shape or usage errors. Logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Sequence

import jsonschema

from . import config
from . import equiv as eq
from . import grring, homsolve
from . import polyring as pr
from .errors import (
    InhomogeneousError,
    NoFitError,
    NotInvariantError,
    ParseError,
    ShapeError,
    UnknownNameError,
)
from .foldcat import catalog, expr, functor, suites
from .utils.canonicalize import canonicalize_json

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
REPORT_SCHEMA = "verify_report.v1.json"


# ---------------------------------------------------------------- commands


def _verify(args, cfg: config.RunConfig) -> tuple[dict, int]:
    if cfg.catalog_path:
        relations = catalog.load_catalog(cfg.catalog_path)
    else:
        relations = catalog.relation_catalog(cfg.family)
    if args.only:
        wanted = set(args.only)
        relations = [r for r in relations if r.id in wanted]
        missing = wanted - {r.id for r in relations}
        if missing:
            raise UnknownNameError(f"no relation with id {', '.join(sorted(missing))}")
    results = catalog.verify_catalog(relations, workers=cfg.workers)
    passed = sum(1 for r in results if r["ok"])
    report = {
        "passed": passed,
        "failed": len(results) - passed,
        "total": len(results),
        "results": results,
    }
    with open(os.path.join(config.schema_dir(), REPORT_SCHEMA), "r", encoding="utf-8") as fh:
        jsonschema.validate(instance=report, schema=json.load(fh))
    if any("error" in r for r in results):
        return report, EXIT_USAGE
    return report, EXIT_OK if passed == len(results) else EXIT_FAILED


def _hom(args, cfg: config.RunConfig) -> tuple[dict, int]:
    src, dst = eq.parse_object(args.src), eq.parse_object(args.dst)
    bound = cfg.degree_bound
    series = homsolve.graded_dim(src, dst, bound, workers=cfg.workers)
    dims = {str(d): n for d, n in series.items()}
    basis = {}
    if args.basis:
        for d, _ in series.items():
            basis[str(d)] = [functor.eqmor_to_json(m) for m in homsolve.hom_basis(src, dst, d).basis]
    report = {
        "source": args.src,
        "target": args.dst,
        "max_degree": bound,
        "dims": dims,
        "series": pr.format_laurent(series),
        "certified_through": bound,
    }
    status = EXIT_OK
    numerator = pr.series_mul(series, pr.RTAU_DENOMINATOR, bound)
    if numerator.is_nonnegative():
        report["numerator"] = pr.format_laurent(numerator)
    else:
        report["numerator"] = None
        report["error"] = str(
            NoFitError(f"no nonnegative numerator fits {pr.format_laurent(series)}")
        )
        status = EXIT_FAILED
    if args.basis:
        report["basis"] = basis
    return report, status


def _decompose(args, cfg: config.RunConfig) -> tuple[dict, int]:
    summands = grring.decompose_word(args.word)
    cls = grring.class_of_word(args.word)
    ok = grring.ring_class(summands) == cls
    report = {
        "word": args.word,
        "summands": [list(row) for row in grring.sorted_summands(summands)],
        "class": str(cls),
        "class_matches": ok,
    }
    return report, EXIT_OK if ok else EXIT_FAILED


def _ring(args, cfg: config.RunConfig) -> tuple[dict, int]:
    value = grring.parse_ring(args.expr)
    report = {"expr": args.expr, **value.to_json()}
    if args.specialize is not None:
        report["specialized"] = grring.specialize(value, args.specialize).to_json()
    return report, EXIT_OK


def _eval(args, cfg: config.RunConfig) -> tuple[dict, int]:
    e = expr.parse_expr(args.expr)
    s = expr.shape(e)
    report = {
        "expr": expr.to_text(e),
        "source": s.source or "1",
        "target": s.target or "1",
        "degree": s.degree,
        "map": functor.eqmor_to_json(functor.f_eval(e)),
    }
    return report, EXIT_OK


def _export_catalog(args, cfg: config.RunConfig) -> tuple[dict, int]:
    relations = catalog.relation_catalog(cfg.family)
    digest = catalog.dump_catalog(relations, args.path)
    return {"path": args.path, "count": len(relations), "digest": digest}, EXIT_OK


def _export_table(args, cfg: config.RunConfig) -> tuple[dict, int]:
    return functor.export_table(), EXIT_OK


def _suite(args, cfg: config.RunConfig) -> tuple[dict, int]:
    pairs = args.pair or sorted(suites.SUITES)
    reports = [suites.check_suite(p) for p in pairs]
    ok = all(r["ok"] for r in reports)
    return {"suites": reports, "ok": ok}, EXIT_OK if ok else EXIT_FAILED


def _consistency(args, cfg: config.RunConfig) -> tuple[dict, int]:
    words = grring.all_words(args.max_length)
    ring_rows = []
    for w in words:
        ring_rows.append(
            {
                "word": w,
                "ok": grring.ring_class(grring.decompose_word(w)) == grring.class_of_word(w),
            }
        )
    report = {"max_degree": cfg.degree_bound, "ring": ring_rows}
    ok = all(r["ok"] for r in ring_rows)
    if not args.ring_only:
        try:
            rows = homsolve.consistency_table(words, cfg.degree_bound, workers=cfg.workers)
        except NoFitError as exc:
            report["error"] = str(exc)
            return report, EXIT_FAILED
        report["solver"] = rows
        ok = ok and all(r["ok"] for r in rows)
    report["ok"] = ok
    return report, EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "verify": _verify,
    "hom": _hom,
    "decompose": _decompose,
    "ring": _ring,
    "eval": _eval,
    "export-catalog": _export_catalog,
    "export-table": _export_table,
    "suite": _suite,
    "consistency": _consistency,
}


# ---------------------------------------------------------------- parsing and output


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None)
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--max-degree", type=int, default=None, dest="max_degree")
    common.add_argument("--family-poly", action="append", default=None, dest="family")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(prog="foldsoergel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check every catalog relation under F")
    p.add_argument("--catalog", default=None)
    p.add_argument("--only", action="append", default=None)

    p = sub.add_parser("hom", parents=[common], help="graded Hom space between two objects")
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("--basis", action="store_true")

    p = sub.add_parser("decompose", parents=[common], help="split a tensor word into indecomposables")
    p.add_argument("word")

    p = sub.add_parser("ring", parents=[common], help="normal form in the Grothendieck ring")
    p.add_argument("expr")
    p.add_argument("--specialize", type=int, choices=(1, -1), default=None)

    p = sub.add_parser("eval", parents=[common], help="evaluate a diagram expression under F")
    p.add_argument("expr")

    p = sub.add_parser("export-catalog", parents=[common], help="write the relation catalog as JSONL")
    p.add_argument("path")

    sub.add_parser("export-table", parents=[common], help="F on every generator")

    p = sub.add_parser("suite", parents=[common], help="check idempotent decompositions")
    p.add_argument("pair", nargs="*")

    p = sub.add_parser("consistency", parents=[common], help="Grothendieck ring against the solver")
    p.add_argument("--max-length", type=int, default=3, dest="max_length")
    p.add_argument("--ring-only", action="store_true", dest="ring_only")
    return parser


def _render_text(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {item}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                head = " ".join(f"{k}={item[k]}" for k in sorted(item) if not isinstance(item[k], (dict, list)))
                lines.append(f"{pad}- {head}")
            else:
                lines.append(f"{pad}- {item}")
        return lines
    return [f"{pad}{value}"]


def render(report: dict, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(_render_text(report)) + "\n"
    return canonicalize_json(report) + "\n"


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.log_level(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args.verbose)
    try:
        cfg = config.RunConfig.from_env(
            degree_bound=args.max_degree,
            catalog_path=getattr(args, "catalog", None),
            output_format=args.format,
            workers=args.workers,
            family=tuple(args.family) if args.family else None,
        )
        report, status = COMMANDS[args.command](args, cfg)
    except (ParseError, ShapeError, UnknownNameError, NotInvariantError, InhomogeneousError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        out.write(render({"error": str(exc), "kind": type(exc).__name__}, args.format or "json"))
        return EXIT_USAGE
    except NoFitError as exc:
        out.write(render({"error": str(exc), "kind": "NoFitError"}, args.format or "json"))
        return EXIT_FAILED
    except (ValueError, OSError, jsonschema.ValidationError) as exc:
        logger.error("%s", exc)
        out.write(render({"error": str(exc), "kind": type(exc).__name__}, args.format or "json"))
        return EXIT_USAGE
    out.write(render(report, cfg.output_format))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
