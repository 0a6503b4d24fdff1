"""
End-to-end tests for the command line front end.
"""

import io
import json

import pytest

from foldsoergel import cli
from foldsoergel.foldcat import catalog


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


class TestRing:
    def test_normal_form(self, clean_env):
        code, report = run_json("ring", "Y*Y")
        assert code == cli.EXIT_OK
        assert report["normal_form"] == "(v+v^-1)Y + Z + XZ"
        assert report["coefficients"]["Y"] == "v+v^-1"
        assert "specialized" not in report

    def test_specialize(self, clean_env):
        code, report = run_json("ring", "Z*Z", "--specialize=-1")
        assert code == cli.EXIT_OK
        assert report["specialized"]["normal_form"] == "(v^2+v^-2)Z"
        assert report["specialized"]["x"] == -1

    def test_bad_expression(self, clean_env):
        code, report = run_json("ring", "Y +")
        assert code == cli.EXIT_USAGE
        assert report["kind"] == "ParseError"

    def test_text_format(self, clean_env):
        code, text = run("ring", "Y*Y", "--format", "text")
        assert code == cli.EXIT_OK
        assert "normal_form: (v+v^-1)Y + Z + XZ" in text.splitlines()


class TestDecompose:
    def test_word(self, clean_env):
        code, report = run_json("decompose", "Y*Z[2]")
        assert code == cli.EXIT_OK
        assert report["class_matches"] is True
        assert report["summands"] == [["Z", 1, 1], ["Z", 3, 1], ["XZ", 1, 1], ["XZ", 3, 1]]

    def test_bad_word(self, clean_env):
        code, _ = run("decompose", "Y*W")
        assert code == cli.EXIT_USAGE


class TestHom:
    def test_orange_to_unit(self, clean_env):
        code, report = run_json("hom", "--src", "X", "--dst", "1", "--max-degree", "6")
        assert code == cli.EXIT_OK
        assert report["dims"] == {"2": 1, "4": 1, "6": 2}
        assert report["numerator"] == "v^2"
        assert report["certified_through"] == 6
        assert "basis" not in report

    def test_orange_to_unit_with_workers(self, clean_env):
        code, report = run_json("hom", "--src", "X", "--dst", "1", "--max-degree", "6", "--workers", "2")
        assert code == cli.EXIT_OK
        assert report["dims"] == {"2": 1, "4": 1, "6": 2}

    def test_basis(self, clean_env):
        code, report = run_json("hom", "--src", "Z", "--dst", "1", "--max-degree", "2", "--basis")
        assert code == cli.EXIT_OK
        assert len(report["basis"]["2"]) == 1
        assert report["basis"]["2"][0]["degree"] == 2

    def test_unknown_object(self, clean_env):
        code, _ = run("hom", "--src", "Q", "--dst", "1")
        assert code == cli.EXIT_USAGE


class TestEval:
    def test_barbell(self, clean_env):
        code, report = run_json("eval", "dotu_g . dotd_g")
        assert code == cli.EXIT_OK
        assert (report["source"], report["target"], report["degree"]) == ("1", "1", 2)

    def test_shape_error(self, clean_env):
        code, report = run_json("eval", "dotu_g . dotu_b")
        assert code == cli.EXIT_USAGE
        assert report["kind"] == "ShapeError"


class TestCatalogCommands:
    def test_verify_one(self, clean_env):
        code, report = run_json("verify", "--only", "barbell.green")
        assert code == cli.EXIT_OK
        assert report["total"] == report["passed"] == 1

    def test_verify_unknown_id(self, clean_env):
        code, report = run_json("verify", "--only", "no.such.relation")
        assert code == cli.EXIT_USAGE
        assert report["kind"] == "UnknownNameError"

    @pytest.mark.parametrize(
        "lhs, rhs",
        [
            ("dotu_g . ?", "poly[as + at]"),
            ("dotu_g . dotd_g", "poly[as*at]"),
            ("dotu_g . dotu_b", "poly[as + at]"),
        ],
    )
    def test_verify_malformed_catalog(self, clean_env, tmp_path, lhs, rhs):
        path = tmp_path / "bad.jsonl"
        record = {"id": "bad", "lhs": lhs, "rhs": rhs, "origin": "test"}
        path.write_text(json.dumps(record) + "\n", encoding="utf-8")
        code, report = run_json("verify", "--catalog", str(path))
        assert code == cli.EXIT_USAGE
        assert report["results"][0]["ok"] is False
        assert report["results"][0]["error"]

    def test_verify_false_relation(self, clean_env, tmp_path):
        path = tmp_path / "false.jsonl"
        record = {"id": "bad", "lhs": "dotu_g . dotd_g", "rhs": "2 * poly[as + at]", "origin": "test"}
        path.write_text(json.dumps(record) + "\n", encoding="utf-8")
        code, report = run_json("verify", "--catalog", str(path))
        assert code == cli.EXIT_FAILED
        assert report["failed"] == 1
        assert "error" not in report["results"][0]

    def test_verify_catalog_not_json(self, clean_env, tmp_path):
        path = tmp_path / "broken.jsonl"
        path.write_text("{not json\n", encoding="utf-8")
        code, report = run_json("verify", "--catalog", str(path))
        assert code == cli.EXIT_USAGE
        assert "not JSON" in report["error"]

    def test_export_catalog(self, clean_env, tmp_path):
        path = tmp_path / "catalog.jsonl"
        code, report = run_json("export-catalog", str(path))
        assert code == cli.EXIT_OK
        assert report["count"] == len(catalog.relation_catalog())
        assert len(path.read_text(encoding="utf-8").splitlines()) == report["count"]

    def test_export_table(self, clean_env):
        code, report = run_json("export-table")
        assert code == cli.EXIT_OK
        assert report["digest"]


class TestSuitesAndConsistency:
    def test_suite(self, clean_env):
        code, report = run_json("suite", "YY")
        assert code == cli.EXIT_OK
        assert report["ok"] is True

    def test_ring_only(self, clean_env):
        code, report = run_json("consistency", "--ring-only")
        assert code == cli.EXIT_OK
        assert len(report["ring"]) == 39
        assert "solver" not in report

    def test_solver(self, clean_env):
        code, report = run_json("consistency", "--max-length", "1", "--max-degree", "6")
        assert code == cli.EXIT_OK
        assert [row["word"] for row in report["solver"]] == ["X", "Y", "Z"]


class TestUsage:
    def test_unknown_command(self, clean_env):
        code, _ = run("frobnicate")
        assert code == cli.EXIT_USAGE

    @pytest.mark.parametrize("value", ["-1", "many"])
    def test_bad_degree_bound(self, clean_env, monkeypatch, value):
        monkeypatch.setenv("FOLD_SOERGEL_DEGREE_BOUND", value)
        code, report = run_json("ring", "Y")
        assert code == cli.EXIT_USAGE
        assert "FOLD_SOERGEL_DEGREE_BOUND" in report["error"] or "degree bound" in report["error"]
