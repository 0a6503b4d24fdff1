"""
Tests for the Hom space solver, from single degrees up to the degree 12 sweeps.
"""

import pytest

from foldsoergel import bimod as bm
from foldsoergel import grring, homsolve
from foldsoergel.bimod import Obj, SumObj
from foldsoergel.errors import NoFitError, UnknownNameError
from foldsoergel.polyring import AS, AT, LaurentInt


class TestHomBasis:
    @pytest.mark.parametrize(
        "src, dst, degree, dim",
        [
            ("X", "One", 2, 1),
            ("X", "One", 1, 0),
            ("X", "One", 0, 0),
            ("Y", "One", 1, 1),
            ("Y", "One", 3, 2),
            ("One", "One", 0, 1),
            ("Z", "One", 2, 1),
            ("XZ", "One", 2, 0),
        ],
    )
    def test_dimensions(self, indecomposables, src, dst, degree, dim):
        space = homsolve.hom_basis(indecomposables[src], indecomposables[dst], degree)
        assert space.dim == dim

    def test_members_are_equivariant_bimodule_maps(self, indecomposables):
        for name in ("Y", "Z"):
            space = homsolve.hom_basis(indecomposables["Y"], indecomposables[name], 1)
            for m in space.basis:
                assert m.degree == 1
                assert m.is_equivariant()
                assert bm.check_bimodule_summor(m.mor)

    def test_orange_dot_spans(self, indecomposables):
        (m,) = homsolve.hom_basis(indecomposables["X"], indecomposables["One"], 2).basis
        entry = m.mor.block(0, 0).entry(0, 0)
        assert entry != 0
        assert entry.coeff(AS) == -entry.coeff(AT)

    def test_bimodule_hom_basis(self):
        basis = homsolve.bimodule_hom_basis(SumObj((Obj("s"),)), SumObj((Obj(),)), 1)
        assert len(basis) == 1
        assert bm.check_bimodule_summor(basis[0])

    def test_min_degree(self, indecomposables):
        assert homsolve.min_degree(indecomposables["Y"], indecomposables["Y"]) == -2
        assert homsolve.min_degree(indecomposables["One"], indecomposables["One"]) == 0


class TestGradedDimensions:
    def test_unit(self, indecomposables):
        one = indecomposables["One"]
        assert homsolve.graded_dim(one, one, 8) == LaurentInt({0: 1, 2: 1, 4: 2, 6: 2, 8: 3})

    def test_brown(self, indecomposables):
        z, one = indecomposables["Z"], indecomposables["One"]
        assert homsolve.graded_dim(z, one, 6) == LaurentInt({2: 1, 4: 1, 6: 2})

    @pytest.mark.parametrize(
        "name, numerator",
        [
            ("One", LaurentInt.const(1)),
            ("X", LaurentInt.v(2)),
            ("Y", LaurentInt({1: 1, 3: 1})),
            ("Z", LaurentInt.v(2)),
            ("XZ", LaurentInt.v(4)),
        ],
    )
    def test_free_rank(self, indecomposables, name, numerator):
        got = homsolve.free_rank_over_rtau(indecomposables[name], indecomposables["One"], 8)
        assert got == numerator

    def test_no_fit(self, indecomposables, monkeypatch):
        monkeypatch.setattr(homsolve, "graded_dim", lambda *args: LaurentInt({0: 1, 2: -1}))
        with pytest.raises(NoFitError):
            homsolve.free_rank_over_rtau(indecomposables["One"], indecomposables["One"], 4)

    def test_adjunction(self, indecomposables):
        assert homsolve.adjunction_dims_agree(indecomposables["One"], indecomposables["X"], 4)
        assert homsolve.adjunction_dims_agree(indecomposables["Y"], indecomposables["One"], 3)


class TestChecks:
    @pytest.mark.parametrize("name", ["One", "X", "Y", "Z", "XZ"])
    def test_spanning(self, name):
        assert homsolve.verify_spanning(name, 6)

    def test_spanning_unknown(self):
        with pytest.raises(UnknownNameError):
            homsolve.verify_spanning("W", 2)

    def test_end_rings(self):
        report = homsolve.end_ring_checks(4)
        assert report["end_Y"]
        assert report["end_X_equals_end_One"]
        assert all(report["degree_zero_local"].values())
        assert report["ok"]

    def test_consistency_table(self):
        rows = homsolve.consistency_table(["X", "Y", "XY"], 6)
        assert [r["word"] for r in rows] == ["X", "Y", "XY"]
        assert all(r["ok"] for r in rows)
        assert rows[1]["solver"] == "v^3+v"


FREE_RANKS = [
    ("One", LaurentInt.const(1)),
    ("X", LaurentInt.v(2)),
    ("Y", LaurentInt({1: 1, 3: 1})),
    ("Z", LaurentInt.v(2)),
    ("XZ", LaurentInt.v(4)),
]


class TestDegreeTwelve:
    @pytest.mark.parametrize("name, numerator", FREE_RANKS)
    def test_free_rank(self, indecomposables, name, numerator):
        got = homsolve.free_rank_over_rtau(indecomposables[name], indecomposables["One"], 12)
        assert got == numerator

    @pytest.mark.parametrize("name", ["One", "X", "Y", "Z", "XZ"])
    def test_spanning(self, name):
        assert homsolve.verify_spanning(name, 12)

    def test_end_rings(self):
        assert homsolve.end_ring_checks(12)["ok"]

    def test_consistency_over_all_short_words(self):
        words = grring.all_words(3)
        rows = homsolve.consistency_table(words, 12)
        assert len(rows) == len(words)
        assert [r["word"] for r in rows if not r["ok"]] == []


def test_parallel_graded_dim_matches_sequential(indecomposables):
    y, one = indecomposables["Y"], indecomposables["One"]
    sequential = homsolve.graded_dim(y, one, 6)
    assert homsolve.graded_dim(y, one, 6, workers=2) == sequential
    assert sequential == LaurentInt({1: 1, 3: 2, 5: 3})
