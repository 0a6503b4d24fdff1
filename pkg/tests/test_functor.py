"""
Tests for the functor F on generators and composite expressions.
"""

import pytest

from foldsoergel import bimod as bm
from foldsoergel import equiv as eq
from foldsoergel import polyring as pr
from foldsoergel.errors import NotInvariantError, UnknownNameError
from foldsoergel.foldcat import expr as ex
from foldsoergel.foldcat import functor
from foldsoergel.polyring import AS, AT
from foldsoergel.utils.canonicalize import canonical_digest


@pytest.mark.parametrize("name", sorted(ex.GENERATORS))
def test_generator_image_is_equivariant(name):
    m = functor.generator_image(name)
    assert m.is_equivariant()
    assert bm.check_bimodule_summor(m.mor)
    assert m.degree == ex.GENERATORS[name][2]
    for block in m.mor.blocks.values():
        assert bm.degree_of(block) == m.degree


def test_unknown_generator():
    with pytest.raises(UnknownNameError):
        functor.generator_image("dotu_q")


class TestFold:
    def test_fold_words(self):
        assert functor.fold("") == eq.indecomposable("One")
        assert functor.fold("XZ") == eq.indecomposable("XZ")
        assert len(functor.fold("YY").underlying) == 4

    def test_identity(self):
        assert functor.evaluate_text("id(YY)") == eq.eq_identity(functor.fold("YY"))


class TestBarbells:
    def test_green(self):
        assert functor.evaluate_text("dotu_g . dotd_g") == functor.poly_image(AS + AT)

    def test_brown(self):
        assert functor.evaluate_text("dotu_b . dotd_b") == functor.poly_image(AS * AT)

    def test_orange(self):
        assert functor.evaluate_text("dotu_o . dotd_o") == functor.poly_image((AS - AT) ** 2)


class TestEvaluation:
    def test_scalar_linearity(self):
        a = functor.evaluate_text("2 * (dotu_g . dotd_g) - poly[as + at]")
        assert a == functor.poly_image(AS + AT)
        b = functor.evaluate_text("poly[as + at] * (dotu_g . dotd_g) - dotu_b . dotd_b")
        assert b == functor.poly_image((AS + AT) ** 2 - AS * AT)

    def test_poly_coefficient(self):
        a = functor.evaluate_text("poly[as*at] * dotu_g")
        assert a == functor.generator_image("dotu_g").left_mul(AS * AT)

    def test_orange_crossings_cancel(self):
        assert functor.evaluate_text("x_go . x_og") == eq.eq_identity(functor.fold("XY"))

    def test_not_invariant(self):
        with pytest.raises(NotInvariantError):
            functor.poly_image(AS)
        with pytest.raises(NotInvariantError):
            functor.f_eval(ex.ScalePoly(AS, ex.Gen("dotu_g")))

    def test_json(self):
        data = functor.eqmor_to_json(functor.generator_image("dotu_o"))
        assert data["degree"] == 2
        assert data["blocks"][0]["map"]["entries"] == [[0, 0, pr.format_poly(AS - AT)]]


class TestExportTable:
    def test_rows(self):
        table = functor.export_table()
        assert len(table["generators"]) == len(ex.GENERATORS)
        assert table["digest"] == canonical_digest(table["generators"])
        names = [row["name"] for row in table["generators"]]
        assert names == sorted(names)

    def test_deterministic(self):
        assert functor.export_table_text() == functor.export_table_text()
