"""
Tests for rotations, orange circles and orange strand slides.
"""

import pytest

from foldsoergel.foldcat import expr as ex
from foldsoergel.foldcat import isotopy
from foldsoergel.foldcat.functor import evaluate_text


class TestBuilders:
    def test_cup_and_cap_shapes(self):
        assert ex.shape(ex.parse_expr(isotopy.cup("YZ"))) == ex.Shape("", "YZZY", 0)
        assert ex.shape(ex.parse_expr(isotopy.cap("XY"))) == ex.Shape("XYYX", "", 0)

    def test_rotate_shape(self):
        rotated = isotopy.rotate("tri_u_bgg")
        assert ex.shape(ex.parse_expr(rotated)) == ex.Shape("Z", "YY", 0)

    def test_cross_over_shape(self):
        assert ex.shape(ex.parse_expr(isotopy.cross_over("YZ"))) == ex.Shape("XYZ", "YZX", 0)
        assert ex.shape(ex.parse_expr(isotopy.cross_under("YZ"))) == ex.Shape("YZX", "XYZ", 0)

    def test_slide_generators_avoid_orange(self):
        names = isotopy.slide_generators()
        assert "merge_ggg" in names
        assert all("X" not in "".join(ex.GENERATORS[n][:2]) for n in names)


class TestIsotopyUnderF:
    @pytest.mark.parametrize("name", sorted(ex.GENERATORS))
    def test_full_rotation(self, name):
        twice = isotopy.rotate(isotopy.rotate(name))
        assert evaluate_text(twice) == evaluate_text(name)

    @pytest.mark.parametrize("name", ["dotu_g", "merge_ggg", "tri_u_gbb", "biv_gb"])
    def test_circle_erasure(self, name):
        assert evaluate_text(isotopy.encircle(name)) == evaluate_text(name)

    @pytest.mark.parametrize("text", list(isotopy.random_expressions(20, seed=11)))
    def test_circle_erasure_on_composites(self, text):
        assert evaluate_text(isotopy.encircle(text)) == evaluate_text(text)

    @pytest.mark.parametrize("name", isotopy.slide_generators())
    def test_orange_slides(self, name):
        left, right = isotopy.slide_sides(name)
        assert evaluate_text(left) == evaluate_text(right)

    def test_random_composites_slide(self):
        for text in isotopy.random_expressions(8, seed=3):
            left, right = isotopy.slide_sides(text)
            assert evaluate_text(left) == evaluate_text(right)


def test_random_expressions_reproducible():
    a = list(isotopy.random_expressions(10, seed=5))
    b = list(isotopy.random_expressions(10, seed=5))
    assert a == b
    for text in a:
        ex.parse_expr(text)


def test_rotated_dot_is_the_other_dot():
    assert evaluate_text(isotopy.rotate("dotu_g")) == evaluate_text("dotd_g")
