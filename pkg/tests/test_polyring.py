"""
Tests for the polynomial ring, Demazure operators and Laurent polynomials.
"""

import random

import pytest

from foldsoergel import polyring as pr
from foldsoergel.errors import ExactDivisionError, InhomogeneousError, ParseError
from foldsoergel.polyring import AS, AT, LaurentInt


def random_poly(rng, max_deg=3):
    f = pr.R.zero
    for i in range(max_deg + 1):
        for j in range(max_deg + 1 - i):
            f += rng.randint(-3, 3) * AS**i * AT**j
    return f


class TestReflections:
    def test_simple_reflections(self):
        assert pr.act_simple("s", AS) == -AS
        assert pr.act_simple("s", AT) == AT
        assert pr.act_simple("t", AS * AT) == -AS * AT

    def test_tau_swaps_roots(self):
        assert pr.tau(AS) == AT
        assert pr.tau(AS**2 * AT) == AS * AT**2

    def test_act_word_rightmost_first(self):
        assert pr.act_word("st", AS + 2 * AT) == -AS - 2 * AT

    def test_unknown_reflection(self):
        with pytest.raises(ValueError, match="'s' or 't'"):
            pr.act_simple("u", AS)


class TestDemazure:
    def test_values(self):
        assert pr.demazure("s", AS) == 2
        assert pr.demazure("s", AT) == 0
        assert pr.demazure("s", AS * AT) == 2 * AT
        assert pr.demazure("t", AT**3) == 2 * AT**2

    def test_lowers_degree_by_two(self):
        assert pr.degree(pr.demazure("s", AS**3)) == 4

    def test_twisted_leibniz(self):
        rng = random.Random(7)
        for _ in range(30):
            f, g = random_poly(rng), random_poly(rng)
            for c in "st":
                lhs = pr.demazure(c, f * g)
                rhs = pr.demazure(c, f) * g + pr.act_simple(c, f) * pr.demazure(c, g)
                assert lhs == rhs

    def test_result_is_invariant(self):
        rng = random.Random(11)
        for _ in range(20):
            f = random_poly(rng)
            d = pr.demazure("s", f)
            assert pr.act_simple("s", d) == d

    def test_demazure_word(self):
        assert pr.demazure_word("st", AS * AT) == 4

    def test_split_over_invariants(self):
        f = AS**3 + AS * AT + 5
        a, b = pr.split_over_invariants("s", f)
        assert a + b * AS == f
        assert pr.act_simple("s", a) == a and pr.act_simple("s", b) == b

    @pytest.mark.parametrize("gen", ["s", "t"])
    def test_split_over_invariants_sweep(self, gen):
        rng = random.Random(12)
        for _ in range(200):
            f = random_poly(rng, max_deg=rng.randint(0, 6))
            a, b = pr.split_over_invariants(gen, f)
            assert a + b * pr.ALPHA[gen] == f
            assert pr.act_simple(gen, a) == a
            assert pr.act_simple(gen, b) == b

    def test_split_of_homogeneous_lowers_degree(self):
        rng = random.Random(13)
        for _ in range(50):
            k = rng.randint(1, 6)
            f = AT**k + rng.choice([-3, -2, -1, 1, 2, 3]) * AS * AT ** (k - 1)
            a, b = pr.split_over_invariants("s", f)
            assert pr.degree(a) == 2 * k
            assert pr.degree(b) == 2 * k - 2


class TestInvariants:
    def test_sym_alt(self):
        f = AS**2 + 3 * AS * AT - AT
        sym, alt = pr.sym_alt(f)
        assert sym + alt == f
        assert pr.is_invariant(sym)
        assert pr.is_anti_invariant(alt)

    def test_divide_by_alt_root(self):
        assert pr.divide_by_alt_root(AS**2 - AT**2) == AS + AT

    def test_divide_by_alt_root_inexact(self):
        with pytest.raises(ExactDivisionError):
            pr.divide_by_alt_root(AS)

    def test_rtau_monomials_are_invariant(self):
        for k in range(0, 13, 2):
            mons = pr.rtau_monomials(k)
            assert all(pr.is_invariant(m) for m in mons)
            assert all(pr.degree(m) == k for m in mons)
        assert pr.rtau_monomials(3) == []

    def test_hilbert_series(self):
        expected = LaurentInt({0: 1, 2: 1, 4: 2, 6: 2, 8: 3})
        assert pr.rtau_hilbert(8) == expected
        assert pr.rtau_series(8) == expected

    def test_series_times_denominator(self):
        assert pr.series_mul(pr.rtau_series(12), pr.RTAU_DENOMINATOR, 12) == LaurentInt.const(1)


class TestGrading:
    def test_degree(self):
        assert pr.degree(AS * AT) == 4
        assert pr.degree(pr.const(3)) == 0
        assert pr.degree(pr.R.zero) is None

    def test_inhomogeneous(self):
        assert not pr.is_homogeneous(AS + 1)
        with pytest.raises(InhomogeneousError):
            pr.degree(AS + 1)

    def test_monomials(self):
        assert pr.monomials(4) == [(2, 0), (1, 1), (0, 2)]
        assert pr.monomials(-2) == []
        assert pr.monomials(1) == []


class TestText:
    def test_format(self):
        assert pr.format_poly(pr.parse_poly("(as - at)^2")) == "as^2 - 2*as*at + at^2"
        assert pr.format_poly(pr.parse_poly("3/2*as*at + at^2")) == "3/2*as*at + at^2"
        assert pr.format_poly(pr.R.zero) == "0"

    def test_parse(self):
        assert pr.parse_poly("-as + 1/3") == -AS + pr.const(1, 3)
        assert pr.parse_poly("as*at - at*as") == 0

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            pr.parse_poly("as +")
        with pytest.raises(ParseError):
            pr.parse_poly("as $ at")
        with pytest.raises(ParseError, match="constant"):
            pr.parse_poly("as / at")


class TestLaurent:
    def test_arithmetic(self):
        q = LaurentInt({-1: 1, 1: 1})
        assert q * q == LaurentInt({-2: 1, 0: 2, 2: 1})
        assert q - q == LaurentInt()
        assert q + 1 == LaurentInt({-1: 1, 0: 1, 1: 1})
        assert q.shift(1) == LaurentInt({0: 1, 2: 1})

    def test_bar_and_truncate(self):
        p = LaurentInt({-2: 1, 0: 1, 3: 4})
        assert p.bar() == LaurentInt({2: 1, 0: 1, -3: 4})
        assert p.truncate(0) == LaurentInt({-2: 1, 0: 1})
        assert p.degree() == 3 and p.valuation() == -2

    def test_immutable(self):
        with pytest.raises(AttributeError):
            LaurentInt.v(1).x = 3

    def test_format(self):
        assert pr.format_laurent(LaurentInt({1: 1, -1: 1})) == "v+v^-1"
        assert pr.format_laurent(LaurentInt({2: 1, 0: 1, -2: 1})) == "v^2+1+v^-2"
        assert pr.format_laurent(LaurentInt({1: -1})) == "-v"
        assert pr.format_laurent(LaurentInt({3: 2})) == "2v^3"
        assert pr.format_laurent(LaurentInt()) == "0"

    def test_evaluate(self):
        assert LaurentInt({-1: 1, 1: 1}).evaluate(1) == 2
        with pytest.raises(ZeroDivisionError):
            LaurentInt({-1: 1}).evaluate(0)
