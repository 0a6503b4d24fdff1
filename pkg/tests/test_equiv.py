"""
Tests for equivariant objects, morphisms, induction and the adjunctions.
"""

import random

import pytest

from foldsoergel import bimod as bm
from foldsoergel import equiv as eq
from foldsoergel import polyring as pr
from foldsoergel.bimod import Obj, SumMor, SumObj
from foldsoergel.errors import ParseError, ShapeError, UnknownNameError


class TestObjects:
    def test_coherent(self, indecomposables):
        for name, e in indecomposables.items():
            assert e.is_coherent(), name

    def test_structure(self, indecomposables):
        unit = SumObj((Obj(),))
        assert indecomposables["X"].f_tau == -SumMor.identity(unit)
        assert list(indecomposables["Y"].underlying) == [Obj("s"), Obj("t")]
        assert indecomposables["XZ"].f_tau == -indecomposables["Z"].f_tau

    def test_x_squared_is_unit(self, indecomposables):
        assert eq.tensor_eq(indecomposables["X"], indecomposables["X"]) == indecomposables["One"]

    def test_x_tensor_z_is_xz(self, indecomposables):
        assert eq.tensor_eq(indecomposables["X"], indecomposables["Z"]) == indecomposables["XZ"]

    def test_tensor_name(self, indecomposables):
        assert str(eq.tensor_eq(indecomposables["Y"], indecomposables["Z"])) == "YZ"
        assert str(eq.tensor_eq(indecomposables["One"], indecomposables["Y"])) == "Y"

    def test_parse_object(self):
        e = eq.parse_object("Y*Z[1]")
        assert list(e.underlying) == [Obj("sst", 1), Obj("tst", 1)]
        assert e.is_coherent()
        assert eq.parse_object("1") == eq.indecomposable("One")

    def test_fold_word(self):
        assert eq.fold_word("gb") == eq.parse_object("Y*Z")
        with pytest.raises(UnknownNameError):
            eq.fold_word("gq")

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            eq.parse_object("Q")
        with pytest.raises(ParseError):
            eq.parse_object("Y+Z")

    def test_unknown_indecomposable(self):
        with pytest.raises(UnknownNameError):
            eq.indecomposable("W")

    def test_structure_map_shape(self):
        y = SumObj((Obj("s"),))
        with pytest.raises(ShapeError):
            eq.EqObj(y, SumMor.identity(y))


class TestMorphisms:
    def test_dot_row_is_equivariant(self, indecomposables):
        y, one = indecomposables["Y"], indecomposables["One"]
        row = SumMor(
            y.underlying,
            one.underlying,
            1,
            {(0, 0): bm.generator("dotu", "s"), (0, 1): bm.generator("dotu", "t")},
        )
        assert eq.EqMor(y, one, row, check=True).is_equivariant()

    def test_half_row_is_not(self, indecomposables):
        y, one = indecomposables["Y"], indecomposables["One"]
        half = SumMor(y.underlying, one.underlying, 1, {(0, 0): bm.generator("dotu", "s")})
        with pytest.raises(ValueError, match="intertwine"):
            eq.EqMor(y, one, half, check=True)

    def test_xy_isomorphism(self, indecomposables):
        fwd, back = eq.isomorphism_xy_y()
        assert eq.compose_eq(fwd, back) == eq.eq_identity(indecomposables["Y"])
        assert eq.compose_eq(back, fwd) == eq.eq_identity(fwd.source)

    def test_inverse_structure(self, indecomposables):
        for name, e in indecomposables.items():
            back = bm.compose_sum(e.f_tau, eq.inverse_structure(e))
            assert (back - SumMor.identity(e.underlying)).is_zero(), name

    def test_zero_map(self, indecomposables):
        z = eq.eq_zero(indecomposables["Y"], indecomposables["One"], 3)
        assert z.is_equivariant()
        assert z.mor.is_zero() and z.degree == 3

    def test_compose_shape_error(self, indecomposables):
        with pytest.raises(ShapeError):
            eq.compose_eq(eq.eq_identity(indecomposables["Y"]), eq.eq_identity(indecomposables["Z"]))

    def test_tensor_of_identities(self, indecomposables):
        y, z = indecomposables["Y"], indecomposables["Z"]
        prod = eq.tensor_eq_mor(eq.eq_identity(y), eq.eq_identity(z))
        assert prod == eq.eq_identity(eq.tensor_eq(y, z))


class TestInduction:
    def test_induce_is_coherent(self):
        e = eq.induce(SumObj((Obj("st"), Obj("s", 2))))
        assert e.is_coherent()
        assert len(e.underlying) == 4

    def test_induce_mor(self):
        m = eq.induce_mor(SumMor.single(bm.generator("merge", "s")))
        assert m.is_equivariant()
        assert m.degree == -1

    def test_adjunction_roundtrip(self, indecomposables):
        phi = SumMor.single(bm.generator("dotu", "s"))
        psi = eq.adjunction_phi(phi, indecomposables["One"])
        assert psi.is_equivariant()
        assert eq.adjunction_psi(psi) == phi

    def test_adjunction_roundtrip_other_side(self, indecomposables):
        phi = SumMor.single(bm.generator("dotd", "s"))
        psi = eq.adjunction_phi_prime(phi, indecomposables["X"])
        assert psi.is_equivariant()
        assert eq.adjunction_psi_prime(psi) == phi

    def test_adjunction_shape_error(self, indecomposables):
        with pytest.raises(ShapeError):
            eq.adjunction_phi(SumMor.single(bm.generator("dotd", "s")), indecomposables["One"])

    def test_pseudo_idempotent(self, indecomposables):
        for name, e in indecomposables.items():
            iota, p = eq.splitting_maps(e)
            assert iota.is_equivariant() and p.is_equivariant(), name
            assert eq.compose_eq(p, iota) == eq.eq_identity(e).scale(2), name

    def test_restrict(self, indecomposables):
        assert eq.restrict(indecomposables["Z"]) == SumObj((Obj("st"),))


def random_poly(rng, k):
    """Homogeneous of polynomial degree k (grading degree 2k), never zero."""
    f = pr.AS**k * rng.randint(1, 5)
    for a in range(k):
        f = f + pr.AS**a * pr.AT ** (k - a) * rng.randint(-3, 3)
    return f


def random_maps(rng, count):
    """(phi, N) pairs with phi: M -> Res N, and phi': Res N -> M, homogeneous."""
    names = list(eq.INDECOMPOSABLES)
    out = []
    for _ in range(count):
        name = rng.choice(names)
        n = eq.indecomposable(name)
        f = random_poly(rng, rng.randint(0, 3))
        if name in ("One", "X") and rng.random() < 0.5:
            into = SumMor.single(bm.generator("dotu", "s")).left_mul(f)
            out_of = SumMor.single(bm.generator("dotd", "t")).left_mul(f)
        else:
            into = out_of = SumMor.identity(n.underlying).left_mul(f)
        out.append((n, into, out_of))
    return out


def test_adjunctions_are_mutually_inverse():
    rng = random.Random(50)
    for n, into, out_of in random_maps(rng, 50):
        psi = eq.adjunction_phi(into, n)
        assert psi.is_equivariant()
        assert eq.adjunction_psi(psi) == into
        psi_prime = eq.adjunction_phi_prime(out_of, n)
        assert psi_prime.is_equivariant()
        assert eq.adjunction_psi_prime(psi_prime) == out_of


def invariant_poly(rng):
    return rng.choice([pr.AS + pr.AT, pr.AS * pr.AT, pr.AS**2 + pr.AT**2, pr.R.one * rng.randint(1, 3)])


def precomposable(rng, phi):
    """A random g with g.target == phi.source."""
    f = random_poly(rng, rng.randint(0, 2))
    if phi.source == SumObj((Obj("s"),)) and rng.random() < 0.5:
        return SumMor.single(bm.generator("merge", "s")).left_mul(f)
    return SumMor.identity(phi.source).left_mul(f)


def postcomposable(rng, phi):
    """A random g with g.source == phi.target."""
    f = random_poly(rng, rng.randint(0, 2))
    if phi.target == SumObj((Obj("t"),)) and rng.random() < 0.5:
        return SumMor.single(bm.generator("split", "t")).left_mul(f)
    return SumMor.identity(phi.target).left_mul(f)


class TestAdjunctionNaturality:
    @pytest.mark.parametrize("seed", range(4))
    def test_phi_squares(self, seed):
        rng = random.Random(seed)
        for n, into, _ in random_maps(rng, 10):
            g = precomposable(rng, into)
            assert eq.adjunction_naturality(into, n, g=g)
            h = eq.eq_identity(n).left_mul(invariant_poly(rng))
            assert eq.adjunction_naturality(into, n, h=h)
            iota, _ = eq.splitting_maps(n)
            assert eq.adjunction_naturality(into, n, g=g, h=iota)

    @pytest.mark.parametrize("seed", range(4))
    def test_phi_prime_squares(self, seed):
        rng = random.Random(100 + seed)
        for n, _, out_of in random_maps(rng, 10):
            g = postcomposable(rng, out_of)
            assert eq.adjunction_prime_naturality(out_of, n, g=g)
            h = eq.eq_identity(n).left_mul(invariant_poly(rng))
            assert eq.adjunction_prime_naturality(out_of, n, h=h)
            _, p = eq.splitting_maps(n)
            assert eq.adjunction_prime_naturality(out_of, n, g=g, h=p)

    def test_detects_non_equivariant_h(self, indecomposables):
        y = indecomposables["Y"]
        phi = SumMor.identity(y.underlying)
        half = SumMor(y.underlying, y.underlying, 0, {(0, 0): bm.identity(Obj("s"))})
        assert not eq.adjunction_naturality(phi, y, h=eq.EqMor(y, y, half))

    def test_h_must_start_at_n(self, indecomposables):
        phi = SumMor.single(bm.generator("dotu", "s"))
        with pytest.raises(ShapeError):
            eq.adjunction_naturality(phi, indecomposables["One"], h=eq.eq_identity(indecomposables["X"]))


@pytest.mark.parametrize("seed", range(4))
def test_equivariant_maps_survive_the_roundtrip(seed):
    """Phi(Psi(psi)) == psi on equivariant maps that are not built by Phi."""
    rng = random.Random(200 + seed)
    for n, into, out_of in random_maps(rng, 10):
        iota, p = eq.splitting_maps(n)
        psi = eq.compose_eq(p, eq.induce_mor(into)).left_mul(invariant_poly(rng))
        assert psi.is_equivariant()
        assert eq.adjunction_phi(eq.adjunction_psi(psi), psi.target) == psi
        psi_prime = eq.compose_eq(eq.induce_mor(out_of), iota).left_mul(invariant_poly(rng))
        assert psi_prime.is_equivariant()
        assert eq.adjunction_phi_prime(eq.adjunction_psi_prime(psi_prime), psi_prime.source) == psi_prime
