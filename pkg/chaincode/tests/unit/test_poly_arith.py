"""Unit tests for polynomial arithmetic over chain rings and residue fields."""

import random

import pytest

from chaincode.core.exceptions import DomainError, RingError
from chaincode.services.chain_ring import ChainRing
from chaincode.services.poly_arith import (
    FPoly,
    RPoly,
    divide_scaled_monic,
    fpoly_add,
    fpoly_divides,
    fpoly_divmod,
    fpoly_mod_zn,
    fpoly_monic,
    fpoly_mul,
    fpoly_mul_mod_zn,
    gamma_level_decompose,
    lift,
    phi,
    recompose,
    rpoly_mod_zn,
    rpoly_mul,
    rpoly_mul_mod_zn,
    rpoly_power_mod_zn,
    rpoly_scale,
    weight,
    zn_minus_one,
)
from chaincode.services.residue_field import ResidueField


class TestRPoly:
    """Arithmetic in R[z]."""

    def test_square_of_z_plus_one(self, z4: ChainRing) -> None:
        """Verify (z + 1)^2 = z^2 + 2z + 1 over Z_4."""
        a = RPoly(z4, (1, 1))

        assert rpoly_mul(a, a).coeffs == (1, 2, 1)

    def test_trailing_zeros_are_stripped(self, z4: ChainRing) -> None:
        """Verify the degree ignores zero leading coefficients."""
        a = RPoly(z4, (1, 2, 0, 0))

        assert a.degree == 1
        assert RPoly.zero(z4).is_zero()

    def test_reduce_mod_zn(self, z25: ChainRing) -> None:
        """Verify z^6 = 1 modulo z^6 - 1."""
        assert rpoly_mod_zn(RPoly.monomial(z25, 1, 6), 6).coeffs == (1,)

    def test_power_mod_zn(self, z25: ChainRing) -> None:
        """Verify (z - 1)^25 = z^25 - 1 reduces to 0 modulo z^25 - 1 over Z_25."""
        z_minus_one = RPoly(z25, (24, 1))

        assert rpoly_power_mod_zn(z_minus_one, 24, 25).degree == 24
        assert rpoly_power_mod_zn(z_minus_one, 0, 25).coeffs == (1,)

    def test_reduction_is_multiplicative(self, z25: ChainRing, f2u4: ChainRing) -> None:
        """Verify reducing before or after a product gives the same class mod z^n - 1."""
        rng = random.Random(5)
        for ring in (z25, f2u4):
            for n in (1, 3, 6):
                for _ in range(10):
                    a = RPoly(ring, [rng.randrange(ring.size) for _ in range(rng.randint(0, 9))])
                    b = RPoly(ring, [rng.randrange(ring.size) for _ in range(rng.randint(0, 9))])

                    folded = rpoly_mul_mod_zn(rpoly_mod_zn(a, n), rpoly_mod_zn(b, n), n)
                    assert rpoly_mod_zn(rpoly_mul(a, b), n) == folded

    def test_scalar_multiplication(self, z25: ChainRing) -> None:
        """Verify integers act as ring scalars from both sides."""
        a = RPoly(z25, (1, 2))

        assert (a * 5).coeffs == (5, 10)
        assert (5 * a).coeffs == (5, 10)

    def test_subtraction_and_negation(self, f2u2: ChainRing) -> None:
        """Verify a - a = 0 and -(-a) = a."""
        a = RPoly(f2u2, (3, 2, 1))

        assert (a - a).is_zero()
        assert -(-a) == a

    def test_is_monic_means_unit_leading_coefficient(self, z4: ChainRing) -> None:
        """Verify 3z + 1 is monic but 2z + 1 is not."""
        assert RPoly(z4, (1, 3)).is_monic()
        assert not RPoly(z4, (1, 2)).is_monic()

    def test_mixed_rings(self, z4: ChainRing, z25: ChainRing) -> None:
        """Verify arithmetic across rings is refused."""
        with pytest.raises(RingError, match="mixed rings"):
            RPoly(z4, (1,)) + RPoly(z25, (1,))


class TestGammaLevels:
    """Decomposition into gamma-levels and its inverse."""

    def test_decompose_z4(self, z4: ChainRing) -> None:
        """Verify 3z + 2 = (z) + 2 (z + 1) over Z_4."""
        a0, a1 = gamma_level_decompose(RPoly(z4, (2, 3)))

        assert a0.coeffs == (0, 1)
        assert a1.coeffs == (1, 1)

    def test_gamma_multiple_has_zero_bottom_level(self, f2u4: ChainRing) -> None:
        """Verify gamma * w(z) has level 0 equal to 0 and level 1 equal to phi(w)."""
        w = RPoly(f2u4, (1, 0, 1))
        levels = gamma_level_decompose(w * f2u4.gamma)

        assert levels[0].is_zero()
        assert levels[1] == phi(w)

    def test_zero(self, f3u3: ChainRing) -> None:
        """Verify every level of 0 is 0."""
        assert all(a.is_zero() for a in gamma_level_decompose(RPoly.zero(f3u3)))

    def test_recompose_inverts_decompose(self, z25: ChainRing) -> None:
        """Verify recompose(decompose(k)) = k."""
        k = RPoly(z25, (2, 13, 0, 24, 5))

        assert recompose(z25, gamma_level_decompose(k)) == k

    def test_lift_then_phi(self, z25: ChainRing) -> None:
        """Verify the Teichmuller lift reduces back to its argument."""
        a = FPoly(z25.field, (1, 2, 3, 4))

        assert phi(lift(z25, a)) == a
        assert lift(z25, a).coeffs == (1, 7, 18, 24)


class TestDivideScaledMonic:
    """Division of gamma^i k by gamma^j w."""

    def test_long_division_over_z4(self, z4: ChainRing) -> None:
        """Verify z^2 + 3z + 1 = (z + 2)(z + 1) + 3."""
        k = RPoly(z4, (1, 3, 1))
        w = RPoly(z4, (1, 1))

        q, s = divide_scaled_monic(k, 1, w, 1)

        assert q.coeffs == (2, 1)
        assert s.coeffs == (3,)
        lhs = k * z4.gamma_pow(1)
        rhs = rpoly_mul(q, w * z4.gamma_pow(1)) + s * z4.gamma_pow(1)
        assert lhs == rhs

    def test_quotient_carries_gamma_gap(self, z4: ChainRing) -> None:
        """Verify q = gamma^(i - j) q' when i > j."""
        k = RPoly(z4, (1, 3, 1))
        w = RPoly(z4, (1, 1))

        q, s = divide_scaled_monic(k, 1, w, 0)

        assert q.coeffs == (0, 2)
        assert s.coeffs == (3,)

    def test_exact_division(self, z25: ChainRing) -> None:
        """Verify w divided by itself gives q = 1, s = 0."""
        w = RPoly(z25, (24, 1))

        q, s = divide_scaled_monic(w, 0, w, 0)

        assert q.coeffs == (1,)
        assert s.is_zero()

    def test_lower_degree_dividend(self, z25: ChainRing) -> None:
        """Verify deg k < deg w gives q = 0 and s = k."""
        k = RPoly(z25, (3,))
        w = RPoly(z25, (24, 1))

        q, s = divide_scaled_monic(k, 0, w, 0)

        assert q.is_zero()
        assert s == k

    def test_non_monic_divisor(self, z4: ChainRing) -> None:
        """Verify a non-unit leading coefficient is refused."""
        with pytest.raises(DomainError, match="not monic"):
            divide_scaled_monic(RPoly(z4, (1, 1)), 0, RPoly(z4, (1, 2)), 0)

    def test_exponent_order(self, z4: ChainRing) -> None:
        """Verify i < j is refused."""
        with pytest.raises(DomainError):
            divide_scaled_monic(RPoly(z4, (1,)), 0, RPoly(z4, (1, 1)), 1)

    def test_random_division_identity(
        self, z4: ChainRing, z25: ChainRing, f2u4: ChainRing, f3u3: ChainRing
    ) -> None:
        """Verify gamma^i k = q gamma^j w + gamma^i s with deg s < deg w on seeded inputs."""
        rng = random.Random(17)
        for ring in (z4, z25, f2u4, f3u3):
            units = [r for r in ring.elements() if ring.is_unit(r)]
            for _ in range(25):
                k = RPoly(ring, [rng.randrange(ring.size) for _ in range(rng.randint(0, 6))])
                w_degree = rng.randint(0, 3)
                w = RPoly(
                    ring,
                    [rng.randrange(ring.size) for _ in range(w_degree)] + [rng.choice(units)],
                )
                i = rng.randrange(ring.nu)
                j = rng.randint(0, i)

                q, s = divide_scaled_monic(k, i, w, j)

                lhs = rpoly_scale(k, ring.gamma_pow(i))
                rhs = rpoly_mul(q, rpoly_scale(w, ring.gamma_pow(j))) + rpoly_scale(
                    s, ring.gamma_pow(i)
                )
                assert lhs == rhs, (ring, k, w, i, j)
                assert s.degree < w.degree


class TestFPoly:
    """Polynomials over the residue field."""

    def setup_method(self) -> None:
        """Use F_2 for every test."""
        self.f2 = ResidueField(2)

    def test_weight(self) -> None:
        """Verify weights of z^3 + 1, (z - 1)^2 and 0 over F_2."""
        z3_plus_1 = FPoly(self.f2, (1, 0, 0, 1))
        z_minus_1 = FPoly(self.f2, (1, 1))

        assert weight(z3_plus_1) == 2
        assert weight(z_minus_1 * z_minus_1) == 2
        assert weight(FPoly(self.f2, ())) == 0

    def test_weight_folds_modulo_zn(self, z25: ChainRing) -> None:
        """Verify (z - 1)^24 over F_5 has all 25 coefficients nonzero."""
        f5 = z25.field
        gen = FPoly(f5, (1,))
        for _ in range(24):
            gen = gen * FPoly(f5, (4, 1))

        assert weight(gen, 25) == 25

    def test_divmod(self) -> None:
        """Verify z^3 + 1 = (z^2 + z + 1)(z + 1) over F_2."""
        q, r = fpoly_divmod(FPoly(self.f2, (1, 0, 0, 1)), FPoly(self.f2, (1, 1)))

        assert q.coeffs == (1, 1, 1)
        assert r.is_zero()

    def test_divides_zn_minus_one(self) -> None:
        """Verify z^3 + 1 divides z^6 - 1 but z^2 + z + 1 + z^4 does not."""
        modulus = zn_minus_one(self.f2, 6)

        assert fpoly_divides(FPoly(self.f2, (1, 0, 0, 1)), modulus)
        assert not fpoly_divides(FPoly(self.f2, (1, 1, 1, 0, 1)), modulus)

    def test_monic(self, z25: ChainRing) -> None:
        """Verify 2z + 4 over F_5 becomes z + 2."""
        assert fpoly_monic(FPoly(z25.field, (4, 2))).coeffs == (2, 1)

    def test_add(self) -> None:
        """Verify (1 + 2z + 3z^2) + (4 + 3z) = 3z^2 over F_5."""
        f5 = ResidueField(5)

        total = fpoly_add(FPoly(f5, (1, 2, 3)), FPoly(f5, (4, 3)))

        assert total.coeffs == (0, 0, 3)
        assert total.degree == 2

    def test_add_cancels_to_zero(self) -> None:
        """Verify a + a vanishes over F_2."""
        a = FPoly(self.f2, (1, 0, 1, 1))

        assert fpoly_add(a, a).is_zero()

    def test_add_mixed_fields(self) -> None:
        """Verify polynomials over different fields are refused."""
        with pytest.raises(RingError, match="mixed residue fields"):
            fpoly_add(FPoly(self.f2, (1,)), FPoly(ResidueField(3), (1,)))

    def test_mul_mod_zn(self) -> None:
        """Verify (z^2 + 1)(z^2 + z) = z^2 + 1 modulo z^3 - 1 over F_2."""
        a = FPoly(self.f2, (1, 0, 1))
        b = FPoly(self.f2, (0, 1, 1))

        product = fpoly_mul_mod_zn(a, b, 3)

        assert product.coeffs == (1, 0, 1)
        assert product == fpoly_mod_zn(fpoly_mul(a, b), 3)

    def test_mul_mod_zn_commutes_with_phi(self, z25: ChainRing) -> None:
        """Verify phi(a b mod z^n - 1) = phi(a) phi(b) mod z^n - 1."""
        rng = random.Random(9)
        for _ in range(20):
            a = RPoly(z25, [rng.randrange(25) for _ in range(rng.randint(0, 8))])
            b = RPoly(z25, [rng.randrange(25) for _ in range(rng.randint(0, 8))])

            assert phi(rpoly_mul_mod_zn(a, b, 5)) == fpoly_mul_mod_zn(phi(a), phi(b), 5)
