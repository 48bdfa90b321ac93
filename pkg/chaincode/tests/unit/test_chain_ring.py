"""Unit tests for chain-ring arithmetic."""

import pickle

import pytest
from pydantic import ValidationError

from chaincode.core.exceptions import BudgetExceededError, NotAUnitError, RingError
from chaincode.schemas.ring import RingDescriptor, RingFamily
from chaincode.services.chain_ring import ChainRing, make_ring, ring_from_params


class TestRingConstruction:
    """Building rings from descriptors."""

    def test_integer_modular_size(self) -> None:
        """Verify Z_25 has 25 elements and gamma = 5."""
        ring = ring_from_params("integer-modular", 5, 2)

        assert ring.size == 25
        assert ring.gamma == 5
        assert ring.descriptor.label() == "Z_25"

    def test_poly_extension_size(self) -> None:
        """Verify F_2[u]/u^4 has 16 elements and gamma is coded as q."""
        ring = ring_from_params("poly-extension", 2, 4)

        assert ring.size == 16
        assert ring.gamma == 2
        assert ring.descriptor.label() == "F_2[u]/(u^4)"

    def test_extension_residue_field(self) -> None:
        """Verify F_4[u]/u^2 has 16 elements over a degree 2 field."""
        ring = ring_from_params("poly-extension", 2, 2, s=2, field_modulus=(1, 1, 1))

        assert ring.q == 4
        assert ring.size == 16
        assert ring.field_generator() == 2

    def test_non_prime(self) -> None:
        """Verify p = 6 is rejected when the ring is built."""
        with pytest.raises(RingError, match="p not prime"):
            ring_from_params("integer-modular", 6, 2)

    def test_integer_modular_with_extension_degree(self) -> None:
        """Verify integer-modular descriptors need s = 1."""
        with pytest.raises(ValidationError):
            RingDescriptor(family=RingFamily.INTEGER_MODULAR, p=2, s=2, nu=2)

    def test_field_generator_needs_poly_extension(self, z25: ChainRing) -> None:
        """Verify w is unavailable over Z_{p^nu}."""
        with pytest.raises(RingError):
            z25.field_generator()

    def test_pickle_returns_equal_ring(self, f2u4: ChainRing) -> None:
        """Verify rings survive pickling for worker processes."""
        assert pickle.loads(pickle.dumps(f2u4)) == f2u4


class TestTeichmuller:
    """Teichmuller sets and gamma-adic digits."""

    def test_z4(self, z4: ChainRing) -> None:
        """Verify only 0 and 1 are idempotent in Z_4."""
        assert z4.teichmuller_set() == (0, 1)

    def test_z25(self, z25: ChainRing) -> None:
        """Verify the roots of x^5 = x in Z_25."""
        assert z25.teichmuller_set() == (0, 1, 7, 18, 24)

    def test_poly_extension_constants(self, f3u3: ChainRing) -> None:
        """Verify the Teichmuller set of F_3[u]/u^3 is the constants."""
        assert f3u3.teichmuller_set() == (0, 1, 2)

    @pytest.mark.parametrize(
        ("family", "p", "nu", "s", "modulus"),
        [
            ("integer-modular", 2, 2, 1, None),
            ("integer-modular", 5, 2, 1, None),
            ("integer-modular", 3, 3, 1, None),
            ("poly-extension", 3, 3, 1, None),
            ("poly-extension", 2, 2, 2, (1, 1, 1)),
        ],
    )
    def test_roots_of_x_to_the_q(
        self, family: str, p: int, nu: int, s: int, modulus: tuple[int, ...] | None
    ) -> None:
        """Verify the Teichmuller set has q elements, each fixed by x -> x^q."""
        ring = ring_from_params(family, p, nu, s, modulus)
        teich = ring.teichmuller_set()

        assert len(teich) == ring.q
        assert all(ring.power(x, ring.q) == x for x in teich)
        assert sorted(ring.residue(x) for x in teich) == list(range(ring.q))

    def test_expand_two_in_z25(self, z25: ChainRing) -> None:
        """Verify 2 = 7 + 5 * 24 in Z_25."""
        assert z25.gamma_adic_expand(2) == (7, 24)

    def test_expand_zero(self, f2u4: ChainRing) -> None:
        """Verify 0 expands to all-zero digits."""
        assert f2u4.gamma_adic_expand(0) == (0, 0, 0, 0)

    def test_expand_u_cubed(self, f2u4: ChainRing) -> None:
        """Verify u^3 is already in coordinate form."""
        assert f2u4.gamma_adic_expand(f2u4.gamma_pow(3)) == (0, 0, 0, 1)

    def test_digits_round_trip(self, z25: ChainRing, f3u3: ChainRing) -> None:
        """Verify from_digits inverts digits on every element."""
        for ring in (z25, f3u3):
            for r in ring.elements():
                assert ring.from_digits(ring.digits(r)) == r


class TestValuationAndUnits:
    """gamma_val, residue and unit inversion."""

    def test_gamma_val(self, z25: ChainRing, f2u4: ChainRing) -> None:
        """Verify valuations of 10 in Z_25 and u^2 + u in F_2[u]/u^4."""
        assert z25.gamma_val(10) == 1
        assert f2u4.gamma_val(f2u4.gamma_pow(2) + f2u4.gamma_pow(1)) == 1

    def test_gamma_val_of_zero(self, z25: ChainRing, f2u4: ChainRing) -> None:
        """Verify 0 has valuation nu."""
        assert z25.gamma_val(0) == 2
        assert f2u4.gamma_val(0) == 4

    def test_valuation_is_additive(
        self, z4: ChainRing, z25: ChainRing, f2u4: ChainRing, f3u3: ChainRing
    ) -> None:
        """Verify gamma_val(ab) = min(gamma_val(a) + gamma_val(b), nu) on every pair."""
        for ring in (z4, z25, f2u4, f3u3):
            vals = [ring.gamma_val(r) for r in ring.elements()]
            for a in ring.elements():
                for b in ring.elements():
                    expected = min(vals[a] + vals[b], ring.nu)
                    assert ring.gamma_val(ring.mul(a, b)) == expected, (ring, a, b)

    def test_residue(self, z25: ChainRing) -> None:
        """Verify 7 reduces to 2 and gamma to 0."""
        assert z25.residue(7) == 2
        assert z25.residue(z25.gamma) == 0

    def test_units_have_nonzero_residue(self, z25: ChainRing) -> None:
        """Verify is_unit matches the residue."""
        for r in z25.elements():
            assert z25.is_unit(r) == (r % 5 != 0)

    def test_unit_inverse(self, z25: ChainRing) -> None:
        """Verify 7^-1 = 18 and 1^-1 = 1 in Z_25."""
        assert z25.unit_inverse(7) == 18
        assert z25.unit_inverse(1) == 1

    def test_unit_inverse_poly_extension(self, f2u2: ChainRing) -> None:
        """Verify (1 + u)^2 = 1 in F_2[u]/u^2."""
        one_plus_u = f2u2.add(1, f2u2.gamma)

        assert f2u2.unit_inverse(one_plus_u) == one_plus_u

    def test_every_unit_inverts(self, f3u3: ChainRing) -> None:
        """Verify r * r^-1 = 1 for every unit of F_3[u]/u^3."""
        for r in f3u3.elements():
            if f3u3.is_unit(r):
                assert f3u3.mul(r, f3u3.unit_inverse(r)) == 1

    def test_non_unit(self, z25: ChainRing) -> None:
        """Verify 5 has no inverse in Z_25."""
        with pytest.raises(NotAUnitError, match="not a unit"):
            z25.unit_inverse(5)

    def test_gamma_is_nilpotent(self, f2u4: ChainRing) -> None:
        """Verify gamma^nu = 0."""
        assert f2u4.gamma_pow(4) == 0
        assert f2u4.power(f2u4.gamma, 4) == 0
        assert f2u4.power(f2u4.gamma, 3) == f2u4.gamma_pow(3)


class TestTables:
    """Dense numpy tables."""

    def test_tables_match_scalar_operations(self, f2u2: ChainRing) -> None:
        """Verify the dense tables agree with add and mul."""
        add, mul = f2u2.tables

        for a in f2u2.elements():
            for b in f2u2.elements():
                assert add[a, b] == f2u2.add(a, b)
                assert mul[a, b] == f2u2.mul(a, b)

    def test_table_limit(self, override_settings) -> None:
        """Verify rings above the table limit refuse to build tables."""
        override_settings(table_limit=4)
        ring = ChainRing(RingDescriptor(family=RingFamily.INTEGER_MODULAR, p=2, nu=3))

        with pytest.raises(BudgetExceededError):
            _ = ring.tables

    def test_make_ring_is_cached(self) -> None:
        """Verify equal descriptors give the same handle."""
        desc = RingDescriptor(family=RingFamily.POLY_EXTENSION, p=3, nu=3)

        assert make_ring(desc) is make_ring(desc)
