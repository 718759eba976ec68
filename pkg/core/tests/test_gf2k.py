"""
Tests for GF(2^k) arithmetic
"""

import pytest

from core.errors import DivisionByZero, ModulusError, SpecMismatch
from core.gf2k import FieldElement, FieldSpec, field_arith, field_make, frobenius_sqrt


class TestFieldMake:
    """Test field construction"""

    def test_prime_field(self, f2):
        """Test k=1 uses the modulus x"""
        assert f2.order == 2
        assert f2.modulus == 0b10

    def test_default_quadratic_modulus(self, f4):
        """Test the only irreducible quadratic x^2+x+1 is chosen"""
        assert f4.modulus == 0b111

    def test_default_quartic_modulus(self, f16):
        """Test the smallest irreducible quartic is x^4+x+1"""
        assert f16.modulus == 0x13

    def test_degree_mismatch(self):
        """Test a modulus of the wrong degree is rejected"""
        with pytest.raises(ModulusError):
            field_make(4, 0b1011)

    def test_reducible_modulus(self):
        """Test x^4+1 is rejected"""
        with pytest.raises(ModulusError):
            field_make(4, 0x11)

    def test_degree_out_of_range(self):
        """Test zero and oversized degrees"""
        with pytest.raises(ModulusError):
            field_make(0)
        with pytest.raises(ModulusError):
            field_make(64)

    def test_parse(self):
        """Test both text forms of a field"""
        assert FieldSpec.parse("2^4") == field_make(4)
        assert FieldSpec.parse("2^8/0x11d").modulus == 0x11d
        assert str(FieldSpec.parse("2^4")) == "2^4/0x13"
        with pytest.raises(ModulusError):
            FieldSpec.parse("3^4")


class TestArithmetic:
    """Test the field operations"""

    def test_char_two(self, f2):
        """Test 1 + 1 = 0"""
        one = f2.one()
        assert (one + one).bits == 0

    def test_omega_times_omega_plus_one(self, f4):
        """Test w(w+1) = 1 in GF(4)"""
        w = f4.element(0b10)
        assert (w * (w + f4.one())).bits == 1

    def test_inverse_of_zero(self, f16):
        """Test inverting zero raises"""
        with pytest.raises(DivisionByZero):
            f16.zero().inverse()

    def test_mixed_fields(self, f4, f16):
        """Test elements of different fields do not mix"""
        with pytest.raises(SpecMismatch):
            f4.one() + f16.one()

    def test_unreduced_element(self, f4):
        """Test bit patterns of degree >= k are rejected"""
        with pytest.raises(ValueError):
            FieldElement(f4, 4)

    def test_every_inverse(self, f256):
        """Test x * x^-1 = 1 for every nonzero x of GF(256)"""
        for x in range(1, f256.order):
            assert f256.mul(x, f256.inv(x)) == 1

    def test_multiplication_matches_galois(self, f256, rng):
        """Test products against the galois field class"""
        GF = f256.galois_field
        for _ in range(200):
            x, y = f256.random_bits(rng), f256.random_bits(rng)
            assert f256.mul(x, y) == int(GF(x) * GF(y))

    def test_table_free_path(self, rng):
        """Test the carry-less path for fields above the table limit"""
        field = field_make(16)
        GF = field.galois_field
        for _ in range(50):
            x, y = field.random_bits(rng, nonzero=True), field.random_bits(rng, nonzero=True)
            assert field.mul(x, y) == int(GF(x) * GF(y))
            assert field.mul(x, field.inv(x)) == 1

    def test_group_order(self, f16):
        """Test x^(q-1) = 1"""
        for x in range(1, 16):
            assert f16.pow(x, 15) == 1

    def test_dispatch(self, f16):
        """Test the operation dispatcher"""
        x, y = f16.element(3), f16.element(7)
        assert field_arith("add", x, y) == x + y
        assert field_arith("mul", x, y) == x * y
        assert field_arith("inv", x) * x == f16.one()
        assert field_arith("pow", x, 2) == x * x
        with pytest.raises(ValueError):
            field_arith("sub", x, y)


class TestSquareRoot:
    """Test the Frobenius square root"""

    def test_small_values(self, f4):
        """Test sqrt of 0, 1 and w"""
        assert frobenius_sqrt(f4.zero()).bits == 0
        assert frobenius_sqrt(f4.one()).bits == 1
        assert frobenius_sqrt(f4.element(0b10)).bits == 0b11

    @pytest.mark.parametrize("k", [1, 3, 4, 8])
    def test_inverts_squaring(self, k):
        """Test sqrt(x)^2 = x on every element"""
        field = field_make(k)
        for x in range(field.order):
            r = field.sqrt(x)
            assert field.mul(r, r) == x
