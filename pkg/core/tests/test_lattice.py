"""
Tests for Gram lattices, discriminant groups and the numerical identities
"""

import numpy as np
import pytest

from core.configs import abstract_kummer
from core.errors import VerificationFailure
from core.lattice import (
    A1_STAR, D4_TILDE, GramLattice, branch_self_intersection, chern_count, config_gram,
    configuration_self_intersection, direct_sum, discriminant_group, divisor, euler_bound, fiber_lattice,
    fibration_sections, gram_builtin, index_from_self_intersection, index_identity, parse_divisor,
    shioda_tate_bound, smith_normal_form, smith_normal_form_sympy,
)


class TestGramLattice:
    """Test Gram matrix validation and basics"""

    def test_asymmetric(self):
        """Test asymmetric matrices are rejected"""
        with pytest.raises(ValueError):
            GramLattice(np.array([[0, 1], [2, 0]]))

    def test_entry_bound(self):
        """Test entries of size 2^31 are rejected"""
        with pytest.raises(ValueError):
            GramLattice(np.array([[2 ** 31]]))

    def test_determinants(self):
        """Test det D4 = 4, det A1 = -2 and det U = -1"""
        assert gram_builtin("D4").det() == 4
        assert gram_builtin("A1").det() == -2
        assert gram_builtin("U").det() == -1

    def test_unknown_builtin(self):
        """Test an unknown name is rejected"""
        with pytest.raises(ValueError):
            gram_builtin("E8")

    def test_text_round_trip(self):
        """Test the JSON form parses back"""
        d4 = gram_builtin("D4")
        assert np.array_equal(GramLattice.parse(d4.to_text()).matrix, d4.matrix)

    def test_direct_sum(self):
        """Test ranks add and determinants multiply"""
        m = direct_sum([gram_builtin("D4"), gram_builtin("A1"), gram_builtin("U")])
        assert m.rank == 7
        assert m.det() == 4 * -2 * -1


class TestSmithNormalForm:
    """Test elementary divisors"""

    def test_d4(self):
        """Test D4 has discriminant group (Z/2)^2"""
        assert smith_normal_form(gram_builtin("D4")) == [1, 1, 2, 2]

    def test_matches_sympy(self, rng):
        """Test random symmetric matrices against sympy"""
        for _ in range(20):
            a = rng.integers(-6, 7, size=(4, 4))
            m = GramLattice(a + a.T)
            assert smith_normal_form(m) == smith_normal_form_sympy(m)

    def test_singular(self):
        """Test zeros are kept for singular matrices"""
        assert smith_normal_form(GramLattice(np.array([[2, 2], [2, 2]]))) == [2, 0]

    def test_degenerate_discriminant(self):
        """Test a degenerate lattice has no discriminant group"""
        with pytest.raises(ValueError):
            discriminant_group(GramLattice(np.zeros((2, 2), dtype=np.int64)))


class TestFibration:
    """Test the lattice identities of the quasi-elliptic fibration"""

    def test_fiber_discriminant(self):
        """Test |disc(D4^3 + A1^8)| = 2^14, 2-elementary"""
        disc = discriminant_group(fiber_lattice())
        assert disc.order == 2 ** 14
        assert disc.two_elementary
        assert disc.two_rank == 14

    def test_shioda_tate(self):
        """Test MW of order 8 gives sigma 4"""
        st = shioda_tate_bound(8)
        assert st.disc_pic == 2 ** 8
        assert st.sigma == 4
        assert not st.exceeds_family_value

    def test_shioda_tate_small_group(self):
        """Test MW of order 4 gives sigma 5, above the family value"""
        st = shioda_tate_bound(4)
        assert st.sigma == 5
        assert st.exceeds_family_value

    def test_shioda_tate_odd_group(self):
        """Test an odd order leaves no power of two"""
        assert shioda_tate_bound(3).sigma is None
        with pytest.raises(ValueError):
            shioda_tate_bound(0)

    def test_euler_bound(self):
        """Test three D4 and six A1 fibres need Euler number 30"""
        assert euler_bound([D4_TILDE] * 3 + [A1_STAR] * 6) == (30, True)
        assert euler_bound([D4_TILDE] * 4) == (24, False)

    def test_fibres_and_sections(self):
        """Test F and G are isotropic, orthogonal and met once by each section"""
        result = fibration_sections(abstract_kummer())
        assert result.ok
        assert len(result.sections) == 8

    def test_divisor_labels(self):
        """Test parsing and unknown labels"""
        kummer = abstract_kummer()
        d = parse_divisor(kummer, "E0:2,E1:1")
        assert d.sum() == 3
        gram = config_gram(kummer)
        assert gram.pairing(d, d) == -8 + 4 * 1 - 2
        with pytest.raises(ValueError):
            divisor(kummer, {"E7": 1})


class TestIndexAndChern:
    """Test the index identity and the Chern counts"""

    def test_configuration_self_intersection(self):
        """Test the 32 curves square to 128"""
        assert configuration_self_intersection(abstract_kummer()) == 128
        assert branch_self_intersection(4) == 128

    def test_index(self):
        """Test 128 = -64 + 32n gives n = 6"""
        assert index_from_self_intersection(128) == 6
        assert index_identity(abstract_kummer()) == 6
        with pytest.raises(ValueError):
            index_from_self_intersection(100)

    def test_chern_counts(self):
        """Test 20 on the quadric with twist (4,4) and 21 on the plane with twist 6"""
        assert chern_count("quadric", (4, 4)) == 20
        assert chern_count("P2", 6) == 21
        assert chern_count("P2", 0) == 3
        with pytest.raises(ValueError):
            chern_count("cubic", 1)
