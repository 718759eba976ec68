"""
Tests for the Segre cubic, its parametrization and the two S6 representations
"""

import numpy as np
import pytest

from core.errors import DegeneratePolar
from core.gf2k import field_make
from core.mvpoly import MultiPoly, is_singular_at
from core.segre import (
    MatrixF2, coble_char2, coble_quadric, coxeter_relations, fixed_space, group_closure, node_completeness,
    permutation_order, phi_equivariance_probe, phi_map, preserves, printed_phi_discrepancy, rep_generators,
    segre_equation, segre_nodes, substitute, weddle_via_polar,
)
from core.weddle import WeddleParams


class TestCubic:
    """Test the cubic and its ten nodes"""

    def test_nodes(self, f256):
        """Test the ten listed nodes are singular over GF(256)"""
        assert len(segre_nodes(f256)) == 10

    def test_smooth_point(self, f2):
        """Test [1,0,0,0,0] is not singular"""
        assert not is_singular_at(segre_equation(f2), (1, 0, 0, 0, 0))

    def test_no_other_nodes(self):
        """Test exhaustive scans over GF(2) and GF(4)"""
        assert node_completeness((1, 2)) == {1: 10, 2: 10}


class TestParametrization:
    """Test phi and the printed variant"""

    def test_phi_lands_on_cubic(self, f16):
        """Test the cubic pulls back to zero"""
        phi = phi_map(f16)
        assert segre_equation(f16).pullback(phi).is_zero()

    def test_printed_variant(self, f16):
        """Test the printed second component does not vanish at p4"""
        discrepancy = printed_phi_discrepancy(f16)
        assert "x1 at [0, 0, 0, 1]" in discrepancy.base_point_failures

    def test_equivariance_identity(self):
        """Test the identity of P^3 acts by the identity matrix"""
        matches = {m.sigma: m for m in phi_equivariance_probe()}
        assert matches["id"].matrix == MatrixF2.identity(5).to_text()
        assert matches["id"].common_factor == (0, 0, 0, 0)
        assert matches["id"].in_closure


class TestRepresentations:
    """Test the generator sets rep33 and rep222"""

    @pytest.mark.parametrize("which", ["rep33", "rep222"])
    def test_order_720(self, which):
        """Test both closures have 720 elements"""
        group = rep_generators(which)
        assert group_closure(group) == 720
        assert permutation_order(group) == 720

    @pytest.mark.parametrize("which", ["rep33", "rep222"])
    def test_coxeter_relations(self, which):
        """Test the adjacent transposition relations"""
        assert all(coxeter_relations(rep_generators(which)).values())

    def test_unknown_representation(self):
        """Test an unknown name is rejected"""
        with pytest.raises(ValueError):
            rep_generators("rep6")

    def test_rep33_preserves_cubic(self, f2):
        """Test every element of rep33 preserves the cubic"""
        cubic = segre_equation(f2)
        assert all(preserves(cubic, g) for g in rep_generators("rep33").closure())

    def test_rep33_fixes_nothing(self):
        """Test rep33 has no fixed vector"""
        assert fixed_space(rep_generators("rep33")) == []

    def test_rep222_fixes_ones(self, f2):
        """Test rep222 preserves q and fixes (1,1,1,1,1)"""
        group = rep_generators("rep222")
        q = coble_quadric(f2)
        ones = (1, 1, 1, 1, 1)
        for g in group.generators:
            assert preserves(q, g)
            assert g.apply(ones) == ones

    def test_matrix_text(self):
        """Test the slash-separated form parses back"""
        g = rep_generators("rep33").generators[0]
        assert MatrixF2.parse(g.to_text()) == g

    def test_non_square(self):
        """Test ragged rows are rejected"""
        with pytest.raises(ValueError):
            MatrixF2(((1, 0), (0,)))


class TestPolar:
    """Test the pulled back polar quadric"""

    def test_polar_gives_weddle(self, f16):
        """Test the pullback is singular at p1..p6 and contains the node lines and R3"""
        rng = np.random.default_rng(5)
        reports = []
        for _ in range(10):
            try:
                reports.append(weddle_via_polar(WeddleParams.random(f16, rng)))
            except DegeneratePolar:
                continue
        assert reports
        for report in reports:
            assert report.singular_at_nodes and report.contains_lines and report.contains_cubic


class TestCoble:
    """Test the Coble-type double cover"""

    def test_substitute(self, f2):
        """Test replacing x0 by x1 in x0 x1"""
        x0, x1 = MultiPoly.variables(f2, 2)
        assert substitute(x0 * x1, 0, x1) == x1 * x1

    def test_report(self):
        """Test the involution invariance and the smoothness of q over GF(4)"""
        report = coble_char2()
        assert report.involution_invariant
        assert all(report.q_invariant_generators.values())
        assert report.q_singular_points_f4 == 0
        assert report.equation.startswith("P(1,1,1,1,1,2) deg 4")

    def test_larger_field(self):
        """Test the invariance over GF(16)"""
        assert coble_char2(field_make(4)).involution_invariant
