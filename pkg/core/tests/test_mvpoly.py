"""
Tests for multivariate polynomials and binary forms over GF(2^k)
"""

from itertools import product

import pytest

from core.errors import ArityMismatch, NonExactDivision
from core.mvpoly import (
    MultiPoly, PolyMap, WeightedHypersurface, binary_form, binary_gcd, binary_roots, binary_separable,
    binary_splitting, binary_splitting_witness, compose, is_singular_at, monomials_of_degree, poly_det,
    poly_det_permutation, proportional,
)


def xyz(field):
    return MultiPoly.variables(field, 3)


class TestRing:
    """Test ring operations"""

    def test_self_sum_vanishes(self, f16):
        """Test (x+y)+(x+y) = 0"""
        x, y, _ = xyz(f16)
        assert ((x + y) + (x + y)).is_zero()

    def test_frobenius_square(self, f16):
        """Test (x+y)^2 = x^2+y^2"""
        x, y, _ = xyz(f16)
        assert (x + y) ** 2 == x * x + y * y
        assert (x + y).square() == (x + y) * (x + y)

    def test_hand_expansion(self, f16):
        """Test (x+y)(x+y+z) = x^2+y^2+xz+yz"""
        x, y, z = xyz(f16)
        assert (x + y) * (x + y + z) == x * x + y * y + x * z + y * z

    def test_arity_mismatch(self, f16):
        """Test polynomials in different numbers of variables do not add"""
        with pytest.raises(ArityMismatch):
            MultiPoly.variable(f16, 3, 0) + MultiPoly.variable(f16, 4, 0)

    def test_degree_of_zero(self, f16):
        """Test the zero polynomial has degree -1"""
        assert MultiPoly.zero(f16, 2).degree == -1

    def test_text_round_trip(self, f16):
        """Test the text form parses back"""
        x, y, z = xyz(f16)
        f = (x + y.scale(5)) * z + x ** 3
        assert MultiPoly.parse(f16, 3, f.to_text()) == f
        assert MultiPoly.parse(f16, 3, "0").is_zero()

    def test_grevlex_order(self):
        """Test monomials are listed largest first"""
        monos = monomials_of_degree(3, 2)
        assert len(monos) == 6
        assert monos[0] == (2, 0, 0)
        assert monos[-1] == (0, 0, 2)


class TestEvaluation:
    """Test evaluation and substitution"""

    def test_eval(self, f16):
        """Test x^2+yz at (1,0,0)"""
        x, y, z = xyz(f16)
        assert (x * x + y * z).eval_bits((1, 0, 0)) == 1
        assert MultiPoly.zero(f16, 3).eval_bits((3, 4, 5)) == 0

    def test_eval_array_matches_scalar(self, f16, rng):
        """Test vectorized evaluation against the scalar path"""
        x, y, z = xyz(f16)
        f = x ** 3 + (y * z).scale(7) + z.scale(2)
        points = rng.integers(0, 16, size=(40, 3))
        values = f.eval_array(points)
        for row, value in zip(points, values):
            assert f.eval_bits(tuple(int(v) for v in row)) == int(value)

    def test_pullback_identity(self, f16):
        """Test pulling back along the identity"""
        x0 = MultiPoly.variable(f16, 4, 0)
        assert x0.pullback(PolyMap.identity(f16, 4)) == x0

    def test_pullback_cancels(self, f16):
        """Test x+y under x, y -> u^2 is zero"""
        u = MultiPoly.variable(f16, 1, 0)
        x, y = MultiPoly.variables(f16, 2)
        assert (x + y).pullback(PolyMap((u * u, u * u))).is_zero()

    def test_compose(self, f16):
        """Test pulling back along a composite"""
        rows1 = [[1, 2, 0], [0, 1, 3], [4, 0, 1]]
        rows2 = [[1, 1, 0], [0, 5, 1], [1, 0, 7]]
        m1, m2 = PolyMap.linear(f16, rows1), PolyMap.linear(f16, rows2)
        x, y, z = xyz(f16)
        f = x * y * z + z ** 3
        assert f.pullback(compose(m1, m2)) == f.pullback(m1).pullback(m2)

    def test_inhomogeneous_map(self, f16):
        """Test maps need homogeneous components of one degree"""
        x, y = MultiPoly.variables(f16, 2)
        with pytest.raises(ValueError):
            PolyMap((x, y * y))


class TestCalculus:
    """Test formal derivatives and division"""

    def test_partials(self, f16):
        """Test d(x^2)=0, d(xy)=y and d(x^3)=x^2"""
        x, y, _ = xyz(f16)
        assert (x * x).partial(0).is_zero()
        assert (x * y).partial(0) == y
        assert (x ** 3).partial(0) == x * x

    def test_exact_division(self, f16):
        """Test (x+y)(x+z) / (x+z)"""
        x, y, z = xyz(f16)
        assert ((x + y) * (x + z)).divide_exact(x + z) == x + y

    def test_inexact_division(self, f16):
        """Test a remainder raises"""
        x, y, z = xyz(f16)
        with pytest.raises(NonExactDivision):
            (x * y + z).divide_exact(x)


class TestDeterminant:
    """Test polynomial determinants"""

    def test_two_by_two(self, f16):
        """Test det [[x,1],[1,y]] = xy+1"""
        x, y = MultiPoly.variables(f16, 2)
        one = MultiPoly.constant(f16, 2)
        assert poly_det([[x, one], [one, y]]) == x * y + one

    def test_identity(self, f16):
        """Test det of the identity is 1"""
        one, zero = MultiPoly.constant(f16, 1), MultiPoly.zero(f16, 1)
        matrix = [[one if i == j else zero for j in range(4)] for i in range(4)]
        assert poly_det(matrix) == one

    def test_expansions_agree(self, f16, rng):
        """Test cofactor and permutation expansions agree on a random linear matrix"""
        xs = MultiPoly.variables(f16, 4)
        matrix = []
        for _ in range(4):
            row = []
            for _ in range(4):
                entry = MultiPoly.zero(f16, 4)
                for v in xs:
                    entry = entry + v.scale(int(rng.integers(0, 16)))
                row.append(entry)
            matrix.append(row)
        assert poly_det(matrix) == poly_det_permutation(matrix)


class TestSingularity:
    """Test singular points and proportionality"""

    def test_nonzero_value(self, f16):
        """Test x^2+yz at [1,0,0] is not singular"""
        x, y, z = xyz(f16)
        assert not is_singular_at(x * x + y * z, (1, 0, 0))

    def test_cone_vertex(self, f16):
        """Test xy is singular at [0,0,1]"""
        x, y, _ = xyz(f16)
        assert is_singular_at(x * y, (0, 0, 1))

    def test_proportional(self, f16):
        """Test scalar multiples and unrelated forms"""
        x, y, z = xyz(f16)
        f = x * y + z * z
        assert proportional(f, f).bits == 1
        assert proportional(f.scale(6), f).bits == 6
        assert proportional(x, y) is None


class TestBinaryForms:
    """Test binary quadrics, splitting and roots"""

    def test_separable(self, f16):
        """Test s^2+st splits, squares do not"""
        assert binary_separable(binary_form(f16, [1, 1, 0]))
        assert not binary_separable(binary_form(f16, [1, 0, 1]))
        assert not binary_separable(binary_form(f16, [1, 0, 0]))

    def test_separable_zero(self, f16):
        """Test the zero quadratic is rejected"""
        with pytest.raises(ValueError):
            binary_separable(MultiPoly.zero(f16, 2))

    def test_splitting_witness(self, f16):
        """Test b = t0 t1 + t1^2 splits over a = t0 with c = t1"""
        a = binary_form(f16, [1, 0])
        b = binary_form(f16, [0, 1, 1])
        c = binary_splitting_witness(a, b)
        assert c is not None
        assert a * c + c.square() == b

    def test_non_square(self, f16):
        """Test t0 t1 is not c^2"""
        assert not binary_splitting(MultiPoly.zero(f16, 2), binary_form(f16, [0, 1, 0]))

    def test_splitting_matches_search(self, f4, rng):
        """Test the linear solve against all 16 linear candidates over GF(4)"""
        for _ in range(30):
            a = binary_form(f4, [int(v) for v in rng.integers(0, 4, size=2)])
            b = binary_form(f4, [int(v) for v in rng.integers(0, 4, size=3)])
            if not a.is_zero() and a.degree != 1:
                continue
            found = any(
                a * c + c.square() == b
                for c in (binary_form(f4, coeffs) for coeffs in product(range(4), repeat=2))
            )
            assert binary_splitting(a, b) == found

    def test_roots(self, f16):
        """Test s(s+t) vanishes at [0:1] and [1:1]"""
        f = binary_form(f16, [1, 1, 0])
        assert sorted(binary_roots(f)) == [(0, 1), (1, 1)]
        assert (1, 0) in binary_roots(binary_form(f16, [0, 1]))

    def test_gcd(self, f16):
        """Test gcd of s(s+t) and (s+t)t"""
        f = binary_form(f16, [1, 1, 0])
        g = binary_form(f16, [0, 1, 1])
        assert binary_gcd(f, g) == binary_form(f16, [1, 1])


class TestWeightedHypersurface:
    """Test weighted equations"""

    def test_degree_check(self, f16):
        """Test every monomial must have the weighted degree"""
        x0, x1, w = MultiPoly.variables(f16, 3)
        WeightedHypersurface((1, 1, 2), 4, w * w + x0 ** 4)
        with pytest.raises(ValueError):
            WeightedHypersurface((1, 1, 2), 4, w + x0 ** 4)

    def test_text_round_trip(self, f16):
        """Test the text form parses back"""
        x0, x1, w = MultiPoly.variables(f16, 3)
        surface = WeightedHypersurface((1, 1, 2), 4, w * w + w * x0 * x1 + x1 ** 4)
        assert WeightedHypersurface.parse(f16, surface.to_text()) == surface
