"""
Tests for projective points, lines and planes
"""

import pytest

from core.errors import GeometryError
from core.mvpoly import MultiPoly
from core.projgeom import (
    LineP3, PlaneP3, ProjPoint, general_position6, line_through, lines_intersection, lines_meet,
    lines_meet_det, plane_through, planes_meet, projective_points, random_line, restrict_to_line,
)


def pts(field, *rows):
    return [ProjPoint(field, r) for r in rows]


class TestPoints:
    """Test normalisation"""

    def test_first_nonzero_is_one(self, f16):
        """Test scaling to the first nonzero coordinate"""
        p = ProjPoint(f16, (0, 3, 6, 1))
        assert p.coords[:2] == (0, 1)
        assert p == ProjPoint(f16, (0, 1, f16.div(6, 3), f16.div(1, 3)))

    def test_zero_vector(self, f16):
        """Test the zero vector has no class"""
        with pytest.raises(GeometryError):
            ProjPoint(f16, (0, 0, 0, 0))

    def test_text_round_trip(self, f16):
        """Test the bracket form parses back"""
        p = ProjPoint(f16, (1, 7, 0, 12))
        assert ProjPoint.parse(f16, str(p)) == p

    def test_point_count(self, f4):
        """Test P^3(GF(4)) has 85 points"""
        assert projective_points(f4, 4).shape == (85, 4)


class TestLines:
    """Test lines and their Plücker keys"""

    def test_coordinate_line(self, f16):
        """Test the line through e0 and e1"""
        e0, e1, e2 = pts(f16, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
        line = line_through(e0, e1)
        assert line.contains(ProjPoint(f16, (5, 9, 0, 0)))
        assert not line.contains(e2)
        assert line.key == (1, 0, 0, 0, 0, 0)

    def test_equal_points(self, f16):
        """Test a point does not span a line with itself"""
        p = ProjPoint(f16, (1, 2, 3, 4))
        with pytest.raises(GeometryError):
            line_through(p, p)

    def test_key_ignores_spanning_points(self, f16):
        """Test two spanning pairs of one line compare equal"""
        p, q = pts(f16, (1, 2, 3, 4), (0, 1, 5, 7))
        line = LineP3(p, q)
        assert LineP3(line.point_at(3, 1), line.point_at(1, 9)) == line

    def test_point_count(self, f16):
        """Test a line has q+1 points"""
        line = line_through(*pts(f16, (1, 0, 0, 0), (0, 0, 1, 1)))
        points = list(line.points())
        assert len(points) == 17
        assert len(set(points)) == 17

    def test_meet_tests_agree(self, f4, rng):
        """Test the Plücker pairing against the 4x4 determinant"""
        for _ in range(300):
            l1, l2 = random_line(f4, rng), random_line(f4, rng)
            assert lines_meet(l1, l2) == lines_meet_det(l1, l2)

    def test_intersection(self, f16):
        """Test two meeting lines share the computed point"""
        a, b, c = pts(f16, (1, 2, 3, 4), (0, 1, 1, 9), (1, 0, 7, 0))
        l1, l2 = line_through(a, b), line_through(a, c)
        assert lines_intersection(l1, l2) == a

    def test_skew_lines(self, f16):
        """Test skew lines have no intersection point"""
        l1 = line_through(*pts(f16, (1, 0, 0, 0), (0, 1, 0, 0)))
        l2 = line_through(*pts(f16, (0, 0, 1, 0), (0, 0, 0, 1)))
        assert not lines_meet(l1, l2)
        with pytest.raises(GeometryError):
            lines_intersection(l1, l2)


class TestPlanes:
    """Test planes through points and their intersections"""

    def test_coordinate_plane(self, f16):
        """Test e0, e1, e2 span x3 = 0"""
        plane = plane_through(*pts(f16, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)))
        assert plane.coeffs == (0, 0, 0, 1)

    def test_plane_of_reference_points(self, f16):
        """Test p1, p2, p5 span x2 + x3 = 0"""
        plane = plane_through(*pts(f16, (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 1)))
        assert plane.coeffs == (0, 0, 1, 1)

    def test_collinear(self, f16):
        """Test collinear points span no plane"""
        with pytest.raises(GeometryError):
            plane_through(*pts(f16, (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)))

    def test_planes_meet(self, f16):
        """Test x3 and x2 meet in the line e0 e1"""
        line = planes_meet(PlaneP3(f16, (0, 0, 0, 1)), PlaneP3(f16, (0, 0, 1, 0)))
        assert line == line_through(*pts(f16, (1, 0, 0, 0), (0, 1, 0, 0)))

    def test_equal_planes(self, f16):
        """Test a plane does not meet itself in a line"""
        h = PlaneP3(f16, (0, 0, 0, 1))
        with pytest.raises(GeometryError):
            planes_meet(h, PlaneP3(f16, (0, 0, 0, 7)))


class TestRestriction:
    """Test restriction of forms to lines"""

    def test_restrictions(self, f16):
        """Test x3 vanishes on e0 e1 and x0 restricts to s"""
        line = line_through(*pts(f16, (1, 0, 0, 0), (0, 1, 0, 0)))
        x0, _, _, x3 = MultiPoly.variables(f16, 4)
        assert restrict_to_line(x3, line).is_zero()
        assert restrict_to_line(x0, line) == MultiPoly.variable(f16, 2, 0)


class TestGeneralPosition:
    """Test the six-point position check"""

    def test_generic(self, f16):
        """Test the reference frame plus a generic sixth point"""
        frame = pts(f16, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))
        assert general_position6(frame + [ProjPoint(f16, (1, 2, 4, 8))])

    def test_repeated_point(self, f16):
        """Test p6 = p5 fails"""
        frame = pts(f16, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))
        assert not general_position6(frame + [frame[4]])

    def test_coordinate_plane(self, f16):
        """Test a sixth point on the plane x3 = 0 fails"""
        frame = pts(f16, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))
        assert not general_position6(frame + [ProjPoint(f16, (0, 1, 1, 0))])
