"""
Projective points, lines and planes over GF(2^k).

Conventions:
- Points are normalised so the first nonzero coordinate is 1.
- Lines in P^3 compare by their normalised Plücker key
  (p01, p02, p03, p12, p13, p23) with p_ij = u_i v_j + u_j v_i.
- Planes are normalised linear forms.
"""

import logging
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Iterator, Sequence, Tuple

import numpy as np

from . import linalg
from .errors import ArityMismatch, GeometryError
from .gf2k import FieldElement, FieldSpec
from .mvpoly import MultiPoly, PolyMap, Scalar, _bits

logger = logging.getLogger(__name__)

PLUECKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def normalize(field: FieldSpec, coords: Sequence[int]) -> Tuple[int, ...]:
    """Scale so the first nonzero entry is 1; zero vectors raise GeometryError."""
    for c in coords:
        if c:
            inv = field.inv(c)
            return tuple(field.mul(v, inv) for v in coords)
    raise GeometryError("zero vector has no projective class")


def combine(field: FieldSpec, s: int, u: Sequence[int], t: int, v: Sequence[int]) -> Tuple[int, ...]:
    """s*u + t*v on raw coordinate vectors."""
    return tuple(field.mul(s, a) ^ field.mul(t, b) for a, b in zip(u, v))


def dot(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    total = 0
    for a, b in zip(u, v):
        total ^= field.mul(a, b)
    return total


@dataclass(frozen=True)
class ProjPoint:
    field: FieldSpec
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", normalize(self.field, tuple(int(c) for c in self.coords)))

    @classmethod
    def of(cls, field: FieldSpec, coords: Sequence[Scalar]) -> "ProjPoint":
        return cls(field, tuple(_bits(field, c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def elements(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coords)

    def __str__(self) -> str:
        return "[" + ":".join(f"{c:#x}" for c in self.coords) + "]"

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "ProjPoint":
        body = text.strip().lstrip("[").rstrip("]")
        return cls(field, tuple(int(c, 16) for c in body.split(":")))


def pluecker_key(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    """Normalised wedge of two vectors in F^4; raises GeometryError if they are dependent."""
    mul = field.mul
    raw = tuple(mul(u[i], v[j]) ^ mul(u[j], v[i]) for i, j in PLUECKER_PAIRS)
    return normalize(field, raw)


@dataclass(frozen=True, eq=False)
class LineP3:
    """Line of P^3 spanned by two distinct points."""
    p: ProjPoint
    q: ProjPoint
    key: Tuple[int, ...] = dc_field(init=False)

    def __post_init__(self):
        if self.p.field != self.q.field or len(self.p.coords) != 4 or len(self.q.coords) != 4:
            raise ArityMismatch("lines need two points of P^3 over one field")
        try:
            key = pluecker_key(self.p.field, self.p.coords, self.q.coords)
        except GeometryError:
            raise GeometryError(f"equal points {self.p} span no line") from None
        object.__setattr__(self, "key", key)

    @property
    def field(self) -> FieldSpec:
        return self.p.field

    def __eq__(self, other) -> bool:
        if not isinstance(other, LineP3):
            return NotImplemented
        return self.field == other.field and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.field, self.key))

    def __str__(self) -> str:
        return "<" + ":".join(f"{c:#x}" for c in self.key) + ">"

    @property
    def parametrization(self) -> PolyMap:
        """[s, t] -> s*p + t*q."""
        field = self.field
        return PolyMap(tuple(MultiPoly.linear(field, (a, b)) for a, b in zip(self.p.coords, self.q.coords)))

    def point_at(self, s: int, t: int) -> ProjPoint:
        return ProjPoint(self.field, combine(self.field, s, self.p.coords, t, self.q.coords))

    def points(self) -> Iterator[ProjPoint]:
        yield self.point_at(1, 0)
        for s in range(self.field.order):
            yield self.point_at(s, 1)

    def contains(self, x: ProjPoint) -> bool:
        return linalg.rank(self.field, [self.p.coords, self.q.coords, x.coords]) == 2


@dataclass(frozen=True)
class PlaneP3:
    """Plane of P^3 given by a normalised linear form."""
    field: FieldSpec
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 4:
            raise ArityMismatch("planes of P^3 have four coefficients")
        object.__setattr__(self, "coeffs", normalize(self.field, tuple(int(c) for c in self.coeffs)))

    @property
    def form(self) -> MultiPoly:
        return MultiPoly.linear(self.field, self.coeffs)

    def contains(self, x: ProjPoint) -> bool:
        return dot(self.field, self.coeffs, x.coords) == 0

    def __str__(self) -> str:
        return self.form.to_text()


def line_through(p: ProjPoint, q: ProjPoint) -> LineP3:
    if p == q:
        raise GeometryError(f"equal points {p} span no line")
    return LineP3(p, q)


def plane_through(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> PlaneP3:
    """Coefficients are the 3x3 minors of the matrix with rows p, q, r."""
    field = p.field
    rows = [p.coords, q.coords, r.coords]
    minors = []
    for i in range(4):
        cols = [j for j in range(4) if j != i]
        minors.append(linalg.det(field, [[row[j] for j in cols] for row in rows]))
    if not any(minors):
        raise GeometryError(f"collinear points {p}, {q}, {r}")
    return PlaneP3(field, tuple(minors))


def planes_meet(h1: PlaneP3, h2: PlaneP3) -> LineP3:
    if h1 == h2:
        raise GeometryError(f"proportional planes {h1}")
    basis = linalg.kernel(h1.field, [h1.coeffs, h2.coeffs])
    return LineP3(ProjPoint(h1.field, basis[0]), ProjPoint(h1.field, basis[1]))


def lines_meet(l1: LineP3, l2: LineP3) -> bool:
    """Plücker pairing p01 q23 + p02 q13 + p03 q12 + p12 q03 + p13 q02 + p23 q01."""
    field = l1.field
    a, b = l1.key, l2.key
    return dot(field, a, tuple(reversed(b))) == 0


def lines_meet_det(l1: LineP3, l2: LineP3) -> bool:
    """The four spanning points are dependent."""
    rows = [l1.p.coords, l1.q.coords, l2.p.coords, l2.q.coords]
    return linalg.det(l1.field, rows) == 0


def lines_intersection(l1: LineP3, l2: LineP3) -> ProjPoint:
    """Common point of two distinct meeting lines."""
    if l1 == l2 or not lines_meet(l1, l2):
        raise GeometryError(f"lines {l1} and {l2} do not meet in a single point")
    field = l1.field
    columns = [l1.p.coords, l1.q.coords, l2.p.coords, l2.q.coords]
    rows = [[col[i] for col in columns] for i in range(4)]
    c = linalg.kernel(field, rows)[0]
    return ProjPoint(field, combine(field, c[0], l1.p.coords, c[1], l1.q.coords))


def restrict_to_line(f: MultiPoly, line: LineP3) -> MultiPoly:
    """Binary form f(s*p + t*q)."""
    return f.pullback(line.parametrization)


def general_position6(points: Sequence[ProjPoint]) -> bool:
    """No four of the six points are coplanar."""
    if len(points) != 6:
        raise ArityMismatch(f"six points expected, got {len(points)}")
    field = points[0].field
    for quad in combinations(points, 4):
        if linalg.det(field, [p.coords for p in quad]) == 0:
            return False
    return True


def projective_points(field: FieldSpec, nvars: int) -> np.ndarray:
    """
    Every point of P^(nvars-1)(F_q) as a normalised integer row.

    Rows are grouped by the position of the leading 1.
    """
    q = field.order
    blocks = []
    for lead in range(nvars):
        free = nvars - lead - 1
        combos = list(product(range(q), repeat=free))
        tail = np.array(combos, dtype=np.int64).reshape(len(combos), free)
        block = np.zeros((tail.shape[0], nvars), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = tail
        blocks.append(block)
    return np.concatenate(blocks, axis=0)


def random_point(field: FieldSpec, nvars: int, rng: np.random.Generator) -> ProjPoint:
    while True:
        coords = tuple(field.random_bits(rng) for _ in range(nvars))
        if any(coords):
            return ProjPoint(field, coords)


def random_line(field: FieldSpec, rng: np.random.Generator) -> LineP3:
    while True:
        p = random_point(field, 4, rng)
        q = random_point(field, 4, rng)
        if p != q:
            return LineP3(p, q)
