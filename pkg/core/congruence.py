"""
A congruence of lines of order 2 and class 2 in characteristic 2.

Lines of P^3 are points of the Grassmannian quadric G = x1y1 + x2y2 + x3y3 in
P^5 with x_i = p_0i, y1 = p23, y2 = p13, y3 = p12 and
p_ij = u_i v_j + u_j v_i. The congruence is the quartic del Pezzo surface

    S:  G = 0,  a1x1y1 + a2x2y2 + a3x3y3 + c1y1^2 + c2y2^2 + c3y3^2 = 0,
        alpha1x1 + alpha2x2 + alpha3x3 + beta1y1 + beta2y2 + beta3y3 = 0

and its rays are tangent to the quadric V(F2) of P^3. Rays through a point x
lie in the null plane h(x) of the linear complex alpha.x + beta.y. A line of S
is the pencil of lines through a vertex x_i inside h(x_i). The sixteen
vertices and the sixteen conics h(x_i) meet V(F2) in a (16_6).
"""

import logging
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from . import linalg
from .config import KUMMER_TRIALS, MAX_ENUM_FIELD_DEGREE
from .configs import IncidenceStructure, abstract_kummer, is_symmetric_config, isomorphism, nondegenerate_16_6
from .errors import (
    DegenerateF2, GenericityError, GeometryError, InconclusiveSample, NotALine, ResampleRequired, VerificationFailure,
)
from .gf2k import FieldElement, FieldSpec
from .mvpoly import (
    MultiPoly, PolyMap, WeightedHypersurface, binary_roots, binary_separable, monomials_of_degree,
)
from .projgeom import (
    LineP3, PlaneP3, ProjPoint, combine, dot, lines_intersection, normalize, plane_through, projective_points,
)

logger = logging.getLogger(__name__)

# Plücker pairs in the order x1, x2, x3, y1, y2, y3
XY_PAIRS = ((0, 1), (0, 2), (0, 3), (2, 3), (1, 3), (1, 2))


@dataclass(frozen=True)
class PlueckerCoords:
    """Normalised point (x1, x2, x3, y1, y2, y3) of the Grassmannian quadric."""
    field: FieldSpec
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != 6:
            raise NotALine(f"six Plücker coordinates expected, got {len(self.coords)}")
        try:
            coords = normalize(self.field, tuple(int(c) for c in self.coords))
        except GeometryError:
            raise NotALine("the zero vector is not a line") from None
        mul = self.field.mul
        if mul(coords[0], coords[3]) ^ mul(coords[1], coords[4]) ^ mul(coords[2], coords[5]):
            raise NotALine(f"{coords} is off the Grassmannian quadric")
        object.__setattr__(self, "coords", coords)

    def __str__(self) -> str:
        return "[" + ":".join(f"{c:#x}" for c in self.coords) + "]"


def wedge(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    """Raw (x1, x2, x3, y1, y2, y3) of the span of u and v."""
    mul = field.mul
    return tuple(mul(u[i], v[j]) ^ mul(u[j], v[i]) for i, j in XY_PAIRS)


def pluecker_of_line(line: LineP3) -> PlueckerCoords:
    return PlueckerCoords(line.field, wedge(line.field, line.p.coords, line.q.coords))


def line_of_pluecker(p: PlueckerCoords) -> LineP3:
    """The columns of the alternating matrix (p_ij) span the line."""
    field = p.field
    matrix = [[0] * 4 for _ in range(4)]
    for (i, j), value in zip(XY_PAIRS, p.coords):
        matrix[i][j] = matrix[j][i] = value
    basis = linalg.rref(field, matrix)
    if len(basis) != 2:
        raise NotALine(f"{p} has rank {len(basis)}")
    return LineP3(ProjPoint(field, basis[0]), ProjPoint(field, basis[1]))


# -- parameters and equations --

@dataclass(frozen=True)
class CongruenceParams:
    a: Tuple[FieldElement, FieldElement, FieldElement]
    c: Tuple[FieldElement, FieldElement, FieldElement]
    alpha: Tuple[FieldElement, FieldElement, FieldElement]
    beta: Tuple[FieldElement, FieldElement, FieldElement]

    def __post_init__(self):
        values = self.values()
        if len(values) != 12 or len({v.spec for v in values}) != 1:
            raise GenericityError("twelve parameters over one field expected")
        if len({v.bits for v in self.a}) != 3:
            raise GenericityError(f"a1, a2, a3 must be pairwise distinct, got {[str(v) for v in self.a]}")
        if not sum((x * y for x, y in zip(self.alpha, self.beta)), self.field.zero()):
            raise GenericityError("alpha.beta = 0: the linear complex is special")

    @property
    def field(self) -> FieldSpec:
        return self.a[0].spec

    def values(self) -> Tuple[FieldElement, ...]:
        return tuple(self.a) + tuple(self.c) + tuple(self.alpha) + tuple(self.beta)

    def bits(self, name: str) -> Tuple[int, int, int]:
        return tuple(v.bits for v in getattr(self, name))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values())

    @classmethod
    def of(cls, field: FieldSpec, values: Sequence[int]) -> "CongruenceParams":
        if len(values) != 12:
            raise GenericityError(f"twelve parameters expected, got {len(values)}")
        elems = [FieldElement(field, int(v)) for v in values]
        return cls(tuple(elems[0:3]), tuple(elems[3:6]), tuple(elems[6:9]), tuple(elems[9:12]))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "CongruenceParams":
        return cls.of(field, [int(part, 16) for part in text.split(",")])

    @classmethod
    def random(cls, field: FieldSpec, rng: np.random.Generator, max_tries: int = 1000) -> "CongruenceParams":
        for _ in range(max_tries):
            values = [field.random_bits(rng, nonzero=True) for _ in range(12)]
            try:
                return cls.of(field, values)
            except GenericityError:
                continue
        raise GenericityError(f"no admissible congruence parameters over {field}")

    def null_matrix(self) -> List[List[int]]:
        """Matrix of x -> h(x), the null plane of x in the linear complex."""
        a1, a2, a3 = self.bits("alpha")
        b1, b2, b3 = self.bits("beta")
        return [[0, a1, a2, a3], [a1, 0, b3, b2], [a2, b3, 0, b1], [a3, b2, b1, 0]]


def grassmann_quadric(field: FieldSpec) -> MultiPoly:
    return MultiPoly(field, 6, {(1, 0, 0, 1, 0, 0): 1, (0, 1, 0, 0, 1, 0): 1, (0, 0, 1, 0, 0, 1): 1})


def s_quadric(params: CongruenceParams) -> MultiPoly:
    field = params.field
    a, c = params.bits("a"), params.bits("c")
    terms = {}
    for i in range(3):
        xy = [0] * 6
        xy[i] = xy[3 + i] = 1
        terms[tuple(xy)] = a[i]
        yy = [0] * 6
        yy[3 + i] = 2
        terms[tuple(yy)] = c[i]
    return MultiPoly(field, 6, terms)


def complex_hyperplane(params: CongruenceParams) -> MultiPoly:
    return MultiPoly.linear(params.field, params.bits("alpha") + params.bits("beta"))


def f2_from_params(params: CongruenceParams) -> MultiPoly:
    """
    (a1+a3)(alpha2 x0x2 + beta2 x1x3) + (a2+a3)(alpha1 x0x1 + beta1 x2x3)
    + (a1+a2)(alpha3 x0x3 + beta3 x1x2).
    """
    field = params.field
    a1, a2, a3 = params.bits("a")
    al, be = params.bits("alpha"), params.bits("beta")
    mul = field.mul
    pref = {2: a1 ^ a3, 1: a2 ^ a3, 3: a1 ^ a2}
    pairs = {1: ((0, 1), (2, 3)), 2: ((0, 2), (1, 3)), 3: ((0, 3), (1, 2))}
    terms: Dict[Tuple[int, ...], int] = {}
    for i in (1, 2, 3):
        for (p, q), coeff in zip(pairs[i], (al[i - 1], be[i - 1])):
            exps = [0] * 4
            exps[p] = exps[q] = 1
            terms[tuple(exps)] = mul(pref[i], coeff)
    f = MultiPoly(field, 4, terms)
    if f.is_zero():
        raise DegenerateF2("F2 vanishes identically")
    return f


# -- the congruence as a set of rational lines --

@dataclass
class CongruenceSurface:
    params: CongruenceParams
    equations: Dict[str, MultiPoly]
    points: Tuple[PlueckerCoords, ...] = ()
    singular: int = 0

    @property
    def field(self) -> FieldSpec:
        return self.params.field

    def rays(self) -> List[LineP3]:
        return [line_of_pluecker(p) for p in self.points]

    def point_count_window(self) -> Tuple[int, int]:
        q = self.field.order
        return q * q - 8 * q, q * q + 8 * q + 17


def congruence_surface(params: CongruenceParams) -> CongruenceSurface:
    """Equations only; points are filled in by congruence_points."""
    return CongruenceSurface(params, {
        "G": grassmann_quadric(params.field),
        "S": s_quadric(params),
        "H": complex_hyperplane(params),
    })


def all_lines(field: FieldSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    Two spanning rows for every line of P^3(F_q), one per reduced echelon form.

    There are (q^2 + 1)(q^2 + q + 1) of them.
    """
    q = field.order
    us, vs = [], []
    for i, j in combinations(range(4), 2):
        free_u = [m for m in range(i + 1, 4) if m != j]
        free_v = list(range(j + 1, 4))
        n = len(free_u) + len(free_v)
        rows = list(product(range(q), repeat=n))
        combos = np.array(rows, dtype=np.int64).reshape(len(rows), n)
        u = np.zeros((combos.shape[0], 4), dtype=np.int64)
        v = np.zeros((combos.shape[0], 4), dtype=np.int64)
        u[:, i] = 1
        v[:, j] = 1
        u[:, free_u] = combos[:, :len(free_u)]
        v[:, free_v] = combos[:, len(free_u):]
        us.append(u)
        vs.append(v)
    return np.concatenate(us), np.concatenate(vs)


def _pluecker_arrays(field: FieldSpec, u: np.ndarray, v: np.ndarray):
    GF = field.galois_field
    U, V = GF(u), GF(v)
    return [U[:, i] * V[:, j] + U[:, j] * V[:, i] for i, j in XY_PAIRS]


def congruence_points(params: CongruenceParams, field: Optional[FieldSpec] = None) -> CongruenceSurface:
    """
    Scan every line of P^3(F_q) and keep the rays of the congruence.

    Each kept ray is checked to be a smooth point of S.
    """
    field = field or params.field
    if field != params.field:
        raise ValueError(f"parameters over {params.field}, scan over {field}")
    if field.k > MAX_ENUM_FIELD_DEGREE:
        raise ValueError(f"line scan over {field} exceeds 2^{MAX_ENUM_FIELD_DEGREE}")
    GF = field.galois_field
    u, v = all_lines(field)
    X1, X2, X3, Y1, Y2, Y3 = _pluecker_arrays(field, u, v)
    a = [GF(x) for x in params.bits("a")]
    c = [GF(x) for x in params.bits("c")]
    al = [GF(x) for x in params.bits("alpha")]
    be = [GF(x) for x in params.bits("beta")]
    S = a[0] * X1 * Y1 + a[1] * X2 * Y2 + a[2] * X3 * Y3 + c[0] * Y1 ** 2 + c[1] * Y2 ** 2 + c[2] * Y3 ** 2
    H = al[0] * X1 + al[1] * X2 + al[2] * X3 + be[0] * Y1 + be[1] * Y2 + be[2] * Y3
    mask = (np.asarray(S) == 0) & (np.asarray(H) == 0)
    rows = np.stack([np.asarray(P) for P in (X1, X2, X3, Y1, Y2, Y3)], axis=1)[mask]
    points = tuple(PlueckerCoords(field, tuple(int(x) for x in row)) for row in rows)
    surface = congruence_surface(params)
    surface.points = points
    surface.singular = sum(1 for p in points if not _smooth_on_s(params, p))
    logger.info(f"{len(points)} rays over {field} for {params} ({u.shape[0]} lines scanned)")
    if surface.singular:
        raise GenericityError(f"{surface.singular} rational rays are singular points of S")
    return surface


def _smooth_on_s(params: CongruenceParams, p: PlueckerCoords) -> bool:
    """The gradients of G, S and H at p are independent."""
    field = params.field
    x1, x2, x3, y1, y2, y3 = p.coords
    a = params.bits("a")
    grad_g = (y1, y2, y3, x1, x2, x3)
    grad_s = tuple(field.mul(a[i], y) for i, y in enumerate((y1, y2, y3))) + \
        tuple(field.mul(a[i], x) for i, x in enumerate((x1, x2, x3)))
    grad_h = params.bits("alpha") + params.bits("beta")
    return linalg.rank(field, [grad_g, grad_s, grad_h]) == 3


def evaluate_s(params: CongruenceParams, coords: Sequence[int]) -> int:
    mul = params.field.mul
    a, c = params.bits("a"), params.bits("c")
    total = 0
    for i in range(3):
        total ^= mul(a[i], mul(coords[i], coords[3 + i])) ^ mul(c[i], mul(coords[3 + i], coords[3 + i]))
    return total


def on_surface(params: CongruenceParams, coords: Sequence[int]) -> bool:
    field = params.field
    g = grassmann_quadric(field).eval_bits(coords)
    h = complex_hyperplane(params).eval_bits(coords)
    return not g and not h and not evaluate_s(params, coords)


# -- rays through a point and in a plane --

def null_plane(params: CongruenceParams, x: ProjPoint) -> PlaneP3:
    field = params.field
    return PlaneP3(field, tuple(dot(field, row, x.coords) for row in params.null_matrix()))


def null_point(params: CongruenceParams, plane: PlaneP3) -> ProjPoint:
    """The point whose null plane is `plane`."""
    field = params.field
    matrix = params.null_matrix()
    columns = [[matrix[r][c] for r in range(4)] for c in range(4)]
    return ProjPoint(field, linalg.solve_combination(field, columns, plane.coeffs))


def pencil_directions(field: FieldSpec, x: Sequence[int], plane: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Two points w1, w2 of the plane that span it together with x (which lies on it)."""
    j = next(m for m, v in enumerate(plane) if v)
    spanning = {}
    for m in range(4):
        if m == j:
            continue
        w = [0, 0, 0, 0]
        w[m] ^= plane[j]
        w[j] ^= plane[m]
        spanning[m] = tuple(w)
    drop = next(m for m in spanning if x[m])
    w1, w2 = [w for m, w in spanning.items() if m != drop]
    return w1, w2


def ray_quadratic(params: CongruenceParams, x: ProjPoint, plane: Optional[PlaneP3] = None) -> Tuple[MultiPoly, Tuple]:
    """
    S restricted to the pencil of lines through x in `plane` (default h(x)),
    as a binary quadratic in the direction [s:t].
    """
    field = params.field
    plane = plane if plane is not None else null_plane(params, x)
    w1, w2 = pencil_directions(field, x.coords, plane.coeffs)
    r1 = wedge(field, x.coords, w1)
    r2 = wedge(field, x.coords, w2)
    pencil = PolyMap(tuple(MultiPoly.linear(field, (p, q)) for p, q in zip(r1, r2)))
    return s_quadric(params).pullback(pencil), (w1, w2)


def order_check(surface: CongruenceSurface, x: ProjPoint) -> bool:
    """True iff exactly two distinct rays pass through x."""
    params = surface.params
    if f2_from_params(params).eval_bits(x.coords) == 0:
        raise ResampleRequired(f"{x} lies on V(F2)")
    b, _ = ray_quadratic(params, x)
    if b.is_zero():
        raise ResampleRequired(f"{x} is a pencil vertex")
    return binary_separable(b)


def class_check(surface: CongruenceSurface, plane: PlaneP3) -> bool:
    """True iff exactly two distinct rays lie in the plane."""
    params = surface.params
    x = null_point(params, plane)
    if f2_from_params(params).eval_bits(x.coords) == 0:
        raise ResampleRequired(f"null point of {plane} lies on V(F2)")
    b, _ = ray_quadratic(params, x, plane)
    if b.is_zero():
        raise ResampleRequired(f"{plane} is a pencil plane")
    return binary_separable(b)


def rays_through(surface: CongruenceSurface, x: ProjPoint) -> List[LineP3]:
    """Rational rays through x, each checked against all three equations."""
    params = surface.params
    field = params.field
    b, (w1, w2) = ray_quadratic(params, x)
    roots = [(1, 0)] + [(s, 1) for s in range(field.order)] if b.is_zero() else binary_roots(b)
    rays = []
    for s, t in roots:
        w = tuple(field.mul(s, p) ^ field.mul(t, q) for p, q in zip(w1, w2))
        coords = wedge(field, x.coords, w)
        if not on_surface(params, coords):
            raise VerificationFailure(f"ray through {x} in direction {w} is off S")
        rays.append(LineP3(x, ProjPoint(field, w)))
    return rays


@dataclass
class ProbeReport:
    probes: int
    generic: int = 0
    two_rays: int = 0
    resampled: int = 0
    failures: List[str] = dc_field(default_factory=list)


def probe_order_and_class(surface: CongruenceSurface, probes: int, rng: np.random.Generator) -> Dict[str, ProbeReport]:
    """Random points and planes; degenerate draws are resampled, at most ten times each."""
    field = surface.field
    reports = {"order": ProbeReport(probes), "class": ProbeReport(probes)}
    for kind, check in (("order", order_check), ("class", class_check)):
        report = reports[kind]
        for _ in range(probes):
            for _attempt in range(10):
                coords = tuple(field.random_bits(rng) for _ in range(4))
                if not any(coords):
                    continue
                target = ProjPoint(field, coords) if kind == "order" else PlaneP3(field, coords)
                try:
                    separable = check(surface, target)
                except ResampleRequired:
                    report.resampled += 1
                    continue
                report.generic += 1
                if separable:
                    report.two_rays += 1
                else:
                    report.failures.append(str(target))
                break
    return reports


def rays_avoid_quadric(surface: CongruenceSurface) -> bool:
    """No ray of the congruence lies inside V(F2)."""
    f2 = f2_from_params(surface.params)
    return all(not f2.pullback(ray.parametrization).is_zero() for ray in surface.rays())


# -- tangency --

def tangency_form(f2: MultiPoly) -> MultiPoly:
    """
    Polar form of F2 as a linear form in (x1, x2, x3, y1, y2, y3).

    It vanishes on a line exactly when F2 restricted to the line has a
    repeated root.
    """
    if f2.nvars != 4 or f2.degree != 2 or not f2.is_homogeneous():
        raise DegenerateF2(f"not a quadric in four variables: {f2}")
    coeffs = []
    for i, j in XY_PAIRS:
        exps = [0] * 4
        exps[i] = exps[j] = 1
        coeffs.append(f2.terms.get(tuple(exps), 0))
    if not any(coeffs):
        raise DegenerateF2(f"{f2} has a vanishing polar form")
    return MultiPoly.linear(f2.field, coeffs)


def tangent_line_at(f2: MultiPoly, p: ProjPoint, rng: np.random.Generator) -> LineP3:
    """A line through the point p of V(F2) inside its polar plane."""
    field = f2.field
    polar = tuple(f2.partial(i).eval_bits(p.coords) for i in range(4))
    if not any(polar):
        raise DegenerateF2(f"{p} is singular on V(F2)")
    basis = linalg.kernel(field, [polar])
    while True:
        w = (0, 0, 0, 0)
        for b in basis:
            w = combine(field, 1, w, field.random_bits(rng), b)
        if any(w) and ProjPoint(field, w) != p:
            return LineP3(p, ProjPoint(field, w))


def tangency_agrees(f2: MultiPoly, line: LineP3) -> bool:
    """The form vanishes on the line iff the restricted quadratic has no middle term."""
    form = tangency_form(f2)
    key = pluecker_of_line(line).coords
    restricted = f2.pullback(line.parametrization)
    return (form.eval_bits(key) == 0) == (restricted.terms.get((1, 1), 0) == 0)


# -- double cover equations --

def cover_equation(f2: MultiPoly, f4: MultiPoly) -> WeightedHypersurface:
    """x4^2 + F2 x4 + F4 in P(1,1,1,1,2)."""
    field = f2.field
    n = f2.nvars
    w = MultiPoly.variable(field, n + 1, n)
    lift = _lift_poly
    equation = w * w + lift(f2, n + 1) * w + lift(f4, n + 1)
    return WeightedHypersurface((1,) * n + (2,), 4, equation)


def sextic_cover(f3: MultiPoly, f6: MultiPoly) -> WeightedHypersurface:
    """x3^2 + F3 x3 + F6 in P(1,1,1,3)."""
    field = f6.field
    n = f6.nvars
    w = MultiPoly.variable(field, n + 1, n)
    equation = w * w + _lift_poly(f3, n + 1) * w + _lift_poly(f6, n + 1)
    return WeightedHypersurface((1,) * n + (3,), 6, equation)


def _lift_poly(f: MultiPoly, nvars: int) -> MultiPoly:
    return MultiPoly(f.field, nvars, {e + (0,) * (nvars - f.nvars): c for e, c in f.terms.items()})


def _quartic_columns(field: FieldSpec, nvars: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Coordinates of a quartic over F2: monomials largest first, then bits high to low."""
    return [(m, b) for m in monomials_of_degree(nvars, 4) for b in range(field.k - 1, -1, -1)]


def _to_bits(f: MultiPoly, columns) -> np.ndarray:
    return np.array([(f.terms.get(m, 0) >> b) & 1 for m, b in columns], dtype=np.int64)


def _from_bits(field: FieldSpec, nvars: int, vector: np.ndarray, columns) -> MultiPoly:
    terms: Dict[Tuple[int, ...], int] = {}
    for bit, (m, b) in zip(vector, columns):
        if bit:
            terms[m] = terms.get(m, 0) | (1 << b)
    return MultiPoly(field, nvars, terms)


def _artin_schreier_image(f2: MultiPoly, columns) -> np.ndarray:
    """Reduced echelon rows spanning {A^2 + A F2 : A a quadric} as an F2-space."""
    field = f2.field
    rows = []
    for m in monomials_of_degree(f2.nvars, 2):
        for b in range(field.k):
            A = MultiPoly(field, f2.nvars, {m: 1 << b})
            rows.append(_to_bits(A.square() + A * f2, columns))
    reduced = np.asarray(galois.GF(2)(np.array(rows, dtype=np.int64)).row_reduce(), dtype=np.int64)
    return reduced[reduced.any(axis=1)]


def normalize_quartic(f4: MultiPoly, f2: MultiPoly) -> MultiPoly:
    """
    Canonical representative of F4 modulo A^2 + A F2.

    The image is put in reduced echelon form; clearing its pivot positions
    gives the lexicographically smallest member of the coset.
    """
    columns = _quartic_columns(f4.field, f4.nvars)
    vector = _to_bits(f4, columns)
    for row in _artin_schreier_image(f2, columns):
        pivot = int(np.argmax(row))
        if vector[pivot]:
            vector = vector ^ row
    return _from_bits(f4.field, f4.nvars, vector, columns)


def normalize_quartic_bruteforce(f4: MultiPoly, f2: MultiPoly) -> MultiPoly:
    """Lexicographic minimum of F4 + A^2 + A F2 over every quadric A; F2 coefficients only."""
    field = f4.field
    if field.k != 1:
        raise ValueError("exhaustive normalisation is only offered over GF(2)")
    columns = _quartic_columns(field, f4.nvars)
    monos = monomials_of_degree(f4.nvars, 2)
    best = None
    for choice in product((0, 1), repeat=len(monos)):
        A = MultiPoly(field, f4.nvars, {m: 1 for m, bit in zip(monos, choice) if bit})
        vector = tuple(_to_bits(f4 + A.square() + A * f2, columns).tolist())
        if best is None or vector < best:
            best = vector
    return _from_bits(field, f4.nvars, np.array(best), columns)


# -- the pencil of quadrics and its vertices --

def singular_pencil_members(params: CongruenceParams) -> List[int]:
    """lambda in F_q with lambda G + S singular over the algebraic closure."""
    field = params.field
    G = grassmann_quadric(field)
    S = s_quadric(params)
    singular = []
    for lam in range(field.order):
        Q = G.scale(lam) + S
        # polar matrix B(e_i, e_j) from the mixed terms
        polar = [[0] * 6 for _ in range(6)]
        for exps, c in Q.terms.items():
            idx = [i for i, e in enumerate(exps) if e == 1]
            if len(idx) == 2:
                i, j = idx
                polar[i][j] = polar[j][i] = c
        radical = linalg.kernel(field, polar)
        if len(radical) >= 2 or (len(radical) == 1 and not Q.eval_bits(radical[0])):
            singular.append(lam)
    return singular


def quadric_points(f2: MultiPoly) -> List[ProjPoint]:
    field = f2.field
    GF = field.galois_field
    points = GF(projective_points(field, 4))
    mask = np.asarray(f2.eval_array(points)) == 0
    return [ProjPoint(field, tuple(int(v) for v in row)) for row in np.asarray(points)[mask]]


def _is_vertex(params: CongruenceParams, x: ProjPoint) -> bool:
    field = params.field
    plane = null_plane(params, x)
    w1, w2 = pencil_directions(field, x.coords, plane.coeffs)
    return not evaluate_s(params, wedge(field, x.coords, w1)) and not evaluate_s(params, wedge(field, x.coords, w2))


def pencil_vertices(params: CongruenceParams) -> List[ProjPoint]:
    """
    Rational points x of V(F2) whose whole pencil of lines in h(x) lies on S.

    Off V(F2) the middle term of the ray quadratic is nonzero, so only
    V(F2) needs scanning.
    """
    if params.field.k > MAX_ENUM_FIELD_DEGREE:
        raise ValueError(f"vertex scan over {params.field} exceeds 2^{MAX_ENUM_FIELD_DEGREE}")
    return [x for x in quadric_points(f2_from_params(params)) if _is_vertex(params, x)]


def find_sixteen_line_params(field: FieldSpec, rng: np.random.Generator, trials: int = KUMMER_TRIALS) -> CongruenceParams:
    """Random parameters whose congruence is smooth at its rational rays and has all sixteen vertices rational."""
    for trial in range(trials):
        params = CongruenceParams.random(field, rng)
        try:
            count = len(pencil_vertices(params))
        except DegenerateF2:
            continue
        if count == 16:
            try:
                congruence_points(params)
            except GenericityError:
                continue
            logger.info(f"sixteen rational vertices after {trial + 1} trials: {params}")
            return params
    raise InconclusiveSample(f"no parameters with sixteen rational lines in {trials} trials over {field}")


# -- lines of S and the Kummer configuration --

def _polar_matrices(params: CongruenceParams):
    """Gram matrices of the polar forms of G and of the S quadric."""
    GF = params.field.galois_field
    J = np.zeros((6, 6), dtype=np.int64)
    Ja = np.zeros((6, 6), dtype=np.int64)
    a = params.bits("a")
    for i in range(3):
        J[i, 3 + i] = J[3 + i, i] = 1
        Ja[i, 3 + i] = Ja[3 + i, i] = a[i]
    return GF(J), GF(Ja)


def surface_lines(surface: CongruenceSurface) -> List[Tuple[Tuple[int, ...], ...]]:
    """
    Lines of P^5 inside S through its rational points.

    Two points of S span a line of S iff they are orthogonal for both polar forms.
    """
    field = surface.field
    GF = field.galois_field
    P = GF(np.array([p.coords for p in surface.points], dtype=np.int64))
    J, Ja = _polar_matrices(surface.params)
    both = (np.asarray(P @ J @ P.T) == 0) & (np.asarray(P @ Ja @ P.T) == 0)
    keys = set()
    for i, j in zip(*np.nonzero(np.triu(both, k=1))):
        span = linalg.rref(field, [surface.points[i].coords, surface.points[j].coords])
        keys.add(tuple(span))
    return sorted(keys)


@dataclass
class KummerOnQuadric:
    vertices: List[ProjPoint]
    planes: List[PlaneP3]
    incidence: IncidenceStructure
    bijection: Optional[Tuple[List[int], List[int]]]


def kummer_on_quadric(surface: CongruenceSurface) -> KummerOnQuadric:
    """
    The sixteen vertices x_i and conics h(x_i) on V(F2); x_j lies on the
    conic of x_i iff x_j lies in h(x_i).
    """
    params = surface.params
    field = surface.field
    lines = surface_lines(surface)
    if len(lines) != 16:
        raise InconclusiveSample(f"{len(lines)} rational lines on S, sixteen needed")
    f2 = f2_from_params(params)
    vertices, planes = [], []
    for span in lines:
        r1 = line_of_pluecker(PlueckerCoords(field, span[0]))
        r2 = line_of_pluecker(PlueckerCoords(field, span[1]))
        try:
            x = lines_intersection(r1, r2)
        except GeometryError:
            raise VerificationFailure(f"rays of the line {span} do not meet") from None
        others = [p for p in (r1.p, r1.q) if p != x][:1] + [p for p in (r2.p, r2.q) if p != x][:1]
        plane = plane_through(x, *others)
        if plane != null_plane(params, x):
            raise VerificationFailure(f"pencil plane at {x} is not its null plane")
        if f2.eval_bits(x.coords):
            raise VerificationFailure(f"vertex {x} is off V(F2)")
        vertices.append(x)
        planes.append(plane)

    labels = [f"x{i}" for i in range(16)]
    conics = [f"T{i}" for i in range(16)]
    matrix = np.array([[int(planes[i].contains(vertices[j])) for i in range(16)] for j in range(16)], dtype=np.uint8)
    inc = IncidenceStructure(tuple(labels), tuple(conics), matrix)
    if not is_symmetric_config(inc, 6) or not nondegenerate_16_6(inc):
        raise VerificationFailure(f"vertex/conic incidence is not a (16_6): rows {inc.row_sums().tolist()}")
    bijection = isomorphism(inc, abstract_kummer())
    return KummerOnQuadric(vertices, planes, inc, bijection)
