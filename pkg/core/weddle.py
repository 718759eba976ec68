"""
The Weddle quartic through six points of P^3 in characteristic 2.

The six points are the coordinate points p1..p4, p5 = [1,1,1,1] and
p6 = [a,b,c,d]. Besides p1..p6 the quartic has a seventh node
P = [sqrt a, sqrt b, sqrt c, sqrt d]. It carries the twisted cubic R3, the
15 lines l_ij = p_i p_j and ten residual lines l_ijk. Their incidences form
a Kummer (16_6) configuration.

The Hutchinson map T = [a yzw, b xzw, c xyw, d xyz] is a Cremona
involution preserving the surface with fixed point P.

Two plane checks are sampled:
- the double-plane identity: six lines admit a conic through P12, P13, P23,
  P45, P46, P56 iff their dual points lie on a conic
- the ten conics through the intersection points of six lines whose dual
  points lie on a conic C. Their two common points span the line dual to C.

Labels follow the six-point notation used by core.configs: "E0" is R3,
"E12" is l_12, "E1" is p1 and "E123" is the residual line of {123|456}.
"""

import logging
from dataclasses import dataclass, field as dc_field
from functools import reduce
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .config import MAX_ENUM_FIELD_DEGREE
from .configs import (
    DUADS, KUMMER_A_LABELS, KUMMER_B_LABELS, TRIPLES, IncidenceStructure,
    abstract_kummer, complement, duad_label, is_symmetric_config, nondegenerate_16_6, triple_label,
)
from .errors import GenericityError, NonExactDivision, ResampleRequired, VerificationFailure
from .gf2k import FieldElement, FieldSpec
from .mvpoly import MultiPoly, PolyMap, binary_gcd, binary_separable, compose, is_singular_at, poly_det, proportional
from .projgeom import (
    LineP3, PlaneP3, ProjPoint, dot, general_position6, line_through, lines_meet, normalize,
    plane_through, planes_meet, projective_points, restrict_to_line,
)

logger = logging.getLogger(__name__)

CROSSING_LABELS = tuple(triple_label(t) for t in TRIPLES if 5 in t)


# -- parameters --

@dataclass(frozen=True)
class WeddleParams:
    """The coordinates of p6 = [a, b, c, d]."""
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        values = self.values()
        spec = values[0].spec
        if any(v.spec != spec for v in values):
            raise GenericityError("parameters from different fields")
        if not all(values):
            raise GenericityError(f"zero parameter in {self}")
        points = reference_points(self)
        if len(set(points)) < 6:
            raise GenericityError(f"p6 coincides with another reference point for {self}")
        if not general_position6(points):
            raise GenericityError(f"four of the six points are coplanar for {self}")
        if len(set(points) | {node_p(self)}) != 7:
            raise GenericityError(f"seventh node coincides with a reference point for {self}")

    @property
    def field(self) -> FieldSpec:
        return self.a.spec

    def values(self) -> Tuple[FieldElement, ...]:
        return (self.a, self.b, self.c, self.d)

    def bits(self) -> Tuple[int, ...]:
        return tuple(v.bits for v in self.values())

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values())

    @classmethod
    def of(cls, field: FieldSpec, values: Sequence[int]) -> "WeddleParams":
        if len(values) != 4:
            raise GenericityError(f"four parameters expected, got {len(values)}")
        return cls(*(FieldElement(field, int(v)) for v in values))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "WeddleParams":
        """Four comma-separated hexadecimal elements."""
        return cls.of(field, [int(part, 16) for part in text.split(",")])

    @classmethod
    def random(cls, field: FieldSpec, rng: np.random.Generator, max_tries: int = 1000) -> "WeddleParams":
        for _ in range(max_tries):
            values = [field.random_bits(rng, nonzero=True) for _ in range(4)]
            try:
                return cls.of(field, values)
            except GenericityError:
                continue
        raise GenericityError(f"no generic parameters found over {field} in {max_tries} tries")


def reference_points(params: WeddleParams) -> List[ProjPoint]:
    field = params.field
    rows = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)]
    return [ProjPoint(field, r) for r in rows] + [ProjPoint(field, params.bits())]


def node_p(params: WeddleParams) -> ProjPoint:
    """The extra node [sqrt a, sqrt b, sqrt c, sqrt d]."""
    return ProjPoint(params.field, tuple(v.sqrt().bits for v in params.values()))


# -- the quartic and its nodes --

def weddle_equation(params: WeddleParams) -> MultiPoly:
    """det of rows (a yzw, x, 1, a), (b xzw, y, 1, b), (c xyw, z, 1, c), (d xyz, w, 1, d)."""
    field = params.field
    xs = MultiPoly.variables(field, 4)
    one = MultiPoly.constant(field, 4)
    rows = []
    for i, coeff in enumerate(params.values()):
        others = [xs[j] for j in range(4) if j != i]
        cubic = reduce(lambda f, g: f * g, others).scale(coeff)
        rows.append([cubic, xs[i], one, one.scale(coeff)])
    quartic = poly_det(rows)
    if quartic.is_zero() or quartic.degree != 4 or not quartic.is_homogeneous():
        raise GenericityError(f"degenerate Weddle determinant for {params}")
    return quartic


def weddle_nodes(params: WeddleParams, quartic: Optional[MultiPoly] = None) -> List[ProjPoint]:
    """p1..p6 followed by P; each is checked to be singular on the quartic."""
    quartic = quartic if quartic is not None else weddle_equation(params)
    nodes = reference_points(params) + [node_p(params)]
    for i, node in enumerate(nodes):
        if not is_singular_at(quartic, node.coords):
            name = "P" if i == 6 else f"p{i + 1}"
            raise VerificationFailure(f"{name} = {node} is not singular on the Weddle quartic")
    return nodes


def singular_points_bruteforce(f: MultiPoly, field: FieldSpec) -> List[ProjPoint]:
    """Every F_q-point of P^(n-1) where f and all its partials vanish."""
    if field.k > MAX_ENUM_FIELD_DEGREE:
        raise ValueError(f"exhaustive scan over {field} exceeds 2^{MAX_ENUM_FIELD_DEGREE}")
    if f.field != field:
        raise ValueError(f"polynomial over {f.field}, scan over {field}")
    GF = field.galois_field
    points = GF(projective_points(field, f.nvars))
    mask = np.asarray(f.eval_array(points)) == 0
    for i in range(f.nvars):
        if not mask.any():
            break
        partial = f.partial(i)
        if partial.is_zero():
            continue
        mask &= np.asarray(partial.eval_array(points)) == 0
    found = [ProjPoint(field, tuple(int(v) for v in row)) for row in np.asarray(points)[mask]]
    logger.debug(f"{len(found)} singular points over {field}")
    return found


# -- the Hutchinson involution --

def _apply(m: PolyMap, point: ProjPoint) -> ProjPoint:
    return ProjPoint(point.field, m.eval_bits(point.coords))


def hutchinson_map(params: WeddleParams, quartic: Optional[MultiPoly] = None) -> PolyMap:
    """
    T = [a yzw, b xzw, c xyw, d xyz], verified to satisfy
    W o T = abcd (xyzw)^2 W, T o T = abcd (xyzw)^2 id and T(P) = P.
    """
    field = params.field
    quartic = quartic if quartic is not None else weddle_equation(params)
    xs = MultiPoly.variables(field, 4)
    comps = []
    for i, coeff in enumerate(params.values()):
        others = [xs[j] for j in range(4) if j != i]
        comps.append(reduce(lambda f, g: f * g, others).scale(coeff))
    T = PolyMap(tuple(comps))

    abcd = reduce(lambda u, v: u * v, params.values()).bits
    factor = MultiPoly(field, 4, {(2, 2, 2, 2): abcd})
    try:
        quotient = quartic.pullback(T).divide_exact(quartic)
    except NonExactDivision:
        raise VerificationFailure("W o T is not divisible by W") from None
    if quotient != factor:
        raise VerificationFailure(f"W o T / W = {quotient}, expected {factor}")
    square = compose(T, T)
    for i, comp in enumerate(square.components):
        if comp != factor * xs[i]:
            raise VerificationFailure(f"component {i} of T o T is {comp}")
    p = node_p(params)
    if _apply(T, p) != p:
        raise VerificationFailure(f"T does not fix P = {p}")
    return T


def hutchinson_contractions(params: WeddleParams, T: Optional[PolyMap] = None) -> Dict[str, bool]:
    """T collapses the coordinate plane opposite p_i onto p_i, for i = 1..4."""
    field = params.field
    T = T if T is not None else hutchinson_map(params)
    result = {}
    for i in range(4):
        # plane x_i = 0 parametrised by the three remaining coordinates
        rows = []
        for m in range(4):
            row = [0, 0, 0]
            if m != i:
                row[m if m < i else m - 1] = 1
            rows.append(row)
        plane = PolyMap.linear(field, rows)
        image = compose(T, plane)
        collapsed = all(image.components[m].is_zero() for m in range(4) if m != i)
        result[f"E{i + 1}"] = collapsed and not image.components[i].is_zero()
    return result


# -- curves on the surface --

def twisted_cubic(params: WeddleParams, quartic: Optional[MultiPoly] = None) -> PolyMap:
    """
    R3: [s, t] -> [a(s+tb)(s+tc)(s+td), b(s+ta)(s+tc)(s+td), ...].

    Sends [1,0] to p6, [0,1] to p5 and [a,1], [b,1], [c,1], [d,1] to p1..p4.
    """
    field = params.field
    values = params.values()
    factors = [MultiPoly.linear(field, (1, v)) for v in values]
    comps = []
    for i, coeff in enumerate(values):
        others = [factors[j] for j in range(4) if j != i]
        comps.append(reduce(lambda f, g: f * g, others).scale(coeff))
    R3 = PolyMap(tuple(comps))

    points = reference_points(params)
    expected = [((1, 0), points[5]), ((0, 1), points[4])]
    expected += [((v.bits, 1), points[i]) for i, v in enumerate(values)]
    for st, point in expected:
        image = ProjPoint(field, R3.eval_bits(st))
        if image != point:
            raise VerificationFailure(f"R3{list(st)} = {image}, expected {point}")
    quartic = quartic if quartic is not None else weddle_equation(params)
    if not quartic.pullback(R3).is_zero():
        raise VerificationFailure("R3 does not lie on the Weddle quartic")
    return R3


def node_lines(params: WeddleParams) -> Dict[str, LineP3]:
    """The 15 lines l_ij = p_i p_j."""
    points = reference_points(params)
    return {duad_label(d): line_through(points[d[0] - 1], points[d[1] - 1]) for d in DUADS}


def _plane(points: List[ProjPoint], triple: Sequence[int]) -> PlaneP3:
    return plane_through(*(points[i - 1] for i in triple))


def residual_lines(params: WeddleParams, quartic: Optional[MultiPoly] = None) -> Dict[str, LineP3]:
    """
    l_ijk = Pi_ijk meet Pi_lmn for the ten partitions {ijk|lmn}.

    Each line is cross-checked against the plane section: on Pi_ijk,
    parametrised by u0 p_i + u1 p_j + u2 p_k, the quartic is u0 u1 u2 L
    and L must vanish on l_ijk.
    """
    field = params.field
    quartic = quartic if quartic is not None else weddle_equation(params)
    points = reference_points(params)
    lines = {}
    for triple in TRIPLES:
        other = complement(triple)
        label = triple_label(triple)
        line = planes_meet(_plane(points, triple), _plane(points, other))
        if not restrict_to_line(quartic, line).is_zero():
            raise VerificationFailure(f"{label} does not lie on the Weddle quartic")
        for p in points:
            if line.contains(p):
                raise VerificationFailure(f"{label} passes through the node {p}")

        basis = [points[i - 1].coords for i in triple]
        plane_map = PolyMap.linear(field, [[row[m] for row in basis] for m in range(4)])
        section = quartic.pullback(plane_map)
        try:
            for u in MultiPoly.variables(field, 3):
                section = section.divide_exact(u)
        except NonExactDivision:
            raise VerificationFailure(f"plane section of {label} does not contain the three node lines") from None
        if section.degree != 1:
            raise VerificationFailure(f"residual factor on {label} has degree {section.degree}")
        for end in (line.p, line.q):
            coords = linalg.solve_combination(field, basis, end.coords)
            if section.eval_bits(coords):
                raise VerificationFailure(f"residual factor on the plane of {label} misses the line")
        lines[label] = line
    return lines


def _curve_points(R3: PolyMap) -> set:
    field = R3.field
    params_p1 = [(1, 0)] + [(s, 1) for s in range(field.order)]
    return {ProjPoint(field, R3.eval_bits(st)) for st in params_p1}


def _cubic_meets_line(R3: PolyMap, points: List[ProjPoint], triple: Sequence[int]) -> bool:
    """R3 meets l_ijk iff the restrictions of both defining planes share a root."""
    forms = [_plane(points, t).form.pullback(R3) for t in (triple, complement(triple))]
    return binary_gcd(forms[0], forms[1]).degree > 0


def kummer_incidence(params: WeddleParams, surface: Optional["WeddleSurface"] = None) -> IncidenceStructure:
    """
    A side: R3 and the l_ij; B side: the nodes p_i and the l_ijk.

    Points meet curves by membership, lines meet lines by the Plücker pairing.
    """
    surface = surface if surface is not None else WeddleSurface.build(params)
    points = reference_points(params)
    on_cubic = _curve_points(surface.cubic)

    def incident(a: str, b: str) -> bool:
        if a == "E0":
            if len(b) == 2:
                return points[int(b[1]) - 1] in on_cubic
            return _cubic_meets_line(surface.cubic, points, tuple(int(ch) for ch in b[1:]))
        line = surface.lines[a]
        if len(b) == 2:
            return line.contains(points[int(b[1]) - 1])
        return lines_meet(line, surface.residual_lines[b])

    inc = IncidenceStructure.from_relation(KUMMER_A_LABELS, KUMMER_B_LABELS, incident)
    if not is_symmetric_config(inc, 6):
        raise VerificationFailure(f"row sums {inc.row_sums().tolist()}, column sums {inc.col_sums().tolist()}")
    if not nondegenerate_16_6(inc):
        raise VerificationFailure("two B elements do not share exactly two neighbours")
    return inc


def matches_abstract_kummer(inc: IncidenceStructure) -> bool:
    return inc == abstract_kummer()


# -- Hutchinson orbits --

def image_of_line(T: PolyMap, line: LineP3) -> LineP3:
    """T(line) when T restricted to the line is a line after removing the common factor."""
    image = compose(T, line.parametrization)
    common = reduce(binary_gcd, image.components)
    if common.is_zero():
        raise VerificationFailure(f"T vanishes on {line}")
    try:
        comps = tuple(c.divide_exact(common) for c in image.components)
    except NonExactDivision:
        raise VerificationFailure(f"common factor of T on {line} does not divide") from None
    degrees = {c.degree for c in comps if not c.is_zero()}
    if degrees != {1}:
        raise VerificationFailure(f"T({line}) is not a line: degrees {sorted(degrees)}")
    reduced = PolyMap(comps)
    field = line.field
    return LineP3(ProjPoint(field, reduced.eval_bits((1, 0))), ProjPoint(field, reduced.eval_bits((0, 1))))


def maps_proportional(m1: PolyMap, m2: PolyMap) -> Optional[FieldElement]:
    """c with m1 = c * m2 componentwise, or None."""
    if m1.target_nvars != m2.target_nvars:
        return None
    ratio = None
    for f, g in zip(m1.components, m2.components):
        if f.is_zero() and g.is_zero():
            continue
        c = proportional(f, g)
        if c is None or (ratio is not None and c != ratio):
            return None
        ratio = c
    return ratio


@dataclass
class HutchinsonOrbits:
    swaps_cubic_and_l56: bool
    images: Dict[str, str]
    orbits: List[Tuple[str, str]]


def hutchinson_orbits(params: WeddleParams, surface: Optional["WeddleSurface"] = None) -> HutchinsonOrbits:
    """
    T sends the line l_56 onto R3 and pairs off the six residual lines whose
    partition separates 5 from 6.
    """
    surface = surface if surface is not None else WeddleSurface.build(params)
    field = params.field
    T = surface.hutchinson
    # s p5 + t (a, b, c, d) with p6 left unnormalised
    l56 = PolyMap(tuple(MultiPoly.linear(field, (1, v)) for v in params.bits()))
    swaps = maps_proportional(compose(T, l56), surface.cubic) is not None
    if not swaps:
        raise VerificationFailure("T(l_56) is not the twisted cubic")

    by_key = {line: label for label, line in surface.residual_lines.items()}
    by_key.update({line: label for label, line in surface.lines.items()})
    images = {}
    for label in CROSSING_LABELS:
        line = surface.residual_lines[label]
        image = image_of_line(T, line)
        target = by_key.get(image)
        if target not in CROSSING_LABELS or target == label:
            raise VerificationFailure(f"T({label}) = {image} is not another crossing line")
        if image_of_line(T, image) != line:
            raise VerificationFailure(f"T is not an involution on {label}")
        images[label] = target
    orbits = sorted({tuple(sorted((k, v))) for k, v in images.items()})
    if len(orbits) != 3:
        raise VerificationFailure(f"{len(orbits)} orbits among the crossing lines")
    return HutchinsonOrbits(swaps, images, orbits)


# -- the surface bundle --

@dataclass(frozen=True)
class WeddleSurface:
    params: WeddleParams
    quartic: MultiPoly
    nodes: Tuple[ProjPoint, ...]
    lines: Dict[str, LineP3] = dc_field(compare=False)
    residual_lines: Dict[str, LineP3] = dc_field(compare=False)
    cubic: PolyMap = dc_field(compare=False)
    hutchinson: PolyMap = dc_field(compare=False)

    @classmethod
    def build(cls, params: WeddleParams) -> "WeddleSurface":
        quartic = weddle_equation(params)
        nodes = weddle_nodes(params, quartic)
        lines = node_lines(params)
        for label, line in lines.items():
            if not restrict_to_line(quartic, line).is_zero():
                raise VerificationFailure(f"{label} does not lie on the Weddle quartic")
        residual = residual_lines(params, quartic)
        cubic = twisted_cubic(params, quartic)
        T = hutchinson_map(params, quartic)
        logger.debug(f"Weddle surface for {params}: {len(quartic.terms)} terms")
        return cls(params, quartic, tuple(nodes), lines, residual, cubic, T)

    def curve_count(self) -> int:
        return 1 + len(self.lines) + len(self.residual_lines)


# -- plane checks --

def cross(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    mul = field.mul
    return (mul(u[1], v[2]) ^ mul(u[2], v[1]),
            mul(u[2], v[0]) ^ mul(u[0], v[2]),
            mul(u[0], v[1]) ^ mul(u[1], v[0]))


def veronese(field: FieldSpec, p: Sequence[int]) -> Tuple[int, ...]:
    """(x^2, y^2, z^2, xy, xz, yz)."""
    x, y, z = p
    mul = field.mul
    return (mul(x, x), mul(y, y), mul(z, z), mul(x, y), mul(x, z), mul(y, z))


CONIC_EXPS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


def conic_poly(field: FieldSpec, coeffs: Sequence[int]) -> MultiPoly:
    return MultiPoly(field, 3, dict(zip(CONIC_EXPS, coeffs)))


def _no_three_collinear(field: FieldSpec, points: Sequence[Sequence[int]]) -> bool:
    return all(linalg.det(field, list(t)) != 0 for t in combinations(points, 3))


BASE_LINES = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


@dataclass
class PlaneCheckReport:
    samples: int
    accepted: int = 0
    rejected: int = 0
    failures: List[str] = dc_field(default_factory=list)
    counts: Dict[str, int] = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.accepted > 0

    def bump(self, key: str) -> None:
        self.counts[key] = self.counts.get(key, 0) + 1


def conic_through_reference(field: FieldSpec, a: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    """(c1, c2, c3) of the conic c1 yz + c2 xz + c3 xy through e1, e2, e3, (1,1,1) and a."""
    row = (field.mul(a[1], a[2]), field.mul(a[0], a[2]), field.mul(a[0], a[1]))
    null = linalg.kernel(field, [(1, 1, 1), row])
    if len(null) != 1:
        return None
    return null[0]


def point_on_conic(field: FieldSpec, c: Sequence[int], rng: np.random.Generator) -> Tuple[int, int, int]:
    """A point of c1 yz + c2 xz + c3 xy with chosen x, y and z solved for."""
    c1, c2, c3 = c
    while True:
        x = field.random_bits(rng, nonzero=True)
        y = field.random_bits(rng, nonzero=True)
        denom = field.mul(c1, y) ^ field.mul(c2, x)
        if denom:
            z = field.div(field.mul(c3, field.mul(x, y)), denom)
            return normalize(field, (x, y, z))


def double_plane_identity(field: FieldSpec, samples: int, rng: np.random.Generator) -> PlaneCheckReport:
    """
    Lines x, y, z, x+y+z, a.X, b.X: the conic condition on P12, P13, P23, P45,
    P46, P56 (D = 0) agrees with the dual points lying on a conic (E = 0).

    Odd samples put b on the conic through the other five dual points.
    """
    report = PlaneCheckReport(samples)
    for n in range(samples):
        a = tuple(field.random_bits(rng) for _ in range(3))
        if n % 2:
            c = conic_through_reference(field, a) if any(a) else None
            if c is None or not all(c):
                report.rejected += 1
                continue
            b = point_on_conic(field, c, rng)
            report.bump("constructed")
        else:
            b = tuple(field.random_bits(rng) for _ in range(3))
        lines = list(BASE_LINES) + [a, b]
        if not all(any(l) for l in lines) or not _no_three_collinear(field, lines):
            report.rejected += 1
            continue
        logger.debug(f"double plane sample a={[hex(v) for v in a]} b={[hex(v) for v in b]}")
        meets = [cross(field, lines[i], lines[j]) for i, j in ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5))]
        D = linalg.det(field, [veronese(field, p) for p in meets])
        E = linalg.det(field, [veronese(field, l) for l in lines])
        report.accepted += 1
        if (D == 0) != (E == 0):
            report.failures.append(f"a={a} b={b}: D={D:#x} E={E:#x}")
        elif E == 0:
            report.bump("both_zero")
    return report


def _fit_conic(field: FieldSpec, points: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    null = linalg.kernel(field, [veronese(field, p) for p in points])
    if len(null) != 1:
        raise ResampleRequired(f"{len(null)}-dimensional conic family")
    return null[0]


def _ten_conics_sample(field: FieldSpec, rng: np.random.Generator) -> Dict[str, object]:
    c1 = field.random_bits(rng, nonzero=True)
    c2 = field.random_bits(rng, nonzero=True)
    c3 = c1 ^ c2
    if not c3:
        raise ResampleRequired("singular conic")
    c = (c1, c2, c3)
    lines = [normalize(field, l) for l in BASE_LINES]
    for _ in range(2):
        lines.append(point_on_conic(field, c, rng))
    if len(set(lines)) != 6 or not _no_three_collinear(field, lines):
        raise ResampleRequired("lines not in general position")
    logger.debug(f"ten conics sample c={[hex(v) for v in c]} l5={lines[4]} l6={lines[5]}")

    meets = {(i, j): normalize(field, cross(field, lines[i - 1], lines[j - 1])) for i, j in DUADS}
    conics = {}
    for triple in TRIPLES:
        other = complement(triple)
        pts = [meets[p] for p in combinations(triple, 2)] + [meets[p] for p in combinations(other, 2)]
        coeffs = _fit_conic(field, pts[:5])
        if dot(field, coeffs, veronese(field, pts[5])):
            raise VerificationFailure(f"sixth point off the conic of {triple_label(triple)}")
        conics[triple_label(triple)] = coeffs

    span = linalg.rref(field, list(conics.values()))
    if len(span) != 4:
        raise VerificationFailure(f"the ten conics span a space of dimension {len(span)}")
    # members with no cross terms are squares of a line
    squares = linalg.kernel(field, [[row[k] for row in span] for k in (3, 4, 5)])
    if len(squares) != 1:
        raise VerificationFailure(f"{len(squares)} independent squares among the ten conics")
    square = [0] * 6
    for coeff, row in zip(squares[0], span):
        square = [s ^ field.mul(coeff, r) for s, r in zip(square, row)]
    ell = normalize(field, tuple(field.sqrt(v) for v in square[:3]))
    if ell != normalize(field, c):
        raise VerificationFailure(f"common line {ell} is not the line dual to C {c}")
    l0, l1, l2 = ell
    for multiple in ((l0, 0, 0, l1, l2, 0), (0, l1, 0, l0, 0, l2), (0, 0, l2, 0, l0, l1)):
        if linalg.rank(field, span + [multiple]) != 4:
            raise VerificationFailure("multiples of the common line are not in the span of the ten conics")

    on_ell = linalg.kernel(field, [ell])
    param = PolyMap.linear(field, [[on_ell[0][m], on_ell[1][m]] for m in range(3)])
    restricted = [conic_poly(field, v).pullback(param) for v in conics.values()]
    r = restricted[0]
    if r.is_zero() or not binary_separable(r):
        raise VerificationFailure("the ten conics do not cut two distinct points on the common line")
    if any(proportional(f, r) is None for f in restricted[1:]):
        raise VerificationFailure("the ten conics cut different pairs on the common line")

    phi = reduce(lambda f, g: f * g, (MultiPoly.linear(field, l) for l in lines))
    for i in range(3):
        _, remainder = phi.partial(i).pullback(param).divide(r)
        if not remainder.is_zero():
            raise VerificationFailure(f"d Phi/dx{i} does not vanish at the common points")
    return {"line": ell, "common_points": 2}


def ten_conics_check(field: FieldSpec, samples: int, rng: np.random.Generator) -> PlaneCheckReport:
    """
    Six lines whose dual points lie on c1 yz + c2 xz + c3 xy: each of the ten
    conics passes its sixth point, the ten share exactly two points and these
    span the line (c1, c2, c3) where dPhi vanishes.
    """
    report = PlaneCheckReport(samples)
    for _ in range(samples):
        try:
            result = _ten_conics_sample(field, rng)
        except ResampleRequired:
            report.rejected += 1
            continue
        except VerificationFailure as exc:
            report.accepted += 1
            report.failures.append(str(exc))
            continue
        report.accepted += 1
        report.bump(f"common_points_{result['common_points']}")
    return report
