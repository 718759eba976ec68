"""
The Segre cubic primal in characteristic 2.

Matrices act on coordinates by substitution: row i of a MatrixF2 lists the
coefficients of the image of x_i, so f is sent to f(x_0', ..., x_4') with
x_i' = sum_j M[i][j] x_j. Point-wise the same matrix acts as v -> M v.
"""

import logging
from collections import deque
from dataclasses import dataclass, field as dc_field
from functools import reduce
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from . import linalg
from .config import CLOSURE_CAP
from .errors import CapExceeded, DegeneratePolar, VerificationFailure
from .gf2k import FieldSpec, field_make
from .mvpoly import MultiPoly, PolyMap, WeightedHypersurface, compose, is_singular_at, proportional
from .projgeom import ProjPoint
from .weddle import WeddleParams, node_lines, reference_points, singular_points_bruteforce, twisted_cubic, weddle_equation

logger = logging.getLogger(__name__)

GF2 = galois.GF(2)

SEGRE_NODES = (
    (0, 0, 0, 0, 1), (0, 0, 0, 1, 0), (0, 0, 1, 0, 0), (0, 1, 0, 0, 0), (0, 1, 0, 1, 1),
    (0, 0, 1, 1, 1), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (1, 0, 0, 0, 1), (1, 1, 1, 1, 0),
)

# images of (x0, .., x4) under the adjacent transpositions (12), (23), (34), (45), (56)
REP33 = {
    "(12)": ((1, 0, 0, 0, 0), (1, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 1, 1, 0), (1, 0, 1, 0, 1)),
    "(23)": ((1, 1, 0, 0, 0), (0, 1, 0, 0, 0), (1, 1, 0, 0, 1), (0, 1, 0, 1, 0), (1, 0, 1, 0, 0)),
    "(34)": ((0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (1, 0, 1, 0, 1)),
    "(45)": ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (1, 0, 1, 0, 0), (0, 1, 0, 1, 0), (1, 1, 0, 0, 1)),
    "(56)": ((0, 0, 1, 0, 0), (1, 1, 1, 0, 1), (1, 0, 0, 0, 0), (0, 0, 0, 1, 1), (0, 0, 0, 0, 1)),
}

REP222 = {
    "(12)": ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (1, 1, 0, 1, 0), (1, 0, 1, 0, 1)),
    "(23)": ((1, 0, 0, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)),
    "(34)": ((0, 1, 0, 0, 0), (1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (1, 1, 1, 1, 1)),
    "(45)": ((1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 0, 1), (0, 0, 0, 1, 0)),
    "(56)": ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (1, 1, 1, 0, 0), (0, 0, 0, 1, 0), (1, 0, 0, 1, 1)),
}


@dataclass(frozen=True)
class MatrixF2:
    """Square 0/1 matrix over F2."""
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) & 1 for v in row) for row in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("MatrixF2 must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int = 5) -> "MatrixF2":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "MatrixF2":
        return cls(tuple(tuple(int(v) for v in row) for row in np.asarray(array) % 2))

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint8)

    def __matmul__(self, other: "MatrixF2") -> "MatrixF2":
        return MatrixF2.from_array(self.array().astype(np.int64) @ other.array().astype(np.int64))

    def is_invertible(self) -> bool:
        return int(np.linalg.det(GF2(self.array()))) == 1

    def polymap(self, field: FieldSpec) -> PolyMap:
        return PolyMap.linear(field, self.rows)

    def apply(self, v: Sequence[int]) -> Tuple[int, ...]:
        return tuple(int(x) for x in (self.array().astype(np.int64) @ np.array(v, dtype=np.int64)) % 2)

    def to_text(self) -> str:
        return "/".join("".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def parse(cls, text: str) -> "MatrixF2":
        return cls(tuple(tuple(int(ch) for ch in row) for row in text.strip().split("/")))


@dataclass
class MatrixGroup:
    """Group generated by labelled matrices; the closure is computed on demand."""
    labels: Tuple[str, ...]
    generators: Tuple[MatrixF2, ...]
    _closure: Optional[List[MatrixF2]] = dc_field(default=None, repr=False)

    @classmethod
    def from_table(cls, table: Dict[str, Sequence[Sequence[int]]]) -> "MatrixGroup":
        return cls(tuple(table), tuple(MatrixF2(tuple(rows)) for rows in table.values()))

    def closure(self, cap: int = CLOSURE_CAP) -> List[MatrixF2]:
        if self._closure is None:
            n = self.generators[0].n if self.generators else 5
            identity = MatrixF2.identity(n)
            seen = {identity}
            order = [identity]
            queue = deque([identity])
            while queue:
                g = queue.popleft()
                for s in self.generators:
                    h = g @ s
                    if h not in seen:
                        seen.add(h)
                        order.append(h)
                        queue.append(h)
                        if len(seen) > cap:
                            raise CapExceeded(f"closure passed {cap} elements")
            self._closure = order
        return self._closure


def rep_generators(which: str) -> MatrixGroup:
    """rep33 acts on the Segre cubic coordinates, rep222 on the dual coordinates."""
    tables = {"rep33": REP33, "rep222": REP222}
    if which not in tables:
        raise ValueError(f"unknown representation {which!r}")
    group = MatrixGroup.from_table(tables[which])
    for label, g in zip(group.labels, group.generators):
        if not g.is_invertible():
            raise VerificationFailure(f"{which} generator {label} is singular")
    return group


def group_closure(group: MatrixGroup, cap: int = CLOSURE_CAP) -> int:
    return len(group.closure(cap))


def coxeter_relations(group: MatrixGroup) -> Dict[str, bool]:
    """s_i^2 = 1, (s_i s_(i+1))^3 = 1 and (s_i s_j)^2 = 1 for |i - j| > 1."""
    gens = group.generators
    one = MatrixF2.identity(gens[0].n)

    def power(m: MatrixF2, e: int) -> MatrixF2:
        return reduce(lambda x, y: x @ y, [m] * e)

    n = len(gens)
    return {
        "squares": all(g @ g == one for g in gens),
        "braids": all(power(gens[i] @ gens[i + 1], 3) == one for i in range(n - 1)),
        "commuting": all(power(gens[i] @ gens[j], 2) == one for i, j in combinations(range(n), 2) if j - i > 1),
    }


def permutation_order(group: MatrixGroup) -> int:
    """Order of the permutation group induced on the 31 nonzero vectors of F2^5."""
    n = group.generators[0].n
    vectors = [tuple((x >> b) & 1 for b in range(n)) for x in range(1, 1 << n)]
    index = {v: i for i, v in enumerate(vectors)}
    perms = [Permutation([index[g.apply(v)] for v in vectors]) for g in group.generators]
    return int(PermutationGroup(perms).order())


def preserves(f: MultiPoly, m: MatrixF2) -> bool:
    """The substitution by m sends f to a multiple of f."""
    image = f.pullback(m.polymap(f.field))
    return proportional(image, f) is not None


def fixed_space(group: MatrixGroup) -> List[Tuple[int, ...]]:
    """Basis of the vectors fixed by every generator."""
    n = group.generators[0].n if group.generators else 5
    if not group.generators:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    eye = np.eye(n, dtype=np.uint8)
    stacked = np.concatenate([(g.array() + eye) % 2 for g in group.generators], axis=0)
    basis = GF2(stacked).null_space()
    return [tuple(int(v) for v in row) for row in np.asarray(basis)]


# -- the cubic and its parametrization --

def segre_equation(field: FieldSpec) -> MultiPoly:
    """x1x2x4 + x0x3x4 + x1x2x3 + x0x1x3 + x0x2x3 + x0^2x3."""
    terms = {
        (0, 1, 1, 0, 1): 1, (1, 0, 0, 1, 1): 1, (0, 1, 1, 1, 0): 1,
        (1, 1, 0, 1, 0): 1, (1, 0, 1, 1, 0): 1, (2, 0, 0, 1, 0): 1,
    }
    return MultiPoly(field, 5, terms)


def segre_nodes(field: FieldSpec) -> List[ProjPoint]:
    f = segre_equation(field)
    nodes = [ProjPoint(field, p) for p in SEGRE_NODES]
    for node in nodes:
        if not is_singular_at(f, node.coords):
            raise VerificationFailure(f"{node} is not singular on the Segre cubic")
    return nodes


def node_completeness(degrees: Sequence[int] = (1, 2)) -> Dict[int, int]:
    """Number of singular points of the cubic over F_(2^k), scanned exhaustively."""
    counts = {}
    for k in degrees:
        field = field_make(k)
        found = set(singular_points_bruteforce(segre_equation(field), field))
        expected = set(segre_nodes(field))
        if found != expected:
            extra = sorted(str(p) for p in found - expected)
            raise VerificationFailure(f"singular points over {field} differ from the ten nodes: {extra}")
        counts[k] = len(found)
    return counts


def _quadric(field: FieldSpec, a: Tuple[int, int], b: Tuple[int, int]) -> MultiPoly:
    """(t_a0 + t_a1)(t_b0 + t_b1) with a repeated index standing for a single variable."""
    t = MultiPoly.variables(field, 4)

    def factor(pair):
        i, j = pair
        return t[i] if i == j else t[i] + t[j]

    return factor(a) * factor(b)


def phi_components(field: FieldSpec, printed: bool = False) -> Tuple[MultiPoly, ...]:
    """
    [t3(t0+t1), t3(t1+t2), t2(t0+t1), t2(t1+t3), (t0+t2)(t1+t3)].

    With printed=True the second component is t3(t1+t3), which does not
    vanish at [0,0,0,1].
    """
    second = ((3, 3), (1, 3)) if printed else ((3, 3), (1, 2))
    pairs = [((3, 3), (0, 1)), second, ((2, 2), (0, 1)), ((2, 2), (1, 3)), ((0, 2), (1, 3))]
    return tuple(_quadric(field, a, b) for a, b in pairs)


def phi_map(field: FieldSpec) -> PolyMap:
    """Quadrics through p1..p5 mapping P^3 birationally onto the Segre cubic."""
    phi = PolyMap(phi_components(field))
    points = [ProjPoint(field, p) for p in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))]
    for i, comp in enumerate(phi.components):
        for p in points:
            if comp.eval_bits(p.coords):
                raise VerificationFailure(f"component {i} of phi does not vanish at {p}")
    if not segre_equation(field).pullback(phi).is_zero():
        raise VerificationFailure("phi does not land on the Segre cubic")
    return phi


@dataclass
class PhiDiscrepancy:
    """How the printed parametrization misses: failed base points and the pullback."""
    base_point_failures: List[str]
    pullback: str


def printed_phi_discrepancy(field: FieldSpec) -> PhiDiscrepancy:
    comps = phi_components(field, printed=True)
    points = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)]
    failures = [f"x{i} at {list(p)}" for i, c in enumerate(comps) for p in points if c.eval_bits(p)]
    pullback = segre_equation(field).pullback(PolyMap(comps))
    return PhiDiscrepancy(failures, pullback.to_text())


# -- polar quadrics --

def polar_quadric(f: MultiPoly, v: ProjPoint) -> MultiPoly:
    """sum_i v_i df/dx_i."""
    if v.field != f.field or len(v.coords) != f.nvars:
        raise ValueError(f"pole {v} does not match the form")
    result = MultiPoly.zero(f.field, f.nvars)
    for i, c in enumerate(v.coords):
        if c:
            result = result + f.partial(i).scale(c)
    if result.is_zero():
        raise DegeneratePolar(f"polar of the form at {v} vanishes")
    return result


@dataclass
class PolarReport:
    p6: str
    pole: str
    singular_at_nodes: bool
    contains_lines: bool
    contains_cubic: bool
    weddle_scalar: Optional[str]


def weddle_via_polar(params: WeddleParams) -> PolarReport:
    """
    Pull the polar quadric of the cubic at x = phi(p6) back along phi and
    compare it with the Weddle quartic of p1..p6.
    """
    field = params.field
    phi = phi_map(field)
    p6 = reference_points(params)[5]
    x = ProjPoint(field, phi.eval_bits(p6.coords))
    logger.debug(f"polar check p6={p6} x={x}")
    quartic = polar_quadric(segre_equation(field), x).pullback(phi)
    if quartic.degree != 4:
        raise VerificationFailure(f"pulled back polar has degree {quartic.degree}")

    nodes = reference_points(params)
    singular = all(is_singular_at(quartic, p.coords) for p in nodes)
    lines = node_lines(params)
    on_lines = all(quartic.pullback(line.parametrization).is_zero() for line in lines.values())
    on_cubic = quartic.pullback(twisted_cubic(params)).is_zero()
    scalar = proportional(quartic, weddle_equation(params))
    report = PolarReport(str(p6), str(x), singular, on_lines, on_cubic, None if scalar is None else str(scalar))
    if not (singular and on_lines and on_cubic):
        raise VerificationFailure(f"pulled back polar is not a Weddle quartic: {report}")
    return report


# -- the Coble-type fourfold --

def coble_quadric(field: FieldSpec) -> MultiPoly:
    """q = y2y3 + y1y4 + y0(y0 + y1 + y2 + y3 + y4)."""
    y = MultiPoly.variables(field, 5)
    return y[2] * y[3] + y[1] * y[4] + y[0] * reduce(lambda f, g: f + g, y)


def _lift(f: MultiPoly, nvars: int) -> MultiPoly:
    return MultiPoly(f.field, nvars, {e + (0,) * (nvars - f.nvars): c for e, c in f.terms.items()})


def substitute(f: MultiPoly, index: int, g: MultiPoly) -> MultiPoly:
    """f with the variable x_index replaced by g (any degree)."""
    f._check(g)
    result = MultiPoly.zero(f.field, f.nvars)
    for exps, c in f.terms.items():
        rest = list(exps)
        rest[index] = 0
        result = result + MultiPoly(f.field, f.nvars, {tuple(rest): c}) * g ** exps[index]
    return result


@dataclass
class CobleReport:
    equation: str
    involution_invariant: bool
    q_invariant_generators: Dict[str, bool]
    q_singular_points_f4: int


def coble_char2(field: Optional[FieldSpec] = None) -> CobleReport:
    """w^2 + w q + y0 y1 y4 (y0 + ... + y4) in P(1,1,1,1,1,2)."""
    field = field or field_make(1)
    q5 = coble_quadric(field)
    y = MultiPoly.variables(field, 6)
    q = _lift(q5, 6)
    w = y[5]
    c = y[0] * y[1] * y[4] * reduce(lambda f, g: f + g, y[:5])
    equation = w * w + w * q + c
    surface = WeightedHypersurface((1, 1, 1, 1, 1, 2), 4, equation)
    invariant = substitute(equation, 5, w + q) == equation

    group = rep_generators("rep222")
    per_generator = {label: preserves(q5, g) for label, g in zip(group.labels, group.generators)}
    f4 = field_make(2)
    singular = singular_points_bruteforce(coble_quadric(f4), f4)
    return CobleReport(surface.to_text(), invariant, per_generator, len(singular))


# -- equivariance of the parametrization --

def _strip_monomial(comps: Sequence[MultiPoly]) -> Tuple[Tuple[int, ...], Tuple[MultiPoly, ...]]:
    """Remove the largest monomial dividing every component."""
    nvars = comps[0].nvars
    live = [e for c in comps for e in c.terms]
    common = tuple(min(e[i] for e in live) for i in range(nvars))
    stripped = tuple(
        MultiPoly(c.field, nvars, {tuple(a - b for a, b in zip(e, common)): v for e, v in c.terms.items()})
        for c in comps
    )
    return common, stripped


def t_side_maps(field: FieldSpec) -> Dict[str, PolyMap]:
    """Coordinate transpositions of t0..t3, the standard Cremona involution and the identity."""
    maps = {"id": PolyMap.identity(field, 4)}
    for i, j in combinations(range(4), 2):
        rows = [[int(c == r) for c in range(4)] for r in range(4)]
        rows[i], rows[j] = rows[j], rows[i]
        maps[f"(t{i} t{j})"] = PolyMap.linear(field, rows)
    t = MultiPoly.variables(field, 4)
    maps["cremona"] = PolyMap(tuple(reduce(lambda f, g: f * g, [t[j] for j in range(4) if j != i]) for i in range(4)))
    return maps


@dataclass
class EquivarianceMatch:
    sigma: str
    common_factor: Tuple[int, ...]
    matrix: Optional[str]
    generator: Optional[str]
    in_closure: bool
    preserves_cubic: bool


def phi_equivariance_probe(field: Optional[FieldSpec] = None) -> List[EquivarianceMatch]:
    """
    For each t-side map sigma, write phi o sigma (common monomial removed) in
    the basis of the components of phi. The coefficient matrix M satisfies
    phi o sigma = M . phi up to the common factor.
    """
    field = field or field_make(1)
    phi = phi_map(field)
    basis = _coefficient_rows(phi.components)
    group = rep_generators("rep33")
    closure = set(group.closure())
    generators = dict(zip(group.generators, group.labels))
    cubic = segre_equation(field)
    results = []
    for name, sigma in t_side_maps(field).items():
        common, comps = _strip_monomial(compose(phi, sigma).components)
        try:
            rows = [linalg.solve_combination(field, basis, _coefficient_vector(c)) for c in comps]
        except ValueError:
            results.append(EquivarianceMatch(name, common, None, None, False, False))
            continue
        m = MatrixF2(tuple(tuple(r) for r in rows))
        results.append(EquivarianceMatch(
            name, common, m.to_text(), generators.get(m), m in closure, preserves(cubic, m),
        ))
    return results


_QUADRIC_MONOMIALS = tuple(
    tuple(int(k == i) + int(k == j) for k in range(4)) for i in range(4) for j in range(i, 4)
)


def _coefficient_vector(q: MultiPoly) -> List[int]:
    if any(sum(e) != 2 for e in q.terms):
        raise ValueError(f"{q} is not a quadric")
    return [q.terms.get(e, 0) for e in _QUADRIC_MONOMIALS]


def _coefficient_rows(comps: Sequence[MultiPoly]) -> List[List[int]]:
    return [_coefficient_vector(c) for c in comps]

