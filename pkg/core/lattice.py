"""
Integer lattice arithmetic for the Picard-lattice arguments.

Gram matrices are small (at most 40x40) numpy int64 arrays; determinants and
the Smith normal form are exact and cross-checked with sympy.
"""

import json
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form
from sympy.polys.domains import ZZ

from .configs import IncidenceStructure
from .errors import VerificationFailure

logger = logging.getLogger(__name__)

ENTRY_BOUND = 2 ** 31
K3_EULER_NUMBER = 24


@dataclass(frozen=True, eq=False)
class GramLattice:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.int64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"Gram matrix must be square, got shape {m.shape}")
        if not np.array_equal(m, m.T):
            raise ValueError("Gram matrix is not symmetric")
        if m.size and np.abs(m).max() >= ENTRY_BOUND:
            raise ValueError("Gram entries exceed 2^31")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def rank(self) -> int:
        return self.matrix.shape[0]

    def det(self) -> int:
        """Exact determinant (Bareiss, via sympy)."""
        if self.rank == 0:
            return 1
        return int(Matrix(self.matrix.tolist()).det(method="bareiss"))

    def pairing(self, d1: Sequence[int], d2: Sequence[int]) -> int:
        return int(np.asarray(d1, dtype=np.int64) @ self.matrix @ np.asarray(d2, dtype=np.int64))

    def to_text(self) -> str:
        return json.dumps(self.matrix.tolist(), separators=(",", ":"))

    @classmethod
    def parse(cls, text: str) -> "GramLattice":
        return cls(np.array(json.loads(text), dtype=np.int64))


BUILTIN_GRAMS = {
    "A1": [[-2]],
    "D4": [[-2, 1, 0, 0], [1, -2, 1, 1], [0, 1, -2, 0], [0, 1, 0, -2]],
    "U": [[0, 1], [1, 0]],
}


def gram_builtin(name: str) -> GramLattice:
    if name not in BUILTIN_GRAMS:
        raise ValueError(f"unknown lattice {name!r}, expected one of {sorted(BUILTIN_GRAMS)}")
    return GramLattice(np.array(BUILTIN_GRAMS[name], dtype=np.int64))


def direct_sum(lattices: Sequence[GramLattice]) -> GramLattice:
    """Block-diagonal orthogonal sum."""
    n = sum(l.rank for l in lattices)
    m = np.zeros((n, n), dtype=np.int64)
    offset = 0
    for l in lattices:
        m[offset:offset + l.rank, offset:offset + l.rank] = l.matrix
        offset += l.rank
    return GramLattice(m)


# -- Smith normal form --

def _smallest_entry(a: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(m: GramLattice) -> List[int]:
    """
    Elementary divisors d1 | d2 | ... of the Gram matrix.

    - Pivot is the nonzero entry of least absolute value, first by position.
    - Rows and columns are reduced with floor division until the pivot row
      and column are clear, then divisibility of the remaining block is forced
      by adding an offending row to the pivot row.
    - Zeros are kept for singular matrices.
    """
    a = [list(map(int, row)) for row in m.matrix.tolist()]
    n = len(a)
    t = 0
    while t < n:
        pos = _smallest_entry(a, t)
        if pos is None:
            break
        i, j = pos
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            for r in range(t + 1, n):
                q = a[r][t] // p
                if q:
                    a[r] = [x - q * y for x, y in zip(a[r], a[t])]
            for c in range(t + 1, n):
                q = a[t][c] // p
                if q:
                    for row in a:
                        row[c] -= q * row[t]
            leftover = [(r, t) for r in range(t + 1, n) if a[r][t]] + [(t, c) for c in range(t + 1, n) if a[t][c]]
            if leftover:
                r, c = min(leftover, key=lambda rc: abs(a[rc[0]][rc[1]]))
                a[t], a[r] = a[r], a[t]
                for row in a:
                    row[t], row[c] = row[c], row[t]
                continue
            bad = next(((r, c) for r in range(t + 1, n) for c in range(t + 1, n) if a[r][c] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        t += 1
    return [abs(a[i][i]) for i in range(n)]


def smith_normal_form_sympy(m: GramLattice) -> List[int]:
    snf = sympy_smith_normal_form(Matrix(m.matrix.tolist()), domain=ZZ)
    return sorted((abs(int(snf[i, i])) for i in range(m.rank)), key=lambda d: (d == 0, d))


@dataclass
class Discriminant:
    divisors: List[int]
    order: int
    two_rank: int
    two_elementary: bool


def discriminant_group(m: GramLattice) -> Discriminant:
    """
    Discriminant group of a nondegenerate lattice as a sum of Z/d_i.

    The divisors are cross-checked against sympy and their product against
    the determinant.
    """
    divisors = smith_normal_form(m)
    if divisors != smith_normal_form_sympy(m):
        raise VerificationFailure(f"Smith normal form disagrees with sympy: {divisors}")
    if any(d == 0 for d in divisors):
        raise ValueError("degenerate lattice has no finite discriminant group")
    if any(b % a for a, b in zip(divisors, divisors[1:])):
        raise VerificationFailure(f"divisors {divisors} do not form a divisibility chain")
    order = math.prod(divisors)
    if order != abs(m.det()):
        raise VerificationFailure(f"product of divisors {order} differs from |det| {abs(m.det())}")
    nontrivial = [d for d in divisors if d > 1]
    return Discriminant(
        divisors=nontrivial,
        order=order,
        two_rank=sum(1 for d in nontrivial if d % 2 == 0),
        two_elementary=all(d == 2 for d in nontrivial),
    )


# -- quasi-elliptic fibration --

def fiber_lattice() -> GramLattice:
    """Three D4 and eight A1: components of reducible fibres off the zero section."""
    return direct_sum([gram_builtin("D4")] * 3 + [gram_builtin("A1")] * 8)


@dataclass
class ShiodaTate:
    mw_order: int
    disc_m: int
    disc_pic: Optional[int]
    sigma: Optional[int]
    exceeds_family_value: bool


def shioda_tate_bound(mw_order: int, family_sigma: int = 4) -> ShiodaTate:
    """
    - |disc Pic| * #MW^2 = |disc M| with M = D4^3 + A1^8.
    - sigma is half the 2-rank, so |disc Pic| must be 2^(2 sigma).
    - Values above family_sigma are flagged.
    """
    if mw_order < 1:
        raise ValueError("Mordell-Weil order must be positive")
    disc_m = discriminant_group(fiber_lattice()).order
    disc_pic, sigma = None, None
    if disc_m % (mw_order * mw_order) == 0:
        disc_pic = disc_m // (mw_order * mw_order)
        e = disc_pic.bit_length() - 1
        if disc_pic == 1 << e and e % 2 == 0:
            sigma = e // 2
    if sigma is None:
        logger.warning(f"|disc M| / {mw_order}^2 is not an even power of 2")
    return ShiodaTate(
        mw_order=mw_order,
        disc_m=disc_m,
        disc_pic=disc_pic,
        sigma=sigma,
        exceeds_family_value=sigma is not None and sigma > family_sigma,
    )


@dataclass(frozen=True)
class FiberType:
    name: str
    rank: int
    discriminant: int
    euler_min: int


D4_TILDE = FiberType("D4tilde", 4, 4, 6)
A1_STAR = FiberType("A1star", 1, 2, 2)


def euler_bound(fibers: Sequence[FiberType], budget: int = K3_EULER_NUMBER) -> Tuple[int, bool]:
    """Sum of Euler lower bounds and whether it exceeds the budget."""
    total = sum(f.euler_min for f in fibers)
    return total, total > budget


# -- configuration Gram matrix --

def config_gram(inc: IncidenceStructure) -> GramLattice:
    """(-2) curves of both families; A-B products are the incidences."""
    n = inc.matrix.astype(np.int64)
    a, b = n.shape
    top = np.hstack([-2 * np.eye(a, dtype=np.int64), n])
    bottom = np.hstack([n.T, -2 * np.eye(b, dtype=np.int64)])
    return GramLattice(np.vstack([top, bottom]))


def divisor(inc: IncidenceStructure, coefficients: Mapping[str, int]) -> np.ndarray:
    """Coefficient vector over A labels then B labels."""
    labels = list(inc.a_labels) + list(inc.b_labels)
    unknown = set(coefficients) - set(labels)
    if unknown:
        raise ValueError(f"unknown curve labels {sorted(unknown)}")
    return np.array([coefficients.get(label, 0) for label in labels], dtype=np.int64)


def parse_divisor(inc: IncidenceStructure, text: str) -> np.ndarray:
    """'E0:2,E1:1,...'"""
    coefficients: Dict[str, int] = {}
    for part in text.split(","):
        label, coeff = part.split(":")
        coefficients[label.strip()] = coefficients.get(label.strip(), 0) + int(coeff)
    return divisor(inc, coefficients)


def divisor_pairing(gram: GramLattice, d1: Sequence[int], d2: Sequence[int]) -> int:
    return gram.pairing(d1, d2)


FIBER_F = {"E0": 2, "E1": 1, "E2": 1, "E3": 1, "E4": 1}
FIBER_G = {"E56": 2, "E234": 1, "E123": 1, "E124": 1, "E134": 1}
SECTION_LABELS = tuple(f"E{k}{j}" for j in (5, 6) for k in (1, 2, 3, 4))


@dataclass
class FibrationCheck:
    f_squared: int
    g_squared: int
    f_dot_g: int
    components_orthogonal: bool
    sections: Dict[str, Tuple[int, int]]
    sections_disjoint: bool

    @property
    def ok(self) -> bool:
        return (
            self.f_squared == self.g_squared == self.f_dot_g == 0
            and self.components_orthogonal
            and self.sections_disjoint
            and all(v == (1, 1) for v in self.sections.values())
        )


def fibration_sections(inc: IncidenceStructure) -> FibrationCheck:
    """
    The fibres F and G of the pencil, their components and the eight sections
    E_k5, E_k6 (k = 1..4).
    """
    gram = config_gram(inc)
    F = divisor(inc, FIBER_F)
    G = divisor(inc, FIBER_G)
    components = [divisor(inc, {label: 1}) for label in list(FIBER_F) + list(FIBER_G)]
    fiber_of = [F] * len(FIBER_F) + [G] * len(FIBER_G)
    sections = {label: divisor(inc, {label: 1}) for label in SECTION_LABELS}
    disjoint = all(
        gram.pairing(sections[x], sections[y]) == 0
        for i, x in enumerate(SECTION_LABELS) for y in SECTION_LABELS[i + 1:]
    )
    return FibrationCheck(
        f_squared=gram.pairing(F, F),
        g_squared=gram.pairing(G, G),
        f_dot_g=gram.pairing(F, G),
        components_orthogonal=all(gram.pairing(c, f) == 0 for c, f in zip(components, fiber_of)),
        sections={label: (gram.pairing(v, F), gram.pairing(v, G)) for label, v in sections.items()},
        sections_disjoint=disjoint,
    )


# -- index and Chern numbers --

def index_from_self_intersection(self_intersection: int) -> int:
    """Solve self_intersection = -64 + 32 n."""
    n, r = divmod(self_intersection + 64, 32)
    if r:
        raise ValueError(f"{self_intersection} = -64 + 32n has no integral solution")
    return n


def configuration_self_intersection(inc: IncidenceStructure) -> int:
    """(sum of all 32 curves)^2 on the configuration Gram matrix."""
    ones = np.ones(len(inc.a_labels) + len(inc.b_labels), dtype=np.int64)
    return config_gram(inc).pairing(ones, ones)


def branch_self_intersection(del_pezzo_degree: int = 4) -> int:
    """Pullback of -4K_S to the double cover: 2 * 16 * K_S^2."""
    return 2 * 16 * del_pezzo_degree


def index_identity(inc: Optional[IncidenceStructure] = None) -> int:
    """
    Index of the configuration from the branch divisor, confirmed by the
    configuration Gram matrix when one is given.
    """
    n = index_from_self_intersection(branch_self_intersection())
    if inc is not None:
        from_gram = configuration_self_intersection(inc)
        if index_from_self_intersection(from_gram) != n:
            raise VerificationFailure(f"configuration gives {from_gram}, branch divisor gives {branch_self_intersection()}")
    return n


def chern_count(surface: str, twist) -> int:
    """
    c2(Omega) + c1(Omega).c1(M) + c1(M)^2 on P2 (twist d) or on the
    quadric P1 x P1 (twist (m, n)).
    """
    if surface == "P2":
        d = int(twist)
        return 3 - 3 * d + d * d
    if surface == "quadric":
        m, n = twist
        # (a, b).(c, d) = ad + bc on P1 x P1
        return 4 + (-2 * n - 2 * m) + 2 * m * n
    raise ValueError(f"unsupported surface {surface!r}")
