"""
Sparse multivariate polynomials over GF(2^k).

A MultiPoly maps exponent tuples to nonzero coefficients (bit patterns of the
field). Terms are printed in graded reverse lexicographic order, largest first.
Binary forms are MultiPolys in two variables (s, t).
"""

import logging
import re
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from . import linalg
from .errors import ArityMismatch, NonExactDivision, SpecMismatch
from .gf2k import FieldElement, FieldSpec, field_make

logger = logging.getLogger(__name__)

Exps = Tuple[int, ...]
Scalar = Union[int, FieldElement]

_TERM = re.compile(r"^(0x[0-9a-fA-F]+)((?:\*x\d+(?:\^\d+)?)*)$")
_FACTOR = re.compile(r"\*x(\d+)(?:\^(\d+))?")


def _bits(field: FieldSpec, c: Scalar) -> int:
    if isinstance(c, FieldElement):
        if c.spec != field:
            raise SpecMismatch(f"{c.spec} vs {field}")
        return c.bits
    return int(c)


def term_order_key(exps: Exps) -> Tuple:
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def monomials_of_degree(nvars: int, degree: int) -> List[Exps]:
    """All exponent vectors of total degree `degree`, largest first."""
    result = [e for e in product(range(degree + 1), repeat=nvars) if sum(e) == degree]
    result.sort(key=term_order_key, reverse=True)
    return result


class MultiPoly:
    """Polynomial in nvars variables; immutable once built."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: Optional[Mapping[Exps, Scalar]] = None):
        self.field = field
        self.nvars = nvars
        clean: Dict[Exps, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ArityMismatch(f"exponent vector {exps} for {nvars} variables")
            bits = _bits(field, c)
            if bits:
                clean[exps] = bits
        self.terms = clean

    # -- constructors --

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "MultiPoly":
        return cls(field, nvars)

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, c: Scalar = 1) -> "MultiPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, i: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(field, nvars, {tuple(exps): 1})

    @classmethod
    def variables(cls, field: FieldSpec, nvars: int) -> List["MultiPoly"]:
        return [cls.variable(field, nvars, i) for i in range(nvars)]

    @classmethod
    def linear(cls, field: FieldSpec, coeffs: Sequence[Scalar]) -> "MultiPoly":
        nvars = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exps = [0] * nvars
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(field, nvars, terms)

    # -- basic properties --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> List[Tuple[Exps, int]]:
        return sorted(self.terms.items(), key=lambda item: term_order_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Exps, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=term_order_key)
        return exps, self.terms[exps]

    def coefficient(self, exps: Exps) -> FieldElement:
        return FieldElement(self.field, self.terms.get(tuple(exps), 0))

    def _check(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.field != self.field:
            raise SpecMismatch(f"{self.field} vs {other.field}")
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    # -- ring operations --

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) ^ c
        return MultiPoly(self.field, self.nvars, terms)

    __sub__ = __add__

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _bits(self.field, c)
        mul = self.field.mul
        return MultiPoly(self.field, self.nvars, {e: mul(v, c) for e, v in self.terms.items()})

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        mul = self.field.mul
        terms: Dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) ^ mul(c1, c2)
        return MultiPoly(self.field, self.nvars, terms)

    __rmul__ = __mul__

    def square(self) -> "MultiPoly":
        """Frobenius: square every coefficient and double every exponent."""
        sq = self.field.square
        return MultiPoly(self.field, self.nvars,
                         {tuple(2 * e for e in exps): sq(c) for exps, c in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.constant(self.field, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    # -- evaluation --

    def eval_bits(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ArityMismatch(f"{len(point)} coordinates for {self.nvars} variables")
        field = self.field
        powers: Dict[Tuple[int, int], int] = {}
        total = 0
        for exps, c in self.terms.items():
            value = c
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                key = (i, e)
                p = powers.get(key)
                if p is None:
                    p = field.pow(point[i], e)
                    powers[key] = p
                value = field.mul(value, p)
                if not value:
                    break
            total ^= value
        return total

    def eval(self, point: Sequence[Scalar]) -> FieldElement:
        return FieldElement(self.field, self.eval_bits([_bits(self.field, v) for v in point]))

    def __call__(self, *point: Scalar) -> FieldElement:
        return self.eval(point)

    def eval_array(self, points):
        """
        Evaluate on many points at once.

        `points` is a galois FieldArray (or integer array) of shape (N, nvars);
        the result is a FieldArray of shape (N,).
        """
        GF = self.field.galois_field
        points = points if isinstance(points, GF) else GF(np.asarray(points, dtype=np.int64))
        if points.shape[1] != self.nvars:
            raise ArityMismatch(f"{points.shape[1]} columns for {self.nvars} variables")
        total = GF.Zeros(points.shape[0])
        for exps, c in self.terms.items():
            value = GF.Ones(points.shape[0]) * GF(c)
            for i, e in enumerate(exps):
                if e:
                    value = value * points[:, i] ** e
            total = total + value
        return total

    # -- calculus and substitution --

    def partial(self, i: int) -> "MultiPoly":
        """Formal derivative; even exponents die in characteristic 2."""
        if not 0 <= i < self.nvars:
            raise ArityMismatch(f"variable {i} out of range for {self.nvars} variables")
        terms = {}
        for exps, c in self.terms.items():
            if exps[i] % 2 == 1:
                new = list(exps)
                new[i] -= 1
                terms[tuple(new)] = c
        return MultiPoly(self.field, self.nvars, terms)

    def gradient(self) -> List["MultiPoly"]:
        return [self.partial(i) for i in range(self.nvars)]

    def pullback(self, m: "PolyMap") -> "MultiPoly":
        """Substitute x_i -> m.components[i]."""
        if m.target_nvars != self.nvars:
            raise ArityMismatch(f"map into {m.target_nvars} variables, polynomial in {self.nvars}")
        powers: Dict[Tuple[int, int], MultiPoly] = {}
        result = MultiPoly.zero(self.field, m.source_nvars)
        for exps, c in self.terms.items():
            value = MultiPoly.constant(self.field, m.source_nvars, c)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                key = (i, e)
                if key not in powers:
                    powers[key] = m.components[i] ** e
                value = value * powers[key]
            result = result + value
        return result

    # -- division --

    def divide(self, divisor: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by one polynomial under grevlex; returns (quotient, remainder)."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_exps, lead_c = divisor.leading_term()
        lead_inv = self.field.inv(lead_c)
        quotient: Dict[Exps, int] = {}
        remainder: Dict[Exps, int] = {}
        work = dict(self.terms)
        while work:
            exps = max(work, key=term_order_key)
            c = work[exps]
            if all(a >= b for a, b in zip(exps, lead_exps)):
                q_exps = tuple(a - b for a, b in zip(exps, lead_exps))
                q_c = self.field.mul(c, lead_inv)
                quotient[q_exps] = quotient.get(q_exps, 0) ^ q_c
                for d_exps, d_c in divisor.terms.items():
                    key = tuple(a + b for a, b in zip(q_exps, d_exps))
                    value = work.get(key, 0) ^ self.field.mul(q_c, d_c)
                    if value:
                        work[key] = value
                    else:
                        work.pop(key, None)
            else:
                remainder[exps] = c
                del work[exps]
        return (MultiPoly(self.field, self.nvars, quotient),
                MultiPoly(self.field, self.nvars, remainder))

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        quotient, remainder = self.divide(divisor)
        if remainder:
            raise NonExactDivision(f"remainder {remainder} dividing by {divisor}")
        return quotient

    # -- text form --

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = [f"{c:#x}"]
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    @classmethod
    def parse(cls, field: FieldSpec, nvars: int, text: str) -> "MultiPoly":
        text = text.strip()
        if text == "0":
            return cls.zero(field, nvars)
        terms: Dict[Exps, int] = {}
        for chunk in text.split("+"):
            chunk = chunk.strip().replace(" ", "")
            match = _TERM.match(chunk)
            if match is None:
                raise ValueError(f"cannot parse term {chunk!r}")
            exps = [0] * nvars
            for var, e in _FACTOR.findall(match.group(2)):
                var = int(var)
                if var >= nvars:
                    raise ArityMismatch(f"x{var} in a polynomial of {nvars} variables")
                exps[var] += int(e) if e else 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) ^ int(match.group(1), 16)
        return cls(field, nvars, terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r}, nvars={self.nvars}, field={self.field})"


@dataclass(frozen=True)
class PolyMap:
    """Map given by homogeneous components of one shared degree."""
    components: Tuple[MultiPoly, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("map without components")
        first = comps[0]
        for c in comps[1:]:
            first._check(c)
        if all(c.is_zero() for c in comps):
            raise ValueError("all components vanish")
        degrees = {c.degree for c in comps if not c.is_zero()}
        if len(degrees) != 1 or not all(c.is_homogeneous() for c in comps):
            raise ValueError(f"components are not homogeneous of one degree: {sorted(degrees)}")
        if degrees.pop() < 1:
            raise ValueError("map of degree 0")

    @property
    def field(self) -> FieldSpec:
        return self.components[0].field

    @property
    def source_nvars(self) -> int:
        return self.components[0].nvars

    @property
    def target_nvars(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return max(c.degree for c in self.components)

    @classmethod
    def identity(cls, field: FieldSpec, nvars: int) -> "PolyMap":
        return cls(tuple(MultiPoly.variables(field, nvars)))

    @classmethod
    def linear(cls, field: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> "PolyMap":
        """x_i -> sum_j rows[i][j] x_j."""
        return cls(tuple(MultiPoly.linear(field, row) for row in rows))

    def eval_bits(self, point: Sequence[int]) -> Tuple[int, ...]:
        return tuple(c.eval_bits(point) for c in self.components)

    def __call__(self, point: Sequence[Scalar]) -> Tuple[FieldElement, ...]:
        return tuple(c.eval(point) for c in self.components)


def compose(outer: PolyMap, inner: PolyMap) -> PolyMap:
    """outer after inner, so pullback(f, compose(m1, m2)) == pullback(pullback(f, m1), m2)."""
    return PolyMap(tuple(c.pullback(inner) for c in outer.components))


@dataclass(frozen=True)
class WeightedHypersurface:
    """Hypersurface in a weighted projective space P(weights)."""
    weights: Tuple[int, ...]
    degree: int
    equation: MultiPoly

    def __post_init__(self):
        if len(self.weights) != self.equation.nvars:
            raise ArityMismatch(f"{len(self.weights)} weights for {self.equation.nvars} variables")
        for exps in self.equation.terms:
            weighted = sum(w * e for w, e in zip(self.weights, exps))
            if weighted != self.degree:
                raise ValueError(f"monomial {exps} has weighted degree {weighted}, expected {self.degree}")

    def to_text(self) -> str:
        weights = ",".join(str(w) for w in self.weights)
        return f"P({weights}) deg {self.degree}: {self.equation.to_text()}"

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "WeightedHypersurface":
        match = re.match(r"^\s*P\(([\d,\s]+)\)\s*deg\s*(\d+)\s*:\s*(.*)$", text)
        if match is None:
            raise ValueError(f"cannot parse weighted hypersurface {text!r}")
        weights = tuple(int(w) for w in match.group(1).split(","))
        equation = MultiPoly.parse(field, len(weights), match.group(3))
        return cls(weights, int(match.group(2)), equation)


# -- module-level operations --

def poly_ring(op: str, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown ring operation {op!r}")


def poly_eval(f: MultiPoly, point: Sequence[Scalar]) -> FieldElement:
    return f.eval(point)


def poly_pullback(f: MultiPoly, m: PolyMap) -> MultiPoly:
    return f.pullback(m)


def poly_partial(f: MultiPoly, i: int) -> MultiPoly:
    return f.partial(i)


def _square(matrix: Sequence[Sequence[MultiPoly]]) -> int:
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    return n


def poly_det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Cofactor expansion along the first row; no signs in characteristic 2."""
    n = _square(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * poly_det(minor)
        total = term if total is None else total + term
    if total is None:
        sample = matrix[0][0]
        return MultiPoly.zero(sample.field, sample.nvars)
    return total


def poly_det_permutation(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Leibniz expansion over all permutations."""
    n = _square(matrix)
    sample = matrix[0][0]
    total = MultiPoly.zero(sample.field, sample.nvars)
    for sigma in permutations(range(n)):
        term = MultiPoly.constant(sample.field, sample.nvars)
        for i, j in enumerate(sigma):
            term = term * matrix[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def is_singular_at(f: MultiPoly, point: Sequence[Scalar]) -> bool:
    """f(p) = 0 and every formal partial vanishes at p."""
    bits = [_bits(f.field, v) for v in point]
    if f.eval_bits(bits):
        return False
    return all(not f.partial(i).eval_bits(bits) for i in range(f.nvars))


def proportional(f: MultiPoly, g: MultiPoly) -> Optional[FieldElement]:
    """c with f = c*g, or None."""
    f._check(g)
    if g.is_zero():
        return None
    exps, g_c = g.leading_term()
    c = f.field.div(f.terms.get(exps, 0), g_c)
    if g.scale(c) == f:
        return FieldElement(f.field, c)
    return None


# -- binary forms --

def binary_form(field: FieldSpec, coeffs: Sequence[Scalar]) -> MultiPoly:
    """sum_i coeffs[i] s^(d-i) t^i with d = len(coeffs) - 1."""
    d = len(coeffs) - 1
    return MultiPoly(field, 2, {(d - i, i): c for i, c in enumerate(coeffs)})


def binary_coefficients(f: MultiPoly, degree: int) -> List[int]:
    """Coefficient list of a binary form in the binary_form layout."""
    if f.nvars != 2:
        raise ArityMismatch("binary form expected")
    return [f.terms.get((degree - i, i), 0) for i in range(degree + 1)]


def binary_separable(b: MultiPoly) -> bool:
    """A binary quadratic has two distinct roots iff its middle coefficient is nonzero."""
    if b.is_zero():
        raise ValueError("binary quadratic is zero")
    if b.nvars != 2 or b.degree != 2 or not b.is_homogeneous():
        raise ArityMismatch(f"not a binary quadratic: {b}")
    return b.terms.get((1, 1), 0) != 0


def binary_splitting_witness(a: MultiPoly, b: MultiPoly) -> Optional[MultiPoly]:
    """
    A binary form c of degree k with b = a*c + c^2, or None.

    - c -> a*c + c^2 is additive, so it is a linear map over F2 on the bit
      expansion of the k+1 coefficients of c.
    - The image of every basis vector is written out as a bit vector of the
      2k+1 coefficients of a degree-2k form and the system is solved over GF(2).
    """
    field = b.field
    if b.is_zero():
        return MultiPoly.zero(field, 2)
    if b.degree % 2:
        return None
    k = b.degree // 2
    if not a.is_zero() and a.degree != k:
        raise ArityMismatch(f"deg a = {a.degree}, deg b = {b.degree}")

    def to_bits(form: MultiPoly) -> List[int]:
        coeffs = binary_coefficients(form, 2 * k)
        return [(c >> j) & 1 for c in coeffs for j in range(field.k)]

    basis_forms = []
    images = []
    for i in range(k + 1):
        for j in range(field.k):
            coeffs = [0] * (k + 1)
            coeffs[i] = 1 << j
            c = binary_form(field, coeffs)
            basis_forms.append(c)
            images.append(to_bits(a * c + c.square()))
    try:
        solution = linalg.solve_combination(field_make(1), images, to_bits(b))
    except ValueError:
        return None
    witness = MultiPoly.zero(field, 2)
    for bit, form in zip(solution, basis_forms):
        if bit:
            witness = witness + form
    return witness


def binary_splitting(a: MultiPoly, b: MultiPoly) -> bool:
    """True iff b = a*c + c^2 for some binary form c."""
    return binary_splitting_witness(a, b) is not None


def _dehomogenize(f: MultiPoly) -> Tuple[int, galois.Poly]:
    """Split f(s, t) = t^m * g(s, t) with t not dividing g; return (m, g(s, 1))."""
    field = f.field
    m = min(e[1] for e in f.terms)
    degree = f.degree
    coeffs = [0] * (degree - m + 1)
    for (es, et), c in f.terms.items():
        coeffs[es] ^= c
    GF = field.galois_field
    return m, galois.Poly(list(reversed(coeffs)), field=GF)


def binary_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic-normalised gcd of two binary forms."""
    f._check(g)
    field = f.field
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    mf, uf = _dehomogenize(f)
    mg, ug = _dehomogenize(g)
    common = galois.gcd(uf, ug)
    d = common.degree
    m = min(mf, mg)
    coeffs = [int(c) for c in reversed(common.coeffs)]  # ascending powers of s
    terms = {(i, d - i + m): coeffs[i] for i in range(d + 1)}
    return MultiPoly(field, 2, terms)


def binary_roots(f: MultiPoly) -> List[Tuple[int, int]]:
    """Points [s:t] of P^1(F_q) where a nonzero binary form vanishes."""
    if f.is_zero():
        raise ValueError("zero binary form vanishes everywhere")
    roots = []
    if not f.eval_bits((1, 0)):
        roots.append((1, 0))
    for s in range(f.field.order):
        if not f.eval_bits((s, 1)):
            roots.append((s, 1))
    return roots
