"""
Exact arithmetic in GF(2^k).

Elements are stored as integers whose bits are the coefficients in the
polynomial basis (bit i <-> x^i). Scalar operations are done directly on those
integers; vectorised work goes through the matching galois FieldArray class
(`FieldSpec.galois_field`), which uses the same modulus and therefore the same
integer representation.
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Optional, Union

import galois
import numpy as np

from .config import MAX_FIELD_DEGREE, MIN_FIELD_DEGREE, TABLE_FIELD_DEGREE
from .errors import DivisionByZero, ModulusError, SpecMismatch

logger = logging.getLogger(__name__)

_FIELD_TEXT = re.compile(r"^\s*2\^(\d+)(?:\s*/\s*(0x[0-9a-fA-F]+))?\s*$")


def _clmul_reduce(a: int, b: int, k: int, modulus: int) -> int:
    """Shift-and-add product of a and b reduced modulo `modulus`."""
    result = 0
    top = 1 << k
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return result


@dataclass(frozen=True)
class FieldSpec:
    """
    GF(2^k) given by an irreducible modulus of degree k.

    For k = 1 the modulus is x itself (0b10), so the bit-0 rule only applies
    from k = 2 on.
    """
    k: int
    modulus: int

    def __post_init__(self):
        if not MIN_FIELD_DEGREE <= self.k <= MAX_FIELD_DEGREE:
            raise ModulusError(
                f"extension degree must be in [{MIN_FIELD_DEGREE}, {MAX_FIELD_DEGREE}], got {self.k}"
            )
        if self.modulus <= 0 or self.modulus.bit_length() - 1 != self.k:
            raise ModulusError(f"modulus {self.modulus:#x} does not have degree {self.k}")
        if self.k >= 2 and not self.modulus & 1:
            raise ModulusError(f"modulus {self.modulus:#x} is divisible by x")
        if not galois.Poly.Int(self.modulus).is_irreducible():
            raise ModulusError(f"modulus {self.modulus:#x} is reducible over F2")

    def __str__(self) -> str:
        return f"2^{self.k}/{self.modulus:#x}"

    @property
    def order(self) -> int:
        return 1 << self.k

    @cached_property
    def galois_field(self) -> type:
        """galois FieldArray class with this exact modulus."""
        if self.k == 1:
            return galois.GF(2)
        return galois.GF(self.order, irreducible_poly=galois.Poly.Int(self.modulus))

    @cached_property
    def _tables(self):
        """Exp/log tables over a primitive element; None for large k."""
        if self.k > TABLE_FIELD_DEGREE:
            return None
        generator = int(self.galois_field.primitive_element)
        size = self.order - 1
        exp = [0] * (2 * size)
        log = [0] * self.order
        value = 1
        for i in range(size):
            exp[i] = value
            log[value] = i
            value = _clmul_reduce(value, generator, self.k, self.modulus)
        for i in range(size, 2 * size):
            exp[i] = exp[i - size]
        return exp, log

    # -- scalar arithmetic on bit patterns --

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if not x or not y:
            return 0
        tables = self._tables
        if tables is None:
            return _clmul_reduce(x, y, self.k, self.modulus)
        exp, log = tables
        return exp[log[x] + log[y]]

    def square(self, x: int) -> int:
        return self.mul(x, x)

    def pow(self, x: int, e: int) -> int:
        """Square-and-multiply; negative exponents go through the inverse."""
        if e < 0:
            return self.pow(self.inv(x), -e)
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero in " + str(self))
        tables = self._tables
        if tables is not None:
            exp, log = tables
            return exp[(self.order - 1 - log[x]) % (self.order - 1)]
        return self.pow(x, self.order - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def sqrt(self, x: int) -> int:
        """Frobenius square root x^(2^(k-1))."""
        for _ in range(self.k - 1):
            x = self.mul(x, x)
        return x

    # -- element helpers --

    def element(self, bits: int) -> "FieldElement":
        return FieldElement(self, bits)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, b) for b in range(self.order)]

    def random_bits(self, rng: np.random.Generator, nonzero: bool = False) -> int:
        low = 1 if nonzero else 0
        return int(rng.integers(low, self.order))

    def random(self, rng: np.random.Generator, nonzero: bool = False) -> "FieldElement":
        return FieldElement(self, self.random_bits(rng, nonzero))

    def parse_element(self, text: str) -> "FieldElement":
        bits = int(text, 16)
        return FieldElement(self, bits)

    def format_bits(self, bits: int) -> str:
        return f"{bits:#x}"

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        """Parse "2^k" or "2^k/0xMOD"."""
        match = _FIELD_TEXT.match(text)
        if match is None:
            raise ModulusError(f"cannot parse field spec {text!r}")
        k = int(match.group(1))
        modulus = int(match.group(2), 16) if match.group(2) else None
        return field_make(k, modulus)


@dataclass(frozen=True)
class FieldElement:
    """Element of GF(2^k); equality is bitwise within one field."""
    spec: FieldSpec
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.spec.order:
            raise ValueError(f"{self.bits:#x} is not reduced for {self.spec}")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.bits ^ other.bits)

    __sub__ = __add__

    def __neg__(self) -> "FieldElement":
        return self

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.bits, other.bits))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.div(self.bits, other.bits))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow(self.bits, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.bits))

    def sqrt(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.sqrt(self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __int__(self) -> int:
        return self.bits

    def __str__(self) -> str:
        return f"{self.bits:#x}"

    def __repr__(self) -> str:
        return f"FieldElement({self.bits:#x} in {self.spec})"


@lru_cache(maxsize=None)
def field_make(k: int, modulus: Optional[int] = None) -> FieldSpec:
    """
    Build GF(2^k).

    - With no modulus the lexicographically smallest irreducible polynomial
      of degree k is used (x for k = 1).
    - Reducible or wrong-degree moduli raise ModulusError.
    """
    if not MIN_FIELD_DEGREE <= k <= MAX_FIELD_DEGREE:
        raise ModulusError(f"extension degree must be in [{MIN_FIELD_DEGREE}, {MAX_FIELD_DEGREE}], got {k}")
    if modulus is None:
        modulus = int(galois.irreducible_poly(2, k, method="min"))
        logger.debug(f"default modulus for 2^{k}: {modulus:#x}")
    return FieldSpec(k, modulus)


def field_arith(op: str, x: FieldElement, y: Union[FieldElement, int, None] = None) -> FieldElement:
    """Dispatch add | mul | inv | pow on field elements."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "pow":
        return x ** int(y)
    raise ValueError(f"unknown field operation {op!r}")


def frobenius_sqrt(x: FieldElement) -> FieldElement:
    """The unique y with y^2 = x."""
    return x.sqrt()
