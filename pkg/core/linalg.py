"""
Linear algebra over GF(2^k) on plain integer rows.

Thin wrappers around galois FieldArray methods so the geometry modules can
keep working with tuples of bit patterns.
"""

from typing import List, Sequence, Tuple

import numpy as np

from .gf2k import FieldSpec

Rows = Sequence[Sequence[int]]


def as_array(field: FieldSpec, rows: Rows):
    """Rows of bit patterns as a galois FieldArray."""
    return field.galois_field(np.array(rows, dtype=np.int64))


def _rows(array) -> List[Tuple[int, ...]]:
    return [tuple(int(v) for v in row) for row in np.asarray(array)]


def det(field: FieldSpec, rows: Rows) -> int:
    """Determinant of a square matrix."""
    matrix = as_array(field, rows)
    if matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"determinant of a {matrix.shape} matrix")
    return int(np.linalg.det(matrix))


def rank(field: FieldSpec, rows: Rows) -> int:
    if len(rows) == 0:
        return 0
    return int(np.linalg.matrix_rank(as_array(field, rows)))


def kernel(field: FieldSpec, rows: Rows) -> List[Tuple[int, ...]]:
    """Basis (as rows) of {v : M v = 0}."""
    return _rows(as_array(field, rows).null_space())


def rref(field: FieldSpec, rows: Rows) -> List[Tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped."""
    reduced = as_array(field, rows).row_reduce()
    return [row for row in _rows(reduced) if any(row)]


def solve_combination(field: FieldSpec, basis: Rows, target: Sequence[int]) -> Tuple[int, ...]:
    """
    Coefficients c with sum c_i basis_i = target.

    Raises ValueError when target is outside the span.
    """
    augmented = [list(b) for b in basis] + [list(target)]
    null = kernel(field, np.array(augmented, dtype=np.int64).T.tolist())
    for vector in null:
        last = vector[-1]
        if last:
            scale = field.inv(last)
            return tuple(field.mul(v, scale) for v in vector[:-1])
    raise ValueError("target is not in the span of the basis")
