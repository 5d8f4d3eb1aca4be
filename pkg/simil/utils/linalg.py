"""
Exact linear algebra over the rationals for the small systems that
come up in affine-independence checks and separating functionals.

Matrices are numpy arrays of `dtype=object` holding `Fraction`s,
so row operations stay vectorized while every entry stays exact.
Elimination is Gauss-Jordan with the first nonzero entry in each
column as pivot, which keeps results reproducible.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .types import ObjectArray, RationalLike

def exact_matrix(rows : Sequence[Sequence['RationalLike']], n_cols : Optional[int] = None)->'ObjectArray':
    """ Copies `rows` into a 2d object array of `Fraction`s """
    rows = [[Fraction(x) for x in row] for row in rows]
    if len(rows) == 0:
        return np.empty((0, n_cols or 0), dtype=object)
    matrix = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != matrix.shape[1]:
            raise ValueError("Ragged rows passed to exact_matrix")
        matrix[i, :] = row
    return matrix

def row_reduce(matrix : 'ObjectArray')->Tuple['ObjectArray', List[int]]:
    """
    Reduced row echelon form of `matrix` and the list of pivot
    columns. The input is not modified.
    """
    m = np.array(matrix, dtype=object, copy=True)
    if m.ndim != 2:
        raise ValueError(f"Expected a 2d matrix, got shape {m.shape}")
    n_rows, n_cols = m.shape
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if m[i, c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r] = m[r] / m[r, c]
        for i in range(n_rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
    return m, pivots

def rank(matrix : 'ObjectArray')->int:
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix)[1])

def linear_dependence(vectors : Sequence[Sequence['RationalLike']])->Optional[List[Fraction]]:
    """
    Returns a nonzero coefficient list c with Σ c_i v_i = 0 if the
    vectors are linearly dependent, otherwise `None`. The free
    variable taken is the first non-pivot column, set to 1.
    """
    if len(vectors) == 0:
        return None
    columns = exact_matrix(vectors).T
    reduced, pivots = row_reduce(columns)
    free = next((j for j in range(columns.shape[1]) if j not in pivots), None)
    if free is None:
        return None
    coefficients = [Fraction(0)] * columns.shape[1]
    coefficients[free] = Fraction(1)
    for row, pivot_col in enumerate(pivots):
        coefficients[pivot_col] = -reduced[row, free]
    return coefficients

def complete_basis(vectors : Sequence[Sequence['RationalLike']], dim : int)->List[int]:
    """
    Indices i of the standard basis vectors e_i that, appended in
    increasing order, extend linearly independent `vectors` to a
    basis of Q^dim.
    """
    current = [list(v) for v in vectors]
    current_rank = rank(exact_matrix(current, dim))
    if current_rank != len(current):
        raise ValueError("complete_basis requires linearly independent vectors")
    added = []
    for i in range(dim):
        if current_rank == dim:
            break
        e_i = [Fraction(int(j == i)) for j in range(dim)]
        candidate_rank = rank(exact_matrix(current + [e_i]))
        if candidate_rank > current_rank:
            current.append(e_i)
            current_rank = candidate_rank
            added.append(i)
    return added

def solve(matrix : Sequence[Sequence['RationalLike']], rhs : Sequence['RationalLike'])->List[Fraction]:
    """ Exact solution of a square nonsingular system """
    a = exact_matrix(matrix)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"solve needs a square matrix, got shape {a.shape}")
    augmented = np.empty((n, n + 1), dtype=object)
    augmented[:, :n] = a
    augmented[:, n] = [Fraction(x) for x in rhs]
    reduced, pivots = row_reduce(augmented)
    if pivots[:n] != list(range(n)):
        raise ValueError("solve was handed a singular matrix")
    return [reduced[i, n] for i in range(n)]
