"""
Exact linear algebra over the prime field GF(p).

Matrices are dense int64 arrays with entries in ``[0, p)``. The echelon
kernel is compiled with numba; the rest is numpy bookkeeping around it.
"""

import itertools
from typing import Iterator, Optional, Tuple

import numba as nb
import numpy as np
import sympy

from metabelian.constants import ENUMERATION_CAP, IntArray, IntDType
from metabelian.exceptions import ConfigurationError, ResourceCapExceeded


class FieldSpec:
    """
    The ground field GF(p).

    Parameters
    ----------
    p: int
        Prime modulus.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            raise TypeError(f"Expected int for p, received: {type(p).__name__}")
        p = int(p)
        if not sympy.isprime(p):
            raise ConfigurationError(f"p must be prime, received: {p}")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.p))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p})"

    def normalize(self, value) -> int:
        return int(value) % self.p

    def inverse(self, value) -> int:
        value = self.normalize(value)
        if value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(value, -1, self.p)


@nb.njit(inline="always")
def _inverse(a, p):
    # Fermat: a^(p-2) = a^-1 for prime p.
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


@nb.njit(cache=True)
def _reduced_row_echelon(A, p):
    """Reduced row echelon form of A in place. Returns rank and pivot columns."""
    m, n = A.shape
    pivots = np.full(min(m, n), -1, dtype=np.int64)
    row = 0
    for col in range(n):
        if row == m:
            break
        found = -1
        for i in range(row, m):
            if A[i, col] != 0:
                found = i
                break
        if found == -1:
            continue
        if found != row:
            for j in range(n):
                tmp = A[row, j]
                A[row, j] = A[found, j]
                A[found, j] = tmp
        inv = _inverse(A[row, col], p)
        for j in range(n):
            A[row, j] = (A[row, j] * inv) % p
        for i in range(m):
            if i != row and A[i, col] != 0:
                factor = A[i, col]
                for j in range(n):
                    A[i, j] = (A[i, j] - factor * A[row, j]) % p
        pivots[row] = col
        row += 1
    return row, pivots


def as_matrix(values, p: int, shape: Optional[Tuple[int, int]] = None) -> IntArray:
    matrix = np.asarray(values, dtype=IntDType)
    if shape is not None:
        matrix = matrix.reshape(shape)
    if matrix.ndim != 2:
        raise ValueError(f"Expected a 2D matrix, received ndim: {matrix.ndim}")
    return np.mod(matrix, p)


def row_echelon(matrix: IntArray, p: int) -> Tuple[IntArray, int, IntArray]:
    """
    Reduced row echelon form over GF(p).

    Returns
    -------
    echelon: ndarray of integers with the shape of ``matrix``
    rank: int
    pivots: ndarray of integers with shape ``(rank,)``
        Pivot column of every nonzero row.
    """
    echelon = np.ascontiguousarray(np.mod(matrix, p), dtype=IntDType)
    rank, pivots = _reduced_row_echelon(echelon, p)
    return echelon, int(rank), pivots[:rank]


def rank_mod_p(matrix: IntArray, p: int) -> int:
    _, rank, _ = row_echelon(matrix, p)
    return rank


def solve_mod_p(
    A: IntArray, b: IntArray, p: int
) -> Optional[Tuple[IntArray, IntArray]]:
    """
    Solve ``A x = b`` over GF(p).

    Returns
    -------
    None if the system is inconsistent, otherwise a tuple of:

    particular: ndarray of integers with shape ``(n,)``
    nullspace: ndarray of integers with shape ``(n - rank, n)``
        Rows form a basis of the solutions of ``A x = 0``.
    """
    A = np.asarray(A, dtype=IntDType)
    m, n = A.shape
    b = np.asarray(b, dtype=IntDType).reshape(m)
    augmented = np.column_stack([A, b]) if m > 0 else np.zeros((0, n + 1), IntDType)
    echelon, rank, pivots = row_echelon(augmented, p)
    if rank > 0 and pivots[-1] == n:
        return None

    particular = np.zeros(n, dtype=IntDType)
    for row, col in enumerate(pivots):
        particular[col] = echelon[row, n]

    is_pivot = np.zeros(n, dtype=bool)
    is_pivot[pivots] = True
    free = np.flatnonzero(~is_pivot)
    nullspace = np.zeros((free.size, n), dtype=IntDType)
    for k, f in enumerate(free):
        nullspace[k, f] = 1
        for row, col in enumerate(pivots):
            nullspace[k, col] = (-echelon[row, f]) % p
    return particular, nullspace


def affine_points(
    particular: IntArray, nullspace: IntArray, p: int, cap: int = ENUMERATION_CAP
) -> Iterator[IntArray]:
    """
    Enumerate ``particular + span(nullspace)`` over GF(p) in a deterministic
    order: coefficient tuples in lexicographic order.
    """
    dimension = nullspace.shape[0]
    if p**dimension > cap:
        raise ResourceCapExceeded(
            f"affine solution set has {p}^{dimension} points, cap is {cap}"
        )
    for coefficients in itertools.product(range(p), repeat=dimension):
        point = particular.copy()
        for c, v in zip(coefficients, nullspace):
            if c:
                point = point + c * v
        yield np.mod(point, p)
