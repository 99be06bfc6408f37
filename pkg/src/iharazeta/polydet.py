"""Exact determinants: integer matrices and matrices of integer polynomials.

Two independent strategies are provided for the polynomial case and tested
against each other:

* "interp" (default): evaluate the matrix at degree_bound + 2 small integer
  points, take exact integer determinants by fraction-free elimination, and
  interpolate back. The extra point is an overdetermination check: if the
  interpolated polynomial fails to reproduce it, the stated degree bound was
  wrong or something worse happened.
* "ring": fraction-free (Bareiss) elimination directly over the polynomial
  ring, with every division exact by Sylvester's identity.

Both are division-safe on singular and zero-pivot inputs via row swaps.
"""

from __future__ import annotations

from .errors import ConsistencyError
from .intpoly import IntPoly, lagrange_interpolate


def bareiss_int_det(matrix) -> int:
    """Exact determinant of a square matrix of Python ints."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0  # whole pivot column zero: singular
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def evaluation_points(count: int):
    """0, 1, -1, 2, -2, ...: small magnitudes keep the bignums small."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


def det_poly_matrix(matrix, degree_bound: int, strategy: str = "interp") -> IntPoly:
    """Exact determinant of a square matrix of IntPoly entries.

    degree_bound must be an upper bound on the true determinant degree
    (callers derive it from structure: 2|V| for I - Au + Qu^2, 2|E| for
    I - uT). Violating it surfaces as a ConsistencyError, not a wrong
    answer, thanks to the overdetermination point.
    """
    m = [[p if isinstance(p, IntPoly) else IntPoly.constant(p) for p in row]
         for row in matrix]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    if n == 0:
        return IntPoly.one()
    if strategy == "interp":
        return _det_by_interpolation(m, degree_bound)
    if strategy == "ring":
        det = _det_by_ring_bareiss(m)
        if det.degree > degree_bound:
            raise ConsistencyError(
                f"determinant degree {det.degree} exceeds bound {degree_bound}"
            )
        return det
    raise ValueError(f"unknown strategy {strategy!r}")


def _det_by_interpolation(m, degree_bound: int) -> IntPoly:
    n = len(m)
    pts = evaluation_points(degree_bound + 2)
    check_x = pts[-1]
    samples = []
    for x in pts:
        val = bareiss_int_det([[p.eval_at(x) for p in row] for row in m])
        samples.append((x, val))
    det = lagrange_interpolate(samples[:-1])
    check_y = samples[-1][1]
    if det.eval_at(check_x) != check_y:
        raise ConsistencyError(
            "interpolated determinant fails the overdetermination point; "
            "degree bound violated or arithmetic bug"
        )
    return det


def _det_by_ring_bareiss(m) -> IntPoly:
    m = [row[:] for row in m]
    n = len(m)
    sign = 1
    prev = IntPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return IntPoly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = IntPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
