"""Deterministic exact elimination: RREF, rank, kernels, solving.

Pivot rule: scan columns left to right, take the first row (at or below the
current pivot row) with a nonzero entry.  Over QQ the elimination is
fraction-free (integer row combinations followed by division by the row
content); pivots are normalised to 1 only at the end.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import _accel
from .errors import NoSolution, NotInvertible
from .matrix import Mat, hstack


def _content(row: list[int]) -> int:
    g = 0
    for x in row:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return 1
    return g


def _rref_rational(num: np.ndarray, ncols: int):
    rows = [[int(x) for x in r] for r in num]
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == m:
            break
        found = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if found is None:
            continue
        rows[r], rows[found] = rows[found], rows[r]
        prow = rows[r]
        a = prow[col]
        for i in range(m):
            if i == r:
                continue
            b = rows[i][col]
            if b == 0:
                continue
            new = [a * x - b * y for x, y in zip(rows[i], prow)]
            g = _content(new)
            if g > 1:
                new = [x // g for x in new]
            rows[i] = new
        g = _content(prow)
        if g > 1:
            rows[r] = [x // g for x in prow]
        pivots.append(col)
        r += 1
    out = []
    for i, row in enumerate(rows):
        if i < len(pivots):
            piv = row[pivots[i]]
            out.append([Fraction(x, piv) for x in row])
        else:
            out.append([Fraction(x) for x in row])
    return out, pivots


def rref(m: Mat, ncols: int | None = None) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; pivots searched among the first ``ncols`` columns."""
    if ncols is None:
        ncols = m.shape[1]
    f = m.field
    if m.shape[0] == 0 or m.shape[1] == 0:
        return m, []
    if f.is_prime:
        R, piv = _accel.rref_mod(m.num, f.p, ncols)
        return Mat(f, R), [int(x) for x in piv]
    rows, piv = _rref_rational(m.num, ncols)
    return Mat.from_rows(f, rows, shape=m.shape), piv


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def nullspace(m: Mat) -> tuple[Mat, list[int]]:
    """Kernel basis as the columns of an (n x k) matrix, plus the free columns.

    Basis vector for free column j has a 1 in position j, zeros at the other
    free positions, so the free coordinates of a kernel vector are its
    coordinates in this basis.
    """
    n = m.shape[1]
    R, piv = rref(m)
    free = [j for j in range(n) if j not in set(piv)]
    f = m.field
    rows = [[f.scalar(0)] * len(free) for _ in range(n)]
    for k, j in enumerate(free):
        rows[j][k] = f.scalar(1)
        for i, p in enumerate(piv):
            rows[p][k] = -R.entry(i, j)
    return Mat.from_rows(f, rows, shape=(n, len(free))), free


def solve(m: Mat, rhs: Mat) -> tuple[Mat, int]:
    """Some X with m @ X == rhs, and the kernel dimension of m."""
    if m.shape[0] != rhs.shape[0]:
        raise ValueError(f"row mismatch {m.shape} vs {rhs.shape}")
    n = m.shape[1]
    R, piv = rref(hstack(m, rhs), ncols=n)
    f = m.field
    r = len(piv)
    for i in range(r, R.shape[0]):
        if any(R.num[i, n:]):
            raise NoSolution("right-hand side is outside the column space")
    rows = [[f.scalar(0)] * rhs.shape[1] for _ in range(n)]
    for i, p in enumerate(piv):
        rows[p] = [R.entry(i, n + j) for j in range(rhs.shape[1])]
    return Mat.from_rows(f, rows, shape=(n, rhs.shape[1])), n - r


def inverse(m: Mat) -> Mat:
    if m.shape[0] != m.shape[1]:
        raise NotInvertible(f"non-square matrix {m.shape}")
    try:
        x, kernel = solve(m, Mat.eye(m.field, m.shape[0]))
    except NoSolution as exc:
        raise NotInvertible("matrix is singular") from exc
    if kernel:
        raise NotInvertible("matrix is singular")
    return x
