"""Hot integer kernels: numba-compiled with a pure-numpy fallback.

Set ``COTWIST_DISABLE_NUMBA=1`` to force the numpy path (also used
automatically when numba is not importable).  Both paths are exact and
must agree bit for bit; ``benchmarks/bench_kernels.py`` compares them.

Kernels operate on int64 arrays only.  Callers are responsible for
guaranteeing that ``matmul_i64`` cannot overflow.
"""

from __future__ import annotations

import os

import numpy as np

_INT64_LIMIT = 2**63 - 1


def _modinv_py(a: int, p: int) -> int:
    return pow(int(a), -1, int(p))


# ---------------------------------------------------------------- numpy path


def matmul_mod_np(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    k = a.shape[1]
    if k == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    step = max(1, _INT64_LIMIT // ((p - 1) ** 2 + 1))
    if k <= step:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, k, step):
        out = (out + (a[:, start:start + step] @ b[start:start + step]) % p) % p
    return out


def matmul_i64_np(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b


def rref_mod_np(a: np.ndarray, p: int, ncols: int):
    R = np.array(a, dtype=np.int64) % p
    m = R.shape[0]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == m:
            break
        nz = np.nonzero(R[r:, col])[0]
        if nz.size == 0:
            continue
        found = r + int(nz[0])
        if found != r:
            R[[r, found]] = R[[found, r]]
        R[r] = (R[r] * _modinv_py(R[r, col], p)) % p
        factors = R[:, col].copy()
        factors[r] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            R[rows] = (R[rows] - np.outer(factors[rows], R[r])) % p
        pivots.append(col)
        r += 1
    return R, np.array(pivots, dtype=np.int64)


# ---------------------------------------------------------------- numba path

try:
    import numba

    @numba.njit(cache=True)
    def _modinv_nb(a, p):
        result = 1
        base = a % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result

    @numba.njit(cache=True)
    def _matmul_mod_nb(a, b, p, cap):
        # accumulate raw products and reduce only every `cap` terms
        m, k = a.shape
        n = b.shape[1]
        out = np.zeros((m, n), dtype=np.int64)
        for i in range(m):
            count = 0
            for t in range(k):
                x = a[i, t]
                if x == 0:
                    continue
                if count == cap:
                    for j in range(n):
                        out[i, j] %= p
                    count = 0
                for j in range(n):
                    out[i, j] += x * b[t, j]
                count += 1
            for j in range(n):
                out[i, j] %= p
        return out

    def matmul_mod_nb(a, b, p):
        cap = max(_INT64_LIMIT // ((p - 1) ** 2 + 1) - 1, 1)
        return _matmul_mod_nb(np.ascontiguousarray(a, dtype=np.int64),
                              np.ascontiguousarray(b, dtype=np.int64), p, cap)

    @numba.njit(cache=True)
    def matmul_i64_nb(a, b):
        m, k = a.shape
        n = b.shape[1]
        out = np.zeros((m, n), dtype=np.int64)
        for i in range(m):
            for t in range(k):
                x = a[i, t]
                if x == 0:
                    continue
                for j in range(n):
                    out[i, j] += x * b[t, j]
        return out

    @numba.njit(cache=True)
    def _rref_mod_nb(a, p, ncols):
        m, n = a.shape
        R = np.empty((m, n), dtype=np.int64)
        for i in range(m):
            for j in range(n):
                R[i, j] = a[i, j] % p
        pivots = np.empty(min(m, ncols), dtype=np.int64)
        r = 0
        for col in range(ncols):
            if r == m:
                break
            found = -1
            for i in range(r, m):
                if R[i, col] != 0:
                    found = i
                    break
            if found < 0:
                continue
            if found != r:
                for j in range(n):
                    tmp = R[r, j]
                    R[r, j] = R[found, j]
                    R[found, j] = tmp
            inv = _modinv_nb(R[r, col], p)
            for j in range(n):
                R[r, j] = (R[r, j] * inv) % p
            for i in range(m):
                if i == r:
                    continue
                f = R[i, col]
                if f == 0:
                    continue
                g = p - f
                for j in range(n):
                    R[i, j] = (R[i, j] + g * R[r, j]) % p
            pivots[r] = col
            r += 1
        return R, pivots[:r]

    def rref_mod_nb(a, p, ncols):
        return _rref_mod_nb(np.ascontiguousarray(a, dtype=np.int64), p, ncols)

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def numba_enabled() -> bool:
    flag = os.environ.get("COTWIST_DISABLE_NUMBA", "").strip().lower()
    return HAVE_NUMBA and flag not in {"1", "true", "yes", "on"}


if numba_enabled():
    BACKEND = "numba"
    matmul_mod = matmul_mod_nb
    matmul_i64 = matmul_i64_nb
    rref_mod = rref_mod_nb
else:
    BACKEND = "numpy"
    matmul_mod = matmul_mod_np
    matmul_i64 = matmul_i64_np
    rref_mod = rref_mod_np
