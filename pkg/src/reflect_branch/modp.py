"""Exact linear algebra over a prime field, on int64 numpy arrays.

Everything is integer arithmetic reduced mod p; no floating point is used
anywhere.  Sizes here are small (matrices up to a few hundred, p below
10^5), so int64 products never overflow.
"""

from __future__ import annotations

import numpy as np


def modinv(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = mat.copy() % p
    rows, cols = m.shape
    pivots: list[int] = []
    rank = 0
    for col in range(cols):
        pivot_row = None
        for row in range(rank, rows):
            if m[row, col] % p:
                pivot_row = row
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            m[[rank, pivot_row]] = m[[pivot_row, rank]]
        m[rank] = (m[rank] * modinv(int(m[rank, col]), p)) % p
        for row in range(rows):
            if row != rank and m[row, col]:
                m[row] = (m[row] - m[row, col] * m[rank]) % p
        pivots.append(col)
        rank += 1
        if rank == rows:
            break
    return m % p, pivots


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning {x : mat @ x = 0} over F_p."""
    m, pivots = rref(mat, p)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[fc, idx] = 1
        for row, pc in enumerate(pivots):
            basis[pc, idx] = (-m[row, fc]) % p
    return basis


def column_echelon(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Column-reduced basis of the column space and its pivot row indices."""
    reduced, pivots = rref(mat.T % p, p)
    rank = len(pivots)
    return reduced[:rank].T % p, pivots


def charpoly(a: np.ndarray, p: int) -> np.ndarray:
    """Monic characteristic polynomial coefficients (highest degree first),
    by the Faddeev-LeVerrier recurrence; needs p > matrix size."""
    n = a.shape[0]
    if n >= p:
        raise ValueError("charpoly recurrence needs p > n")
    coeffs = np.zeros(n + 1, dtype=np.int64)
    coeffs[0] = 1
    eye = np.eye(n, dtype=np.int64)
    work = eye
    c = 0
    for k in range(1, n + 1):
        if k > 1:
            work = (work + c * eye) % p
        work = matmul(a, work, p)
        c = (-int(np.trace(work) % p) * modinv(k, p)) % p
        coeffs[k] = c
    return coeffs


def poly_roots(coeffs: np.ndarray, p: int) -> list[int]:
    """All roots in F_p of the polynomial with the given coefficients
    (highest degree first), by a vectorized scan of the field."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        acc = (acc * xs + int(c)) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a mod p (odd prime); raises if a is not a square.
    Tonelli-Shanks."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, result = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, result = t * c % p, result * b % p
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True
