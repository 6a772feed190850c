"""Exact linear algebra over finite fields.

Everything here is integer arithmetic: Gaussian elimination with
first-nonzero pivoting over GF(p), a generic-field variant driven by a
ring's own operations, and a batched invertibility test used to classify
thousands of small matrices at once.
"""

from __future__ import annotations

import numpy as np

from .rings import FiniteRing, mixed_radix_digits


def rref_mod_p(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns, modulo a prime."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        nz = np.flatnonzero(a[row:, col])
        if nz.size == 0:
            continue
        pivot_row = row + int(nz[0])
        if pivot_row != row:
            a[[row, pivot_row]] = a[[pivot_row, row]]
        a[row] = (a[row] * pow(int(a[row, col]), -1, p)) % p
        for other in range(rows):
            if other != row and a[other, col]:
                a[other] = (a[other] - a[other, col] * a[row]) % p
        pivots.append(col)
        row += 1
    return a, pivots


def nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : mat @ v = 0 mod p}, one vector per row."""
    a = np.asarray(mat, dtype=np.int64)
    _, cols = a.shape
    rref, pivots = rref_mod_p(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-rref[r, fc]) % p
    return basis


def span_vectors_mod_p(basis: np.ndarray, p: int) -> np.ndarray:
    """All p^k linear combinations of the k basis rows."""
    k, cols = basis.shape
    if k == 0:
        return np.zeros((1, cols), dtype=np.int64)
    coeffs = mixed_radix_digits(np.arange(p**k), p, k)
    return coeffs @ basis % p


def nullspace_field(mat_rows: list[list[int]], ring: FiniteRing) -> list[list[int]]:
    """Nullspace basis over any finite field using the ring's own arithmetic.

    Entries are ring element indices; pivoting is first-nonzero.
    """
    if not ring.is_field:
        raise ValueError("nullspace_field needs a field")
    a = [list(row) for row in mat_rows]
    rows, cols = len(a), len(a[0])
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        pivot_row = next((r for r in range(row, rows) if a[r][col] != ring.zero), None)
        if pivot_row is None:
            continue
        a[row], a[pivot_row] = a[pivot_row], a[row]
        inv = ring.inverse(a[row][col])
        a[row] = [ring.mul(inv, v) for v in a[row]]
        for other in range(rows):
            if other != row and a[other][col] != ring.zero:
                f = a[other][col]
                a[other] = [ring.sub(v, ring.mul(f, w)) for v, w in zip(a[other], a[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ring.zero] * cols
        vec[fc] = ring.one
        for r, pc in enumerate(pivots):
            vec[pc] = ring.neg(a[r][fc])
        basis.append(vec)
    return basis


def batched_invertible_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Full-rank test for a batch of square matrices modulo a prime.

    Vectorised Gaussian elimination across the whole batch; rows are
    swapped per matrix via fancy indexing.
    """
    a = np.array(mats, dtype=np.int64) % p
    batch, n, _ = a.shape
    ok = np.ones(batch, dtype=bool)
    inv_table = np.array([0] + [pow(v, -1, p) for v in range(1, p)], dtype=np.int64)
    batch_idx = np.arange(batch)
    for col in range(n):
        sub = a[:, col:, col] != 0
        has = sub.any(axis=1)
        ok &= has
        pivot_row = col + sub.argmax(axis=1)
        tmp = a[batch_idx, col].copy()
        a[batch_idx, col] = a[batch_idx, pivot_row]
        a[batch_idx, pivot_row] = tmp
        pinv = inv_table[a[:, col, col]]
        a[:, col, :] = a[:, col, :] * pinv[:, None] % p
        if col + 1 < n:
            factors = a[:, col + 1 :, col]
            a[:, col + 1 :, :] = (a[:, col + 1 :, :] - factors[:, :, None] * a[:, col : col + 1, :]) % p
    return ok
