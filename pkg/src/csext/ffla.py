"""Exact dense linear algebra over the prime field GF(p).

Matrices are numpy integer arrays with entries reduced mod p.  Pivoting is
deterministic (first nonzero entry in column order), so echelon forms, ranks
and nullspace bases are reproducible byte for byte.
"""

from __future__ import annotations

import numpy as np


def as_fp(a, p: int) -> np.ndarray:
    """Copy to an int64 array with entries reduced into [0, p)."""
    return np.array(a, dtype=np.int64) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p).

    Returns (R, pivot_columns).  Pivots are the first rows with a nonzero
    entry in each column, scanned left to right.
    """
    r = as_fp(a, p)
    if r.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {r.shape}")
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = r[row] * pow(int(r[row, col]), -1, p) % p
        colvals = r[:, col].copy()
        colvals[row] = 0
        r -= np.outer(colvals, r[row])
        r %= p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a, p: int) -> int:
    """Row-echelon rank over GF(p)."""
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis of the right kernel {x : a x = 0}, as matrix columns.

    The basis comes from the free columns of the reduced echelon form, in
    column order, so it has exactly cols - rank(a) columns and the identity
    pattern on the free coordinates.
    """
    r, pivots = rref(a, p)
    cols = r.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-int(r[i, f])) % p
    return basis


def solve_in_span(b, v, p: int) -> np.ndarray | None:
    """Solve b @ c = v over GF(p) for a matrix b with independent columns.

    Args:
        b: (rows x k) matrix whose columns must be linearly independent.
        v: right-hand side, a vector of length rows or a matrix of stacked
           right-hand-side columns.
        p: prime modulus.

    Returns:
        The unique coefficient vector (or matrix, one column per right-hand
        side), or None when some right-hand side lies outside the span.

    Raises:
        ValueError: if the columns of b are linearly dependent.
    """
    bm = as_fp(b, p)
    vm = as_fp(v, p)
    vec = vm.ndim == 1
    if vec:
        vm = vm[:, None]
    if bm.shape[0] != vm.shape[0]:
        raise ValueError(f"row counts differ: {bm.shape[0]} vs {vm.shape[0]}")
    k = bm.shape[1]
    r, pivots = rref(np.hstack([bm, vm]), p)
    if sum(1 for c in pivots if c < k) < k:
        raise ValueError("columns of b are linearly dependent")
    if len(pivots) > k:
        return None
    coeffs = r[:k, k:]
    return coeffs[:, 0] if vec else coeffs
