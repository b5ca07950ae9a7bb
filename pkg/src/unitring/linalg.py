"""Dense linear algebra over prime fields (numpy int64)."""

from __future__ import annotations

import numpy as np


def _as_mod(A, p):
    return np.asarray(A, dtype=np.int64) % p


def rref_mod_p(A, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of A over F_p, with pivot columns."""
    M = _as_mod(A, p).copy()
    if M.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            M[nzr] = (M[nzr] - np.outer(col[nzr], M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def row_basis_mod_p(vectors, p: int, dim: int | None = None) -> np.ndarray:
    """Basis (in rref) of the row span; shape (k, dim)."""
    V = np.asarray(vectors, dtype=np.int64)
    if V.size == 0:
        return np.zeros((0, dim if dim is not None else (V.shape[1] if V.ndim == 2 else 0)), dtype=np.int64)
    return rref_mod_p(V, p)[0]


def nullspace_mod_p(A, p: int) -> np.ndarray:
    """Basis of {x : A x = 0} as rows."""
    A = _as_mod(A, p)
    rows, cols = A.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = rref_mod_p(A, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-R[i, f]) % p
    return basis


def left_kernel_mod_p(A, p: int) -> np.ndarray:
    """Basis of {y : y A = 0} as rows."""
    return nullspace_mod_p(np.asarray(A).T, p)


def solve_left_mod_p(A, b, p: int):
    """Some y with y A = b over F_p, or None."""
    A = _as_mod(A, p)
    b = _as_mod(b, p)
    n, m = A.shape
    aug = np.concatenate([A.T, b.reshape(m, 1)], axis=1)
    R, piv = rref_mod_p(aug, p)
    if n in piv:
        return None
    y = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(piv):
        y[c] = R[i, n]
    return y


def inv_mod_p(A, p: int) -> np.ndarray:
    A = _as_mod(A, p)
    n = A.shape[0]
    R, piv = rref_mod_p(np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1), p)
    if piv[:n] != list(range(n)) or len(piv) < n or piv[n - 1] >= n:
        raise ZeroDivisionError("matrix is singular mod p")
    return R[:, n:]


def first_dependency_mod_p(vectors, p: int):
    """Given v_0..v_n with v_0..v_{n-1} independent, return monic c with sum c_i v_i = 0.

    Returns None when v_n is independent of the others.
    """
    V = _as_mod(vectors, p)
    n = V.shape[0] - 1
    y = solve_left_mod_p(V[:n], V[n], p) if n else (np.zeros(0, dtype=np.int64) if not V[0].any() else None)
    if y is None:
        return None
    return [int((-c) % p) for c in y] + [1]


def subspace_intersection_mod_p(U, W, p: int) -> np.ndarray:
    """Row basis of span(U) cap span(W)."""
    U = np.asarray(U, dtype=np.int64)
    W = np.asarray(W, dtype=np.int64)
    if U.shape[0] == 0 or W.shape[0] == 0:
        return np.zeros((0, U.shape[1] if U.ndim == 2 else W.shape[1]), dtype=np.int64)
    K = left_kernel_mod_p(np.concatenate([U, W]), p)
    if K.shape[0] == 0:
        return np.zeros((0, U.shape[1]), dtype=np.int64)
    return row_basis_mod_p(K[:, : U.shape[0]] @ U % p, p)


def coordinates_mod_p(basis, vectors, p: int) -> np.ndarray:
    """Coordinates of each row of vectors in the given (independent) row basis."""
    B = _as_mod(basis, p)
    V = _as_mod(vectors, p)
    k, n = B.shape
    aug = np.concatenate([B.T, V.T], axis=1)
    R, piv = rref_mod_p(aug, p)
    if any(c >= k for c in piv):
        raise ValueError("vector not in span")
    out = np.zeros((V.shape[0], k), dtype=np.int64)
    for i, c in enumerate(piv):
        out[:, c] = R[i, k:]
    return out
