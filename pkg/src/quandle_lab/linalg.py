"""Integer Smith normal form and linear algebra over Z/p.

Integer work uses Python ints throughout so nothing can overflow; the mod-p
routines run on int64 numpy arrays, whose entries stay below p**2.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError


def _as_int_rows(M) -> list[list[int]]:
    return [[int(v) for v in row] for row in np.asarray(M, dtype=object).tolist()] if np.size(M) else []


def smith_normal_form(M) -> tuple[tuple[int, ...], int]:
    """Return ``(diagonal, rank)`` of the Smith normal form of an integer matrix.

    ``diagonal`` lists only the nonzero invariant factors ``d_1 | d_2 | ...``,
    all positive, so ``rank == len(diagonal)``.

    >>> smith_normal_form([[2, 0], [0, 3]])
    ((1, 6), 2)
    """
    A = _as_int_rows(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < rows and t < cols:
        # smallest nonzero entry in the trailing block keeps coefficient growth down
        best = None
        for i in range(t, rows):
            Ai = A[i]
            for j in range(t, cols):
                v = Ai[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]

        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                v = A[i][t]
                if v:
                    q = v // p
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, cols):
                            if At[j]:
                                Ai[j] -= q * At[j]
                    if A[i][t]:
                        dirty = True
            At = A[t]
            for j in range(t + 1, cols):
                v = At[j]
                if v:
                    q = v // p
                    if q:
                        for i in range(t, rows):
                            if A[i][t]:
                                A[i][j] -= q * A[i][t]
                    if At[j]:
                        dirty = True
            if dirty:
                # a remainder survived; move the smallest one of row/column t into the pivot
                best = (abs(A[t][t]), t, t)
                for i in range(t + 1, rows):
                    if A[i][t] and abs(A[i][t]) < best[0]:
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, cols):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                _, i, j = best
                if i != t:
                    A[t], A[i] = A[i], A[t]
                if j != t:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                continue
            # row and column t are clear; enforce divisibility on the trailing block
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            Ab, At = A[bad], A[t]
            for j in range(t, cols):
                At[j] += Ab[j]
        diag.append(abs(A[t][t]))
        t += 1
    return tuple(diag), len(diag)


# ---------------------------------------------------------------------------
# Z/p


def _check_prime(p: int):
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise DomainError(f"modulus {p} is not prime; only prime moduli are supported")


def rref_mod_p(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over Z/p and the pivot columns."""
    _check_prime(p)
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        A = A.reshape(0, 0)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod_p(M, p: int) -> int:
    A = np.asarray(M)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(M, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : M @ x == 0 mod p}``, one vector per free column."""
    A = np.asarray(M, dtype=np.int64)
    cols = A.shape[1] if A.ndim == 2 else 0
    if A.size == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref_mod_p(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-R[r, f]) % p
    return basis


def row_space_mod_p(M, p: int) -> np.ndarray:
    """Basis (as rows) of the row space of ``M`` over Z/p."""
    A = np.asarray(M, dtype=np.int64)
    if A.size == 0:
        return np.zeros((0, A.shape[1] if A.ndim == 2 else 0), dtype=np.int64)
    R, pivots = rref_mod_p(A, p)
    return R[: len(pivots)]


def in_row_space_mod_p(v, basis, p: int) -> bool:
    B = np.asarray(basis, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64).reshape(1, -1) % p
    if B.shape[0] == 0:
        return not v.any()
    return rank_mod_p(np.vstack([B, v]), p) == rank_mod_p(B, p)
