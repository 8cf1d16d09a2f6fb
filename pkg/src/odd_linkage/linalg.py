"""Exact rank and determinant over the rationals and over prime fields.

Matrices are lists of rows of Python ints.  Over the rationals we use
fraction-free (Bareiss) elimination: every division is exact, so the
entries stay integers and grow only polynomially.
"""

from .errors import DomainError
from .omega import OmegaExpr


def _copy(M):
    return [list(map(int, row)) for row in M]


def _width(M):
    if not M:
        return 0
    w = len(M[0])
    if any(len(row) != w for row in M):
        raise DomainError("ragged matrix")
    return w


def _bareiss(M):
    """Row-echelon via Bareiss; returns (rank, swaps, last pivot)."""
    A = _copy(M)
    rows, cols = len(A), _width(A)
    prev, r, swaps = 1, 0, 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((s for s in range(r, rows) if A[s][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            swaps += 1
        p = A[r][c]
        for s in range(r + 1, rows):
            a = A[s][c]
            row_r, row_s = A[r], A[s]
            for t in range(c + 1, cols):
                row_s[t] = (p * row_s[t] - a * row_r[t]) // prev
            row_s[c] = 0
        prev = p
        r += 1
    return r, swaps, prev


def rank_rational(M):
    return _bareiss(M)[0]


def det(M):
    n = len(M)
    if _width(M) != n:
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return 1
    rank, swaps, last = _bareiss(M)
    if rank < n:
        return 0
    return -last if swaps % 2 else last


def is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _check_modulus(p):
    if not isinstance(p, int) or p <= 2 or not is_prime(p):
        raise DomainError(f"modulus must be an odd prime, got {p}")


def rank_mod_p(M, p):
    _check_modulus(p)
    A = [[x % p for x in row] for row in M]
    rows, cols = len(A), _width(A)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((s for s in range(r, rows) if A[s][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for s in range(r + 1, rows):
            f = A[s][c]
            if f:
                A[s] = [(x - f * y) % p for x, y in zip(A[s], A[r])]
        r += 1
    return r


def _is_zero(x):
    return x.is_zero() if isinstance(x, OmegaExpr) else x == 0


def is_upper_triangular(M, row_order=None, col_order=None):
    """Every entry strictly below the diagonal of the selected square block is zero."""
    row_order = list(range(len(M))) if row_order is None else list(row_order)
    col_order = list(range(_width(M))) if col_order is None else list(col_order)
    if len(row_order) != len(col_order):
        raise DomainError("triangularity needs a square selection")
    for a, r in enumerate(row_order):
        for b in range(a):
            if not _is_zero(M[r][col_order[b]]):
                return False
    return True
