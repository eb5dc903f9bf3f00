"""Exact integer linear systems via column-style Hermite elimination."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def column_echelon(A: Sequence[Sequence[int]], ncols: int):
    """Reduce ``A`` by unimodular column operations.

    Returns ``(H, U, pivots)`` with ``H == A * U`` lower echelon and
    ``pivots`` a list of ``(row, col)`` pairs, one per pivot column.
    """
    H = [list(row) for row in A]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    pivots = []
    pc = 0
    for r, row in enumerate(H):
        if pc == ncols:
            break
        for j in range(pc + 1, ncols):
            b = row[j]
            if not b:
                continue
            a = row[pc]
            if a and b % a == 0:
                q = b // a
                for M in (H, U):
                    for v in M:
                        v[j] -= q * v[pc]
                continue
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            for M in (H, U):
                for v in M:
                    x, y = v[pc], v[j]
                    v[pc] = s * x + t * y
                    v[j] = ag * y - bg * x
        if row[pc]:
            if row[pc] < 0:
                for M in (H, U):
                    for v in M:
                        v[pc] = -v[pc]
            pivots.append((r, pc))
            pc += 1
    return H, U, pivots


def solve_integer_linear(A: Sequence[Sequence[int]], b: Sequence[int],
                         ncols: Optional[int] = None) -> Optional[List[int]]:
    """Some integer ``x`` with ``A x = b``, or None if there is none."""
    m = len(A)
    if len(b) != m:
        raise ValueError(f"matrix has {m} rows but right-hand side has {len(b)} entries")
    if ncols is None:
        if not m:
            raise ValueError("cannot infer the column count of an empty matrix")
        ncols = len(A[0])
    if any(len(row) != ncols for row in A):
        raise ValueError("ragged matrix")

    H, U, pivots = column_echelon(A, ncols)
    pivot_col = dict(pivots)
    y = [0] * ncols
    for r in range(m):
        row = H[r]
        rest = b[r] - sum(row[j] * y[j] for j in range(ncols) if y[j])
        p = pivot_col.get(r)
        if p is None:
            if rest:
                return None
            continue
        q, rem = divmod(rest, row[p])
        if rem:
            return None
        y[p] = q
    x = [sum(U[i][j] * y[j] for j in range(ncols) if y[j]) for i in range(ncols)]
    for r in range(m):
        if sum(A[r][j] * x[j] for j in range(ncols)) != b[r]:
            raise ArithmeticError("integer solver produced a non-solution")
    return x
