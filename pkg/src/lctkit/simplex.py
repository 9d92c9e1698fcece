"""Textbook two-phase simplex over exact rationals.

Bland's rule guarantees termination; every number is a Fraction so there
are no tolerances anywhere.  Problem sizes in this package are tiny (a few
dozen variables), so the dense tableau is the right tool.
"""

from __future__ import annotations

from fractions import Fraction

from lctkit.errors import LctkitError


class InfeasibleLP(LctkitError):
    pass


class UnboundedLP(LctkitError):
    pass


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i, r in enumerate(T):
        if i != row and r[col] != 0:
            factor = r[col]
            T[i] = [v - factor * w for v, w in zip(r, T[row])]
    basis[row] = col


def _bland_loop(T, basis, ncols):
    """Pivot until the objective row (last row of T) has no negative
    reduced cost.  Entering/leaving indices follow Bland's rule."""
    m = len(T) - 1
    while True:
        obj = T[-1]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return
        row = None
        best = None
        for i in range(m):
            if T[i][col] > 0:
                ratio = T[i][-1] / T[i][col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best, row = ratio, i
        if row is None:
            raise UnboundedLP("objective unbounded below")
        _pivot(T, basis, row, col)


def solve_lp(A, b, c):
    """Minimize c.x subject to A x = b, x >= 0.

    Returns (optimal value, x).  Raises InfeasibleLP / UnboundedLP.
    """
    m, n = len(A), len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]

    # Phase 1: artificial basis, minimize the sum of artificials.
    T = [A[i] + [Fraction(i == j) for j in range(m)] + [b[i]] for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        obj = [v - w for v, w in zip(obj, T[i])]
    for j in range(n, n + m):
        obj[j] = Fraction(0)
    T.append(obj)
    basis = [n + i for i in range(m)]
    _bland_loop(T, basis, n + m)
    if T[-1][-1] != 0:
        raise InfeasibleLP("no feasible point")

    # Drive leftover (zero-valued) artificials out of the basis; a row with
    # no original column to pivot on is redundant and can be neutralized.
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, basis, i, col)

    # Phase 2: real objective, artificial columns frozen out.
    obj = c + [Fraction(0)] * (m + 1)
    for i in range(m):
        if basis[i] < n and obj[basis[i]] != 0:
            factor = obj[basis[i]]
            obj = [v - factor * w for v, w in zip(obj, T[i])]
    T[-1] = obj
    _bland_loop(T, basis, n)

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    return -T[-1][-1], x
