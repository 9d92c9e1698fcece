"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: sympy
does expansions and resultants, brute-force enumeration does hulls and
diagonal distances, so expected values never come from the code under
test.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
import sympy

from lctkit.poly import SparsePoly

X, Y = sympy.symbols("x y")


def P(terms) -> SparsePoly:
    """Bivariate polynomial from an exponent->coefficient mapping."""
    return SparsePoly(2, terms)


def sympy_terms(expr_text: str, n: int = 2) -> dict:
    """Expand an expression with sympy and return exact term dict."""
    names = (X, Y) if n == 2 else sympy.symbols(f"x1:{n + 1}")
    expr = sympy.sympify(expr_text.replace("^", "**"), rational=True)
    poly = sympy.Poly(sympy.expand(expr), *names)
    out = {}
    for exps, coeff in poly.terms():
        out[tuple(int(e) for e in exps)] = Fraction(
            int(sympy.numer(coeff)), int(sympy.denom(coeff))
        )
    return out


def from_sympy(expr_text: str, n: int = 2) -> SparsePoly:
    return SparsePoly(n, sympy_terms(expr_text, n))


def to_sympy(f: SparsePoly):
    names = (X, Y) if f.n == 2 else sympy.symbols(f"x1:{f.n + 1}")
    acc = sympy.Integer(0)
    for exps, coeff in f.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for name, k in zip(names, exps):
            term *= name**k
        acc += term
    return sympy.expand(acc)


def brute_distance(support, n: int) -> Fraction:
    """Diagonal distance by enumerating candidate facet normals.

    Every subset of support points plus zeroed coordinates that pins down
    a weight vector yields a lower bound min_e w.e / sum(w); the optimum
    is attained at one of them, so the maximum is exact.
    """
    pts = [tuple(e) for e in support]
    best = Fraction(0)
    for k in range(1, n + 1):
        for touching in itertools.combinations(pts, k):
            for zeros in itertools.combinations(range(n), n - k):
                w = _solve_normal(touching, zeros, n)
                if w is None or any(v < 0 for v in w) or all(v == 0 for v in w):
                    continue
                total = sum(w)
                value = min(sum(wi * ei for wi, ei in zip(w, e)) for e in pts)
                best = max(best, Fraction(value, 1) / total)
    return best


def _solve_normal(touching, zeros, n):
    """Solve w.e = m for the touching points, w_i = 0 on `zeros`, sum w = 1."""
    rows = []
    for e in touching:
        rows.append([Fraction(v) for v in e] + [Fraction(-1), Fraction(0)])
    for i in zeros:
        row = [Fraction(0)] * (n + 2)
        row[i] = Fraction(1)
        rows.append(row)
    rows.append([Fraction(1)] * n + [Fraction(0), Fraction(1)])
    cols = n + 1
    # Gaussian elimination on the (len(rows)) x (cols+1) system
    mat = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        mat[r] = [v / mat[r][c] for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    for i in range(r, len(mat)):
        if mat[i][-1] != 0:
            return None  # inconsistent
    if len(pivots) < cols:
        return None  # underdetermined; skip (other subsets cover it)
    solution = [Fraction(0)] * cols
    for row, c in zip(mat, pivots):
        solution[c] = row[-1]
    return solution[:n]


@pytest.fixture
def rng():
    return random.Random(0x5EED)


def random_poly(rng, n=2, max_terms=6, max_exp=8, coeff_bound=20) -> SparsePoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(n))
        c = 0
        while c == 0:
            c = rng.randint(-coeff_bound, coeff_bound)
        terms[exps] = Fraction(c, rng.randint(1, 5))
    return SparsePoly(n, terms)
