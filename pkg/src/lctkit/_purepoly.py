"""Pure-Python term-dict kernels.

A term dict maps exponent tuples to nonzero coefficients (Fraction or int).
These three functions are the hot loops of the whole package; the compiled
twin in _speedups.pyx implements the same contract.  Inputs are never
mutated and returned dicts contain no zero coefficients.
"""

from math import gcd


def mul_terms(a, b):
    """Product of two term dicts."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(map(sum, zip(ea, eb)))
            prev = out.get(key)
            out[key] = ca * cb if prev is None else prev + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def axpy_terms(alpha, q, beta, p, shift):
    """alpha*q + beta*x^shift*p for term dicts q, p (alpha, beta nonzero)."""
    out = {e: alpha * c for e, c in q.items()}
    for e, c in p.items():
        key = tuple(map(sum, zip(e, shift)))
        prev = out.get(key)
        out[key] = beta * c if prev is None else prev + beta * c
    return {e: c for e, c in out.items() if c != 0}


def strip_int_content(t):
    """Divide an integer term dict by the gcd of its coefficients."""
    g = 0
    for c in t.values():
        g = gcd(g, c)
        if g == 1:
            return t
    if g <= 1:
        return t
    return {e: c // g for e, c in t.items()}
