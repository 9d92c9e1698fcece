# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-dict kernels; same contract as lctkit._purepoly.

Coefficients stay Python objects (Fraction or int) so all arithmetic is
exact; the win comes from compiling the dict/tuple plumbing around them.
"""

from math import gcd


cdef inline tuple _add_exps(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    if n == 2:
        return (ea[0] + eb[0], ea[1] + eb[1])
    return tuple([ea[i] + eb[i] for i in range(n)])


def mul_terms(dict a, dict b):
    """Product of two term dicts."""
    cdef dict out = {}
    cdef tuple ea, eb, key
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = _add_exps(ea, eb)
            prev = out.get(key)
            if prev is None:
                out[key] = ca * cb
            else:
                out[key] = prev + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def axpy_terms(alpha, dict q, beta, dict p, tuple shift):
    """alpha*q + beta*x^shift*p for term dicts q, p (alpha, beta nonzero)."""
    cdef dict out = {}
    cdef tuple e, key
    for e, c in q.items():
        out[e] = alpha * c
    for e, c in p.items():
        key = _add_exps(e, shift)
        prev = out.get(key)
        if prev is None:
            out[key] = beta * c
        else:
            out[key] = prev + beta * c
    return {e: c for e, c in out.items() if c != 0}


def strip_int_content(dict t):
    """Divide an integer term dict by the gcd of its coefficients."""
    g = 0
    for c in t.values():
        g = gcd(g, c)
        if g == 1:
            return t
    if g <= 1:
        return t
    return {e: c // g for e, c in t.items()}
