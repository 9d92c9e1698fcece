"""Squarefree decomposition, facet profiles, rational repeated factors,
Newton non-degeneracy.  Yun output is cross-checked against sympy's
factorization on random products."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, from_sympy
from lctkit.errors import DomainError
from lctkit.newton import newton_polygon
from lctkit.poly import SparsePoly, WeightVector
from lctkit.whfactor import (
    dehomogenize,
    facet_profile,
    irrational_factor_multiplicity,
    is_newton_nondegenerate,
    rational_repeated_factors,
    rational_roots,
    squarefree_decompose,
    udeg,
    umul,
    utrim,
)


def upoly(*coeffs):
    """Univariate polynomial, ascending coefficients."""
    return utrim([Fraction(c) for c in coeffs])


# -- squarefree decomposition ---------------------------------------------------


def test_squarefree_examples():
    assert squarefree_decompose(upoly(0, 0, 0, 0, 0, 0, 0, 1)) == [(upoly(0, 1), 7)]
    # (y-1)^2 (y+2) = y^3 - 3y + 2
    assert squarefree_decompose(upoly(2, -3, 0, 1)) == [
        (upoly(2, 1), 1),
        (upoly(-1, 1), 2),
    ]
    p = upoly(3, 0, 6)  # squarefree, lc 6
    assert squarefree_decompose(p) == [(upoly(Fraction(1, 2), 0, 1), 1)]
    assert squarefree_decompose(upoly(5)) == []
    with pytest.raises(DomainError):
        squarefree_decompose(upoly())


def test_yun_reconstruction_random():
    rng = random.Random(7)
    t = sympy.Symbol("t")
    for _ in range(60):
        factors = []
        for _ in range(rng.randint(1, 5)):
            deg = rng.randint(1, 2)
            coeffs = [rng.randint(-4, 4) for _ in range(deg)] + [rng.randint(1, 3)]
            factors.append((coeffs, rng.randint(1, 4)))
        prod = upoly(1)
        for coeffs, mult in factors:
            for _ in range(mult):
                prod = umul(prod, upoly(*coeffs))
        parts = squarefree_decompose(prod)
        # reconstruction: lc * prod q_i^{m_i} == input
        recon = upoly(prod[-1])
        for q, m in parts:
            assert q[-1] == 1  # monic
            for _ in range(m):
                recon = umul(recon, q)
        assert recon == prod
        # pairwise coprime, multiplicities strictly increasing
        mults = [m for _, m in parts]
        assert mults == sorted(set(mults))
        exprs = [
            sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(q))
            for q, _ in parts
        ]
        for i in range(len(exprs)):
            for j in range(i + 1, len(exprs)):
                assert sympy.gcd(exprs[i], exprs[j]) == 1
        # cross-check multiplicities against sympy's factorization
        poly_expr = sum(int(c) * t**i for i, c in enumerate(prod))
        want = {}
        for base, mult in sympy.factor_list(poly_expr)[1]:
            if base.is_Symbol or base.has(t):
                want[mult] = want.get(mult, 0) + sympy.degree(base, t)
        got = {}
        for q, m in parts:
            got[m] = got.get(m, 0) + udeg(q)
        assert got == want


def test_rational_roots():
    # 12(y - 1/2)^2 (y + 3) y^2, expanded
    base = umul(umul(upoly(Fraction(-1, 2), 1), upoly(Fraction(-1, 2), 1)), upoly(3, 1))
    p = umul(umul(upoly(0, 0, 12), base), upoly(1))
    roots = rational_roots(p)
    assert (Fraction(1, 2), 2) in roots
    assert (Fraction(-3), 1) in roots
    assert (Fraction(0), 2) in roots
    assert rational_roots(upoly(1, 0, 1)) == []  # t^2 + 1
    assert rational_roots(upoly(-2, 0, 1)) == []  # t^2 - 2


def test_rational_roots_large_coefficients():
    # (y - 30030)^2 (y + 1009): sieve must survive a big constant term
    p = umul(umul(upoly(-30030, 1), upoly(-30030, 1)), upoly(1009, 1))
    assert (Fraction(30030), 2) in rational_roots(p)


# -- facet profiles --------------------------------------------------------------


def diag_facet(f):
    from lctkit.newton import diagonal_data

    return diagonal_data(newton_polygon(f)).facets[0]


def test_profile_paper_example():
    f = from_sympy("x^2*y^2*(x+y)^2 + x^9 + y^7")
    facet = next(
        fc for fc in newton_polygon(f).compact_facets if fc.normal.entries == (1, 1)
    )
    prof = facet_profile(f, facet)
    assert prof.w.entries == (1, 1)
    assert prof.f_w == from_sympy("x^2*y^2*(x+y)^2")
    assert prof.sat_exponents == (2, 2)
    assert prof.max_multiplicity == 2


def test_profile_smooth_branch():
    k = 4
    f = P({(1, 0): 1, (0, k): 1})  # x + y^k
    facet = newton_polygon(f).compact_facets[0]
    prof = facet_profile(f, facet)
    assert prof.w.entries == (k, 1)
    assert prof.f_w == f
    assert prof.sat_exponents == (0, 0)
    assert prof.max_multiplicity == 1


def test_profile_axis_facet():
    f = P({(3, 0): 1})
    facet = newton_polygon(f).facets[0]
    prof = facet_profile(f, facet)
    assert prof.w.entries == (1, 0)
    assert prof.sat_exponents == (3, 0)
    assert prof.max_multiplicity == 0


def test_profile_rejects_foreign_facet():
    f = P({(2, 0): 1, (0, 3): 1})
    g = P({(1, 0): 1, (0, 1): 1})
    foreign = newton_polygon(g).compact_facets[0]
    with pytest.raises(ValueError):
        facet_profile(f, foreign)


def test_rational_repeated_factors_examples():
    f = from_sympy("x^2*y^2*(x+y)^2 + x^9 + y^7")
    facet = next(
        fc for fc in newton_polygon(f).compact_facets if fc.normal.entries == (1, 1)
    )
    assert rational_repeated_factors(facet_profile(f, facet)) == [(Fraction(-1), 2)]

    # (y - 2x^3)^3 * x, weights (1, 3)
    g = from_sympy("x*(y - 2*x^3)^3")
    facet = newton_polygon(g).compact_facets[0]
    prof = facet_profile(g, facet)
    assert prof.w.entries == (1, 3)
    assert rational_repeated_factors(prof) == [(Fraction(2), 3)]
    assert irrational_factor_multiplicity(prof) == 0

    h = P({(2, 0): 1, (0, 2): 1})  # x^2 + y^2, roots +-i
    prof = facet_profile(h, newton_polygon(h).compact_facets[0])
    assert rational_repeated_factors(prof) == []
    assert irrational_factor_multiplicity(prof) == 1


def test_rational_factors_orientation_wy_equals_1():
    # facet normal (3, 1): branches x - c*y^3; c = -1 here
    f = P({(1, 0): 1, (0, 3): 1})  # x + y^3
    prof = facet_profile(f, newton_polygon(f).compact_facets[0])
    assert prof.w.entries == (3, 1)
    assert rational_repeated_factors(prof) == [(Fraction(-1), 1)]


def test_wh_roundtrip_random():
    rng = random.Random(42)
    for _ in range(60):
        wx = rng.randint(1, 5)
        wy = rng.randint(1, 5)
        from math import gcd

        g = gcd(wx, wy)
        wx, wy = wx // g, wy // g
        a, b = rng.randint(0, 3), rng.randint(0, 3)
        pool = sorted({Fraction(n, d) for n in (-3, -2, -1, 1, 2, 3) for d in (1, 2)})
        roots = rng.sample(pool, rng.randint(1, 3))
        mults = [rng.randint(1, 4) for _ in roots]
        f = P({(a, b): 1})
        for c, m in zip(roots, mults):
            branch = P({(0, wx): 1, (wy, 0): -c})  # y^wx - c x^wy
            for _ in range(m):
                f = f * branch
        facets = newton_polygon(f).compact_facets
        assert len(facets) == 1
        prof = facet_profile(f, facets[0])
        assert prof.w.entries == (wx, wy)
        assert prof.sat_exponents == (a, b)
        assert prof.max_multiplicity == max(mults)


def test_newton_nondegenerate_examples():
    assert is_newton_nondegenerate(P({(2, 0): 1, (0, 3): 1}))
    assert not is_newton_nondegenerate(from_sympy("x^2*y^2*(x+y)^2 + x^9 + y^7"))
    assert is_newton_nondegenerate(P({(2, 0): 1, (0, 2): 1}))
    with pytest.raises(DomainError):
        is_newton_nondegenerate(P({(1, 1): 1}))  # misses both axes


def test_dehomogenize():
    f = from_sympy("x^2*y + 3*x^4 - y^3")
    assert dehomogenize(f, 1) == upoly(3, 1, 0, -1)  # 3 + y - y^3 at x = 1
    assert dehomogenize(f, 0) == upoly(-1, 0, 1, 0, 3)  # -1 + x^2 + 3x^4 at y = 1
