"""Arithmetic substrate: exact ring operations, weights, saturation,
truncation, substitution.  Ring laws and the structural identities run as
hypothesis property suites with large coefficients."""

from fractions import Fraction
from math import inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, from_sympy, to_sympy
from lctkit.errors import DomainError
from lctkit.poly import (
    SparsePoly,
    SubstitutionStep,
    WeightVector,
    leading_term,
    saturate,
    substitute,
    truncate,
    weight,
)

x = SparsePoly.variable(2, 0)
y = SparsePoly.variable(2, 1)


# -- constructors and plumbing -------------------------------------------------


def test_zero_coefficients_are_pruned():
    assert P({(1, 0): 1, (0, 1): 0}).terms == {(1, 0): Fraction(1)}


def test_variable_count_mismatch_raises():
    with pytest.raises(ValueError):
        P({(1, 0): 1}) + SparsePoly(3, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        SparsePoly(2, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        SparsePoly(9, {})


def test_immutability():
    with pytest.raises(AttributeError):
        x.n = 3
    p = P({(1, 0): 1})
    p.terms[(5, 5)] = Fraction(1)  # terms is a copy
    assert p == x


def test_weight_vector_canonicalization():
    assert WeightVector((2, 4)).entries == (1, 2)
    assert WeightVector((Fraction(1, 2), Fraction(1, 3))).entries == (3, 2)
    assert WeightVector((0, 7)).entries == (0, 1)
    with pytest.raises(ValueError):
        WeightVector((0, 0))
    with pytest.raises(ValueError):
        WeightVector((-1, 2))


def test_str_parse_round_trip():
    from lctkit.expr import parse

    p = P({(2, 0): 1, (1, 1): Fraction(-3, 2), (0, 7): 5, (0, 0): 0})
    assert parse(str(p)) == p
    assert str(SparsePoly.zero(2)) == "0"


# -- spec examples -------------------------------------------------------------


def test_ring_examples():
    assert (x + y) * (x - y) == P({(2, 0): 1, (0, 2): -1})
    p = P({(3, 1): 2, (0, 2): -5})
    assert (p + (-p)).is_zero()
    assert (x + y) ** 2 == P({(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_weight_examples():
    assert weight(P({(4, 1): 1}), WeightVector((2, 3))) == 11
    f = from_sympy("x^2*y^2*(x+y)^2 + x^9 + y^7")
    assert weight(f, WeightVector((1, 1))) == 6
    assert weight(SparsePoly.zero(2), WeightVector((1, 1))) == inf


def test_leading_term_examples():
    f = P({(2, 0): 1, (0, 3): 1})
    assert leading_term(f, WeightVector((3, 2))) == f
    assert leading_term(f, WeightVector((1, 1))) == P({(2, 0): 1})
    mono = P({(5, 7): Fraction(3, 4)})
    assert leading_term(mono, WeightVector((2, 9))) == mono
    with pytest.raises(DomainError):
        leading_term(SparsePoly.zero(2), WeightVector((1, 1)))


def test_saturate_examples():
    sat, exps = saturate(from_sympy("x^2*y^3*(x+y)"))
    assert sat == x + y and exps == (2, 3)
    sat, exps = saturate(x + y)
    assert sat == x + y and exps == (0, 0)
    sat, exps = saturate(P({(9, 0): 1}))
    assert sat == SparsePoly.constant(2, 1) and exps == (9, 0)
    with pytest.raises(DomainError):
        saturate(SparsePoly.zero(2))


def test_truncate_examples():
    f = P({(2, 0): 1, (0, 3): 1})
    assert truncate(f, 2) == P({(2, 0): 1})
    assert truncate(f, 3) == f
    assert truncate(f, 1).is_zero()
    with pytest.raises(ValueError):
        truncate(f, -1)


def test_substitute_examples():
    step = SubstitutionStep(target=1, source=0, exponent=1, coeff=-1)
    assert substitute((x + y) ** 2, step) == y**2
    assert substitute(x, SubstitutionStep(0, 1, 3, 1) .inverse().inverse()) == \
        substitute(x, SubstitutionStep(0, 1, 3, 1))
    f = y**2 + x**5
    got = substitute(f, SubstitutionStep(target=1, source=0, exponent=2, coeff=1))
    assert got == P({(0, 2): 1, (2, 1): 2, (4, 0): 1, (5, 0): 1})
    with pytest.raises(ValueError):
        SubstitutionStep(target=0, source=0, exponent=1, coeff=1)
    with pytest.raises(ValueError):
        SubstitutionStep(target=0, source=1, exponent=0, coeff=1)
    with pytest.raises(ValueError):
        SubstitutionStep(target=0, source=1, exponent=1, coeff=0)


def test_substitute_identity_coefficient_zero_rejected_but_trivial_allowed():
    # x -> x + 0*y is not a step (coeff must be nonzero); the identity is
    # just "apply no step", so nothing to check beyond the constructor.
    f = x**2 + y
    step = SubstitutionStep(target=0, source=1, exponent=2, coeff=Fraction(1, 3))
    assert substitute(substitute(f, step), step.inverse()) == f


# -- hypothesis property suites -------------------------------------------------

coeffs = st.fractions(
    min_value=Fraction(-(2**256)), max_value=Fraction(2**256), max_denominator=2**64
).filter(lambda q: q != 0)
exponents = st.tuples(st.integers(0, 8), st.integers(0, 8))
polys = st.dictionaries(exponents, coeffs, min_size=0, max_size=6).map(
    lambda d: SparsePoly(2, d)
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
weightvecs = st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(
    lambda w: any(w)
).map(WeightVector)


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p


@settings(max_examples=50, deadline=None)
@given(polys, polys)
def test_mul_matches_sympy(p, q):
    import sympy

    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))


@settings(max_examples=150, deadline=None)
@given(nonzero_polys, nonzero_polys, weightvecs)
def test_weight_and_leading_term_multiplicative(p, q, w):
    assert weight(p * q, w) == weight(p, w) + weight(q, w)
    assert leading_term(p * q, w) == leading_term(p, w) * leading_term(q, w)


@settings(max_examples=150, deadline=None)
@given(nonzero_polys)
def test_saturate_reconstruction(p):
    sat, exps = saturate(p)
    assert sat.monomial_shift(exps) == p
    assert all(min(e[i] for e in sat.terms) == 0 for i in range(2))


@settings(max_examples=150, deadline=None)
@given(
    polys,
    st.integers(0, 1),
    st.integers(1, 4),
    st.fractions(min_value=Fraction(-99), max_value=Fraction(99), max_denominator=10)
    .filter(lambda q: q != 0),
)
def test_substitute_inverse(p, target, exponent, coeff):
    step = SubstitutionStep(target, 1 - target, exponent, coeff)
    assert substitute(substitute(p, step), step.inverse()) == p


@settings(max_examples=100, deadline=None)
@given(polys)
def test_truncate_identity_beyond_degree(p):
    assert truncate(p, max(p.total_degree(), 0)) == p
    assert truncate(p, p.total_degree() + 5) == p
