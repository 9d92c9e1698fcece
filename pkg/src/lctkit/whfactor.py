"""Multiplicity analysis of weighted-homogeneous facet polynomials.

A saturated weighted-homogeneous bivariate polynomial with coprime
positive weights (w_x, w_y) factors over C into pairwise distinct
branches (y^{w_x} - c_i x^{w_y})^{m_i}.  Substituting x = 1 turns each
branch into y^{w_x} - c_i, whose roots all have multiplicity exactly m_i
and never collide across branches, so the maximal branch multiplicity d
is the maximal root multiplicity of the dehomogenized univariate
polynomial.  That quantity is read off a Yun squarefree decomposition
over Q, with no complex root-finding anywhere.

Univariate polynomials are dense coefficient tuples (index = degree,
leading coefficient nonzero); the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from lctkit._divisors import divisors
from lctkit.errors import DomainError
from lctkit.newton import Facet, newton_polygon
from lctkit.poly import SparsePoly, WeightVector, leading_term, saturate

UnivariatePoly = tuple  # tuple[Fraction, ...]


# -- dense univariate arithmetic over Q --------------------------------------


def utrim(coeffs) -> UnivariatePoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


def udeg(p: UnivariatePoly) -> int:
    return len(p) - 1


def umul(p, q) -> UnivariatePoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return utrim(out)


def udivmod(p, q):
    """Polynomial division with remainder, q nonzero."""
    if not q:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for i in range(len(rem) - len(q), -1, -1):
        factor = rem[i + len(q) - 1] / lead
        if factor == 0:
            continue
        quot[i] = factor
        for j, b in enumerate(q):
            rem[i + j] -= factor * b
    return utrim(quot), utrim(rem)


def udiv_exact(p, q) -> UnivariatePoly:
    quot, rem = udivmod(p, q)
    if rem:
        raise ArithmeticError("inexact univariate division")
    return quot


def uderiv(p) -> UnivariatePoly:
    return utrim([i * c for i, c in enumerate(p)][1:])


def umonic(p) -> UnivariatePoly:
    if not p:
        return ()
    lead = p[-1]
    return tuple(c / lead for c in p)


def ugcd(p, q) -> UnivariatePoly:
    """Monic gcd via exact Euclid (zero polynomial if both are zero)."""
    p, q = utrim(p), utrim(q)
    while q:
        p, q = q, udivmod(p, q)[1]
    return umonic(p)


def ueval(p, value) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * value + c
    return acc


def squarefree_decompose(p) -> list[tuple[UnivariatePoly, int]]:
    """Yun decomposition: p = lc * prod q_i^{m_i} with the q_i monic,
    squarefree, pairwise coprime; pairs sorted by multiplicity."""
    p = utrim(p)
    if not p:
        raise DomainError("squarefree decomposition of the zero polynomial")
    if udeg(p) == 0:
        return []
    out = []
    dp = uderiv(p)
    g = ugcd(p, dp)
    b = udiv_exact(p, g)
    c = udiv_exact(dp, g)
    d = utrim([x - y for x, y in _padded(c, uderiv(b))])
    i = 1
    while udeg(b) > 0:
        q = ugcd(b, d)
        if udeg(q) > 0:
            out.append((q, i))
        b = udiv_exact(b, q)
        c = udiv_exact(d, q)
        d = utrim([x - y for x, y in _padded(c, uderiv(b))])
        i += 1
    return out


def _padded(p, q):
    length = max(len(p), len(q))
    return zip(
        tuple(p) + (Fraction(0),) * (length - len(p)),
        tuple(q) + (Fraction(0),) * (length - len(q)),
    )


def rational_roots(p) -> list[tuple[Fraction, int]]:
    """All rational roots of p with their exact multiplicities, via Yun
    decomposition and the divisor sieve on each squarefree part."""
    p = utrim(p)
    if not p:
        raise DomainError("roots of the zero polynomial")
    out = []
    shift = 0
    while p[shift] == 0:
        shift += 1
    if shift:
        out.append((Fraction(0), shift))
        p = p[shift:]
    for part, mult in squarefree_decompose(p):
        for root in _sieve_roots(part):
            out.append((root, mult))
    out.sort(key=lambda rm: (-rm[1], rm[0]))
    return out


def _sieve_roots(q) -> list[Fraction]:
    """Rational roots of a squarefree polynomial with nonzero constant term:
    numerator divides the constant, denominator divides the leading term."""
    scale = 1
    for c in q:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    ints = [int(c * scale) for c in q]
    content = 0
    for v in ints:
        content = gcd(content, v)
    ints = [v // content for v in ints]
    if len(ints) == 2:  # linear: the single root, no sieve needed
        return [Fraction(-ints[0], ints[1])]
    roots = []
    for num in divisors(abs(ints[0])):
        for den in divisors(abs(ints[-1])):
            if gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if ueval(q, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


# -- facet profiles -----------------------------------------------------------


@dataclass(frozen=True)
class FacetProfile:
    """Per-facet data feeding the normalisedness predicates: the facet
    leading term f_w = x^a y^b * sat, and the maximal multiplicity d of an
    irreducible factor of sat (0 for facets with an axis normal)."""

    facet: Facet
    w: WeightVector
    f_w: SparsePoly
    sat_exponents: tuple[int, int]
    max_multiplicity: int
    squarefree_parts: tuple[tuple[UnivariatePoly, int], ...]


def dehomogenize(f: SparsePoly, variable: int) -> UnivariatePoly:
    """Set the other variable to 1: dense polynomial in `variable`."""
    coeffs: dict[int, Fraction] = {}
    for (i, j), c in f.terms.items():
        k = i if variable == 0 else j
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
    if not coeffs:
        return ()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return utrim(out)


def facet_profile(f: SparsePoly, facet: Facet) -> FacetProfile:
    """Compute the (a, b, d) data of f along one facet of its polygon."""
    polygon = newton_polygon(f)
    if facet not in polygon.facets:
        raise ValueError(f"{facet} is not a facet of the Newton polygon of {f}")
    w = facet.normal
    f_w = leading_term(f, w)
    sat, exps = saturate(f_w)
    if 0 in w.entries:
        return FacetProfile(facet, w, f_w, (exps[0], exps[1]), 0, ())
    univ = dehomogenize(sat, 1)
    parts = tuple(squarefree_decompose(univ))
    d = max((m for _, m in parts), default=0)
    return FacetProfile(facet, w, f_w, (exps[0], exps[1]), d, parts)


def _oriented_parts(profile: FacetProfile, orientation: str | None):
    """Squarefree parts of the dehomogenization in the orientation whose
    roots are substitution coefficients: orientation "y" sets x = 1
    (branches y - c x^{w_y}, needs w_x = 1), orientation "x" sets y = 1
    (branches x - c y^{w_x}, needs w_y = 1).  None picks "y" when
    available."""
    wx, wy = profile.w.entries
    if orientation is None:
        orientation = "y" if wx == 1 else "x"
    if orientation == "y" and wx != 1:
        raise ValueError(f"y-substitutions need w_x = 1, have w = {profile.w.entries}")
    if orientation == "x" and wy != 1:
        raise ValueError(f"x-substitutions need w_y = 1, have w = {profile.w.entries}")
    if orientation not in ("x", "y"):
        raise ValueError(f"orientation must be 'x' or 'y', got {orientation!r}")
    sat, _ = saturate(profile.f_w)
    return squarefree_decompose(dehomogenize(sat, 1 if orientation == "y" else 0))


def rational_repeated_factors(
    profile: FacetProfile, orientation: str | None = None
) -> list[tuple[Fraction, int]]:
    """Rational c with (y - c x^{w_y})^m dividing sat(f_w) when w_x = 1
    (branches (x - c y^{w_x}) when w_y = 1), with exact multiplicities m,
    sorted by multiplicity descending.  For the normal (1, 1) both
    readings exist; `orientation` selects one ("y" by default)."""
    if profile.max_multiplicity < 1:
        raise ValueError("facet has constant saturation; nothing to factor")
    out = []
    for part, mult in _oriented_parts(profile, orientation):
        for root in _sieve_roots(part):
            out.append((root, mult))
    out.sort(key=lambda rm: (-rm[1], rm[0]))
    return out


def irrational_factor_multiplicity(
    profile: FacetProfile, orientation: str | None = None
) -> int:
    """Largest multiplicity carried by a branch whose substitution
    coefficient is irrational (0 if every branch is rational)."""
    worst = 0
    for part, mult in _oriented_parts(profile, orientation):
        if len(_sieve_roots(part)) < udeg(part):
            worst = max(worst, mult)
    return worst


def is_newton_nondegenerate(f: SparsePoly) -> bool:
    """Every compact facet's saturated leading term is reduced (d <= 1)."""
    if f.n != 2:
        raise ValueError("Newton non-degeneracy is defined here for n = 2")
    if f.is_zero():
        raise DomainError("zero polynomial")
    polygon = newton_polygon(f)
    if polygon.vertices[0][0] != 0 or polygon.vertices[-1][1] != 0:
        raise DomainError(
            "Newton polyhedron must meet both coordinate axes for the "
            "non-degeneracy predicate"
        )
    return all(
        facet_profile(f, facet).max_multiplicity <= 1
        for facet in polygon.compact_facets
    )


__all__ = [
    "FacetProfile",
    "UnivariatePoly",
    "dehomogenize",
    "facet_profile",
    "irrational_factor_multiplicity",
    "is_newton_nondegenerate",
    "rational_repeated_factors",
    "rational_roots",
    "squarefree_decompose",
    "ueval",
    "udeg",
    "utrim",
]
