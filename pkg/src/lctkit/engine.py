"""Log canonical thresholds of plane-curve germs, with certificates.

The main entry point is lct().  For a bivariate germ the value 1/c (c the
diagonal distance of the Newton polygon) is always an upper bound, and it
is the exact threshold when the diagonal point (c, c) is a vertex, when
the germ is weakly normalised with respect to the facet through (c, c),
or when every component of that facet's leading term has multiplicity at
most c (the equality certificate).  When none of these hold the engine
changes coordinates with normalize() and re-reads the polygon; if even
that fails it degrades to a certified upper bound, optionally paired with
a truncation bracket.

Every exact answer carries a replayable certificate: the facet used, the
clause that fired, and the substitution steps that produced the final
polynomial from the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lctkit.errors import (
    DomainError,
    InexactTruncationError,
    IrrationalFactorError,
    IterationCapError,
    NormalizationError,
)
from lctkit.newton import (
    DiagonalData,
    Facet,
    NewtonPolygon,
    diagonal_data,
    distance_nd,
    newton_polygon,
)
from lctkit.poly import (
    SparsePoly,
    SubstitutionStep,
    WeightVector,
    substitute,
    truncate,
    weight,
)
from lctkit.whfactor import (
    FacetProfile,
    facet_profile,
    irrational_factor_multiplicity,
    rational_repeated_factors,
)

EXACT = "exact"
UPPER_BOUND = "upper-bound"
BRACKET = "bracket"

DEFAULT_MAX_ITER = 64


@dataclass(frozen=True)
class CertificateTrail:
    """Replayable evidence for an LctResult.

    Applying `steps` to the original input (truncating to `trunc_degree`
    before and after each step, when set) reproduces `final_poly` exactly;
    `clause` names the predicate that fired on `facet`.
    """

    clause: str
    facet: Facet | None
    steps: tuple[SubstitutionStep, ...]
    final_poly: SparsePoly
    trunc_degree: int | None = None

    def replay(self, original: SparsePoly) -> SparsePoly:
        g = original
        if self.trunc_degree is not None:
            g = truncate(g, self.trunc_degree)
        for step in self.steps:
            g = substitute(g, step)
            if self.trunc_degree is not None:
                g = truncate(g, self.trunc_degree)
        return g


@dataclass(frozen=True)
class LctResult:
    """status 'exact': value is lct_0(f).  status 'upper-bound': value is
    the 1/c bound.  status 'bracket': additionally lo <= lct_0(f) <= hi."""

    status: str
    value: Fraction
    c: Fraction
    certificate: CertificateTrail
    bracket: tuple[Fraction, Fraction] | None = None

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT


# -- normalisedness predicates ------------------------------------------------


def _weak_clause(profile: FacetProfile) -> str | None:
    wx, wy = profile.w.entries
    a, b = profile.sat_exponents
    if wx == 0 or wy == 0:
        return "W1"
    if profile.max_multiplicity <= max(a, b):
        return "W2"
    if wx > 1 and wy > 1:
        return "W3"
    return None


def _normalised_clause(profile: FacetProfile) -> str | None:
    wx, wy = profile.w.entries
    a, b = profile.sat_exponents
    d = profile.max_multiplicity
    if wx == 0 or wy == 0:
        return "N1"
    if wx == 1 and wy == 1:
        return "N2" if d <= min(a, b) else None
    if wx == 1:
        return "N3" if d <= b else None
    if wy == 1:
        return "N4" if d <= a else None
    return "N5"


def is_weakly_normalised(f: SparsePoly, facet: Facet) -> bool:
    """Clause W1, W2 or W3 holds for f along the facet."""
    return _weak_clause(facet_profile(f, facet)) is not None


def is_normalised(f: SparsePoly, facet: Facet) -> bool:
    """The matching clause among N1-N5 holds for f along the facet."""
    return _normalised_clause(facet_profile(f, facet)) is not None


def equality_certificate_2d(f: SparsePoly, facet: Facet) -> bool:
    """True when every component of the facet leading term has coefficient
    at most c, components inside the weight-zero locus excepted.  For the
    facet through (c, c) this certifies lct = 1/c."""
    profile = facet_profile(f, facet)
    c = facet.diagonal_value()
    wx, wy = facet.normal.entries
    a, b = profile.sat_exponents
    if profile.max_multiplicity > c:
        return False
    if wy != 0 and a > c:
        return False
    if wx != 0 and b > c:
        return False
    return True


# -- normalization loop --------------------------------------------------------


def _violation_threshold(profile: FacetProfile) -> int:
    wx, wy = profile.w.entries
    a, b = profile.sat_exponents
    if wx == 1 and wy == 1:
        return min(a, b)
    return b if wx == 1 else a


def _substitution_orientation(profile: FacetProfile, tie_preference: str) -> str:
    """Which triangular substitution attacks the violated clause.

    A y-substitution turns the straightened branch into a power of y and
    so raises the y-saturation exponent b; an x-substitution raises a.
    N3 and N4 force the orientation; for N2 (normal (1, 1)) the deficient
    side must be raised, otherwise eliminating the same branch over and
    over ping-pongs between two presentations of the same germ.  When the
    exponents tie, `tie_preference` decides: a smooth branch can solve as
    a polynomial in one variable but only as an infinite series in the
    other, so the caller may need to try both."""
    wx, wy = profile.w.entries
    if wx == 1 and wy == 1:
        a, b = profile.sat_exponents
        if a == b:
            return tie_preference
        return "x" if a < b else "y"
    return "y" if wx == 1 else "x"


def normalize(
    f: SparsePoly,
    max_iter: int = DEFAULT_MAX_ITER,
    trunc_degree: int | None = None,
    tie_preference: str = "y",
) -> tuple[SparsePoly, CertificateTrail]:
    """Coordinate changes until every compact facet is normalised.

    Facets are visited steepest first; on a violating facet the rational
    branch of maximal multiplicity is straightened by y -> y + c*x^{w_y}
    (by x -> x + c*y^{w_x} when w_y = 1 instead of w_x).  Without
    trunc_degree the substitutions are exact, so the result is honestly
    right equivalent to the input; with it, every intermediate polynomial
    is re-truncated, which is only a right equivalence when f is
    (trunc_degree)-determined (e.g. trunc_degree >= milnor number + 1).

    Raises IrrationalFactorError when the blocking branch has no rational
    coefficient and IterationCapError after max_iter substitutions; both
    carry the partial polynomial and steps.
    """
    if f.n != 2:
        raise ValueError(f"normalize needs 2 variables, got {f.n}")
    if f.is_zero():
        raise DomainError("cannot normalise the zero polynomial")
    if f.constant_term() != 0:
        raise DomainError("germ must vanish at the origin")
    if tie_preference not in ("x", "y"):
        raise ValueError("tie_preference must be 'x' or 'y'")
    work = f
    if trunc_degree is not None:
        work = truncate(work, trunc_degree)
        if work.is_zero():
            raise DomainError(
                f"truncation degree {trunc_degree} removes every term of {f}"
            )
    steps: list[SubstitutionStep] = []
    for _ in range(max_iter + 1):
        violation = None
        for facet in newton_polygon(work).compact_facets:
            profile = facet_profile(work, facet)
            if _normalised_clause(profile) is None:
                violation = profile
                break
        if violation is None:
            trail = CertificateTrail(
                "normalised", None, tuple(steps), work, trunc_degree
            )
            return work, trail
        if len(steps) >= max_iter:
            raise IterationCapError(
                f"not normalised after {max_iter} substitutions",
                partial_poly=work,
                partial_steps=steps,
            )
        threshold = _violation_threshold(violation)
        orientation = _substitution_orientation(violation, tie_preference)
        blocked = irrational_factor_multiplicity(violation, orientation)
        if blocked > threshold:
            raise IrrationalFactorError(
                blocked,
                violation.w.entries,
                partial_poly=work,
                partial_steps=steps,
            )
        coeff, mult = rational_repeated_factors(violation, orientation)[0]
        assert mult > threshold, "violating facet must carry a deep rational branch"
        wx, wy = violation.w.entries
        if orientation == "y":
            step = SubstitutionStep(target=1, source=0, exponent=wy, coeff=coeff)
        else:
            step = SubstitutionStep(target=0, source=1, exponent=wx, coeff=coeff)
        work = substitute(work, step)
        if trunc_degree is not None:
            work = truncate(work, trunc_degree)
            if work.is_zero():
                raise DomainError(
                    f"truncation degree {trunc_degree} removed every term "
                    "during normalization"
                )
        steps.append(step)
    raise AssertionError("unreachable")


# -- the main theorem as an algorithm -------------------------------------------


def _certify(g: SparsePoly, dd: DiagonalData) -> tuple[str | None, Facet]:
    """Which exactness clause fires for the facet through (c, c), if any."""
    facet = dd.facets[0]
    if dd.is_corner:
        return "corner", facet
    if 0 in facet.normal.entries:
        return "W1", facet
    profile = facet_profile(g, facet)
    clause = _weak_clause(profile)
    if clause is not None:
        return clause, facet
    # equality certificate: a <= c and b <= c hold automatically on the
    # diagonal facet, so only the branch multiplicity is at stake
    if profile.max_multiplicity <= dd.c:
        return "equality", facet
    return None, facet


def lct(
    f: SparsePoly,
    *,
    max_iter: int = DEFAULT_MAX_ITER,
    trunc_degree: int | None = None,
    bracket_degree: int | None = None,
) -> LctResult:
    """Log canonical threshold of the germ of f at the origin.

    For two variables the result is Exact whenever a certificate is found,
    possibly after normalization; otherwise it is the 1/c upper bound (and
    a bracket around the true value when bracket_degree is given).  For
    more than two variables only the upper bound is ever claimed.
    """
    if f.is_zero():
        raise DomainError("lct of the zero power series is undefined")
    if f.constant_term() != 0:
        raise DomainError("lct is defined at a zero of f; f(0) != 0 here")
    if f.n == 1:
        k = min(e[0] for e in f.support())
        trail = CertificateTrail("order", None, (), f)
        return LctResult(EXACT, Fraction(1, k), Fraction(k), trail)
    if f.n > 2:
        c = distance_nd(f)
        trail = CertificateTrail("distance-nd", None, (), f)
        return LctResult(UPPER_BOUND, 1 / c, c, trail)

    dd = diagonal_data(newton_polygon(f))
    clause, facet = _certify(f, dd)
    if clause is not None:
        trail = CertificateTrail(clause, facet, (), f, trunc_degree)
        return LctResult(EXACT, 1 / dd.c, dd.c, trail)

    # normalize and re-read; a tied (1,1) facet can straighten to a
    # polynomial in one orientation and an infinite series in the other,
    # so both tie preferences get a chance before settling for a bound
    best: tuple[Fraction, SparsePoly, tuple[SubstitutionStep, ...]] = (dd.c, f, ())
    for tie_preference in ("y", "x"):
        try:
            g, trail = normalize(
                f,
                max_iter=max_iter,
                trunc_degree=trunc_degree,
                tie_preference=tie_preference,
            )
            steps = trail.steps
        except NormalizationError as err:
            if err.partial_poly is None:
                continue
            g, steps = err.partial_poly, err.partial_steps
        dd = diagonal_data(newton_polygon(g))
        clause, facet = _certify(g, dd)
        if clause is not None:
            trail = CertificateTrail(clause, facet, steps, g, trunc_degree)
            return LctResult(EXACT, 1 / dd.c, dd.c, trail)
        if dd.c > best[0]:  # larger distance = tighter upper bound
            best = (dd.c, g, steps)

    c, g, steps = best
    dd = diagonal_data(newton_polygon(g))
    trail = CertificateTrail("upper-bound", dd.facets[0], steps, g, trunc_degree)
    result = LctResult(UPPER_BOUND, 1 / c, c, trail)
    if bracket_degree is not None:
        try:
            lo, hi = lct_bracket(f, bracket_degree)
        except (InexactTruncationError, DomainError):
            return result
        result = LctResult(
            BRACKET, result.value, dd.c, trail, bracket=(lo, min(hi, result.value))
        )
    return result


def lct_bracket(f: SparsePoly, d: int) -> tuple[Fraction, Fraction]:
    """Interval of half-width n/(d+1) around lct of the degree-d truncation;
    it contains lct_0(f) whenever the truncation's lct is Exact."""
    if d < 0:
        raise ValueError("truncation degree must be non-negative")
    t = truncate(f, d)
    if t.is_zero():
        raise DomainError(f"truncation of {f} at degree {d} is zero")
    inner = lct(t)
    if not inner.is_exact:
        raise InexactTruncationError(
            f"lct of the truncation at degree {d} is not exact "
            f"(status {inner.status}); no bracket available"
        )
    half = Fraction(f.n, d + 1)
    lo = max(Fraction(0), inner.value - half)
    hi = min(Fraction(1), inner.value + half)
    return lo, hi


# -- weighted bounds and closed forms -------------------------------------------


def weight_bound(f: SparsePoly, w: WeightVector) -> Fraction:
    """The upper bound sum(w_i) / wt_w(f) for lct_0(f)."""
    if f.is_zero():
        raise DomainError("weight bound of the zero power series")
    wt = weight(f, w)
    if wt == 0:
        raise DomainError("wt_w(f) = 0: f has a term of weight zero")
    return Fraction(w.total) / wt


def discrepancy(lam, w: WeightVector, f: SparsePoly) -> Fraction:
    """Coefficient of the exceptional divisor of the w-weighted blowup in
    the log pullback of lam * V(f): 1 + lam * wt_w(f) - sum(w_i)."""
    if f.is_zero():
        raise DomainError("discrepancy against the zero power series")
    return 1 + Fraction(lam) * weight(f, w) - w.total


def lct_product_sum(a, b) -> Fraction:
    """Exact lct at the origin of (prod x_i^{a_i}) * (sum x_i^{b_i})."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise ValueError("exponent lists must have equal length")
    if len(a) < 2:
        raise DomainError("the closed form needs at least 2 variables")
    if any(ai < 0 for ai in a) or any(bi < 1 for bi in b):
        raise ValueError("need a_i >= 0 and b_i >= 1")
    candidates = [
        Fraction(1),
        Fraction(sum(Fraction(1, bi) for bi in b))
        / (1 + sum(Fraction(ai, bi) for ai, bi in zip(a, b))),
    ]
    candidates.extend(Fraction(1, ai) for ai in a if ai > 0)
    return min(candidates)


__all__ = [
    "BRACKET",
    "CertificateTrail",
    "DEFAULT_MAX_ITER",
    "EXACT",
    "LctResult",
    "UPPER_BOUND",
    "discrepancy",
    "equality_certificate_2d",
    "is_normalised",
    "is_weakly_normalised",
    "lct",
    "lct_bracket",
    "lct_product_sum",
    "normalize",
    "weight_bound",
]
