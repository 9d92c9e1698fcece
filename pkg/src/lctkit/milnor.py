"""Local intersection multiplicity of plane curves at the origin.

The computation uses only the defining properties of the intersection
number I_0: it vanishes iff a curve misses the origin, I_0(x, q) is the
y-order of q(0, y) (symmetrically for y), it is additive over products,
and it is unchanged by adding a multiple of one polynomial to the other.

Concretely: strip monomial and integer content (each stripped variable
factor contributes an order of the other curve; nonzero constants and
univariate polynomials with nonzero constant term are units at the
origin), then eliminate the variable of lower degree by pseudo-division,

    I_0(A, B) = I_0(R, B) - (d+1) * ord(lc) * ord(B on the axis)

for lc(B)^{d+1} A = Q B + R, and recurse on (B, R), which has strictly
smaller degree.  Remainders are divided down by the Collins subresultant
divisors (exact divisions, no gcds), which keeps coefficient growth
polynomial; every divided-out univariate factor is accounted through the
same order formula, so the result stays exact.  Whenever stripping or an
axis change edits the remainder sequence, the subresultant state restarts
(the theory needs an unmodified chain); corrections are never skipped.

A vanishing pseudo-remainder means the curves share a component through
the origin; so does a pair with both restrictions to an axis vanishing.
"""

from __future__ import annotations

from math import gcd, inf

from lctkit._kernel import axpy_terms, mul_terms, strip_int_content
from lctkit.errors import DomainError, NonFiniteMultiplicityError
from lctkit.poly import SparsePoly

DEFAULT_STEP_LIMIT = 10**6


def _int_terms(f: SparsePoly) -> dict:
    """Clear denominators: same curve germ, integer coefficients."""
    scale = 1
    for c in f.terms.values():
        scale = scale * c.denominator // gcd(scale, c.denominator)
    return {e: int(c * scale) for e, c in f.terms.items()}


def _deg(t: dict, axis: int) -> int:
    return max((e[axis] for e in t), default=-1)


def _axis_order(t: dict, axis: int):
    """Order of t along the axis: min exponent of the other variable over
    the terms free of variable `axis` (inf when t vanishes there)."""
    other = 1 - axis
    orders = [e[other] for e in t if e[axis] == 0]
    return min(orders) if orders else inf


def _strip_monomial(t: dict):
    """t = x^a y^b * t~ with t~ divisible by neither variable."""
    a = min(e[0] for e in t)
    b = min(e[1] for e in t)
    if a == 0 and b == 0:
        return t, 0, 0
    return {(i - a, j - b): c for (i, j), c in t.items()}, a, b


def _top_slice(t: dict, axis: int, degree: int) -> dict:
    """Leading coefficient w.r.t. `axis`, encoded with axis exponent 0."""
    if axis == 1:
        return {(i, 0): c for (i, j), c in t.items() if j == degree}
    return {(0, j): c for (i, j), c in t.items() if i == degree}


def _prem(a: dict, b: dict, axis: int) -> dict:
    """Pseudo-remainder in `axis`: lc(b)^(d+1) * a = Q*b + R with
    deg_axis R < deg_axis b, d = deg_axis a - deg_axis b."""
    db = _deg(b, axis)
    lcb = _top_slice(b, axis, db)
    r = a
    count = _deg(a, axis) - db + 1
    while r:
        dr = _deg(r, axis)
        if dr < db:
            break
        lcr = _top_slice(r, axis, dr)
        shift = (0, dr - db) if axis == 1 else (dr - db, 0)
        r = axpy_terms(1, mul_terms(lcb, r), -1, mul_terms(lcr, b), shift)
        count -= 1
    for _ in range(count):  # pad so the overall multiplier is lc^(d+1)
        r = mul_terms(lcb, r)
    return r


def _univ_dense(t: dict, axis: int) -> list:
    """Dense coefficient list of a polynomial supported on one axis."""
    out = [0] * (_deg(t, axis) + 1)
    for e, c in t.items():
        out[e[axis]] = c
    return out


def _exact_div_by_univ(t: dict, d: dict, axis: int):
    """Divide t by a polynomial d supported on `axis`; None if inexact."""
    dd = _univ_dense(d, axis)
    other = 1 - axis
    width = _deg(t, axis) + 1
    if width < len(dd):
        return None
    rows: dict[int, list] = {}
    for e, c in t.items():
        row = rows.get(e[other])
        if row is None:
            row = rows[e[other]] = [0] * width
        row[e[axis]] = c
    out = {}
    for k, row in rows.items():
        for i in range(width - len(dd), -1, -1):
            top = row[i + len(dd) - 1]
            if top == 0:
                continue
            if top % dd[-1] != 0:
                return None
            q = top // dd[-1]
            for j, v in enumerate(dd):
                row[i + j] -= q * v
            row[i + len(dd) - 1] = 0
            out[(i, k) if axis == 0 else (k, i)] = q
        if any(row):
            return None
    return out


def _upow(d: dict, k: int) -> dict:
    out = {(0, 0): 1}
    for _ in range(k):
        out = mul_terms(out, d)
    return out


def _prim(t: dict) -> dict:
    """Strip integer content and monomial content: the part that is a unit
    germ away from the monomial, normalised for use as a chain divisor."""
    stripped, _, _ = _strip_monomial(t)
    return strip_int_content(stripped)


def intersection_multiplicity(
    p: SparsePoly, q: SparsePoly, step_limit: int = DEFAULT_STEP_LIMIT
) -> int:
    """I_0(p, q), the local intersection multiplicity at the origin.

    Raises NonFiniteMultiplicityError when the curves share a component
    through the origin (vanishing pseudo-remainder or a shared axis); the
    step budget is a final safety net for pathological inputs.
    """
    if p.n != 2 or q.n != 2:
        raise ValueError("intersection multiplicity needs two bivariate curves")
    if p.constant_term() != 0 or q.constant_term() != 0:
        return 0
    if p.is_zero() or q.is_zero():
        raise NonFiniteMultiplicityError(
            "the zero polynomial meets every curve in a component"
        )

    total = 0

    def order_or_raise(t: dict, axis: int) -> int:
        value = _axis_order(t, axis)
        if value is inf:
            raise NonFiniteMultiplicityError(
                "the curves share a coordinate axis through the origin"
            )
        return value

    a, b = strip_int_content(_int_terms(p)), strip_int_content(_int_terms(q))
    axis = None  # elimination variable of the current subresultant chain
    g = h = None  # Collins state (kept primitive); None while fresh
    for _ in range(step_limit):
        if a.get((0, 0), 0) != 0 or b.get((0, 0), 0) != 0:
            return total  # a unit: the curves no longer both pass through 0
        # split off axis components; each contributes the order of the
        # other curve along that axis (and shared axes are non-finite)
        a, xa, ya = _strip_monomial(a)
        if xa:
            total += xa * order_or_raise(b, 0)
        if ya:
            total += ya * order_or_raise(b, 1)
        b, xb, yb = _strip_monomial(b)
        if xb:
            total += xb * order_or_raise(a, 0)
        if yb:
            total += yb * order_or_raise(a, 1)
        if a.get((0, 0), 0) != 0 or b.get((0, 0), 0) != 0:
            return total

        best = min((0, 1), key=lambda ax: min(_deg(a, ax), _deg(b, ax)))
        if axis != best or _deg(a, axis) < _deg(b, axis):
            axis = best
            g = h = None  # reordered chain: Collins state no longer applies
            if _deg(a, axis) < _deg(b, axis):
                a, b = b, a

        da, db = _deg(a, axis), _deg(b, axis)
        delta = da - db
        lcb = _top_slice(b, axis, db)
        r = _prem(a, b, axis)
        if not r:
            raise NonFiniteMultiplicityError(
                "vanishing pseudo-remainder: the curves share a component "
                "through the origin"
            )
        # the pseudo-division multiplied a by lc(b)^(delta+1); account the
        # axis order of that factor against b (its unit part is free)
        lc_ord = min(e[1 - axis] for e in lcb)
        if lc_ord:
            total -= (delta + 1) * lc_ord * order_or_raise(b, 1 - axis)
        # Divide the remainder by the primitive part of the Collins
        # divisor: a unit germ (nonzero at 0), so no accounting is needed,
        # and the division is exactness-guarded, so the occasional stale
        # divisor after a monomial strip merely skips the size reduction.
        if g is not None:
            divisor = _prim(mul_terms(g, _upow(h, delta)))
            if len(divisor) > 1:
                reduced = _exact_div_by_univ(r, divisor, 1 - axis)
                if reduced is not None:
                    r = reduced
        # advance the chain: g <- lc(b), h <- lc(b)^delta * h^(1-delta)
        lcb = _prim(lcb)
        if h is None:
            h = _upow(lcb, delta)
        elif delta == 1:
            h = lcb
        elif delta > 1:
            hnew = _exact_div_by_univ(_upow(lcb, delta), _upow(h, delta - 1), 1 - axis)
            h = _prim(hnew) if hnew is not None else _upow(lcb, delta)
        g = lcb
        a, b = b, strip_int_content(r)
    raise NonFiniteMultiplicityError(f"no result after {step_limit} reduction steps")


def milnor_number(f: SparsePoly, step_limit: int = DEFAULT_STEP_LIMIT) -> int:
    """Local Milnor number: intersection multiplicity of the two partials.

    Finite exactly when f has an isolated critical point at the origin;
    otherwise NonFiniteMultiplicityError propagates from the recursion.
    """
    if f.n != 2:
        raise ValueError("the Milnor oracle is implemented for n = 2")
    if f.is_zero():
        raise DomainError("Milnor number of the zero polynomial")
    return intersection_multiplicity(
        f.derivative(0), f.derivative(1), step_limit=step_limit
    )


def determinacy_truncation_degree(f: SparsePoly) -> int:
    """Degree mu + 1 at which an isolated singularity is determined; safe
    to pass as normalize(..., trunc_degree=...)."""
    return milnor_number(f) + 1


__all__ = [
    "DEFAULT_STEP_LIMIT",
    "determinacy_truncation_degree",
    "intersection_multiplicity",
    "milnor_number",
]
