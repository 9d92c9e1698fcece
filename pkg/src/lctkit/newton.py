"""Newton polygons of bivariate germs and the diagonal distance.

The Newton polyhedron of f is the convex hull of the union of the sets
e + R_{>=0}^n over the exponent vectors e in the support of f.  In two
variables its boundary is a staircase: a vertical ray, a convex chain of
compact edges, and a horizontal ray.  Every facet carries the unique
coprime non-negative inward normal w, and the supporting value
level = min w.e over the support.

The diagonal distance c is the least t with (t, ..., t) inside the
polyhedron, equivalently the maximum of level/sum(w) over the facets.
For n > 2 the distance is computed by an exact linear program instead of
building the full facet structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from lctkit.errors import DomainError
from lctkit.poly import SparsePoly, WeightVector
from lctkit.simplex import solve_lp


@dataclass(frozen=True)
class Facet:
    """One facet of the polygon: w.p >= level with equality on the facet."""

    normal: WeightVector
    level: int
    vertices: tuple[tuple[int, int], ...]  # two for a compact edge, one for a ray
    ray: tuple[int, int] | None = None  # direction of the unbounded facets

    @property
    def is_compact(self) -> bool:
        return self.ray is None

    def line_contains(self, point) -> bool:
        """Is the point on the supporting line of this facet?"""
        return self.normal.dot(point) == self.level

    def diagonal_value(self) -> Fraction:
        """The t with (t, t) on this facet's supporting line."""
        return Fraction(self.level, self.normal.total)


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, int], ...]
    facets: tuple[Facet, ...]

    def contains(self, point) -> bool:
        return all(f.normal.dot(point) >= f.level for f in self.facets)

    @property
    def compact_facets(self) -> tuple[Facet, ...]:
        return tuple(f for f in self.facets if f.is_compact)


@dataclass(frozen=True)
class DiagonalData:
    """Where the diagonal ray meets the polygon boundary."""

    c: Fraction
    facets: tuple[Facet, ...]  # the one or two facets through (c, c)
    is_corner: bool


def _staircase_vertices(support):
    """Extreme points of conv(support) + R_{>=0}^2, left to right."""
    min_y = {}
    for x, y in support:
        if x not in min_y or y < min_y[x]:
            min_y[x] = y
    pts = sorted(min_y.items())
    # Pareto frontier: x strictly increases, keep strictly decreasing y
    frontier = []
    for x, y in pts:
        if not frontier or y < frontier[-1][1]:
            frontier.append((x, y))
    hull = []
    for p in frontier:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # drop the middle point unless the chain turns strictly left
            if (x1 - x0) * (p[1] - y0) - (y1 - y0) * (p[0] - x0) > 0:
                break
            hull.pop()
        hull.append(p)
    return hull


def newton_polygon(f: SparsePoly) -> NewtonPolygon:
    """Newton polygon of a nonzero bivariate polynomial."""
    if f.n != 2:
        raise ValueError(f"newton_polygon needs 2 variables, got {f.n}")
    if f.is_zero():
        raise DomainError("Newton polygon of the zero polynomial")
    verts = _staircase_vertices(f.support())
    facets = [
        Facet(WeightVector((1, 0)), verts[0][0], (verts[0],), ray=(0, 1))
    ]
    for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
        g = gcd(y1 - y2, x2 - x1)
        w = WeightVector(((y1 - y2) // g, (x2 - x1) // g))
        facets.append(Facet(w, w.dot((x1, y1)), ((x1, y1), (x2, y2))))
    facets.append(
        Facet(WeightVector((0, 1)), verts[-1][1], (verts[-1],), ray=(1, 0))
    )
    return NewtonPolygon(tuple(verts), tuple(facets))


def diagonal_data(polygon: NewtonPolygon) -> DiagonalData:
    """Exact diagonal distance and the facet(s) through (c, c)."""
    c = max(f.diagonal_value() for f in polygon.facets)
    through = tuple(f for f in polygon.facets if f.diagonal_value() == c)
    return DiagonalData(c, through, len(through) >= 2)


def _distance_lp(support, n):
    """min t such that (t,...,t) in conv(support) + R_{>=0}^n."""
    pts = sorted(support)
    k = len(pts)
    # variables: lambda_1..lambda_k, s_1..s_n, t
    nvars = k + n + 1
    A, b = [], []
    for i in range(n):
        row = [Fraction(e[i]) for e in pts] + [Fraction(0)] * n + [Fraction(-1)]
        row[k + i] = Fraction(1)
        A.append(row)
        b.append(Fraction(0))
    A.append([Fraction(1)] * k + [Fraction(0)] * (n + 1))
    b.append(Fraction(1))
    c = [Fraction(0)] * (nvars - 1) + [Fraction(1)]
    value, _ = solve_lp(A, b, c)
    return value


def _distance_dual_lp(support, n):
    """max of min_e w.e over weights w >= 0 with sum(w) = 1."""
    pts = sorted(support)
    k = len(pts)
    # variables: w_1..w_n, mu, u_1..u_k (surplus); mu >= 0 is valid since
    # weights and exponents are non-negative
    nvars = n + 1 + k
    A, b = [], []
    for j, e in enumerate(pts):
        row = [Fraction(e[i]) for i in range(n)] + [Fraction(-1)] + [Fraction(0)] * k
        row[n + 1 + j] = Fraction(-1)
        A.append(row)
        b.append(Fraction(0))
    A.append([Fraction(1)] * n + [Fraction(0)] * (1 + k))
    b.append(Fraction(1))
    c = [Fraction(0)] * n + [Fraction(-1)] + [Fraction(0)] * k
    value, _ = solve_lp(A, b, c)
    return -value


def distance_nd(f: SparsePoly) -> Fraction:
    """Diagonal distance of the Newton polyhedron in any dimension >= 2.

    Solves the primal hull-membership program and the dual weight program
    separately and insists the two exact optima agree, which certifies the
    result.
    """
    if f.n < 2:
        raise ValueError("distance_nd needs at least 2 variables")
    if f.is_zero():
        raise DomainError("distance of the zero polynomial")
    if f.constant_term() != 0:
        raise DomainError("germ must vanish at the origin")
    support = f.support()
    primal = _distance_lp(support, f.n)
    dual = _distance_dual_lp(support, f.n)
    if primal != dual:
        raise AssertionError(
            f"LP duality gap: primal {primal} != dual {dual}; this is a bug"
        )
    return primal


__all__ = [
    "DiagonalData",
    "Facet",
    "NewtonPolygon",
    "diagonal_data",
    "distance_nd",
    "newton_polygon",
]
