"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a finite map from exponent tuples to nonzero Fraction
coefficients, wrapped in SparsePoly together with the variable count.
Everything is immutable after construction and all operations are pure,
so values can be shared freely across threads.

Weight vectors are canonicalised on construction to coprime non-negative
integers (any positive rational rescaling describes the same facet
normal, so nothing is lost).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf

from lctkit._kernel import mul_terms
from lctkit.errors import DomainError

MAX_VARS = 8

ExponentVector = tuple  # tuple[int, ...], one entry per variable


@dataclass(frozen=True)
class WeightVector:
    """Non-negative integer weights, not all zero, with gcd 1."""

    entries: tuple[int, ...]

    def __init__(self, entries):
        entries = tuple(Fraction(e) for e in entries)
        if not entries:
            raise ValueError("empty weight vector")
        if any(e < 0 for e in entries):
            raise ValueError(f"negative weight in {entries}")
        if all(e == 0 for e in entries):
            raise ValueError("weight vector must have a positive entry")
        # clear denominators, then divide out the common factor
        scale = 1
        for e in entries:
            scale = scale * e.denominator // gcd(scale, e.denominator)
        ints = [int(e * scale) for e in entries]
        g = 0
        for v in ints:
            g = gcd(g, v)
        object.__setattr__(self, "entries", tuple(v // g for v in ints))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def dot(self, exponents) -> int:
        return sum(w * e for w, e in zip(self.entries, exponents))

    def __repr__(self):
        return f"WeightVector{self.entries}"


@dataclass(frozen=True)
class SubstitutionStep:
    """One coordinate change x_target -> x_target + coeff * x_source^exponent.

    This is a ring automorphism; the inverse step has negated coefficient.
    """

    target: int
    source: int
    exponent: int
    coeff: Fraction

    def __post_init__(self):
        if self.target == self.source:
            raise ValueError("substitution target and source must differ")
        if self.exponent < 1:
            raise ValueError("substitution exponent must be positive")
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            raise ValueError("substitution coefficient must be nonzero")

    def inverse(self) -> "SubstitutionStep":
        return SubstitutionStep(self.target, self.source, self.exponent, -self.coeff)


class SparsePoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        if not 1 <= n <= MAX_VARS:
            raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {n}")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has wrong length, expected {n}")
            if any(not isinstance(e, int) or e < 0 for e in exps):
                raise ValueError(f"exponents must be non-negative integers: {exps}")
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, value) -> "SparsePoly":
        return cls(n, {(0,) * n: Fraction(value)})

    @classmethod
    def variable(cls, n: int, index: int) -> "SparsePoly":
        if not 0 <= index < n:
            raise ValueError(f"variable index {index} out of range for n={n}")
        exps = [0] * n
        exps[index] = 1
        return cls(n, {tuple(exps): Fraction(1)})

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "SparsePoly":
        """Wrap an already-canonical term dict without re-validating."""
        p = cls.__new__(cls)
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "_terms", terms)
        return p

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def support(self):
        return set(self._terms)

    def coefficient(self, exps) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations ---------------------------------------------------

    def _check_same_vars(self, other):
        if not isinstance(other, SparsePoly):
            raise TypeError(f"expected SparsePoly, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check_same_vars(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.n, out)

    def __sub__(self, other):
        self._check_same_vars(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.n, out)

    def __neg__(self):
        return SparsePoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_same_vars(other)
        return SparsePoly._raw(self.n, mul_terms(self._terms, other._terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SparsePoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            k >>= 1
            if base_needed:
                base = base * base
        return result

    def scale(self, value) -> "SparsePoly":
        value = Fraction(value)
        if value == 0:
            return SparsePoly.zero(self.n)
        return SparsePoly._raw(self.n, {e: c * value for e, c in self._terms.items()})

    def monomial_shift(self, exps) -> "SparsePoly":
        """Multiply by the monomial x^exps."""
        exps = tuple(exps)
        return SparsePoly._raw(
            self.n,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()},
        )

    # -- variable plumbing used by tests and the engine ---------------------

    def permute_vars(self, perm) -> "SparsePoly":
        """Rename variables: new variable i is old variable perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"not a permutation of 0..{self.n - 1}: {perm}")
        return SparsePoly._raw(
            self.n, {tuple(e[perm[i]] for i in range(self.n)): c for e, c in self._terms.items()}
        )

    def scale_vars(self, factors) -> "SparsePoly":
        """Apply x_i -> factors[i] * x_i (all factors nonzero rationals)."""
        factors = [Fraction(f) for f in factors]
        if len(factors) != self.n or any(f == 0 for f in factors):
            raise ValueError("need one nonzero factor per variable")
        out = {}
        for e, c in self._terms.items():
            for f, k in zip(factors, e):
                c = c * f**k
            out[e] = c
        return SparsePoly._raw(self.n, out)

    def derivative(self, var: int) -> "SparsePoly":
        if not 0 <= var < self.n:
            raise ValueError(f"variable index {var} out of range")
        out = {}
        for e, c in self._terms.items():
            k = e[var]
            if k == 0:
                continue
            shifted = e[:var] + (k - 1,) + e[var + 1 :]
            out[shifted] = out.get(shifted, 0) + c * k
        return SparsePoly._raw(self.n, {e: c for e, c in out.items() if c != 0})

    # -- printing ----------------------------------------------------------

    _VAR_NAMES_2 = ("x", "y")

    def _var_name(self, i: int) -> str:
        if self.n <= 2:
            return self._VAR_NAMES_2[i]
        return f"x{i + 1}"

    def __str__(self):
        if not self._terms:
            return "0"
        # graded lexicographic order, ascending, for deterministic output
        keys = sorted(self._terms, key=lambda e: (sum(e), tuple(-v for v in e)))
        parts = []
        for e in keys:
            c = self._terms[e]
            factors = [
                self._var_name(i) + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e)
                if k > 0
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"SparsePoly({self.n}, {self})"


# -- the spec operations ----------------------------------------------------


def weight(f: SparsePoly, w: WeightVector):
    """Minimum of w.e over the support of f; infinity for f = 0."""
    if f.is_zero():
        return inf
    return min(w.dot(e) for e in f._terms)


def leading_term(f: SparsePoly, w: WeightVector) -> SparsePoly:
    """Sum of the terms of f of minimal w-weight."""
    if f.is_zero():
        raise DomainError("leading term of the zero polynomial")
    m = weight(f, w)
    return SparsePoly._raw(f.n, {e: c for e, c in f._terms.items() if w.dot(e) == m})


def saturate(f: SparsePoly):
    """Split off the largest monomial factor: f = sat * x^a, sat not
    divisible by any variable.  Returns (sat, a)."""
    if f.is_zero():
        raise DomainError("saturation of the zero polynomial")
    a = tuple(min(e[i] for e in f._terms) for i in range(f.n))
    if all(v == 0 for v in a):
        return f, a
    sat = SparsePoly._raw(
        f.n, {tuple(x - y for x, y in zip(e, a)): c for e, c in f._terms.items()}
    )
    return sat, a


def truncate(f: SparsePoly, d: int) -> SparsePoly:
    """Keep only the terms of total degree at most d."""
    if d < 0:
        raise ValueError("truncation degree must be non-negative")
    return SparsePoly._raw(f.n, {e: c for e, c in f._terms.items() if sum(e) <= d})


def substitute(f: SparsePoly, step: SubstitutionStep) -> SparsePoly:
    """Exact image of f under x_target -> x_target + coeff * x_source^k."""
    t, s = step.target, step.source
    if not (0 <= t < f.n and 0 <= s < f.n):
        raise ValueError(f"substitution indices out of range for n={f.n}")
    if f.is_zero():
        return f
    # Horner in the target variable: f = sum_j g_j * t^j with g_j free of t,
    # then evaluate at t = replacement.
    replacement_exps = [0] * f.n
    replacement_exps[s] = step.exponent
    replacement = SparsePoly(
        f.n,
        {
            tuple(0 if i != t else 1 for i in range(f.n)): Fraction(1),
            tuple(replacement_exps): step.coeff,
        },
    )
    layers: dict[int, dict] = {}
    for e, c in f._terms.items():
        j = e[t]
        stripped = e[:t] + (0,) + e[t + 1 :]
        layers.setdefault(j, {})[stripped] = c
    result = SparsePoly.zero(f.n)
    for j in range(max(layers), -1, -1):
        result = result * replacement
        if j in layers:
            result = result + SparsePoly._raw(f.n, layers[j])
    return result


__all__ = [
    "MAX_VARS",
    "ExponentVector",
    "SparsePoly",
    "SubstitutionStep",
    "WeightVector",
    "leading_term",
    "saturate",
    "substitute",
    "truncate",
    "weight",
]
