"""Exception hierarchy.

DomainError covers violated mathematical preconditions (zero input, unit
germ, missing axis intersection).  Structural misuse (mismatched variable
counts, bad indices) raises plain ValueError.  The engine failures carry
enough state for callers to salvage partial progress.
"""

from __future__ import annotations


class LctkitError(Exception):
    """Base class for package-specific errors."""


class DomainError(LctkitError, ValueError):
    """A mathematical precondition does not hold for the given input."""


class ParseError(LctkitError, ValueError):
    """Syntax or resource error in a polynomial expression.

    `offset` is the byte offset of the offending token in the input text
    (None for resource-limit violations discovered during expansion).
    """

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class NormalizationError(LctkitError):
    """Normalization could not complete; carries the partial result.

    `partial_poly` and `partial_steps` hold the last reached polynomial and
    the substitutions applied so far, so callers can still use the partial
    coordinate change (the lct engine does).
    """

    def __init__(self, message: str, partial_poly=None, partial_steps=()):
        self.partial_poly = partial_poly
        self.partial_steps = tuple(partial_steps)
        super().__init__(message)


class IrrationalFactorError(NormalizationError):
    """A repeated factor blocking normalization has no rational root."""

    def __init__(self, multiplicity: int, normal, partial_poly=None, partial_steps=()):
        self.multiplicity = multiplicity
        self.normal = normal
        super().__init__(
            f"facet with normal {normal} carries an irrational factor of "
            f"multiplicity {multiplicity}; cannot normalise over Q",
            partial_poly,
            partial_steps,
        )


class IterationCapError(NormalizationError):
    """normalize() exceeded max_iter without normalising every facet."""


class InexactTruncationError(LctkitError):
    """The truncation's lct is not Exact, so no bracket can be formed."""


class NonFiniteMultiplicityError(LctkitError):
    """The two curves share a component through the origin (or the step
    budget was exhausted, which points at a non-isolated singularity)."""
