"""lctkit: exact log canonical thresholds of plane curve germs.

Exact-arithmetic computation of the log canonical threshold at the origin
from the Newton polygon, with machine-checkable certificates: normalising
coordinate changes, weighted upper bounds, truncation brackets, the
product-sum closed form, and a Fulton-style intersection-multiplicity
oracle for Milnor numbers.
"""

from lctkit._kernel import BACKEND
from lctkit.engine import (
    BRACKET,
    EXACT,
    UPPER_BOUND,
    CertificateTrail,
    LctResult,
    discrepancy,
    equality_certificate_2d,
    is_normalised,
    is_weakly_normalised,
    lct,
    lct_bracket,
    lct_product_sum,
    normalize,
    weight_bound,
)
from lctkit.errors import (
    DomainError,
    InexactTruncationError,
    IrrationalFactorError,
    IterationCapError,
    LctkitError,
    NonFiniteMultiplicityError,
    NormalizationError,
    ParseError,
)
from lctkit.expr import parse
from lctkit.milnor import (
    determinacy_truncation_degree,
    intersection_multiplicity,
    milnor_number,
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
    leading_term,
    saturate,
    substitute,
    truncate,
    weight,
)
from lctkit.whfactor import (
    FacetProfile,
    facet_profile,
    is_newton_nondegenerate,
    rational_repeated_factors,
    squarefree_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BRACKET",
    "CertificateTrail",
    "DiagonalData",
    "DomainError",
    "EXACT",
    "Facet",
    "FacetProfile",
    "InexactTruncationError",
    "IrrationalFactorError",
    "IterationCapError",
    "LctResult",
    "LctkitError",
    "NewtonPolygon",
    "NonFiniteMultiplicityError",
    "NormalizationError",
    "ParseError",
    "SparsePoly",
    "SubstitutionStep",
    "UPPER_BOUND",
    "WeightVector",
    "determinacy_truncation_degree",
    "diagonal_data",
    "discrepancy",
    "distance_nd",
    "equality_certificate_2d",
    "facet_profile",
    "intersection_multiplicity",
    "is_newton_nondegenerate",
    "is_normalised",
    "is_weakly_normalised",
    "lct",
    "lct_bracket",
    "lct_product_sum",
    "leading_term",
    "milnor_number",
    "newton_polygon",
    "normalize",
    "parse",
    "rational_repeated_factors",
    "saturate",
    "squarefree_decompose",
    "substitute",
    "truncate",
    "weight",
    "weight_bound",
]
