"""Exact kernels: scalars, sparse polynomials, truncated series, Groebner bases, ranks."""

from .groebner import (
    Budget,
    BudgetExceeded,
    groebner_basis,
    ideal_contains,
    ideal_contains_one,
    is_groebner,
    normal_form,
    quotient_dimension,
    staircase,
)
from .linalg import exact_rank, in_span, nullspace, sparse_rank, transpose
from .order import DEGREVLEX, LEX, MonomialOrder
from .poly import (
    QQ,
    QQ_SQRT2,
    CoefficientFieldMismatch,
    MultiPoly,
    PolyRing,
    SubstitutionError,
    derivative,
    evaluate,
    poly_substitute,
)
from .scalars import SQRT2, CycElt, CyclotomicField, Sqrt2Elt, cyclotomic_field, cyclotomic_polynomial
from .series import TruncatedSeries, series_inv_sqrt, truncate

__all__ = [
    "Budget", "BudgetExceeded", "groebner_basis", "ideal_contains", "ideal_contains_one", "is_groebner",
    "normal_form", "quotient_dimension", "staircase", "exact_rank", "in_span", "nullspace", "sparse_rank",
    "transpose", "DEGREVLEX", "LEX", "MonomialOrder", "QQ", "QQ_SQRT2", "CoefficientFieldMismatch",
    "MultiPoly", "PolyRing", "SubstitutionError", "poly_substitute", "derivative", "evaluate", "SQRT2",
    "CycElt", "CyclotomicField", "Sqrt2Elt", "cyclotomic_field", "cyclotomic_polynomial", "TruncatedSeries", "series_inv_sqrt", "truncate",
]
