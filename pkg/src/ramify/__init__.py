"""Ramification invariants, trace forms and arithmetic equivalence of number fields."""
from .arith import INFINITY, hilbert, legendre, nonresidue, valuation
from .equivalence import AlphaFingerprint, ComparisonReport, alpha_fingerprint, compare_fields
from .errors import (
    InternalConsistencyError,
    InvalidArgument,
    PolySyntaxError,
    RamifyError,
    ReduciblePolynomial,
    UndefinedInvariant,
    WildRamificationError,
)
from .field import NumberField, integral_basis, new_field, signature
from .invariants import RamificationInvariants, a_form, alpha, beta, classify, invariants, nu
from .parse import parse_poly, render_poly
from .polys import IntPoly, ModPoly, factor_mod_p
from .qforms import PAdicForm, diagonal_form, hasse_witt, isometric_zp, jordan_decompose
from .splitting import SplittingType, split_prime
from .trace import (
    TraceVerdict,
    predicted_local_trace,
    trace_genus_equal,
    trace_gram,
    verify_local_trace,
)

__all__ = [
    "INFINITY", "hilbert", "legendre", "nonresidue", "valuation",
    "AlphaFingerprint", "ComparisonReport", "alpha_fingerprint", "compare_fields",
    "InternalConsistencyError", "InvalidArgument", "PolySyntaxError", "RamifyError",
    "ReduciblePolynomial", "UndefinedInvariant", "WildRamificationError",
    "NumberField", "integral_basis", "new_field", "signature",
    "RamificationInvariants", "a_form", "alpha", "beta", "classify", "invariants", "nu",
    "parse_poly", "render_poly", "IntPoly", "ModPoly", "factor_mod_p",
    "PAdicForm", "diagonal_form", "hasse_witt", "isometric_zp", "jordan_decompose",
    "SplittingType", "split_prime",
    "TraceVerdict", "predicted_local_trace", "trace_genus_equal", "trace_gram", "verify_local_trace",
]
