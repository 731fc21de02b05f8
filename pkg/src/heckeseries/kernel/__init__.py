"""Exact arithmetic: Laurent polynomials in p, rational functions in p,
multivariate polynomials and symmetric polynomials in the partition basis."""
from .errors import InexactDivision, KernelError, SymmetryViolation, UsageError
from .laurent import LaurentP, ONE, P, ZERO, p_pow
from .multipoly import MultiPoly, multi_divexact, vandermonde
from .ratfn import RatFnP
from .sympoly import (
    SymPoly,
    e_n_power,
    orbit,
    orbit_size,
    sym_expand,
    sym_from_multi,
    sym_invert_variables,
    sym_mul,
    sym_set_last_zero,
    sym_substitute,
)

__all__ = [
    "InexactDivision", "KernelError", "SymmetryViolation", "UsageError",
    "LaurentP", "ONE", "P", "ZERO", "p_pow",
    "MultiPoly", "multi_divexact", "vandermonde",
    "RatFnP",
    "SymPoly", "e_n_power", "orbit", "orbit_size", "sym_expand", "sym_from_multi",
    "sym_invert_variables", "sym_mul", "sym_set_last_zero", "sym_substitute",
]
