"""Exact generating functions for residue-class coefficient sums of Laurent polynomial powers.

The core objects: LaurentPoly (the base polynomial P), ResidueSolution (the
family of rational generating functions of A(n, k, a), the mod-k
coefficient sums of P**n), LinearRecurrence (the induced C-finite
descriptions), Tale (recorded misleading inductions), and DieSpec (the
probabilistic reading where P encodes a loaded die). Everything runs over
exact rationals.
"""

from .cfinite import (
    EqualityVerdict,
    LinearRecurrence,
    fibonacci,
    fit_recurrence,
    growth_rate_estimate,
    recurrence_from_gf,
    verify_equal,
)
from .dice import DieSpec, break_even_prob, die_poly, modular_prob_gf
from .errors import (
    DimensionMismatchError,
    DomainError,
    InsufficientDataError,
    InternalConsistencyError,
    ModgfError,
    NotSymmetricError,
    ParseError,
    SingularMatrixError,
)
from .laurent import TRINOMIAL, LaurentPoly, parse_laurent
from .ratfun import (
    Poly,
    RationalFunction,
    SystemSolution,
    poly_gcd,
    poly_series,
    rf_normalize,
    solve_linear_system,
)
from .residues import (
    ResidueSolution,
    fold_residues,
    recurrence_of,
    residue_gfs,
    residue_gfs_symmetric,
    residue_sum,
)
from .tales import GeorgeReport, Tale, euler_tale, find_tale, george_check, search_tale

__version__ = "0.1.0"

__all__ = [
    "DieSpec",
    "DimensionMismatchError",
    "DomainError",
    "EqualityVerdict",
    "GeorgeReport",
    "InsufficientDataError",
    "InternalConsistencyError",
    "LaurentPoly",
    "LinearRecurrence",
    "ModgfError",
    "NotSymmetricError",
    "ParseError",
    "Poly",
    "RationalFunction",
    "ResidueSolution",
    "SingularMatrixError",
    "SystemSolution",
    "Tale",
    "TRINOMIAL",
    "break_even_prob",
    "die_poly",
    "euler_tale",
    "fibonacci",
    "find_tale",
    "fit_recurrence",
    "fold_residues",
    "george_check",
    "growth_rate_estimate",
    "modular_prob_gf",
    "parse_laurent",
    "poly_gcd",
    "poly_series",
    "recurrence_from_gf",
    "recurrence_of",
    "residue_gfs",
    "residue_gfs_symmetric",
    "residue_sum",
    "rf_normalize",
    "search_tale",
    "solve_linear_system",
    "verify_equal",
]
