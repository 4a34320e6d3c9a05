"""Adapted Modular Number System (AMNS) for a fixed prime modulus.

Residues mod p are carried as degree-(n-1) polynomials evaluated at a fixed
root gamma of X^n - lambda, with small signed coefficients. Multiplication
reduces coefficients with a Montgomery-style step driven by a short lattice
vector M and its negated inverse M' mod (X^n - lambda, 2^k).

The package generates full parameter sets for any odd prime p > 3 and
performs the runtime arithmetic, conversions, and masked conversions, all
validated against plain big-integer modular arithmetic.
"""

from .arith import (
    AmnsElement,
    amns_add,
    amns_mul,
    dpa_from_amns,
    dpa_to_amns,
    from_amns_horner,
    from_amns_powers,
    mont_one,
    red_coeff,
    to_amns_m1,
    to_amns_m2,
)
from .errors import (
    AccumulatorOverflowError,
    AmnsError,
    DepthBudgetError,
    GammaUnavailableError,
    InfeasibleBoundsError,
    InternalInvariantError,
    ParamFileError,
    SearchBoundError,
)
from .gen import EnumConfig, GeneratedAmns, enumerate_lambda, generate, omega, precompute_tables
from .modmath import PrimeField
from .system import AmnsSystem, PrecompTables, VerifyReport, verify_system

__version__ = "0.1.0"

__all__ = [
    "AccumulatorOverflowError",
    "AmnsElement",
    "AmnsError",
    "AmnsSystem",
    "DepthBudgetError",
    "EnumConfig",
    "GammaUnavailableError",
    "GeneratedAmns",
    "InfeasibleBoundsError",
    "InternalInvariantError",
    "ParamFileError",
    "PrecompTables",
    "PrimeField",
    "SearchBoundError",
    "VerifyReport",
    "amns_add",
    "amns_mul",
    "dpa_from_amns",
    "dpa_to_amns",
    "enumerate_lambda",
    "from_amns_horner",
    "from_amns_powers",
    "generate",
    "mont_one",
    "omega",
    "precompute_tables",
    "red_coeff",
    "to_amns_m1",
    "to_amns_m2",
    "verify_system",
]
