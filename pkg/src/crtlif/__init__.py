"""Chinese remaindering and Lagrange interpolation over Z, Z/nZ and (Z/nZ)[t]."""
from .crt import (
    CongruenceSystem,
    CoprimeViolation,
    CrtSolution,
    IdempotentBasis,
    bezout_split,
    idempotent_basis,
    pairwise_coprime,
    solve_crt,
    solve_crt_general,
    verify_solution,
)
from .errors import (
    CrtLifError,
    EmptyInput,
    Inconsistent,
    LimitExceeded,
    ModulusMismatch,
    NonPositiveModulus,
    NotCoprime,
    NotInvertible,
    NotMonic,
    NotUnitDifference,
)
from .interp import (
    PointSet,
    UnitViolation,
    check_unit_differences,
    ideal_bezout_pair,
    ideal_idempotents,
    interpolate_via_crt,
    lagrange_basis,
    lagrange_interpolate,
)
from .lifcrt import (
    IntPolynomial,
    build_crt_polynomial,
    crt_via_interpolation,
    interpolation_multipliers,
)
from .poly import (
    Polynomial,
    expand_from_roots,
    monic_divmod,
    poly_add,
    poly_eval,
    poly_mul,
    roots_mod_n,
)
from .ring import ExtGcdResult, Residue, extended_gcd, is_unit, mod_inverse, residue_normalize

__version__ = "0.1.0"
