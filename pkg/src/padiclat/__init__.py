"""Exact computations with lattices over Q_p and F_p((T)).

Scalars stay in the computable dense subfields Q and F_p(T), absolute
values are exact elements of p^Q, and every lattice-level result
(orthogonal bases, duals, successive maxima, theorem reports) is an
exact value, never a float.
"""

from .absval import AbsValue
from .field import FieldDesc, FieldKind, Scalar, ScalarParseError, is_prime
from .gfpoly import Poly, RatFunc, poly_gcd, poly_to_str
from .linalg import Matrix, SingularMatrixError
from .lattice import (
    BasisOp,
    IllegalOpError,
    Lattice,
    OrthogonalBasis,
    OrthogonalityResult,
    RankDeficientError,
    Scale,
    Shear,
    SingularGramError,
    Swap,
    apply_basis_op,
    coefficient_representatives,
    det_abs,
    dual,
    is_orthogonal_basis,
    orthogonalize,
    same_lattice,
    successive_maxima,
)
from .norms import NormSpec
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    Resolution,
    default_resolution,
    enumerate_maxima,
    exhaustive_orthogonality,
)
from .verify import (
    InputNotOrthogonalError,
    MinkowskiReport,
    TransferenceReport,
    counterexample_rank1,
    dual_orthogonality_check,
    minkowski_report,
    random_lattice,
    random_scalar,
    random_unit,
    random_weight_exponents,
    transference_report,
)

__version__ = "0.1.0"

__all__ = [
    "AbsValue",
    "BasisOp",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "FieldDesc",
    "FieldKind",
    "IllegalOpError",
    "InputNotOrthogonalError",
    "Lattice",
    "Matrix",
    "MinkowskiReport",
    "NormSpec",
    "OrthogonalBasis",
    "OrthogonalityResult",
    "Poly",
    "RankDeficientError",
    "RatFunc",
    "Resolution",
    "Scalar",
    "ScalarParseError",
    "Scale",
    "Shear",
    "SingularGramError",
    "SingularMatrixError",
    "Swap",
    "TransferenceReport",
    "apply_basis_op",
    "coefficient_representatives",
    "counterexample_rank1",
    "default_resolution",
    "det_abs",
    "dual",
    "dual_orthogonality_check",
    "enumerate_maxima",
    "exhaustive_orthogonality",
    "is_orthogonal_basis",
    "is_prime",
    "minkowski_report",
    "orthogonalize",
    "poly_gcd",
    "poly_to_str",
    "random_lattice",
    "random_scalar",
    "random_unit",
    "random_weight_exponents",
    "same_lattice",
    "successive_maxima",
    "transference_report",
]
