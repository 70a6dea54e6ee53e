"""Row-strict composition tableaux, RCT insertion and the LR rule for RS_alpha * s_lambda.

Everything is exact: tableaux are tuples of ints and polynomials have
Python-int coefficients.
"""

from .core import (
    InvalidTableauError,
    Violation,
    col_order_less,
    compositions,
    content,
    is_regular_reverse_lattice,
    is_reverse_lattice,
    partitions,
    reverse_partition,
    transpose,
)
from .lr import (
    IdentityReport,
    InvalidPairError,
    PairUT,
    PairVS,
    lr_coefficient,
    lr_coefficients,
    rho_forward,
    rho_inverse,
    verify_lr_identity,
)
from .qsym import (
    InconsistentExpansion,
    QPolynomial,
    expand_in_rs_basis,
    is_quasisymmetric,
    rs_polynomial,
    schur_decomposition_check,
    schur_polynomial,
)
from .rct import (
    RCT,
    InsertionResult,
    ScanTrace,
    enumerate_rcts,
    rct_insert,
    rct_insert_word,
    rct_uninsert,
    validate_rct,
)
from .skew import SkewFilling, enumerate_lr_skew, is_lr_skew, validate_lr_skew
from .tableaux import RRST, TwoLineArray, rsk_forward, rsk_inverse, t_lambda

__version__ = "0.1.0"

__all__ = [
    "IdentityReport", "InconsistentExpansion", "InsertionResult", "InvalidPairError",
    "InvalidTableauError", "PairUT", "PairVS", "QPolynomial", "RCT", "RRST", "ScanTrace",
    "SkewFilling", "TwoLineArray", "Violation", "col_order_less", "compositions", "content",
    "enumerate_lr_skew", "enumerate_rcts", "expand_in_rs_basis", "is_lr_skew",
    "is_quasisymmetric", "is_regular_reverse_lattice", "is_reverse_lattice", "lr_coefficient",
    "lr_coefficients", "partitions", "rct_insert", "rct_insert_word", "rct_uninsert",
    "reverse_partition", "rho_forward", "rho_inverse", "rs_polynomial",
    "schur_decomposition_check", "schur_polynomial", "rsk_forward", "rsk_inverse", "t_lambda",
    "transpose", "validate_lr_skew", "validate_rct", "verify_lr_identity",
]
