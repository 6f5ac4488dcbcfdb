"""Exact q-series arithmetic and determinant formulas for the partition function."""

from .determinants import (
    DetProblem,
    build_eq1,
    build_mod7,
    det,
    det_eval_literal,
    det_eval_recurrence,
    leading_minors,
)
from .general import ModulusPlan, build_general, d_full, d_full_float, modulus_plan, z_general
from .oracle import PartitionTable, p_bruteforce, p_euler, partition_number
from .report import VerificationReport
from .series import (
    IntPolynomial,
    NotInvertibleError,
    TruncatedIntSeries,
    TruncationError,
    add,
    decimate,
    etaq,
    inflate,
    invert,
    mul,
    neg,
    poly_add,
    poly_eval_series,
    poly_mul,
    pow_series,
    scale,
    shift,
    sub,
)
from .seven import (
    CDTable,
    HSet,
    JTriple,
    cd_table,
    h_closed,
    h_from_c,
    j_closed,
    j_decimated,
    verify_identities,
    z_series_7,
)

__version__ = "0.1.0"
