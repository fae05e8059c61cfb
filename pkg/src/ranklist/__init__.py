"""Rank-metric list-size bounds for Gabidulin codes, with constructive
witnesses and a brute-force oracle."""

from ranklist.bounds import (
    augot_loidreau_special,
    ball_volume,
    bmd_radius,
    bound_report,
    gaussian_binomial,
    lower_bound,
    tau_lb,
    upper_bound,
)
from ranklist.errors import (
    AmbientMismatch,
    BadParameters,
    BudgetExceeded,
    ContextMismatch,
    DegreeTooHigh,
    DependentPoints,
    DivisionByZero,
    LengthMismatch,
    NonDivisibleDegrees,
    RadiusTooLarge,
    RanklistError,
    VerificationFailed,
)
from ranklist.ffield import FieldContext, FieldElement, SubfieldEmbedding, embed, find_irreducible
from ranklist.fqlinalg import FqMatrix, Subspace, enumerate_subspaces, intersection_dim
from ranklist.gabidulin import GabidulinCode, RankVector, make_code, rank_distance, rank_weight
from ranklist.linpoly import LinearizedPoly, root_space, subspace_polynomial
from ranklist.witness import (
    Witness,
    build_witness,
    enumerate_annihilators,
    verify_witness,
    witness_code,
)

__version__ = "0.1.0"
