"""Exact generalized inverses and matrix partial orders over Q, Q(i) and Z_p."""

from .errors import (
    ConfigError,
    DomainError,
    NotInvertible,
    OracleInfeasible,
    ParseError,
    ShapeError,
    UnknownProperty,
    WCoreError,
)
from .geninv import (
    GenInvKind,
    GenInvResult,
    InverseDoesNotExist,
    compute,
    core_inverse,
    exists,
    general_inner_inverse,
    group_inverse,
    inner_inverse,
    inverse_along,
    is_ep,
    moore_penrose,
    one_four_inverse,
    one_three_inverse,
    reflexive_inverse,
    w_core_inverse,
    w_core_via_product,
)
from .matrix import Matrix, identity, rank, rank_factorization, rref, solve_left, solve_right, star, zeros
from .orders import OrderKind, OrderReport, PreconditionUnmet, order_holds
from .scalar import GAUSSIAN_RATIONALS, RATIONAL_FIELD, ScalarDomain, mod_p, parse_scalar, render_scalar

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "DomainError", "NotInvertible", "OracleInfeasible", "ParseError",
    "ShapeError", "UnknownProperty", "WCoreError",
    "GenInvKind", "GenInvResult", "InverseDoesNotExist", "compute", "core_inverse", "exists",
    "general_inner_inverse", "group_inverse", "inner_inverse", "inverse_along", "is_ep",
    "moore_penrose", "one_four_inverse", "one_three_inverse", "reflexive_inverse",
    "w_core_inverse", "w_core_via_product",
    "Matrix", "identity", "rank", "rank_factorization", "rref", "solve_left", "solve_right",
    "star", "zeros",
    "OrderKind", "OrderReport", "PreconditionUnmet", "order_holds",
    "GAUSSIAN_RATIONALS", "RATIONAL_FIELD", "ScalarDomain", "mod_p", "parse_scalar", "render_scalar",
]
