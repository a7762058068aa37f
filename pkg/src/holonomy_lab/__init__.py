"""Finite Moebius group actions, holonomy Lie algebra presentations,
exact flatness verification and numeric monodromy on orbit configuration
spaces of the sphere."""

from .cyclo import CycloNum, DivisionByZero, OrderMismatch
from .moebius import (
    FiniteGroupData,
    IdentityElement,
    MoebiusMap,
    ProjPoint,
    UnsupportedParams,
    build_group,
    group,
)

__all__ = [
    "CycloNum",
    "DivisionByZero",
    "OrderMismatch",
    "FiniteGroupData",
    "IdentityElement",
    "MoebiusMap",
    "ProjPoint",
    "UnsupportedParams",
    "build_group",
    "group",
]

__version__ = "0.1.0"
