"""Degree-0 cotangent cohomology, lifting and obstruction calculus."""
from .cohomology import (
    NormalModule,
    ObstructionSpace,
    TangentVector,
    normal_module_dim,
    obstruction_space,
    t1_dim,
    t2_dim,
)
from .lift import LiftResult, lift_one_parameter, verify_flat_fiber
from .obstruction import (
    CupProduct,
    Monomialization,
    ObstructionData,
    linear_factors,
    monomialize,
    quadratic_obstructions,
)

__all__ = [
    "CupProduct",
    "LiftResult",
    "Monomialization",
    "NormalModule",
    "ObstructionData",
    "ObstructionSpace",
    "TangentVector",
    "linear_factors",
    "lift_one_parameter",
    "monomialize",
    "normal_module_dim",
    "obstruction_space",
    "quadratic_obstructions",
    "t1_dim",
    "t2_dim",
    "verify_flat_fiber",
]
