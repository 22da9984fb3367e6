"""Lattice polytopes, toric ideals and triangulations."""
from .degenerate import Degeneration, find_degeneration, verify_initial_ideal
from .lp import feasible_point
from .polytope import LatticePolytope, lattice_points, toric_ideal
from .triangulation import (
    Triangulation,
    is_regular,
    is_unimodular,
    pulling_heights,
    pulling_triangulation,
)

__all__ = [
    "Degeneration", "find_degeneration", "verify_initial_ideal", "feasible_point",
    "LatticePolytope", "lattice_points", "toric_ideal", "Triangulation", "is_regular",
    "is_unimodular", "pulling_heights", "pulling_triangulation",
]
