import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanodegen.errors import BudgetExceeded, DegeneratePointConfiguration, VertexCountMismatch
from fanodegen.groebner.hilbert import hilbert_data
from fanodegen.simplicial import catalog_cone
from fanodegen.toric.degenerate import find_degeneration, verify_initial_ideal
from fanodegen.toric.lp import feasible_point
from fanodegen.toric.polytope import LatticePolytope, lattice_points, toric_ideal
from fanodegen.toric.triangulation import is_regular, is_unimodular, pulling_heights, pulling_triangulation

SIMPLEX4 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
CUBE = [(i, j, k) for i in (0, 1) for j in (0, 1) for k in (0, 1)]


def test_degree_four_simplex():
    P = LatticePolytope(SIMPLEX4)
    assert len(lattice_points(P)) == 5
    assert P.normalized_volume() == 4
    I = toric_ideal(lattice_points(P))
    assert len(I.generators) == 1
    g = I.generators[0]
    assert g.degree() == 4 and len(g) == 2
    D = find_degeneration(P, catalog_cone("T4"))
    assert is_unimodular(lattice_points(P), D.triangulation)


def test_cube_toric_ideal():
    I = toric_ideal(CUBE)
    H = hilbert_data(I)
    assert (H.dimension, H.degree) == (3, 6)
    assert all(g.degree() == 2 for g in I.generators)


def test_vertex_count_mismatch():
    with pytest.raises(VertexCountMismatch):
        find_degeneration(LatticePolytope(SIMPLEX4), catalog_cone("T5"))


def test_budget_exhaustion():
    # the cube has eight points; its triangulations are never T8 joined with a point
    with pytest.raises((BudgetExceeded, VertexCountMismatch)):
        find_degeneration(CUBE, catalog_cone("T7"), budget=5)


def test_flat_polytope_rejected():
    with pytest.raises(DegeneratePointConfiguration):
        LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0)])


def test_lp():
    x = feasible_point([[1, 1], [1, -1]], [1, 0])
    assert x is not None and x[0] + x[1] >= 1 and x[0] >= x[1] and min(x) >= 0
    assert feasible_point([[-1]], [1]) is None


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=4, max_size=8, unique=True),
       st.randoms(use_true_random=False))
def test_pulling_triangulations_are_regular(pts, rnd):
    try:
        P = LatticePolytope(pts)
    except DegeneratePointConfiguration:
        return
    allpts = lattice_points(P)
    order = list(range(len(allpts)))
    rnd.shuffle(order)
    T = pulling_triangulation(allpts, order)
    h = pulling_heights(T, order)
    assert is_regular(allpts, T, h) is not None
    assert sum(T.simplex_volume(s) for s in T.simplices) == P.normalized_volume()


def test_initial_ideal_matches_triangulation():
    pts = lattice_points(LatticePolytope(SIMPLEX4))
    origin = pts.index((0, 0, 0))
    order = [origin] + [i for i in range(len(pts)) if i != origin]
    T = pulling_triangulation(pts, order)
    h = pulling_heights(T, order)
    init = verify_initial_ideal(toric_ideal(pts), T, h)
    assert init is not None and init.is_monomial
