"""Search for toric Groebner degenerations to a given Stanley-Reisner scheme."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from ..core.ring import grevlex, weight
from ..errors import BudgetExceeded, NonGenericWeight, VertexCountMismatch
from ..groebner.ideal import Ideal, initial_ideal
from ..simplicial import SimplicialComplex, complex_from_squarefree, complexes_isomorphic, sr_ideal
from .polytope import LatticePolytope, lattice_points, toric_ideal
from .triangulation import Triangulation, is_unimodular, pulling_heights, pulling_triangulation

log = logging.getLogger(__name__)


@dataclass
class Degeneration:
    triangulation: Triangulation
    heights: list
    bijection: dict
    initial_ideal: Ideal
    order: list
    attempts: int


def verify_initial_ideal(I_A: Ideal, T: Triangulation, heights: list) -> Ideal | None:
    """The weight initial ideal of ``I_A``, if it equals the SR ideal of ``T``."""
    ring = I_A.ring
    K = T.complex(list(ring.variables))
    SR = sr_ideal(K, ring)
    lo = min(heights)
    w = [h - lo for h in heights]
    init = initial_ideal(I_A, weight(w, grevlex()))
    got = {next(iter(g.terms)) for g in init.generators}
    want = {next(iter(g.terms)) for g in SR.generators}
    return init if got == want else None


def find_degeneration(P, target: SimplicialComplex, budget: int = 200, seed: int = 0,
                      toric: Ideal | None = None) -> Degeneration:
    """Find a regular unimodular triangulation of ``P`` isomorphic to ``target``.

    Pulling triangulations over seeded random point orders are tried; a hit is
    confirmed by comparing the weight initial ideal of the toric ideal with
    the Stanley-Reisner ideal.  Raises :class:`BudgetExceeded` when nothing
    is found, which says nothing about existence.
    """
    pts = lattice_points(P) if isinstance(P, LatticePolytope) else [tuple(p) for p in P]
    if len(target.vertices) != len(pts):
        raise VertexCountMismatch(
            f"target has {len(target.vertices)} vertices, polytope has {len(pts)} lattice points")
    rng = random.Random(seed)
    order = list(range(len(pts)))
    seen: set = set()
    I_A = toric
    for attempt in range(1, budget + 1):
        if attempt > 1:
            rng.shuffle(order)
        T = pulling_triangulation(pts, order)
        if T.simplices in seen:
            continue
        seen.add(T.simplices)
        if not is_unimodular(pts, T):
            continue
        bij = complexes_isomorphic(T.complex(), target)
        if bij is None:
            continue
        heights = pulling_heights(T, order)
        if I_A is None:
            I_A = toric_ideal(pts)
        init = verify_initial_ideal(I_A, T, heights)
        if init is None:
            log.warning("initial ideal mismatch for order %s", order)
            continue
        log.info("degeneration found after %d attempts", attempt)
        return Degeneration(T, heights, bij, init, list(order), attempt)
    raise BudgetExceeded(f"no degeneration to the target within {budget} pulling orders")


@dataclass
class InitialDegeneration:
    order: object
    initial_ideal: Ideal
    bijection: dict
    attempts: int


def _squarefree(I: Ideal) -> bool:
    return all(g.is_monomial() and max(next(iter(g.terms))) <= 1 for g in I.generators)


def find_initial_degeneration(I: Ideal, target: SimplicialComplex, budget: int = 200,
                              seed: int = 0, max_weight: int = 30) -> InitialDegeneration:
    """Find a term order whose initial ideal of ``I`` is ``sr_ideal(target)`` up to relabeling.

    Tries grevlex first, then seeded random weight vectors with grevlex
    tiebreak.  Raises :class:`BudgetExceeded` when nothing is found.
    """
    ring = I.ring
    if len(target.vertices) != ring.nvars:
        raise VertexCountMismatch(
            f"target has {len(target.vertices)} vertices, ring has {ring.nvars} variables")
    rng = random.Random(seed)
    seen: set = set()
    for attempt in range(1, budget + 1):
        if attempt == 1:
            order = grevlex()
        else:
            order = weight([rng.randint(0, max_weight) for _ in range(ring.nvars)])
        try:
            init = initial_ideal(I, order)
        except NonGenericWeight:
            continue
        key = frozenset(next(iter(g.terms)) for g in init.generators if g.is_monomial())
        if key in seen or not _squarefree(init):
            seen.add(key)
            continue
        seen.add(key)
        bij = complexes_isomorphic(complex_from_squarefree(init), target)
        if bij is not None:
            log.info("initial degeneration found after %d orders", attempt)
            return InitialDegeneration(order, init, bij, attempt)
    raise BudgetExceeded(f"no square-free initial ideal matching the target within {budget} orders")
