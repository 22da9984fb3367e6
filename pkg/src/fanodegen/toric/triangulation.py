"""Triangulations of lattice point configurations.

A triangulation references points by index.  Regularity uses the lower-hull
convention: heights ``h`` induce the triangulation whose simplices are the
lower facets of the lifted points, and a weight order with weights ``h``
selects the matching Stanley-Reisner initial ideal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from ..errors import DegeneratePointConfiguration, NotATriangulation
from ..simplicial import SimplicialComplex, make_complex
from .lp import feasible_point
from .polytope import LatticePolytope, affine_dimension, det, facets_of, lattice_points, solve


@dataclass(frozen=True)
class Triangulation:
    points: tuple
    simplices: tuple

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    def simplex_volume(self, s) -> int:
        v0 = self.points[s[0]]
        rows = [[a - b for a, b in zip(self.points[i], v0)] for i in s[1:]]
        return abs(int(det(rows)))

    def used_points(self) -> set:
        return {i for s in self.simplices for i in s}

    def walls(self) -> dict:
        out: dict = {}
        for s in self.simplices:
            for W in combinations(s, len(s) - 1):
                out.setdefault(frozenset(W), []).append(s)
        return out

    def complex(self, labels: Sequence | None = None) -> SimplicialComplex:
        labels = list(labels) if labels else [f"x{i}" for i in range(len(self.points))]
        return make_complex([[labels[i] for i in s] for s in self.simplices], vertices=labels)


def _points_of(P) -> list:
    if isinstance(P, LatticePolytope):
        return lattice_points(P)
    return [tuple(p) for p in P]


def pulling_triangulation(P, order: Sequence[int] | None = None) -> Triangulation:
    """Pulling triangulation of the lattice points of ``P`` (or a point list).

    The earliest point of ``order`` in each face is coned over the pulling
    triangulations of the faces not containing it.
    """
    pts = _points_of(P)
    n = len(pts)
    d = len(pts[0])
    if affine_dimension(pts) != d:
        raise DegeneratePointConfiguration("points are not full dimensional")
    order = list(order) if order is not None else list(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("order must permute the point indices")
    rank = {p: i for i, p in enumerate(order)}

    @lru_cache(maxsize=None)
    def pull(S: frozenset) -> tuple:
        idx = sorted(S)
        sub = [pts[i] for i in idx]
        k = affine_dimension(sub)
        if len(idx) == k + 1:
            return (tuple(idx),)
        v = min(idx, key=rank.__getitem__)
        out = []
        for F in facets_of(sub):
            Fg = frozenset(idx[i] for i in F)
            if v in Fg:
                continue
            for s in pull(Fg):
                out.append(tuple(sorted(s + (v,))))
        return tuple(out)

    simplices = tuple(sorted(set(pull(frozenset(range(n))))))
    return Triangulation(tuple(pts), simplices)


def _barycentric(pts, simplex, q) -> list | None:
    d = len(q)
    A = [[pts[i][r] for i in simplex] for r in range(d)] + [[1] * len(simplex)]
    return solve(A, list(q) + [1])


def _check(T: Triangulation, P=None) -> list:
    """Validate ``T``; return the interior walls as ``(wall, simplex, opposite point)``."""
    pts = T.points
    d = T.dimension
    for s in T.simplices:
        if len(set(s)) != d + 1 or T.simplex_volume(s) == 0:
            raise NotATriangulation(f"simplex {s} is degenerate")
    ref = pulling_triangulation(list(pts))
    total = sum(ref.simplex_volume(s) for s in ref.simplices)
    if sum(T.simplex_volume(s) for s in T.simplices) != total:
        raise NotATriangulation("simplex volumes do not add up to the polytope volume")
    hull_facets = []
    for F in facets_of(list(pts)):
        hull_facets.append(F)
    interior = []
    for W, owners in T.walls().items():
        if len(owners) > 2:
            raise NotATriangulation(f"wall {sorted(W)} lies in {len(owners)} simplices")
        if len(owners) == 1:
            if not any(W <= F for F in hull_facets):
                raise NotATriangulation(f"wall {sorted(W)} is interior but has one simplex")
            continue
        s1, s2 = owners
        (a,) = set(s1) - W
        (q,) = set(s2) - W
        # a and q must lie on opposite sides of the wall
        wl = sorted(W)
        base = pts[wl[0]]
        rows = [[x - y for x, y in zip(pts[i], base)] for i in wl[1:]]
        da = det(rows + [[x - y for x, y in zip(pts[a], base)]])
        dq = det(rows + [[x - y for x, y in zip(pts[q], base)]])
        if da * dq >= 0:
            raise NotATriangulation(f"simplices {s1} and {s2} overlap")
        interior.append((W, s1, q))
    return interior


def _constraints(T: Triangulation, P=None) -> list:
    """Rows ``(coeffs)`` meaning ``sum coeffs_i h_i > 0`` for regularity."""
    pts = T.points
    rows = []
    for W, s1, q in _check(T, P):
        lam = _barycentric(pts, s1, pts[q])
        row = [Fraction(0)] * len(pts)
        row[q] += 1
        for i, l in zip(s1, lam):
            row[i] -= l
        rows.append(row)
    used = T.used_points()
    for p in range(len(pts)):
        if p in used:
            continue
        for s in T.simplices:
            lam = _barycentric(pts, s, pts[p])
            if lam is not None and all(l >= 0 for l in lam):
                row = [Fraction(0)] * len(pts)
                row[p] += 1
                for i, l in zip(s, lam):
                    row[i] -= l
                rows.append(row)
                break
    return rows


def is_unimodular(P, T: Triangulation) -> bool:
    _check(T, P)
    return all(T.simplex_volume(s) == 1 for s in T.simplices)


def is_regular(P, T: Triangulation, heights: Sequence | None = None) -> list | None:
    """Certified heights inducing ``T``, or ``None``.

    With ``heights`` the strict folding inequality is checked on every
    interior wall; without, heights are searched by exact LP.
    """
    rows = _constraints(T, P)
    if heights is not None:
        h = [Fraction(x) for x in heights]
        if len(h) != len(T.points):
            raise ValueError("one height per point required")
        ok = all(sum(c * x for c, x in zip(r, h)) > 0 for r in rows)
        return list(heights) if ok else None
    x = feasible_point(rows, [1] * len(rows))
    if x is None:
        return None
    # integral certificate
    from math import lcm

    den = 1
    for v in x:
        den = lcm(den, v.denominator)
    return [int(v * den) for v in x]


def pulling_heights(T: Triangulation, order: Sequence[int]) -> list:
    """Integer heights certifying a pulling triangulation (earliest point lowest)."""
    n = len(T.points)
    K = 2
    while K < 1 << 40:
        h = [0] * n
        for r, i in enumerate(order):
            h[i] = K ** n - K ** (n - r)
        if is_regular(None, T, h) is not None:
            return h
        K *= 2
    raise RuntimeError("no pulling heights found")
