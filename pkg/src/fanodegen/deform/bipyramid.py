"""Deformations of the cone over the hexagonal bipyramid.

The hexagon vertices are ``x1..x6`` in cyclic order, the two apexes
``y1, y2`` and the cone point ``y0``.  The deformation parameters are
``s1..s6``, ``t{i}_{j}`` (``i = 1..6``, ``j = 0, 1, 2``), ``a1..a6``,
``b1..b6`` and ``c0..c6``.  The functions here build the obstruction
quadrics in the ``t`` parameters, the ideals of the four components of
their vanishing locus, and fibers of the explicit family over rational
points of the two determinantal components.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from ..core.poly import Polynomial
from ..core.ring import PolyRing
from ..groebner.ideal import Ideal

SPACE_VARS = ["x1", "x2", "x3", "x4", "x5", "x6", "y0", "y1", "y2"]
T_VARS = [f"t{i}_{j}" for i in range(1, 7) for j in range(3)]


def t_ring() -> PolyRing:
    return PolyRing(T_VARS)


def space_ring() -> PolyRing:
    return PolyRing(SPACE_VARS)


def _w(i: int) -> int:
    """Hexagon index modulo six, in ``1..6``."""
    return (i - 1) % 6 + 1


def _t(R: PolyRing, i: int, j: int) -> Polynomial:
    return R.gen(f"t{_w(i)}_{j}")


def fifteen_quadrics(R: PolyRing | None = None) -> list:
    """Lowest-order obstruction equations in the ``t`` parameters."""
    R = R or t_ring()
    out = []
    for i in (1, 2, 3):
        for j in range(3):
            out.append(_t(R, i + 1, j) * _t(R, i + 2, j) - _t(R, i - 1, j) * _t(R, i - 2, j))
    for i in (1, 2, 3):
        for j in (1, 2):
            out.append(_t(R, i + 1, j) * _t(R, i + 2, 0) + _t(R, i + 1, 0) * _t(R, i + 2, j)
                       - _t(R, i - 1, j) * _t(R, i - 2, 0) - _t(R, i - 1, 0) * _t(R, i - 2, j))
    return out


def _minors(M: list) -> list:
    out = []
    for r1, r2 in combinations(range(len(M)), 2):
        for c1, c2 in combinations(range(len(M[0])), 2):
            m = M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1]
            if m:
                out.append(m)
    return out


def _blocks(R: PolyRing, rows: list) -> list:
    return [[_t(R, i, j) for i in row for j in range(3)] for row in rows]


Z97_ROWS = [(1, 4), (3, 6), (5, 2)]
Z99_ROWS = [(1, 3, 5), (4, 6, 2)]


def z97(R: PolyRing | None = None) -> Ideal:
    """2x2 minors of the 3x6 matrix with rows ``t1 t4 | t3 t6 | t5 t2``."""
    R = R or t_ring()
    return Ideal(R, _minors(_blocks(R, Z97_ROWS)))


def z99(R: PolyRing | None = None) -> Ideal:
    """2x2 minors of the 2x9 matrix with rows ``t1 t3 t5 | t4 t6 t2``."""
    R = R or t_ring()
    return Ideal(R, _minors(_blocks(R, Z99_ROWS)))


def z98(k: int, R: PolyRing | None = None) -> Ideal:
    """The thirty quadrics of the component indexed by ``k`` in ``{1, 2}``."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    l = 3 - k
    R = R or t_ring()
    t = lambda i, j: _t(R, i, j)  # noqa: E731
    out = []
    for i in (1, 2, 3):
        for j in range(3):
            out.append(t(i + 1, j) * t(i + 2, j) - t(i - 1, j) * t(i - 2, j))
    for i in range(1, 7):
        out.append(t(i + 1, k) * t(i - 1, 0) - t(i + 1, 0) * t(i - 1, k))
    for i in range(1, 7):
        out.append(t(i + 1, k) * t(i + 2, 0) - t(i - 1, k) * t(i - 2, 0))
    for i in (1, 2, 3):
        out.append(t(i, l) * t(i + 1, 0) - t(i + 3, l) * t(i + 4, 0))
        out.append(t(i, l) * t(i - 1, 0) - t(i + 3, l) * t(i + 2, 0))
        out.append(t(i, l) * t(i + 3, 0) - t(i, 0) * t(i + 3, l))
    return Ideal(R, out)


def components(R: PolyRing | None = None) -> dict:
    R = R or t_ring()
    return {"Z97": z97(R), "Z99": z99(R), "Z98_1": z98(1, R), "Z98_2": z98(2, R)}


# --------------------------------------------------------------------------
# rational points


def _rank_one_point(rows: list, rng: random.Random, bound: int = 5) -> dict:
    width = 3 * len(rows[0])
    u = [Fraction(rng.randint(-bound, bound)) for _ in range(width)]
    point = {}
    for row in rows:
        lam = Fraction(rng.randint(-bound, bound))
        vals = iter(lam * x for x in u)
        for i in row:
            for j in range(3):
                point[f"t{i}_{j}"] = next(vals)
    return point


def random_point(component: str, rng: random.Random, s1_zero: bool = True, bound: int = 5) -> dict:
    """A rational point of ``Z97`` or ``Z99`` with random remaining parameters."""
    rows = {"Z97": Z97_ROWS, "Z99": Z99_ROWS}.get(component)
    if rows is None:
        raise ValueError(f"no rational parametrization for {component}")
    point = _rank_one_point(rows, rng, bound)
    r = lambda: Fraction(rng.randint(-bound, bound))  # noqa: E731
    for i in range(1, 7):
        point[f"s{i}"] = r()
        point[f"a{i}"] = r()
        point[f"b{i}"] = r()
    for j in range(7):
        point[f"c{j}"] = r()
    if s1_zero:
        point["s1"] = Fraction(0)
    return point


def series_values(point: dict) -> tuple[Fraction, Fraction]:
    """``(e, f)`` at a point, where ``f = p(s1...s6)`` with ``z p^4 = p + 1``.

    Only the vanishing product is handled exactly: there ``p = -1``, so
    ``f = -1`` and ``e = f / (f + 2) = -1``.
    """
    z = Fraction(1)
    for i in range(1, 7):
        z *= Fraction(point.get(f"s{i}", 0))
    if z != 0:
        raise ValueError("the series p is only evaluated exactly where s1*...*s6 = 0")
    f = Fraction(-1)
    return f / (f + 2), f


def family_fiber(point: dict, drop: str | None = None) -> Ideal:
    """The fiber of the explicit bipyramid family over ``point``.

    ``drop`` removes one correction term (``"cross"``, ``"square"`` or
    ``"quartic"`` in the hexagon-edge equations), for checking that flatness
    really depends on it.
    """
    R = space_ring()
    e, f = series_values(point)
    x = {i: R.gen(f"x{i}") for i in range(1, 7)}
    y = [R.gen(f"y{j}") for j in range(3)]
    P = lambda name: Fraction(point.get(name, 0))  # noqa: E731
    s = lambda i: P(f"s{_w(i)}")  # noqa: E731
    X = lambda i: x[_w(i)]  # noqa: E731

    def t(i):
        return sum((y[j] * P(f"t{_w(i)}_{j}") for j in range(3)), R.zero())

    gens = []
    for i in range(1, 7):
        g = X(i - 1) * X(i + 1) + (t(i) + X(i) * s(i)) * X(i)
        if drop != "cross":
            g += s(i + 3) * (t(i - 2) * t(i + 2) * e * e + t(i - 2) * X(i + 2) * (e * f * s(i + 2))
                             + t(i + 2) * X(i - 2) * (e * f * s(i - 2)))
        if drop != "square":
            h = t(i + 3) * e + X(i + 3) * (f * s(i + 3))
            g -= h * h * (s(i - 2) * s(i + 2))
        if drop != "quartic":
            g += t(i) * t(i) * (e * e * f * f * s(i - 2) * s(i - 1) * s(i + 1) * s(i + 2) * s(i + 3))
        gens.append(g)
    for i in (1, 2, 3):
        g = (X(i) * X(i + 3) + t(i + 1) * t(i + 2) * e
             + t(i + 2) * X(i + 1) * (e * s(i + 1)) + t(i + 1) * X(i + 2) * (e * s(i + 2))
             + X(i + 1) * X(i + 2) * (f * s(i + 1) * s(i + 2))
             + t(i - 2) * X(i - 1) * (e * s(i - 1)) + t(i - 1) * X(i - 2) * (e * s(i - 2))
             + X(i - 1) * X(i - 2) * (f * s(i - 1) * s(i - 2))
             - t(i) * t(i + 3) * (e * e * f * f * s(i - 2) * s(i - 1) * s(i + 1) * s(i + 2)))
        gens.append(g)
    g = y[1] * y[2] + y[0] * y[0] * P("c0")
    for i in range(1, 7):
        g += (X(i) * P(f"a{i}") + X(i + 1) * P(f"b{i}") + y[0] * P(f"c{i}")) * X(i)
    gens.append(g)
    return Ideal(R, gens)
