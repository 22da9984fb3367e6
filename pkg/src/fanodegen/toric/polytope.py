"""Lattice polytopes, their lattice points and toric ideals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from ..core.ring import PolyRing
from ..errors import DegeneratePointConfiguration
from ..groebner.ideal import DEFAULT_MAX_PAIRS, Ideal, eliminate


# --------------------------------------------------------------------------
# small exact linear algebra


def rank(rows: Sequence[Sequence]) -> int:
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    r = 0
    ncols = len(M[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def det(rows: Sequence[Sequence]) -> Fraction:
    M = [[Fraction(x) for x in r] for r in rows]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def solve(A: Sequence[Sequence], b: Sequence) -> list | None:
    """Unique solution of a square system, or ``None`` if singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [a / p for a in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def affine_dimension(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]]) if len(points) > 1 else 0


def affine_coordinates(points: Sequence[Sequence]) -> list:
    """Coordinates of the points in an affine basis of their affine hull."""
    p0 = points[0]
    diffs = [[Fraction(a - b) for a, b in zip(p, p0)] for p in points]
    basis: list = []
    for v in diffs:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
    k = len(basis)
    if k == 0:
        return [[] for _ in points]
    # solve v = sum c_j basis_j via normal equations on a pivot subset of coordinates
    cols = []
    for c in range(len(p0)):
        if rank([[b[j] for j in cols + [c]] for b in basis]) > len(cols):
            cols.append(c)
        if len(cols) == k:
            break
    A = [[basis[j][c] for j in range(k)] for c in cols]
    return [solve(A, [v[c] for c in cols]) for v in diffs]


def hyperplane_through(points: Sequence[Sequence]) -> tuple[list, Fraction]:
    """Normal ``a`` and offset ``b`` of the hyperplane ``a.x = b`` through d points in R^d."""
    d = len(points[0])
    p0 = points[0]
    rows = [[Fraction(a - b) for a, b in zip(p, p0)] for p in points[1:]]
    normal = []
    for i in range(d):
        minor = [[r[j] for j in range(d) if j != i] for r in rows]
        normal.append((-1) ** i * det(minor) if d > 1 else Fraction(1))
    b = sum(n * x for n, x in zip(normal, p0))
    return normal, b


def facets_of(points: Sequence[Sequence]) -> list:
    """Facets of ``conv(points)`` in its affine hull, as frozensets of point indices."""
    coords = affine_coordinates(points)
    k = len(coords[0])
    if k == 0:
        return []
    if k == 1:
        xs = [c[0] for c in coords]
        lo, hi = min(xs), max(xs)
        return [frozenset(i for i, x in enumerate(xs) if x == lo),
                frozenset(i for i, x in enumerate(xs) if x == hi)]
    found = set()
    n = len(coords)
    for S in combinations(range(n), k):
        sub = [coords[i] for i in S]
        if affine_dimension(sub) != k - 1:
            continue
        a, b = hyperplane_through(sub)
        vals = [sum(x * y for x, y in zip(a, c)) - b for c in coords]
        if all(v <= 0 for v in vals) or all(v >= 0 for v in vals):
            found.add(frozenset(i for i, v in enumerate(vals) if v == 0))
    return sorted(found, key=sorted)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integer vertices; the vertex list is made irredundant."""

    vertices: tuple

    def __init__(self, vertices: Sequence[Sequence[int]]):
        pts = sorted({tuple(int(x) for x in v) for v in vertices})
        if not pts:
            raise DegeneratePointConfiguration("polytope needs at least one vertex")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise ValueError("vertices have different lengths")
        if affine_dimension(pts) != d:
            raise DegeneratePointConfiguration(f"vertices do not span R^{d}")
        object.__setattr__(self, "vertices", tuple(_extreme(pts)))

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    def inequalities(self) -> list:
        """Facet inequalities ``a.x <= b`` with integer ``a``."""
        out = []
        for F in facets_of(self.vertices):
            sub = [self.vertices[i] for i in sorted(F)]
            # pick d affinely independent points on the facet
            basis = [sub[0]]
            for p in sub[1:]:
                if affine_dimension(basis + [p]) > affine_dimension(basis):
                    basis.append(p)
            a, b = hyperplane_through(basis)
            if any(sum(x * y for x, y in zip(a, v)) > b for v in self.vertices):
                a, b = [-x for x in a], -b
            out.append((a, b))
        return out

    def contains(self, p: Sequence) -> bool:
        return all(sum(x * y for x, y in zip(a, p)) <= b for a, b in self.inequalities())

    def lattice_points(self) -> list:
        return lattice_points(self)

    def normalized_volume(self) -> int:
        """``d!`` times the Euclidean volume."""
        from .triangulation import pulling_triangulation

        T = pulling_triangulation(self)
        return sum(T.simplex_volume(s) for s in T.simplices)


def _extreme(pts: list) -> list:
    """Drop points that are not vertices of the hull."""
    if len(pts) <= len(pts[0]) + 1:
        return pts
    keep = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not _in_hull(p, others):
            keep.append(p)
    return keep


def _in_hull(p, pts) -> bool:
    d = len(p)
    if affine_dimension(pts) < d:
        # in a lower dimensional hull only if in the same affine span
        if affine_dimension(pts + [p]) > affine_dimension(pts):
            return False
    for F in facets_of(pts):
        sub = [pts[i] for i in sorted(F)]
        basis = [sub[0]]
        for q in sub[1:]:
            if affine_dimension(basis + [q]) > affine_dimension(basis):
                basis.append(q)
        if len(basis) < d:
            continue
        a, b = hyperplane_through(basis)
        sgn = [sum(x * y for x, y in zip(a, v)) - b for v in pts]
        side = 1 if max(sgn) > 0 else -1
        if side * (sum(x * y for x, y in zip(a, p)) - b) > 0:
            return False
    return True


def lattice_points(P: LatticePolytope) -> list:
    """All integer points of ``P`` in lexicographic order."""
    d = P.dimension
    lo = [min(v[i] for v in P.vertices) for i in range(d)]
    hi = [max(v[i] for v in P.vertices) for i in range(d)]
    ineqs = P.inequalities()
    out = []
    for p in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if all(sum(x * y for x, y in zip(a, p)) <= b for a, b in ineqs):
            out.append(tuple(p))
    return out


def toric_ideal(points: Sequence[Sequence[int]], names: Sequence[str] | None = None,
                max_pairs: int | None = DEFAULT_MAX_PAIRS) -> Ideal:
    """Kernel of ``x_u -> s * t^(u + c)``, by elimination of ``s`` and ``t``.

    ``c`` translates the points into the nonnegative orthant.  Variables are
    ``x0, x1, ...`` in point order unless ``names`` are given.
    """
    pts = [tuple(p) for p in points]
    d = len(pts[0])
    shift = [-min(0, min(p[i] for p in pts)) for i in range(d)]
    names = list(names) if names else [f"x{i}" for i in range(len(pts))]
    tnames = [f"_t{i}" for i in range(d)] + ["_s"]
    ring = PolyRing(tnames + names)
    gens = []
    for name, p in zip(names, pts):
        e = [p[i] + shift[i] for i in range(d)] + [1] + [0] * len(names)
        gens.append(ring.gen(name) - ring.monomial(e))
    res = eliminate(Ideal(ring, gens), tnames, max_pairs=max_pairs)
    return res
