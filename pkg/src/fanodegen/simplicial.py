"""Simplicial complexes, Stanley-Reisner ideals and the sphere catalog."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core.poly import Polynomial
from .core.ring import PolyRing
from .errors import (
    EmptyInput,
    LabelCollision,
    NotSquareFreeMonomial,
    UnknownName,
    VariableCountMismatch,
)
from .groebner.ideal import Ideal
from .groebner.primes import minimal_vertex_covers


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets.  ``vertices`` fixes a variable order."""

    vertices: tuple
    facets: tuple

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> set:
        out = {frozenset()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(frozenset(c) for c in combinations(sorted(f, key=self._pos), k))
        return out

    def _pos(self, v):
        return self.vertices.index(v)

    def edges(self) -> set:
        out = set()
        for f in self.facets:
            for a, b in combinations(f, 2):
                out.add(frozenset((a, b)))
        return out

    def neighbors(self) -> dict:
        nb = {v: set() for v in self.vertices}
        for e in self.edges():
            a, b = tuple(e)
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def f_vector(self) -> list:
        c = Counter(len(f) for f in self.faces() if f)
        return [c[k] for k in range(1, self.dimension + 2)]

    def relabel(self, mapping: dict) -> "SimplicialComplex":
        return make_complex([[mapping[v] for v in f] for f in self.facets],
                            vertices=[mapping[v] for v in self.vertices])

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, self._sorted(f))) + "}" for f in self.facets)
        return f"[{body}]"

    def _sorted(self, f):
        return sorted(f, key=self._pos)


def make_complex(facets: Iterable[Iterable], vertices: Sequence | None = None) -> SimplicialComplex:
    """Canonical complex: inclusion-maximal facets, sorted by vertex position."""
    fs = [frozenset(f) for f in facets]
    fs = [f for f in fs if f]
    if not fs:
        raise EmptyInput("a complex needs at least one nonempty facet")
    if vertices is None:
        seen: list = []
        for f in facets:
            for v in f:
                if v not in seen:
                    seen.append(v)
        try:
            vertices = sorted(seen, key=_natural_key)
        except TypeError:
            vertices = seen
    vertices = tuple(vertices)
    used = set().union(*fs)
    missing = used - set(vertices)
    if missing:
        raise ValueError(f"facets use unknown vertices {sorted(map(str, missing))}")
    vertices = tuple(v for v in vertices if v in used)
    maximal = {f for f in fs if not any(f < g for g in fs)}
    pos = {v: i for i, v in enumerate(vertices)}
    ordered = sorted(maximal, key=lambda f: sorted(pos[v] for v in f))
    return SimplicialComplex(vertices, tuple(ordered))


def _natural_key(v):
    import re

    if isinstance(v, int):
        return ("", v)
    m = re.fullmatch(r"([A-Za-z_]*)(\d*)", str(v))
    if m:
        return (m.group(1), int(m.group(2)) if m.group(2) else -1)
    return (str(v), 0)


def simplex(labels: Sequence) -> SimplicialComplex:
    return make_complex([labels], vertices=labels)


def boundary_of_simplex(labels: Sequence) -> SimplicialComplex:
    labels = list(labels)
    return make_complex([c for c in combinations(labels, len(labels) - 1)], vertices=labels)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    common = set(K.vertices) & set(L.vertices)
    if common:
        raise LabelCollision(f"shared vertex labels {sorted(map(str, common))}")
    return make_complex([f | g for f in K.facets for g in L.facets],
                        vertices=K.vertices + L.vertices)


def cone(K: SimplicialComplex, apex="x0", front: bool = True) -> SimplicialComplex:
    """Join with a single point ``apex``."""
    pt = simplex([apex])
    J = join(K, pt)
    if front:
        return make_complex(J.facets, vertices=(apex,) + K.vertices)
    return J


# --------------------------------------------------------------------------
# Stanley-Reisner correspondence


def minimal_nonfaces(K: SimplicialComplex) -> list:
    faces = K.faces()
    verts = K.vertices
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    by_size: dict = {}
    for f in faces:
        by_size.setdefault(len(f), []).append(f)
    for k in range(1, K.dimension + 3):
        for f in by_size.get(k - 1, []):
            top = max((pos[v] for v in f), default=-1)
            for v in verts[top + 1:]:
                S = f | {v}
                if S in faces:
                    continue
                if all((S - {u}) in faces for u in S):
                    out.append(S)
    out.sort(key=lambda s: (len(s), sorted(pos[v] for v in s)))
    return out


def _vertex_variables(K: SimplicialComplex, ring: PolyRing | None) -> tuple[PolyRing, dict]:
    if ring is None:
        ring = PolyRing([str(v) for v in K.vertices])
    if ring.nvars != len(K.vertices):
        raise VariableCountMismatch(
            f"ring has {ring.nvars} variables but the complex has {len(K.vertices)} vertices")
    if all(str(v) in ring for v in K.vertices):
        mapping = {v: ring.index(str(v)) for v in K.vertices}
        if len(set(mapping.values())) == len(mapping):
            return ring, mapping
    return ring, {v: i for i, v in enumerate(K.vertices)}


def sr_ideal(K: SimplicialComplex, ring: PolyRing | None = None) -> Ideal:
    """Stanley-Reisner ideal: one square-free monomial per minimal non-face."""
    ring, mapping = _vertex_variables(K, ring)
    gens = []
    for S in minimal_nonfaces(K):
        e = [0] * ring.nvars
        for v in S:
            e[mapping[v]] = 1
        gens.append(ring.monomial(e))
    return Ideal(ring, gens)


def complex_from_squarefree(I: Ideal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is the square-free ideal ``I``."""
    ring = I.ring
    edges = []
    for g in I.generators:
        if not isinstance(g, Polynomial) or not g.is_monomial():
            raise NotSquareFreeMonomial(f"{g} is not a monomial")
        (e,) = g.terms
        if any(a > 1 for a in e):
            raise NotSquareFreeMonomial(f"{g} is not square-free")
        if sum(e) == 0:
            raise NotSquareFreeMonomial("unit ideal has no complex")
        edges.append(frozenset(i for i, a in enumerate(e) if a))
    n = ring.nvars
    if not edges:
        return simplex(list(ring.variables))
    covers = minimal_vertex_covers(edges)
    facets = [[ring.variables[i] for i in range(n) if i not in c] for c in covers]
    facets = [f for f in facets if f]
    return make_complex(facets, vertices=list(ring.variables))


# --------------------------------------------------------------------------
# sphere predicates


def valency_profile(K: SimplicialComplex) -> list:
    nb = K.neighbors()
    return sorted(len(nb[v]) for v in K.vertices)


def _connected(vertices, nb) -> bool:
    vertices = list(vertices)
    if not vertices:
        return True
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for w in nb[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def is_triangulated_two_sphere(K: SimplicialComplex) -> bool:
    if any(len(f) != 3 for f in K.facets):
        return False
    nb = K.neighbors()
    if not _connected(K.vertices, nb):
        return False
    edge_count = Counter()
    for f in K.facets:
        for a, b in combinations(f, 2):
            edge_count[frozenset((a, b))] += 1
    if any(c != 2 for c in edge_count.values()):
        return False
    for v in K.vertices:
        # link of v: edges opposite v in its facets, must form one cycle
        link = [f - {v} for f in K.facets if v in f]
        lnb: dict = {}
        for e in link:
            a, b = tuple(e)
            lnb.setdefault(a, set()).add(b)
            lnb.setdefault(b, set()).add(a)
        if any(len(s) != 2 for s in lnb.values()) or not _connected(lnb, lnb):
            return False
    V, E, F = len(K.vertices), len(edge_count), len(K.facets)
    return V - E + F == 2


# --------------------------------------------------------------------------
# catalog


def bipyramid(k: int) -> SimplicialComplex:
    """Suspension of a ``k``-gon: equator ``x1..xk``, apexes ``y1, y2``."""
    facets = []
    for i in range(k):
        a, b = f"x{i + 1}", f"x{(i + 1) % k + 1}"
        facets += [(a, b, "y1"), (a, b, "y2")]
    return make_complex(facets, vertices=[f"x{i + 1}" for i in range(k)] + ["y1", "y2"])


# eight vertices, valencies 4,4,4,4,5,5,5,5 (the snub disphenoid)
_T8 = [(1, 2, 7), (1, 2, 8), (1, 6, 7), (1, 6, 8), (2, 3, 4), (2, 3, 7), (2, 4, 8),
       (3, 4, 5), (3, 5, 7), (4, 5, 8), (5, 6, 7), (5, 6, 8)]


def _triaugmented_prism():
    # triangles a, b joined by three squares, each square coned off by c_i
    f = [(0, 1, 2), (3, 4, 5)]
    for i in range(3):
        j = (i + 1) % 3
        a_i, a_j, b_i, b_j, c = i, j, 3 + i, 3 + j, 6 + i
        f += [(a_i, a_j, c), (a_j, b_j, c), (b_j, b_i, c), (b_i, a_i, c)]
    return [[v + 1 for v in t] for t in f]


def _gyroelongated_square_bipyramid():
    # square antiprism p_i, q_i capped by apexes N = 9 and S = 10
    f = []
    for i in range(4):
        j = (i + 1) % 4
        p_i, p_j, q_i, q_j = 1 + i, 1 + j, 5 + i, 5 + j
        f += [(9, p_i, p_j), (10, q_i, q_j), (p_i, p_j, q_i), (p_j, q_j, q_i)]
    return f


def _labelled(facets, n) -> SimplicialComplex:
    names = {i: f"x{i}" for i in range(1, n + 1)}
    return make_complex([[names[v] for v in f] for f in facets],
                        vertices=[names[i] for i in range(1, n + 1)])


CATALOG_NAMES = ("T4", "T5", "T6", "T7", "T8", "T8'", "T9", "T10")


def catalog(name: str) -> SimplicialComplex:
    """Named triangulated 2-spheres.

    ``T4`` is the tetrahedron boundary on ``x1..x4``; ``T5..T7`` and ``T8'``
    are bipyramids over 3-, 4-, 5- and 6-gons with equator ``x1..xk`` and
    apexes ``y1, y2``; ``T8``, ``T9``, ``T10`` are the remaining deltahedra
    on ``x1..xi``.
    """
    key = name.replace("’", "'").strip()
    if key == "T4":
        return boundary_of_simplex(["x1", "x2", "x3", "x4"])
    if key == "T5":
        return bipyramid(3)
    if key == "T6":
        return bipyramid(4)
    if key == "T7":
        return bipyramid(5)
    if key == "T8'":
        return bipyramid(6)
    if key == "T8":
        return _labelled(_T8, 8)
    if key == "T9":
        return _labelled(_triaugmented_prism(), 9)
    if key == "T10":
        return _labelled(_gyroelongated_square_bipyramid(), 10)
    raise UnknownName(f"unknown complex {name!r}; expected one of {', '.join(CATALOG_NAMES)}")


def catalog_cone(name: str) -> SimplicialComplex:
    """``catalog(name)`` joined with a point: apex ``y0`` for bipyramids, else ``x0``."""
    K = catalog(name)
    if "y1" not in K.vertices:
        return cone(K, "x0")
    J = cone(K, "y0")
    verts = [v for v in K.vertices if v.startswith("x")] + ["y0", "y1", "y2"]
    return make_complex(J.facets, vertices=verts)


# --------------------------------------------------------------------------
# isomorphism


def _signature(K: SimplicialComplex) -> dict:
    nb = K.neighbors()
    fcount = Counter(v for f in K.facets for v in f)
    deg = {v: len(nb[v]) for v in K.vertices}
    return {v: (deg[v], fcount[v], tuple(sorted(deg[w] for w in nb[v]))) for v in K.vertices}


def complexes_isomorphic(K: SimplicialComplex, L: SimplicialComplex) -> dict | None:
    """A vertex bijection ``K -> L`` carrying facets onto facets, or ``None``."""
    if len(K.vertices) != len(L.vertices) or len(K.facets) != len(L.facets):
        return None
    if sorted(map(len, K.facets)) != sorted(map(len, L.facets)):
        return None
    sK, sL = _signature(K), _signature(L)
    if sorted(sK.values()) != sorted(sL.values()):
        return None
    nbK, nbL = K.neighbors(), L.neighbors()
    Lfacets = set(L.facets)
    # most constrained first: rare signatures, then adjacency to placed vertices
    freq = Counter(sK.values())
    order: list = []
    remaining = set(K.vertices)
    while remaining:
        placed = set(order)
        v = min(remaining, key=lambda u: (-len(nbK[u] & placed), freq[sK[u]],
                                          K.vertices.index(u)))
        order.append(v)
        remaining.discard(v)
    cands = {v: [w for w in L.vertices if sL[w] == sK[v]] for v in K.vertices}
    mapping: dict = {}
    used: set = set()

    def ok(v, w) -> bool:
        for u, x in mapping.items():
            if (u in nbK[v]) != (x in nbL[w]):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return all(frozenset(mapping[v] for v in f) in Lfacets for f in K.facets)
        v = order[i]
        for w in cands[v]:
            if w in used or not ok(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if search(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if search(0) else None
