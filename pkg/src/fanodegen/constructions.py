"""Named ideals: smooth Fano models, trigonal cases and toric examples.

"General" polynomials draw coefficients uniformly from {-5..5} \\ {0} with
a seeded generator; the result is accepted only if its Hilbert data has the
expected dimension and degree, with up to 16 redraws.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Callable

from .core.poly import Polynomial
from .core.ring import PolyRing
from .errors import GenericityFailure, UnknownName
from .groebner.hilbert import hilbert_data
from .groebner.ideal import Ideal
from .scrolls import ScrollDescription, roll_room, rolling_divisor_ideal
from .simplicial import catalog_cone, sr_ideal

MAX_RESAMPLES = 16
COEFFS = [c for c in range(-5, 6) if c]


def general_form(ring: PolyRing, degree: int, rng: random.Random,
                 variables=None, allowed: Callable | None = None) -> Polynomial:
    """Random form of ``degree`` in ``variables`` (default all), optionally
    restricted to monomials passing ``allowed``."""
    idx = [ring.index(v) for v in (variables or ring.variables)]
    terms = {}
    for combo in combinations_with_replacement(idx, degree):
        e = [0] * ring.nvars
        for i in combo:
            e[i] += 1
        e = tuple(e)
        if allowed is None or allowed(e):
            terms[e] = rng.choice(COEFFS)
    return Polynomial.from_terms(ring, terms)


def minors_2x2(rows: list) -> list:
    """All 2x2 minors of a matrix of polynomials, without duplicates up to sign."""
    out = []
    seen = set()
    nr, nc = len(rows), len(rows[0])
    for r1, r2 in combinations(range(nr), 2):
        for c1, c2 in combinations(range(nc), 2):
            m = rows[r1][c1] * rows[r2][c2] - rows[r1][c2] * rows[r2][c1]
            if not m:
                continue
            key = m.monic()
            if key in seen:
                continue
            seen.add(key)
            out.append(m)
    return out


@dataclass(frozen=True)
class Construction:
    name: str
    degree: int
    build: Callable
    description: str
    general: bool = False


# --------------------------------------------------------------------------
# scroll-based cases

SCROLLS = {
    "V10'": (ScrollDescription((1, 1, 1, 1), "xyzw"), 2, 10),
    "V12_2_6": (ScrollDescription((2, 1, 1, 1), "xyzw"), 3, 12),
    "T9": (ScrollDescription((2, 2, 0, 0), "xy", ("z1", "z2")), 2, 10),
    "T25": (ScrollDescription((4, 1, 0, 0), "xy", ("z1", "z2")), 3, 12),
    "T7_trigonal": (ScrollDescription((2, 1, 1, 0), "xyz", ("w",)), 2, 10),
}

SCROLL_275510 = ScrollDescription((2, 2, 0, 0), "xy", ("z1", "z2"))
SCROLL_147467 = ScrollDescription((2, 2, 1, 0), "xyz", ("w",))
SCROLL_524375 = ScrollDescription((3, 2, 0, 0), "xy", ("z", "w"))


def _general_rolled(name: str):
    s, m, _ = SCROLLS[name]

    def build(rng):
        ring = s.ring()
        f0 = general_form(ring, 3, rng, allowed=lambda e: roll_room(e, s, ring) >= m)
        return rolling_divisor_ideal(s, f0, m)

    return build


def _fixed_rolled(s: ScrollDescription, f0: str, m: int):
    def build(rng):
        ring = s.ring()
        return rolling_divisor_ideal(s, ring(f0), m)

    return build


# --------------------------------------------------------------------------
# determinantal cases


def _v12_2_9(rng, quadric: str | None = None):
    ring = PolyRing(["x0", "x1", "x2", "y0", "y1", "y2", "u", "v", "w"])
    g = ring.gen
    M = [[g("u"), g("x1"), g("y0")], [g("y1"), g("v"), g("x2")], [g("x0"), g("y2"), g("w")]]
    q = ring(quadric) if quadric else general_form(ring, 2, rng)
    return Ideal(ring, minors_2x2(M) + [q])


CUBE_VARS = [f"x{i}{j}{k}" for i in (0, 1) for j in (0, 1) for k in (0, 1)]


def _v12_3(rng, quadric: str | None = None):
    ring = PolyRing(CUBE_VARS + ["t"])
    g = ring.gen
    A = [[g("x000"), g("x100"), g("x001"), g("x101")], [g("x010"), g("x110"), g("x011"), g("x111")]]
    B = [[g("x000"), g("x010"), g("x001"), g("x011")], [g("x100"), g("x110"), g("x101"), g("x111")]]
    mins = minors_2x2(A)
    keys = {m.monic() for m in mins}
    mins += [m for m in minors_2x2(B) if m.monic() not in keys]
    q = ring(quadric) if quadric else general_form(ring, 2, rng)
    return Ideal(ring, mins + [q])


def _t3(rng):
    ring = PolyRing(["x0", "x1", "x2", "y0", "y1", "y2", "z1", "z2"])
    g = ring.gen
    M = [[g("x0"), g("y2"), g("y1")], [g("y2"), g("x1"), g("y0")], [g("y1"), g("y0"), g("x2")]]
    qs = [general_form(ring, 2, rng) for _ in range(3)]
    fs = [sum((M[r][c] * qs[c] for c in range(3)), ring.zero()) for r in range(3)]
    return Ideal(ring, minors_2x2(M) + fs)


# --------------------------------------------------------------------------
# toric and Stanley-Reisner cases

BP_VARS = ["x1", "x2", "x3", "x4", "x5", "x6", "y0", "y1", "y2"]

BINOMIALS_5953 = [
    "x2*x6 - y0*x1", "x1*x3 - y0*x2", "x2*x4 - y0*x3",
    "x3*x5 - y0*x4", "x4*x6 - y0*x5", "x1*x5 - y0*x6",
    "x1*x4 - y0^2", "x2*x5 - y0^2", "x3*x6 - y0^2",
    "y1*y2 - y0*x1",
]


def _5953(rng):
    ring = PolyRing(BP_VARS)
    return Ideal(ring, [ring(b) for b in BINOMIALS_5953])


def _xbp(rng):
    return sr_ideal(catalog_cone("T8'"), PolyRing(BP_VARS))


def _sr(name):
    def build(rng):
        return sr_ideal(catalog_cone(name))

    return build


def _quartic(rng):
    ring = PolyRing(["x0", "x1", "x2", "x3", "x4"])
    return Ideal(ring, [ring("x1*x2*x3*x4 - x0^4")])


def _ci(degrees, nvars):
    def build(rng):
        ring = PolyRing([f"x{i}" for i in range(nvars)])
        return Ideal(ring, [general_form(ring, d, rng) for d in degrees])

    return build


REGISTRY: dict = {}


def _register(name, degree, build, description, general=False):
    REGISTRY[name] = Construction(name, degree, build, description, general)


_register("V10'", 10, _general_rolled("V10'"), "general cubic rolled twice on a (1,1,1,1) scroll", True)
_register("V12_2_6", 12, _general_rolled("V12_2_6"), "general cubic rolled three times on a (2,1,1,1) scroll", True)
_register("V12_2_9", 12, _v12_2_9, "2x2 minors of a 3x3 matrix plus a general quadric", True)
_register("V12_3", 12, _v12_3, "minors of two 2x4 matrices in x_ijk, t plus a general quadric", True)
_register("T3", 10, _t3, "symmetric 3x3 matrix minors plus M*(g0,g1,g2)", True)
_register("T9", 10, _general_rolled("T9"), "general cubic rolled twice on a (2,2,0,0) scroll", True)
_register("T25", 12, _general_rolled("T25"), "general cubic rolled three times on a (4,1,0,0) scroll", True)
_register("T7_trigonal", 10, _general_rolled("T7_trigonal"), "general cubic rolled twice on a (2,1,1,0) scroll", True)
_register("Xbp", 12, _xbp, "Stanley-Reisner ideal of the cone over the hexagonal bipyramid")
_register("275510", 10, _fixed_rolled(SCROLL_275510, "x0^2*x2 - y0*z1*z2", 2), "(2,2,0,0) scroll, f0 rolled twice")
_register("147467", 12, _fixed_rolled(SCROLL_147467, "x0*z0*w - y0^2*y1", 3), "(2,2,1,0) scroll, f0 rolled three times")
_register("524375", 12, _fixed_rolled(SCROLL_524375, "x0*z*w - y0^3", 3), "(3,2,0,0) scroll, f0 rolled three times")
_register("5953", 12, _5953, "ten binomials degenerating to the bipyramid cone")
_register("V4_toric", 4, _quartic, "the quartic x1*x2*x3*x4 - x0^4")
_register("CI_2_3", 6, _ci((2, 3), 6), "general (2,3) complete intersection in P^5", True)
_register("CI_2_2_2", 8, _ci((2, 2, 2), 7), "general (2,2,2) complete intersection in P^6", True)
for _n in ("T4", "T5", "T6", "T7", "T8", "T8'", "T9", "T10"):
    _register(f"SR_{_n}", 2 * int(_n[1:].rstrip("'")) - 4, _sr(_n), f"Stanley-Reisner ideal of {_n} joined with a point")


def canonical_name(name: str) -> str:
    n = name.strip().replace("’", "'")
    aliases = {"X_bp": "Xbp", "xbp": "Xbp", "V10p": "V10'", "SR_T8p": "SR_T8'", "T8p": "SR_T8'"}
    return aliases.get(n, n)


def construct_named(name: str, seed: int = 0) -> Ideal:
    """Build a registered ideal.  ``seed`` drives the general coefficients."""
    key = canonical_name(name)
    if key not in REGISTRY:
        raise UnknownName(f"unknown construction {name!r}")
    c = REGISTRY[key]
    rng = random.Random(seed)
    tries = MAX_RESAMPLES if c.general else 1
    for _ in range(tries):
        I = c.build(rng)
        h = hilbert_data(I)
        if h.dimension == 3 and h.degree == c.degree:
            return I
    raise GenericityFailure(f"{key}: no generic draw within {tries} attempts (seed {seed})")


def construct_special(name: str, quadric: str) -> Ideal:
    """``V12_2_9`` or ``V12_3`` with the general quadric replaced by ``quadric``."""
    key = canonical_name(name)
    if key == "V12_2_9":
        return _v12_2_9(None, quadric)
    if key == "V12_3":
        return _v12_3(None, quadric)
    raise UnknownName(f"no special quadric variant for {name!r}")
