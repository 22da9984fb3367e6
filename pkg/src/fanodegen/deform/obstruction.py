"""Lowest-order obstruction equations from the cup product T^1 x T^1 -> T^2."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from ..core.poly import Polynomial
from ..core.ring import PolyRing
from ..groebner.ideal import Ideal
from .cohomology import TangentVector, _normal_module, obstruction_space
from .presentation import Presentation, padd, pmul


@dataclass
class ObstructionData:
    """Quadratic obstruction equations in the dual T^1 parameters.

    ``equations[e]`` is the component of the cup-product form along the
    ``e``-th T^2 basis direction; ``silent`` lists the T^2 directions whose
    equation vanishes identically.
    """

    t1_basis: list
    equations: list
    cutoff_order: int
    parameter_ring: PolyRing
    t2_dim: int
    silent: list = field(default_factory=list)

    def ideal(self) -> Ideal:
        return Ideal(self.parameter_ring, [e for e in self.equations if e])


class CupProduct:
    """Cup products of first-order deformations, on the reduced basis.

    Without ``basis`` the T^1 representatives of the normal module are used;
    otherwise ``basis`` is a list of :class:`TangentVector` perturbing the
    ideal's own generators.
    """

    def __init__(self, I: Ideal, basis: list | None = None):
        self.N = _normal_module(I)
        self.O = obstruction_space(I)
        self.pres = self.N.pres
        if basis is None:
            self.reps = self.N.t1_representatives()
            self._h = [self.N.perturbations_of(v) for v in self.reps]
            self.basis = [self.N.tangent_vector(v) for v in self.reps]
        else:
            self._h = [_on_reduced_basis(I, self.pres, v) for v in basis]
            for h in self._h:
                if not self.N.contains(h):
                    raise ValueError("basis vector violates the syzygy conditions")
            self.reps = list(range(len(basis)))
            self.basis = list(basis)
        self._b: dict = {}

    def lifts(self, v: int) -> list:
        """For each syzygy ``sigma``: ``b`` with ``sum sigma_k h_k = sum b_k g_k``."""
        hit = self._b.get(v)
        if hit is None:
            h = self._h[v]
            hit = []
            for sigma in self.pres.syzygies:
                acc: dict = {}
                for a, hk in zip(sigma, h):
                    if a and hk:
                        padd(acc, pmul(a, hk))
                hit.append(self.pres.divide(acc) if acc else [dict() for _ in h])
            self._b[v] = hit
        return hit

    def half(self, v: int, w: int) -> dict:
        """``sigma -> NF(sum_k b^v_k h^w_k)`` as a column vector."""
        pres, O = self.pres, self.O
        hw = self._h[w]
        out: dict = {}
        for l, b in enumerate(self.lifts(v)):
            acc: dict = {}
            for bk, hk in zip(b, hw):
                if bk and hk:
                    padd(acc, pmul(bk, hk))
            for m, c in pres.nf(acc).items():
                if c:
                    out[O.index[(l, m)]] = c
        return out

    def cocycle(self, v: int, w: int) -> dict:
        if v == w:
            return self.half(v, v)
        return padd(self.half(v, w), self.half(w, v))

    def __call__(self, v: int, w: int) -> list:
        """Coordinates of the cup product of representatives ``v`` and ``w`` in T^2."""
        return self.O.quotient_coordinates(self.cocycle(v, w))


def _on_reduced_basis(I: Ideal, pres, v: TangentVector) -> list:
    """Perturbations of the reduced basis induced by perturbing the generators."""
    gp = Presentation(I, use_generators=True, check_dimension=False)
    if len(v.perturbations) != len(gp.gens):
        raise ValueError(f"expected {len(gp.gens)} perturbations, got {len(v.perturbations)}")
    hs = [gp.from_polynomial(p) for p in v.perturbations]
    out = []
    for Tk in gp._T:
        acc: dict = {}
        for t, h in zip(Tk, hs):
            if t and h:
                padd(acc, pmul(t, h))
        out.append(pres.nf(acc))
    return out


def quadratic_obstructions(I: Ideal, t1_basis: list | None = None, names: str = "t") -> ObstructionData:
    """Quadratic parts of the obstruction equations in T^1 coordinates ``t0, t1, ...``.

    ``t1_basis`` defaults to the normal-module representatives of T^1.
    """
    O = obstruction_space(I)
    t2 = O.dimension()
    cup = CupProduct(I, t1_basis)
    k = len(cup.reps)
    ring = PolyRing([f"{names}{i}" for i in range(k)]) if k else PolyRing([f"{names}0"])
    basis = cup.basis
    if t2 == 0 or k == 0:
        return ObstructionData(basis, [], 2, ring, t2)
    eqs = [dict() for _ in range(t2)]
    for v, w in combinations_with_replacement(range(k), 2):
        coords = cup(v, w)
        e = [0] * k
        e[v] += 1
        e[w] += 1
        e = tuple(e)
        for i, c in enumerate(coords):
            if c:
                eqs[i][e] = eqs[i].get(e, 0) + Fraction(c)
    polys = [Polynomial.from_terms(ring, q) for q in eqs]
    silent = [i for i, p in enumerate(polys) if p.is_zero()]
    return ObstructionData(basis, polys, 2, ring, t2, silent)


# --------------------------------------------------------------------------
# linear changes of coordinates making the equations monomial


def _linear(ring: PolyRing, coeffs: dict) -> Polynomial:
    n = ring.nvars
    return Polynomial.from_terms(ring, {tuple(int(j == i) for j in range(n)): c for i, c in coeffs.items()})


def _normalized(coeffs: dict) -> tuple[dict, Fraction]:
    lead = coeffs[min(coeffs)]
    return {i: Fraction(c) / lead for i, c in coeffs.items()}, Fraction(lead)


def linear_factors(q: Polynomial) -> tuple[Fraction, list] | None:
    """``(c, [l1, l2])`` with ``q = c * l1 * l2`` over QQ, or ``None``.

    The linear forms are dicts ``variable index -> coefficient`` normalised
    to leading coefficient 1 at their smallest variable index.
    """
    n = q.ring.nvars
    S: dict = {}
    for e, c in q.terms.items():
        idx = [i for i, a in enumerate(e) for _ in range(a)]
        if len(idx) != 2:
            raise ValueError("expected a quadratic form")
        i, j = idx
        if i == j:
            S[(i, i)] = S.get((i, i), 0) + Fraction(c)
        else:
            S[(i, j)] = S.get((i, j), 0) + Fraction(c) / 2
            S[(j, i)] = S.get((j, i), 0) + Fraction(c) / 2
    support = sorted({i for i, _ in S})
    rows = {i: {j: S[(i, j)] for j in support if S.get((i, j))} for i in support}
    basis: list = []
    for i in support:
        if rows[i] and _independent(basis + [rows[i]]):
            basis.append(rows[i])
        if len(basis) > 2:
            return None
    if len(basis) == 1:
        k = next(i for i in support if S.get((i, i)))
        l, s = _normalized(rows[k])
        return s * s / S[(k, k)], [l, l]
    L1, L2 = basis
    a, b = next((a, b) for a in support for b in support
                if a < b and L1.get(a, 0) * L2.get(b, 0) - L1.get(b, 0) * L2.get(a, 0))
    # S restricted to {a, b} equals B^T M B with B the 2x2 block of (L1; L2)
    B = [[L1.get(a, 0), L1.get(b, 0)], [L2.get(a, 0), L2.get(b, 0)]]
    det = B[0][0] * B[1][1] - B[0][1] * B[1][0]
    Bi = [[B[1][1] / det, -B[0][1] / det], [-B[1][0] / det, B[0][0] / det]]
    Sab = [[S.get((a, a), 0), S.get((a, b), 0)], [S.get((b, a), 0), S.get((b, b), 0)]]
    # M = Bi^T Sab Bi
    T = [[sum(Sab[r][k] * Bi[k][c] for k in range(2)) for c in range(2)] for r in range(2)]
    M = [[sum(Bi[k][r] * T[k][c] for k in range(2)) for c in range(2)] for r in range(2)]
    al, be, ga = M[0][0], M[0][1], M[1][1]

    def combo(x, y) -> dict:
        out = {}
        for i in support:
            v = x * L1.get(i, 0) + y * L2.get(i, 0)
            if v:
                out[i] = v
        return out

    if al == 0:
        # v * (2 be u + ga v)
        f1, f2, c = combo(0, 1), combo(2 * be, ga), Fraction(1)
    else:
        disc = be * be - al * ga
        r = _rational_sqrt(disc)
        if r is None:
            return None
        # al (u - r1 v)(u - r2 v)
        f1, f2, c = combo(1, -(-be + r) / al), combo(1, -(-be - r) / al), al
    l1, s1 = _normalized(f1)
    l2, s2 = _normalized(f2)
    return c * s1 * s2, [l1, l2]


def _rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    return Fraction(rn, rd) if rn * rn == n and rd * rd == d else None


def _independent(vectors: list) -> bool:
    """Exact linear independence of sparse rational vectors."""
    pivots: list = []
    for v in vectors:
        v = dict(v)
        for p, row in pivots:
            if v.get(p):
                c = v[p] / row[p]
                for k, x in row.items():
                    y = v.get(k, 0) - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        if not v:
            return False
        pivots.append((min(v), v))
    return True


@dataclass
class Monomialization:
    """Obstruction equations rewritten as monomials in new linear coordinates.

    ``forms[a]`` expresses the new coordinate ``u_a`` in the old parameters;
    ``components[c]`` lists the coordinates cutting out the ``c``-th
    irreducible component of the vanishing locus, a linear subspace.
    """

    forms: list
    monomial_ideal: Ideal
    components: list

    def component_ideals(self) -> list:
        return [Ideal(self.forms[0].ring, [self.forms[a] for a in c]) for c in self.components]

    def codimensions(self) -> list:
        return [len(c) for c in self.components]


def monomialize(equations: list, names: str = "u") -> Monomialization:
    """Find coordinates in which every quadratic equation is a monomial.

    Each equation must split into linear factors over QQ and the factors must
    be linearly independent; otherwise ``ValueError``.
    """
    from ..groebner.primes import minimal_vertex_covers

    eqs = [e for e in equations if e]
    if not eqs:
        raise ValueError("no equations")
    ring = eqs[0].ring
    n = ring.nvars
    forms: list = []
    keys: dict = {}
    monos = []
    for q in eqs:
        f = linear_factors(q)
        if f is None:
            raise ValueError(f"{q} does not split into rational linear factors")
        idx = []
        for l in f[1]:
            key = tuple(sorted(l.items()))
            if key not in keys:
                keys[key] = len(forms)
                forms.append(l)
            idx.append(keys[key])
        monos.append(idx)
    if not _independent(forms):
        raise ValueError("linear factors are dependent; no monomial coordinates")
    for i in range(n):
        if len(forms) == n:
            break
        if _independent(forms + [{i: Fraction(1)}]):
            forms.append({i: Fraction(1)})
    new = PolyRing([f"{names}{a}" for a in range(n)])
    gens = []
    for a, b in monos:
        e = [0] * n
        e[a] += 1
        e[b] += 1
        gens.append(new.monomial(e))
    covers = minimal_vertex_covers([frozenset(m) for m in monos])
    covers = sorted((sorted(c) for c in covers), key=lambda c: (len(c), c))
    return Monomialization([_linear(ring, l) for l in forms], Ideal(new, gens), covers)
