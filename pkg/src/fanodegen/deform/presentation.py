"""Polynomial bookkeeping for degree-0 deformation computations.

Polynomials are dicts ``packed monomial -> coefficient`` in the codec of the
reduced grevlex basis of the ideal.  Normal forms of monomials are memoized,
so the normal form of any product is a linear combination of cached rows.

A presentation works either with the reduced basis itself as generating set
(Schreyer syzygies, cheapest) or with the ideal's own generators, whose
syzygies are obtained from the basis syzygies through the transition
matrices between the two generating sets.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from ..core.field import QQ
from ..core.poly import Polynomial
from ..errors import FanoDegenError, WrongDimension
from ..groebner.engine import reduce_poly, reduce_with_quotients
from ..groebner.ideal import Ideal, groebner_basis, krull_dimension, to_raw
from ..groebner.syzygy import schreyer_raw, vector_components
from .linalg import exact_echelon


def padd(acc: dict, f: dict, c=1) -> dict:
    for m, v in f.items():
        x = acc.get(m, 0) + c * v
        if x:
            acc[m] = x
        else:
            acc.pop(m, None)
    return acc


def pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for m, c in a.items():
        for u, d in b.items():
            k = m + u
            x = out.get(k, 0) + c * d
            if x:
                out[k] = x
            else:
                del out[k]
    return out


def dot(vec: list, polys: list) -> dict:
    out: dict = {}
    for a, f in zip(vec, polys):
        if a and f:
            padd(out, pmul(a, f))
    return out


class Presentation:
    """Generators, syzygies and normal forms of a homogeneous ideal over QQ."""

    def __init__(self, I: Ideal, use_generators: bool = False, check_dimension: bool = True):
        if I.ring.field != QQ:
            raise FanoDegenError("deformation computations run over the rationals")
        if not I.is_homogeneous:
            raise FanoDegenError("ideal must be homogeneous")
        if check_dimension:
            d = krull_dimension(I)
            if d != 4:
                raise WrongDimension(f"quotient has Krull dimension {d}, expected 4")
        self.ideal = I
        self.ring = I.ring
        G = groebner_basis(I)
        self.gb = G
        self.eng = G._eng
        self.codec = self.eng.codec
        self.reducer = G._reducer
        self.gb_raw = [dict(self.reducer.polys[k]) for k in range(len(G.basis))]
        n = self.ring.nvars
        self.units = [self.codec.encode([1 if j == i else 0 for j in range(n)]) for i in range(n)]
        self._nf: dict = {}
        self._std: dict = {0: [0]}
        self._lts = [self.reducer.lts[k] for k in range(len(G.basis))]
        self.use_generators = use_generators
        if use_generators:
            self.gens = [dict(to_raw(g, self.eng)[0]) for g in I.generators]
            self._build_transition()
        else:
            self.gens = self.gb_raw
            self._T = None
        self.degrees = [self.degree(g) for g in self.gens]
        self._syz = None
        self._syz_data = None

    # ------------------------------------------------------------------
    # monomials and normal forms

    def degree(self, f: dict) -> int:
        return self.codec.degree(next(iter(f)))

    def is_standard(self, m: int) -> bool:
        div = self.codec.divides
        return not any(div(lt, m) for lt in self._lts)

    def standard(self, D: int) -> list:
        """Standard monomials of degree ``D`` (a basis of ``A_D``), sorted."""
        if D < 0:
            return []
        for d in range(max(self._std) + 1, D + 1):
            prev = self._std[d - 1]
            nxt = {s + u for s in prev for u in self.units}
            self._std[d] = sorted(m for m in nxt if self.is_standard(m))
        return self._std[D]

    def nf_mono(self, m: int) -> dict:
        hit = self._nf.get(m)
        if hit is not None:
            return hit
        if self.is_standard(m):
            out = {m: 1}
        else:
            r, mult = reduce_poly({m: 1}, self.reducer)
            out = {u: Fraction(c) / mult for u, c in r.items()}
        self._nf[m] = out
        return out

    def nf(self, f: dict) -> dict:
        out: dict = {}
        for m, c in f.items():
            padd(out, self.nf_mono(m), c)
        return out

    def divide(self, f: dict) -> list:
        """Coefficients ``b`` with ``f = sum b_i * gens_i``; ``f`` must lie in the ideal."""
        raw, den = _integral(f)
        r, q, mult = reduce_with_quotients(raw, self.reducer)
        if r:
            raise ArithmeticError("polynomial is not in the ideal")
        s = Fraction(1) / (Fraction(mult) * den)
        qs = [{u: c * s for u, c in q.get(k, {}).items()} for k in range(len(self.gb_raw))]
        if not self.use_generators:
            return qs
        out = [dict() for _ in self.gens]
        for k, qk in enumerate(qs):
            if not qk:
                continue
            for i, tki in enumerate(self._T[k]):
                if tki:
                    padd(out[i], pmul(qk, tki))
        return out

    def to_polynomial(self, f: dict) -> Polynomial:
        dec = self.codec.decode
        return Polynomial(self.ring, {dec(m): Fraction(c) for m, c in f.items() if c})

    def from_polynomial(self, p: Polynomial) -> dict:
        enc = self.codec.encode
        return {enc(e): Fraction(c) for e, c in p.terms.items()}

    def derivative(self, f: dict, var: int) -> dict:
        shift = self.codec.shifts[var]
        mask = (1 << 16) - 1
        u = self.units[var]
        out: dict = {}
        for m, c in f.items():
            e = (m >> shift) & mask
            if e:
                out[m - u] = c * e
        return out

    def all_monomials(self, D: int) -> list:
        if D < 0:
            return []
        return [sum(self.units[i] for i in combo)
                for combo in combinations_with_replacement(range(len(self.units)), D)]

    # ------------------------------------------------------------------
    # syzygies

    def _gb_syzygies(self):
        if self._syz_data is None:
            syz, eng2 = schreyer_raw(self.gb_raw, self.eng)
            self._syz_data = (syz, eng2)
        return self._syz_data

    @property
    def syzygies(self) -> list:
        """Generating syzygies of ``gens``: each a list of per-generator dicts."""
        if self._syz is None:
            raws, _ = self._gb_syzygies()
            r = len(self.gb_raw)
            gb_syz = [vector_components(v, self.eng, r) for v in raws]
            if not self.use_generators:
                self._syz = gb_syz
            else:
                self._syz = self._generator_syzygies(gb_syz)
        return self._syz

    def syzygy_degree(self, vec: list) -> int:
        for a, d in zip(vec, self.degrees):
            if a:
                return self.degree(a) + d
        raise ValueError("zero syzygy")

    def _build_transition(self):
        """``T[k][i]`` with ``gb_k = sum_i T[k][i] gens_i``, by linear algebra."""
        gens = self.gens
        dg = [self.degree(g) for g in gens]
        T = []
        for Gk in self.gb_raw:
            D = self.degree(Gk)
            unknowns = [(i, m) for i in range(len(gens)) for m in self.all_monomials(D - dg[i])]
            rows: dict = {}
            for j, (i, m) in enumerate(unknowns):
                for t, c in gens[i].items():
                    rows.setdefault(t + m, {})[j] = c
            rhs = len(unknowns)
            for t, c in Gk.items():
                rows.setdefault(t, {})[rhs] = -c
            E = exact_echelon(list(rows.values()), rhs + 1)
            if rhs not in E.free:
                raise ArithmeticError("basis element not in the span of the generators")
            sol = E.kernel[E.free.index(rhs)]
            Tk = [dict() for _ in gens]
            for j, v in sol.items():
                if j != rhs and v:
                    i, m = unknowns[j]
                    Tk[i][m] = v
            T.append(Tk)
        self._T = T

    def _generator_syzygies(self, gb_syz: list) -> list:
        gens, T = self.gens, self._T
        r = len(gens)
        out = []
        seen = set()

        def push(vec):
            vec = [{m: c for m, c in v.items() if c} for v in vec]
            if not any(vec):
                return
            # normalise the first nonzero coefficient for deduplication
            first = next(v for v in vec if v)
            lead = first[max(first, key=self.eng.key)]
            key = tuple(tuple(sorted((m, Fraction(c) / lead) for m, c in v.items())) for v in vec)
            if key in seen:
                return
            seen.add(key)
            out.append(vec)

        for sigma in gb_syz:
            vec = [dict() for _ in range(r)]
            for k, sk in enumerate(sigma):
                if sk:
                    for i in range(r):
                        if T[k][i]:
                            padd(vec[i], pmul(sk, T[k][i]))
            push(vec)
        for i, g in enumerate(gens):
            raw, den = _integral(g)
            rem, q, mult = reduce_with_quotients(raw, self.reducer)
            s = Fraction(1) / (Fraction(mult) * den)
            vec = [dict() for _ in range(r)]
            vec[i][0] = Fraction(1)
            for k, qk in q.items():
                qk = {u: c * s for u, c in qk.items()}
                for j in range(r):
                    if T[k][j]:
                        padd(vec[j], pmul(qk, T[k][j]), -1)
            push(vec)
        return out


def _integral(f: dict) -> tuple[dict, int]:
    """Integer dict and the denominator ``d`` with ``raw = d * f``."""
    from math import lcm

    d = 1
    for c in f.values():
        if not isinstance(c, int):
            d = lcm(d, Fraction(c).denominator)
    return {m: int(c * d) for m, c in f.items()}, d
