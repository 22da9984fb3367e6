"""Ideals, reduced Groebner bases and the operations built on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from ..core.field import PrimeField
from ..core.poly import Polynomial
from ..core.ring import MonomialOrder, PolyRing, elimination, grevlex
from ..errors import NonGenericWeight, RingMismatch
from .engine import Basis, Engine, buchberger, interreduce, reduce_poly, reduce_with_quotients

#: default cap on the number of S-pairs one Groebner computation may process
DEFAULT_MAX_PAIRS = 500_000


class Ideal:
    """An ideal given by generators.  Zero generators are dropped."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"expected Polynomial, got {type(g).__name__}")
            if g.ring != ring:
                raise RingMismatch("generator from a different ring")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = gens

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch("ideals from different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def key(self):
        return (self.ring, frozenset(g.monic() for g in self.generators))


# --------------------------------------------------------------------------
# raw conversion


def make_engine(ring: PolyRing, order: MonomialOrder, term_key=None, comp_degrees=None) -> Engine:
    mod = ring.field.p if isinstance(ring.field, PrimeField) else None
    if term_key is None:
        k = order.keyfunc(ring)
        term_key = lambda comp, e: k(e)  # noqa: E731
    return Engine(ring.nvars, term_key, mod=mod, comp_degrees=comp_degrees)


def to_raw(p: Polynomial, eng: Engine, comp: int = 0) -> tuple[dict, object]:
    """Integer dict and the scale ``s`` with ``raw = s * p``."""
    enc = eng.codec.encode
    if eng.mod:
        return {enc(e, comp): int(c) for e, c in p.terms.items()}, 1
    den = 1
    for c in p.terms.values():
        den = lcm(den, Fraction(c).denominator)
    return {enc(e, comp): int(Fraction(c) * den) for e, c in p.terms.items()}, den


def from_raw(raw: dict, eng: Engine, ring: PolyRing, scale=1) -> Polynomial:
    dec = eng.codec.decode
    F = ring.field
    if eng.mod:
        s = pow(int(scale), -1, eng.mod) if scale != 1 else 1
        return Polynomial.from_terms(ring, {dec(m): c * s for m, c in raw.items()})
    s = Fraction(scale)
    return Polynomial(ring, {dec(m): F.normalize(Fraction(c) / s) for m, c in raw.items() if c})


# --------------------------------------------------------------------------
# reduced Groebner bases


@dataclass
class ReducedGroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: list
    _eng: Engine = field(repr=False, default=None)
    _reducer: Basis = field(repr=False, default=None)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].degree() == 0

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def divide(self, p: Polynomial):
        """Quotients ``q`` and remainder ``r`` with ``p = sum q_i * basis_i + r``."""
        if p.ring != self.ring:
            raise RingMismatch("polynomial and basis from different rings")
        eng = self._eng
        raw, s = to_raw(p, eng)
        r, q, mult = reduce_with_quotients(raw, self._reducer)
        # mult * s * p = sum q_i * reducer_i + r ; reducer_i = c_i * basis_i
        tot = Fraction(mult) * s if not eng.mod else mult * s
        quots = []
        for i in range(len(self.basis)):
            qi = q.get(i, {})
            ci = self._reducer.lcs[i]
            quots.append(from_raw(qi, eng, self.ring, tot) * self.ring.field(ci) if qi else self.ring.zero())
        return quots, from_raw(r, eng, self.ring, tot)


_GB_CACHE: dict = {}


def groebner_basis(I: Ideal, order: MonomialOrder | None = None,
                   max_pairs: int | None = DEFAULT_MAX_PAIRS) -> ReducedGroebnerBasis:
    """Reduced Groebner basis of ``I``; output does not depend on generator order."""
    order = order or grevlex()
    ck = (I.key(), order)
    hit = _GB_CACHE.get(ck)
    if hit is not None:
        return ReducedGroebnerBasis(I, order, hit.basis, hit._eng, hit._reducer)
    ring = I.ring
    eng = make_engine(ring, order)
    raws = [to_raw(g, eng)[0] for g in I.generators]
    B = buchberger(raws, eng, max_pairs=max_pairs)
    red = interreduce(B)
    reducer = Basis(eng)
    for f in red:
        reducer.add(f)
    reducer.active = list(range(len(red)))
    basis = [from_raw(eng.to_fractions(f), eng, ring) for f in red]
    G = ReducedGroebnerBasis(I, order, basis, eng, reducer)
    if len(_GB_CACHE) > 256:
        _GB_CACHE.clear()
    _GB_CACHE[ck] = G
    return G


def normal_form(p: Polynomial, G: ReducedGroebnerBasis) -> Polynomial:
    if p.ring != G.ring:
        raise RingMismatch("polynomial and basis from different rings")
    if not p:
        return p
    eng = G._eng
    raw, s = to_raw(p, eng)
    r, mult = reduce_poly(raw, G._reducer)
    return from_raw(r, eng, G.ring, mult * s)


def ideal_membership(p: Polynomial, I: Ideal | ReducedGroebnerBasis) -> bool:
    G = I if isinstance(I, ReducedGroebnerBasis) else groebner_basis(I)
    if p.ring != G.ring:
        raise RingMismatch("polynomial and ideal from different rings")
    return not normal_form(p, G)


def contains(I: Ideal, J: Ideal) -> bool:
    """True if every generator of ``J`` lies in ``I``."""
    G = groebner_basis(I)
    return all(not normal_form(g, G) for g in J.generators)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return groebner_basis(I).basis == groebner_basis(J).basis


def initial_ideal(I: Ideal, order: MonomialOrder | None = None) -> Ideal:
    """Monomial ideal of lead terms of the reduced basis.

    For a weight order every basis element must have a unique term of maximal
    weight, otherwise :class:`NonGenericWeight` names the offending element.
    """
    order = order or grevlex()
    G = groebner_basis(I, order)
    ring = I.ring
    if order.variant == "weight":
        w = order.weights
        for g in G.basis:
            ws = [sum(a * b for a, b in zip(w, e)) for e in g.terms]
            top = max(ws)
            if ws.count(top) > 1:
                raise NonGenericWeight(g)
    return Ideal(ring, [ring.monomial(g.leading_monomial(order)) for g in G.basis])


def initial_form_ideal(I: Ideal, weights: Sequence[int], tiebreak: MonomialOrder | None = None) -> Ideal:
    """Ideal of weight-initial forms of a Groebner basis for the weight order."""
    from ..core.ring import weight

    G = groebner_basis(I, weight(weights, tiebreak))
    out = []
    for g in G.basis:
        ws = {e: sum(a * b for a, b in zip(weights, e)) for e in g.terms}
        top = max(ws.values())
        out.append(Polynomial(I.ring, {e: c for e, c in g.terms.items() if ws[e] == top}))
    return Ideal(I.ring, out)


def eliminate(I: Ideal, variables: Sequence[str], keep_ring: bool = False,
              max_pairs: int | None = DEFAULT_MAX_PAIRS) -> Ideal:
    """``I`` intersected with the subring on the remaining variables."""
    ring = I.ring
    variables = [v for v in variables]
    if not variables:
        return Ideal(ring, list(I.generators))
    idx = {ring.index(v) for v in variables}
    G = groebner_basis(I, elimination(variables), max_pairs=max_pairs)
    kept = [g for g in G.basis if all(all(e[i] == 0 for i in idx) for e in g.terms)]
    if keep_ring:
        return Ideal(ring, kept)
    sub = PolyRing([v for i, v in enumerate(ring.variables) if i not in idx], ring.field)
    return Ideal(sub, [g.to_ring(sub) for g in kept])


def _fresh_name(ring: PolyRing, base: str) -> str:
    name = base
    k = 0
    while name in ring:
        k += 1
        name = f"{base}{k}"
    return name


def intersect(*ideals: Ideal, max_pairs: int | None = DEFAULT_MAX_PAIRS) -> Ideal:
    """Intersection of ideals with ``t*I + (1-t)*J`` elimination, folded left."""
    if not ideals:
        raise ValueError("need at least one ideal")
    ring = ideals[0].ring
    for J in ideals[1:]:
        if J.ring != ring:
            raise RingMismatch("ideals from different rings")
    acc = ideals[0]
    for J in ideals[1:]:
        t = _fresh_name(ring, "_t")
        big = ring.extend([t], front=True)
        tt = big.gen(t)
        gens = [tt * g.to_ring(big) for g in acc.generators]
        gens += [(big.one() - tt) * g.to_ring(big) for g in J.generators]
        res = eliminate(Ideal(big, gens), [t], max_pairs=max_pairs)
        acc = Ideal(ring, [g.to_ring(ring) for g in res.generators])
    return acc


def quotient(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f``."""
    if f.ring != I.ring:
        raise RingMismatch("polynomial and ideal from different rings")
    meet = intersect(I, Ideal(I.ring, [f]))
    out = []
    for g in meet.generators:
        q, r = groebner_basis(Ideal(I.ring, [f])).divide(g)
        if r:
            raise ArithmeticError("intersection element not divisible by f")
        out.append(q[0])
    return Ideal(I.ring, out)


def saturate(I: Ideal, f: Polynomial, max_steps: int = 64) -> Ideal:
    """``I : f^infinity`` by iterating quotients until they stabilize."""
    cur = Ideal(I.ring, groebner_basis(I).basis)
    for _ in range(max_steps):
        nxt = Ideal(I.ring, groebner_basis(quotient(cur, f)).basis)
        if nxt.generators == cur.generators:
            return cur
        cur = nxt
    raise RuntimeError("saturation did not stabilize")


def radical_membership(f: Polynomial, I: Ideal, fast_powers: int = 3) -> bool:
    """Is ``f`` in the radical of ``I``?  Tries small powers first."""
    if f.ring != I.ring:
        raise RingMismatch("polynomial and ideal from different rings")
    if not f:
        return True
    G = groebner_basis(I)
    p = f
    for _ in range(fast_powers):
        if not normal_form(p, G):
            return True
        p = p * f
    ring = I.ring
    t = _fresh_name(ring, "_r")
    big = ring.extend([t])
    gens = [g.to_ring(big) for g in I.generators] + [big.one() - big.gen(t) * f.to_ring(big)]
    return groebner_basis(Ideal(big, gens)).is_unit()


def krull_dimension(I: Ideal) -> int:
    """Dimension of ``S/I``; -1 for the unit ideal."""
    from .hilbert import hilbert_series_monomial

    M = initial_ideal(I, grevlex())
    num, dim = hilbert_series_monomial(M)
    return dim if any(num) else -1
