"""Schreyer syzygies of Groebner bases, for ideals and for modules.

At the raw level a module element is a dict over packed terms whose
component field names the basis vector.  :func:`schreyer_raw` takes any list
of raw elements that form a Groebner basis for an engine's term order and
returns the Schreyer generators of their syzygy module together with the
engine for the induced order, so it can be applied again for second
syzygies.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .engine import Basis, Engine, reduce_with_quotients, spoly
from .ideal import ReducedGroebnerBasis, from_raw


def schreyer_raw(elems: list, eng: Engine) -> tuple[list, Engine]:
    """Schreyer generators for the syzygies of a Groebner basis ``elems``.

    Returns raw syzygies (component ``k`` = coefficient of ``elems[k]``) and
    the engine carrying the Schreyer order on the new free module.
    """
    codec = eng.codec
    B = Basis(eng)
    for f in elems:
        B.add(f)
    B.active = list(range(len(elems)))
    lts = B.lts
    base_key = eng.key

    def skey(comp, exps, _lts=lts, _enc=codec.encode):
        return (base_key(_enc(exps) + _lts[comp]), -comp)

    out_eng = Engine(codec.n, skey, mod=eng.mod)
    syz = []
    n = len(elems)
    shift = codec.comp_shift
    for i in range(n):
        # pairs (i, j), j > i: lead term of the syzygy is (L / lt_i) e_i
        cands = []
        for j in range(i + 1, n):
            if codec.comp(lts[i]) != codec.comp(lts[j]):
                continue
            L = codec.lcm(lts[i], lts[j])
            cands.append((codec.strip(L - lts[i]), j, L))
        keep = []
        for m, j, L in sorted(cands, key=lambda c: (codec.degree(c[0]), c[1])):
            if any(codec.divides(m2, m) for m2, _, _ in keep):
                continue
            keep.append((m, j, L))
        for m, j, L in sorted(keep, key=lambda c: c[1]):
            S = spoly(eng, B.polys[i], lts[i], B.lcs[i], B.polys[j], lts[j], B.lcs[j], L)
            r, q, mult = reduce_with_quotients(S, B)
            if r:
                raise ArithmeticError("input is not a Groebner basis")
            vec = _syz_vector(eng, B, i, j, L, q, mult, shift)
            syz.append(vec)
    return syz, out_eng


def _syz_vector(eng, B, i, j, L, q, mult, shift) -> dict:
    """mult*(a*m_i*e_i - b*m_j*e_j) - sum q_k e_k, with integer coefficients."""
    codec = eng.codec
    mi = codec.strip(L - B.lts[i])
    mj = codec.strip(L - B.lts[j])
    vec: dict = {}
    if eng.mod:
        p = eng.mod
        a = pow(B.lcs[i], -1, p)
        b = pow(B.lcs[j], -1, p)
        vec[mi + (i << shift)] = a
        vec[mj + (j << shift)] = (-b) % p
        for k, qk in q.items():
            for u, c in qk.items():
                t = u + (k << shift)
                x = (vec.get(t, 0) - c) % p
                if x:
                    vec[t] = x
                else:
                    vec.pop(t, None)
        return vec
    d = gcd(B.lcs[i], B.lcs[j])
    a, b = B.lcs[j] // d, B.lcs[i] // d
    mult = Fraction(mult)
    num, den = mult.numerator, mult.denominator
    # den * (mult*S) : integer combination
    vec[mi + (i << shift)] = num * a
    vec[mj + (j << shift)] = -num * b
    for k, qk in q.items():
        for u, c in qk.items():
            t = u + (k << shift)
            x = vec.get(t, 0) - c * den
            if x:
                vec[t] = x
            else:
                vec.pop(t, None)
    return vec


def vector_components(vec: dict, eng: Engine, nparts: int) -> list:
    """Split a raw module element into per-component raw dicts."""
    codec = eng.codec
    parts = [dict() for _ in range(nparts)]
    for t, c in vec.items():
        parts[codec.comp(t)][codec.strip(t)] = c
    return parts


@dataclass
class SyzygyModule:
    """Syzygies of a Groebner basis, as vectors of polynomials."""

    ambient_rank: int
    generators: list

    def __len__(self):
        return len(self.generators)


def syzygies(G: ReducedGroebnerBasis) -> SyzygyModule:
    """Schreyer generators of the syzygy module of the basis elements."""
    eng = G._eng
    raws = [G._reducer.polys[i] for i in range(len(G.basis))]
    syz, _ = schreyer_raw(raws, eng)
    ring = G.ring
    out = []
    for vec in syz:
        parts = vector_components(vec, eng, len(raws))
        # reducer_k = lc_k * basis_k, so rescale to the monic basis
        row = []
        for k, part in enumerate(parts):
            if part:
                row.append(from_raw(part, eng, ring) * ring.field(G._reducer.lcs[k]))
            else:
                row.append(ring.zero())
        out.append(_primitive(row))
    return SyzygyModule(len(raws), out)


def _primitive(row: list) -> list:
    """Scale a rational vector so that its first nonzero lead coefficient is 1."""
    for p in row:
        if p:
            c = p.sorted_terms()[0][1]
            return [q / c for q in row]
    return row


def check_syzygy(row: list, basis: list) -> bool:
    acc = basis[0].ring.zero()
    for v, g in zip(row, basis):
        acc = acc + v * g
    return acc.is_zero()

