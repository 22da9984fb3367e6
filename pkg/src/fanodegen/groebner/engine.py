"""Buchberger kernel on packed monomials.

Terms are Python ints: exponent ``i`` lives in bits ``[W*i, W*i+W)`` whose top
bit is a guard, and the module component sits above all exponent fields.
Monomial multiplication is integer addition and divisibility is a single
borrow test.  Polynomials are plain dicts ``term -> coefficient``.

Coefficients are ints.  Over the rationals polynomials are kept primitive and
reductions are fraction free; over a prime field ``mod`` is set and basis
elements are monic.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from ..errors import BudgetExceeded, ExponentOverflow

WIDTH = 16
MAX_EXPONENT = (1 << (WIDTH - 1)) - 1


class Codec:
    """Pack ``(comp, exps)`` pairs into ints and back."""

    def __init__(self, nvars: int):
        self.n = nvars
        self.shifts = [WIDTH * i for i in range(nvars)]
        self.guard = sum(1 << (WIDTH * i + WIDTH - 1) for i in range(nvars))
        self.comp_shift = WIDTH * nvars
        self.vars_mask = (1 << self.comp_shift) - 1
        self._fmask = (1 << WIDTH) - 1

    def encode(self, exps: Sequence[int], comp: int = 0) -> int:
        v = comp << self.comp_shift
        for s, e in zip(self.shifts, exps):
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
            v |= e << s
        return v

    def decode(self, m: int) -> tuple:
        f = self._fmask
        return tuple((m >> s) & f for s in self.shifts)

    def comp(self, m: int) -> int:
        return m >> self.comp_shift

    def divides(self, a: int, b: int) -> bool:
        cs = self.comp_shift
        if (a >> cs) != (b >> cs):
            return False
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        f = self._fmask
        v = (a >> self.comp_shift) << self.comp_shift
        for s in self.shifts:
            x, y = (a >> s) & f, (b >> s) & f
            v |= (x if x > y else y) << s
        return v

    def coprime(self, a: int, b: int) -> bool:
        f = self._fmask
        for s in self.shifts:
            if (a >> s) & f and (b >> s) & f:
                return False
        return True

    def degree(self, m: int) -> int:
        f = self._fmask
        return sum((m >> s) & f for s in self.shifts)

    def strip(self, m: int) -> int:
        return m & self.vars_mask


class Engine:
    """Holds the codec, the cached term order and the coefficient domain."""

    def __init__(self, nvars: int, term_key: Callable[[int, tuple], object],
                 mod: int | None = None, comp_degrees: Sequence[int] | None = None):
        self.codec = Codec(nvars)
        self._term_key = term_key
        self._kcache: dict = {}
        self.mod = mod
        self.comp_degrees = list(comp_degrees) if comp_degrees else None

    def key(self, m: int):
        k = self._kcache.get(m)
        if k is None:
            c = self.codec
            k = self._term_key(c.comp(m), c.decode(m))
            self._kcache[m] = k
        return k

    def lead(self, f: dict) -> int:
        return max(f, key=self.key)

    def tdeg(self, m: int) -> int:
        d = self.codec.degree(m)
        if self.comp_degrees:
            d += self.comp_degrees[self.codec.comp(m)]
        return d

    def sugar(self, f: dict) -> int:
        return max(self.tdeg(m) for m in f)

    # coefficient helpers ----------------------------------------------------
    def normalize(self, f: dict) -> dict:
        """Primitive with positive leading coefficient, or monic mod p."""
        if not f:
            return f
        lt = self.lead(f)
        if self.mod:
            p = self.mod
            inv = pow(f[lt], -1, p)
            return {m: c * inv % p for m, c in f.items()}
        g = 0
        for c in f.values():
            g = gcd(g, c)
            if g == 1:
                break
        if f[lt] < 0:
            g = -g
        if g == 1:
            return f
        return {m: c // g for m, c in f.items()}

    def to_fractions(self, f: dict) -> dict:
        if not f:
            return {}
        lc = f[self.lead(f)]
        if self.mod:
            inv = pow(lc, -1, self.mod)
            return {m: c * inv % self.mod for m, c in f.items()}
        return {m: Fraction(c, lc) for m, c in f.items()}


class Basis:
    """A growing list of basis elements with a divisor lookup."""

    def __init__(self, eng: Engine):
        self.eng = eng
        self.polys: list = []
        self.lts: list = []
        self.lcs: list = []
        self.active: list = []

    def add(self, f: dict) -> int:
        lt = self.eng.lead(f)
        self.polys.append(f)
        self.lts.append(lt)
        self.lcs.append(f[lt])
        return len(self.polys) - 1

    def find_divisor(self, t: int, among=None):
        div = self.eng.codec.divides
        lts = self.lts
        for i in (self.active if among is None else among):
            if div(lts[i], t):
                return i
        return None


def reduce_poly(f: dict, basis: Basis, among=None, full: bool = True):
    """Reduce ``f`` by ``basis``; returns ``(remainder, multiplier)``.

    ``multiplier * f`` and the remainder differ by an element of the span of
    the basis (``multiplier`` is 1 mod p and a Fraction over the rationals).
    """
    eng = basis.eng
    key = eng.key
    mod = eng.mod
    f = dict(f)
    r: dict = {}
    mult = 1
    polys, lts, lcs = basis.polys, basis.lts, basis.lcs
    steps = 0
    while f:
        t = max(f, key=key)
        c = f[t]
        i = basis.find_divisor(t, among)
        if i is None:
            if not full:
                r.update(f)
                break
            r[t] = c
            del f[t]
            continue
        g = polys[i]
        m = t - lts[i]
        if mod:
            b = c * pow(lcs[i], -1, mod) % mod
            for u, v in g.items():
                w = u + m
                x = (f.get(w, 0) - b * v) % mod
                if x:
                    f[w] = x
                else:
                    f.pop(w, None)
        else:
            gl = lcs[i]
            d = gcd(c, gl)
            a, b = gl // d, c // d
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for u in f:
                    f[u] *= a
                for u in r:
                    r[u] *= a
                mult *= a
            for u, v in g.items():
                w = u + m
                x = f.get(w, 0) - b * v
                if x:
                    f[w] = x
                else:
                    f.pop(w, None)
            steps += 1
            if a != 1 and steps % 8 == 0:
                cg = 0
                for v in f.values():
                    cg = gcd(cg, v)
                    if cg == 1:
                        break
                if cg > 1:
                    for v in r.values():
                        cg = gcd(cg, v)
                        if cg == 1:
                            break
                if cg > 1:
                    for u in f:
                        f[u] //= cg
                    for u in r:
                        r[u] //= cg
                    mult = Fraction(mult, cg)
    return r, (1 if mod else Fraction(mult))


def reduce_with_quotients(f: dict, basis: Basis, among=None):
    """Full division recording quotients.

    Returns ``(remainder, quotients, multiplier)`` with
    ``multiplier * f = sum_i quotients[i] * basis[i] + remainder``.
    """
    eng = basis.eng
    key = eng.key
    mod = eng.mod
    f = dict(f)
    r: dict = {}
    q: dict = {}
    mult = 1
    polys, lts, lcs = basis.polys, basis.lts, basis.lcs
    while f:
        t = max(f, key=key)
        c = f[t]
        i = basis.find_divisor(t, among)
        if i is None:
            r[t] = c
            del f[t]
            continue
        g = polys[i]
        m = t - lts[i]
        if mod:
            b = c * pow(lcs[i], -1, mod) % mod
            for u, v in g.items():
                w = u + m
                x = (f.get(w, 0) - b * v) % mod
                if x:
                    f[w] = x
                else:
                    f.pop(w, None)
            qi = q.setdefault(i, {})
            qi[m] = (qi.get(m, 0) + b) % mod
        else:
            gl = lcs[i]
            d = gcd(c, gl)
            a, b = gl // d, c // d
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for u in f:
                    f[u] *= a
                for u in r:
                    r[u] *= a
                for qi in q.values():
                    for u in qi:
                        qi[u] *= a
                mult *= a
            for u, v in g.items():
                w = u + m
                x = f.get(w, 0) - b * v
                if x:
                    f[w] = x
                else:
                    f.pop(w, None)
            qi = q.setdefault(i, {})
            qi[m] = qi.get(m, 0) + b
    q = {i: {u: v for u, v in qi.items() if v} for i, qi in q.items()}
    return r, {i: qi for i, qi in q.items() if qi}, mult


def spoly(eng: Engine, f: dict, lf: int, cf: int, g: dict, lg: int, cg: int, L: int) -> dict:
    mf, mg = L - lf, L - lg
    out: dict = {}
    if eng.mod:
        p = eng.mod
        a, b = pow(cf, -1, p), pow(cg, -1, p)
        for u, v in f.items():
            out[u + mf] = v * a % p
        for u, v in g.items():
            w = u + mg
            x = (out.get(w, 0) - v * b) % p
            if x:
                out[w] = x
            else:
                out.pop(w, None)
        return out
    d = gcd(cf, cg)
    a, b = cg // d, cf // d
    for u, v in f.items():
        out[u + mf] = v * a
    for u, v in g.items():
        w = u + mg
        x = out.get(w, 0) - v * b
        if x:
            out[w] = x
        else:
            out.pop(w, None)
    return out


def check_overflow(eng: Engine, m: int):
    if m & eng.codec.guard:
        raise ExponentOverflow("exponent overflow in Groebner computation")


def buchberger(gens: list, eng: Engine, max_pairs: int | None = None,
               module: bool = False, max_degree: int | None = None) -> Basis:
    """Buchberger's algorithm with Gebauer-Moeller pair elimination.

    Pairs are selected by sugar (the normal strategy on homogeneous input).
    Returns a :class:`Basis` whose ``active`` indices form a minimal Groebner
    basis; call :func:`interreduce` for the reduced one.
    """
    codec = eng.codec
    B = Basis(eng)
    sugar: list = []
    pairs: list = []  # [sugar, lcm, i, j, alive]
    processed = 0

    def update(h: int):
        lth = B.lts[h]
        C = []
        for g in B.active:
            ltg = B.lts[g]
            if codec.comp(ltg) != codec.comp(lth):
                continue
            C.append((g, codec.lcm(lth, ltg)))
        D = []
        for idx, (g1, L1) in enumerate(C):
            cop = (not module) and codec.coprime(lth, B.lts[g1])
            if cop:
                D.append((g1, L1, True))
                continue
            dominated = False
            for g2, L2 in C[idx + 1:]:
                if codec.divides(L2, L1):
                    dominated = True
                    break
            if not dominated:
                for g2, L2, _ in D:
                    if codec.divides(L2, L1):
                        dominated = True
                        break
            if not dominated:
                D.append((g1, L1, False))
        for p in pairs:
            if not p[4]:
                continue
            L = p[1]
            i, j = p[2], p[3]
            if codec.divides(lth, L):
                Li = codec.lcm(B.lts[i], lth)
                Lj = codec.lcm(B.lts[j], lth)
                if Li != L and Lj != L:
                    p[4] = False
        for g1, L1, cop in D:
            if cop:
                continue
            s = max(sugar[g1] + eng.tdeg(L1) - eng.tdeg(B.lts[g1]),
                    sugar[h] + eng.tdeg(L1) - eng.tdeg(lth))
            pairs.append([s, L1, g1, h, True])
        B.active = [g for g in B.active if not codec.divides(lth, B.lts[g])]
        B.active.append(h)

    # seed with the inputs, smallest first
    seeds = [eng.normalize(dict(f)) for f in gens if f]
    seeds.sort(key=lambda f: (eng.sugar(f), eng.key(eng.lead(f))))
    for f in seeds:
        r, _ = reduce_poly(f, B)
        if r:
            r = eng.normalize(r)
            h = B.add(r)
            sugar.append(max(eng.sugar(f), eng.sugar(r)))
            update(h)

    while True:
        live = [p for p in pairs if p[4]]
        pairs[:] = live
        if not live:
            break
        best = min(live, key=lambda p: (p[0], eng.key(p[1])))
        best[4] = False
        s, L, i, j, _ = best
        if max_degree is not None and s > max_degree:
            continue
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise BudgetExceeded(f"Groebner basis needed more than {max_pairs} pairs")
        check_overflow(eng, L)
        S = spoly(eng, B.polys[i], B.lts[i], B.lcs[i], B.polys[j], B.lts[j], B.lcs[j], L)
        if not S:
            continue
        r, _ = reduce_poly(S, B)
        if r:
            r = eng.normalize(r)
            h = B.add(r)
            sugar.append(max(s, eng.sugar(r)))
            update(h)
    return B


def interreduce(B: Basis) -> list:
    """Reduced basis (raw dicts, normalized) from the active elements."""
    eng = B.eng
    act = sorted(B.active, key=lambda i: eng.key(B.lts[i]))
    # drop elements whose leading term is divisible by another's
    keep = []
    for i in act:
        if not any(j != i and eng.codec.divides(B.lts[j], B.lts[i]) for j in keep):
            keep.append(i)
    out = []
    for i in keep:
        others = [j for j in keep if j != i]
        f = B.polys[i]
        lt = B.lts[i]
        lc = f[lt]
        tail = {m: c for m, c in f.items() if m != lt}
        r, mult = reduce_poly(tail, B, among=others)
        # f ~ lc*lt + tail,   mult*tail = r (mod others)
        if eng.mod:
            g = dict(r)
            g[lt] = lc
        else:
            mult = Fraction(mult)
            num, den = mult.numerator, mult.denominator
            # mult*f = mult*lc*lt + r  ->  scale to integers
            g = {m: c * den for m, c in r.items()}
            g[lt] = lc * num
        out.append(eng.normalize(g))
    out.sort(key=lambda f: eng.key(eng.lead(f)), reverse=True)
    return out
