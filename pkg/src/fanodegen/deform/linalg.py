"""Exact sparse linear algebra over the rationals via modular methods.

Rows are dicts ``column -> Fraction | int``.  Every rank computed modulo a
prime is a lower bound for the rational rank.  Exact answers come from a
modular reduced echelon form, lifted by rational reconstruction (with CRT
over further primes when needed) and then certified by checking ``C K = 0``
over the integers for the reconstructed kernel ``K``.  The two bounds
together pin the rational rank.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

import flint
import numpy as np

log = logging.getLogger(__name__)

#: 61-bit primes for exact work
PRIMES = [(1 << 61) - 1]
_q = PRIMES[0]
while len(PRIMES) < 12:
    _q -= 2
    if flint.fmpz(_q).is_prime():
        PRIMES.append(_q)

#: small primes for float-exact numpy elimination (p^2 * 2^13 < 2^53)
SMALL_PRIMES = [(1 << 19) - 1]
_q = SMALL_PRIMES[0]
while len(SMALL_PRIMES) < 4:
    _q -= 2
    if flint.fmpz(_q).is_prime():
        SMALL_PRIMES.append(_q)
SMALL_PRIME = SMALL_PRIMES[0]

_VERIFY_CHUNK = 4000


class ReconstructionFailure(ArithmeticError):
    pass


def _mod(c, p: int) -> int:
    if isinstance(c, int):
        return c % p
    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, p) % p


def rational_reconstruction(a: int, m: int) -> Fraction | None:
    """``n/d`` with ``n = a d (mod m)`` and ``|n|, d <= sqrt(m/2)``."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


# --------------------------------------------------------------------------
# blocks


def column_blocks(rows: list, ncols: int) -> list:
    """Connected components of columns linked by common rows.

    Returns ``[(cols, row_indices)]``; isolated columns form blocks without rows.
    """
    parent = list(range(ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rows:
        it = iter(row)
        first = next(it, None)
        if first is None:
            continue
        a = find(first)
        for c in it:
            b = find(c)
            if b != a:
                parent[b] = a
    groups: dict = {}
    for c in range(ncols):
        groups.setdefault(find(c), []).append(c)
    rows_of: dict = {}
    for i, row in enumerate(rows):
        if row:
            rows_of.setdefault(find(next(iter(row))), []).append(i)
    return [(cols, rows_of.get(root, [])) for root, cols in sorted(groups.items(), key=lambda kv: kv[1][0])]


# --------------------------------------------------------------------------
# exact echelon form


@dataclass
class Echelon:
    """Reduced row echelon data of a rational matrix.

    ``kernel`` holds one vector per free column, equal to 1 there and 0 on the
    other free columns, so the coordinates of any kernel element are its
    values on ``free``.
    """

    ncols: int
    pivots: list
    free: list
    kernel: list  # list of dict col -> Fraction

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def nullity(self) -> int:
        return len(self.free)

    def coordinates(self, vec: dict) -> list:
        return [vec.get(f, 0) for f in self.free]


def _rref_mod(rows: list, cols: list, p: int):
    index = {c: i for i, c in enumerate(cols)}
    n = len(cols)
    if not rows:
        return [], None
    dense = []
    for row in rows:
        r = [0] * n
        for c, v in row.items():
            r[index[c]] = _mod(v, p)
        dense.append(r)
    M = flint.nmod_mat(dense, p)
    R, rank = M.rref()
    pivots = []
    entries = R.tolist() if rank else []
    for i in range(rank):
        ri = entries[i]
        j = next(k for k in range(n) if int(ri[k]))
        pivots.append(j)
    return pivots, entries[:rank]


def _integer_rows(rows: list) -> list:
    out = []
    for row in rows:
        den = 1
        for x in row.values():
            if not isinstance(x, int):
                den = lcm(den, Fraction(x).denominator)
        out.append({c: int(x * den) for c, x in row.items()})
    return out


def _verify(rows: list, cols: list, kernel: list) -> bool:
    """Exact check that every row annihilates every kernel vector.

    The products are computed modulo 61-bit primes until their product
    exceeds twice the largest possible absolute entry, so vanishing modulo
    all of them is vanishing over the integers.
    """
    if not kernel or not rows:
        return True
    index = {c: i for i, c in enumerate(cols)}
    n, k = len(cols), len(kernel)
    kcols = _integer_rows(kernel)
    irows = _integer_rows(rows)
    kmax = max(abs(x) for v in kcols for x in v.values())
    rmax = max(sum(abs(x) for x in r.values()) for r in irows if r)
    bound = 2 * kmax * rmax + 1
    modulus = 1
    for p in PRIMES:
        if modulus > bound:
            break
        modulus *= p
        K = np.zeros((n, k), dtype=np.int64)
        for j, v in enumerate(kcols):
            for c, x in v.items():
                K[index[c], j] = x % p
        Kp = flint.nmod_mat(K.tolist(), p)
        zero = None
        for start in range(0, len(irows), _VERIFY_CHUNK):
            chunk = irows[start:start + _VERIFY_CHUNK]
            X = np.zeros((len(chunk), n), dtype=np.int64)
            for i, row in enumerate(chunk):
                for c, x in row.items():
                    X[i, index[c]] = x % p
            P = flint.nmod_mat(X.tolist(), p) * Kp
            if zero is None or zero.nrows() != P.nrows():
                zero = flint.nmod_mat(P.nrows(), k, p)
            if P != zero:
                return False
    else:
        if modulus <= bound:
            raise ReconstructionFailure("entries too large to certify with the available primes")
    return True


def _crt(a: int, m: int, b: int, p: int) -> int:
    t = (b - a) * pow(m, -1, p) % p
    return a + m * t


def exact_echelon(rows: list, cols: list | int, max_primes: int = len(PRIMES)) -> Echelon:
    """Certified reduced echelon data of the rows restricted to ``cols``.

    Tall systems are first cut down to rows independent modulo a small
    prime; the kernel of that subset is then certified against every row.
    """
    if isinstance(cols, int):
        cols = list(range(cols))
    cols = list(cols)
    n = len(cols)
    rows = [r for r in rows if r]
    if not rows:
        kern = [{c: Fraction(1)} for c in cols]
        return Echelon(n, [], list(cols), kern)
    if len(rows) <= 2 * n:
        return _exact_echelon(rows, cols, max_primes, rows)
    for q in SMALL_PRIMES[:3]:
        sel = independent_rows(rows, cols, q)
        E = _exact_echelon([rows[i] for i in sel], cols, max_primes, None)
        if _verify(rows, cols, E.kernel):
            return E
        log.debug("row selection modulo %d missed rational rank", q)
    raise ReconstructionFailure("row selection failed for every small prime")


def _exact_echelon(rows: list, cols: list, max_primes: int, check: list | None) -> Echelon:
    n = len(cols)
    best = None  # (pivots, residues per kernel entry, modulus)
    for p in PRIMES[:max_primes]:
        piv, R = _rref_mod(rows, cols, p)
        if best is not None:
            if len(piv) < len(best[0]) or (len(piv) == len(best[0]) and piv > best[0]):
                continue  # bad prime
            if len(piv) > len(best[0]) or piv < best[0]:
                best = None
        free_idx = [j for j in range(n) if j not in set(piv)]
        # kernel entries: for free f, pivot row i -> -R[i][f]
        res = {(i, f): (-int(R[i][f])) % p for i in range(len(piv)) for f in free_idx}
        if best is None:
            best = (piv, res, p)
        else:
            old_piv, old_res, m = best
            best = (piv, {k: _crt(old_res[k], m, res[k], p) for k in res}, m * p)
        piv, res, m = best
        kernel = []
        ok = True
        for f in free_idx:
            v = {cols[f]: Fraction(1)}
            for i in range(len(piv)):
                a = res[(i, f)]
                if a == 0:
                    continue
                q = rational_reconstruction(a, m)
                if q is None:
                    ok = False
                    break
                v[cols[piv[i]]] = q
            if not ok:
                break
            kernel.append(v)
        if not ok:
            continue
        if check is None or _verify(check, cols, kernel):
            return Echelon(n, [cols[j] for j in piv], [cols[f] for f in free_idx], kernel)
        log.debug("kernel verification failed after modulus of %d bits", m.bit_length())
    raise ReconstructionFailure(f"no certified echelon form with {max_primes} primes")


def exact_echelon_blocks(rows: list, ncols: int) -> Echelon:
    """:func:`exact_echelon` run independently on each column block."""
    pivots, free, kernel = [], [], []
    for cols, ridx in column_blocks(rows, ncols):
        E = exact_echelon([rows[i] for i in ridx], cols)
        pivots += E.pivots
        free += E.free
        kernel += E.kernel
    order = sorted(range(len(free)), key=free.__getitem__)
    return Echelon(ncols, sorted(pivots), [free[i] for i in order], [kernel[i] for i in order])


def exact_rank(rows: list, ncols: int) -> int:
    return exact_echelon_blocks(rows, ncols).rank


# --------------------------------------------------------------------------
# rank lower bounds for large dense systems


class ModpEchelon:
    """Incremental reduced echelon form modulo a small prime, in numpy.

    Entries stay below ``p < 2^19`` so float64 matrix products are exact for
    up to 8192 pivots.
    """

    def __init__(self, ncols: int, p: int = SMALL_PRIME):
        self.n = ncols
        self.p = p
        self.E = np.zeros((0, ncols))
        self.piv: list = []

    @property
    def rank(self) -> int:
        return len(self.piv)

    def add(self, X: np.ndarray) -> list:
        """Adjoin the rows of ``X``; returns the indices of rows that raised the rank."""
        p = self.p
        X = np.mod(X, p)
        if self.piv:
            X = np.mod(X - np.mod(X[:, self.piv] @ self.E, p), p)
        live = np.flatnonzero(np.any(X != 0, axis=1))
        if not len(live):
            return []
        X = X[live]
        # pivot columns of the transpose are the first independent rows
        T, rank = flint.nmod_mat(X.T.astype(np.int64).tolist(), p).rref()
        if not rank:
            return []
        Tl = T.tolist()
        keep = [next(j for j, v in enumerate(Tl[i]) if int(v)) for i in range(rank)]
        R, _ = flint.nmod_mat(X[keep].astype(np.int64).tolist(), p).rref()
        N = np.array([[int(v) for v in row] for row in R.tolist()[:rank]], dtype=float)
        newpiv = [int(j) for j in np.argmax(N != 0, axis=1)]
        if self.piv:
            self.E = np.mod(self.E - np.mod(self.E[:, newpiv] @ N, p), p)
        self.E = np.vstack([self.E, N])
        self.piv += newpiv
        return [int(live[i]) for i in keep]


def _stream(rows_iter, index: dict, ech: ModpEchelon, chunk: int, target: int | None):
    """Feed sparse rows in chunks; yields the global indices of independent rows."""
    buf, ids = [], []
    n, p = ech.n, ech.p

    def flush():
        X = np.zeros((len(buf), n))
        for k, row in enumerate(buf):
            for c, v in row.items():
                X[k, index[c]] = _mod(v, p)
        got = ech.add(X)
        out = [ids[i] for i in got]
        buf.clear()
        ids.clear()
        return out

    for i, row in enumerate(rows_iter):
        if not row:
            continue
        buf.append(row)
        ids.append(i)
        if len(buf) >= chunk:
            yield from flush()
            if target is not None and ech.rank >= target:
                return
    if buf:
        yield from flush()


def independent_rows(rows: list, cols: list, p: int = SMALL_PRIME, chunk: int = 256) -> list:
    """Indices of a maximal subset of rows independent modulo ``p``."""
    ech = ModpEchelon(len(cols), p)
    return sorted(_stream(iter(rows), {c: i for i, c in enumerate(cols)}, ech, chunk, len(cols)))


def rank_lower_bound(rows_iter, ncols: int, target: int | None = None, chunk: int = 256) -> int:
    """A lower bound for the rational rank of a stream of sparse rows.

    Stops early once ``target`` is reached (the caller knows it cannot be
    exceeded).
    """
    ech = ModpEchelon(ncols)
    for _ in _stream(rows_iter, {c: c for c in range(ncols)}, ech, chunk, target):
        pass
    return ech.rank
