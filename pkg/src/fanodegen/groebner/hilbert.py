"""Hilbert series and polynomials from monomial initial ideals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from ..core.ring import grevlex


def _minimalize(gens) -> tuple:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _numerator(gens: tuple, memo: dict) -> list:
    """Numerator ``N(t)`` with ``HS(S/M) = N(t)/(1-t)^n`` (pivot recursion)."""
    if not gens:
        return [1]
    hit = memo.get(gens)
    if hit is not None:
        return hit
    n = len(gens[0])
    # pairwise coprime generators: product formula
    supp = [frozenset(i for i, a in enumerate(g) if a) for g in gens]
    seen: set = set()
    coprime = True
    for s in supp:
        if seen & s:
            coprime = False
            break
        seen |= s
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            f = [0] * (d + 1)
            f[0], f[d] = 1, -1
            out = _pmul(out, f)
        memo[gens] = out
        return out
    # pivot on the variable occurring in most mixed generators; a pure power
    # pivot would already lie in the ideal
    mixed = [g for g, s in zip(gens, supp) if len(s) > 1]
    counts = [0] * n
    for g in mixed:
        for i, a in enumerate(g):
            if a:
                counts[i] += 1
    v = max(range(n), key=lambda i: counts[i])
    exps = sorted(g[v] for g in mixed if g[v])
    e = exps[len(exps) // 2]
    pivot = tuple(e if i == v else 0 for i in range(n))
    plus = _minimalize(gens + (pivot,))
    colon = _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens))
    a = _numerator(plus, memo)
    b = _numerator(colon, memo)
    out = _padd(a, [0] * e + b)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    memo[gens] = out
    return out


def hilbert_series_monomial(I) -> tuple[list, int]:
    """Reduced Hilbert series ``Q(t)/(1-t)^d`` of ``S/I`` for a monomial ideal.

    Returns ``(Q coefficients lowest first, d)``; ``d`` is the Krull dimension.
    Accepts an :class:`Ideal` of monomials or a list of exponent tuples plus
    the number of variables via ``(gens, nvars)``.
    """
    if isinstance(I, tuple):
        gens, n = I
    else:
        n = I.ring.nvars
        gens = []
        for g in I.generators:
            if not g.is_monomial():
                raise ValueError(f"{g} is not a monomial")
            gens.append(next(iter(g.terms)))
    gens = _minimalize(tuple(tuple(g) for g in gens))
    if any(sum(g) == 0 for g in gens):
        return [0], 0
    num = _numerator(gens, {})
    d = n
    # divide out factors of (1 - t)
    while d > 0 and sum(num) == 0:
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        d -= 1
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num, d


@dataclass(frozen=True)
class HilbertData:
    """Hilbert data of ``Proj(S/I)``.

    ``dimension`` is projective (Krull minus one).  ``hilbert_polynomial`` holds
    rational coefficients lowest degree first.  ``genus`` is filled in for
    threefolds of even degree.
    """

    dimension: int
    degree: int
    hilbert_polynomial: tuple
    genus: int | None
    numerator: tuple

    def __call__(self, k: int) -> Fraction:
        return sum(c * k**i for i, c in enumerate(self.hilbert_polynomial))

    def polynomial_str(self, var: str = "n") -> str:
        parts = []
        for i in range(len(self.hilbert_polynomial) - 1, -1, -1):
            c = self.hilbert_polynomial[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            a = abs(c)
            body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "degree": self.degree,
            "genus": self.genus,
            "hilbert_polynomial": [str(c) for c in self.hilbert_polynomial],
            "numerator": list(self.numerator),
        }


def _poly_from_series(num: list, d: int) -> tuple:
    """Hilbert polynomial coefficients of ``num/(1-t)^d``."""
    if d == 0:
        return ()
    # H(k) = sum_i q_i * C(k - i + d - 1, d - 1), a polynomial in k of degree d-1
    coeffs = [Fraction(0)] * d
    for i, q in enumerate(num):
        if not q:
            continue
        # expand C(k - i + d - 1, d - 1) = prod_{j=1}^{d-1} (k - i + j) / (d-1)!
        poly = [Fraction(1)]
        for j in range(1, d):
            a = j - i
            poly = [(poly[m - 1] if m >= 1 else 0) + a * (poly[m] if m < len(poly) else 0)
                    for m in range(len(poly) + 1)]
        f = factorial(d - 1)
        for m, c in enumerate(poly):
            coeffs[m] += q * Fraction(c) / f
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def hilbert_data(I) -> HilbertData:
    """Hilbert data of a homogeneous ideal, computed on its grevlex initial ideal."""
    from .ideal import initial_ideal

    M = I if I.is_monomial else initial_ideal(I, grevlex())
    num, d = hilbert_series_monomial(M)
    hp = _poly_from_series(num, d)
    degree = sum(num)
    dim = d - 1
    genus = degree // 2 + 1 if dim == 3 and degree % 2 == 0 else None
    return HilbertData(dim, degree, hp, genus, tuple(num))


def hilbert_function(num: list, d: int, k: int) -> int:
    """Value of the Hilbert function ``dim (S/I)_k`` from the reduced series."""
    if d == 0:
        return num[k] if k < len(num) else 0
    return sum(q * comb(k - i + d - 1, d - 1) for i, q in enumerate(num) if i <= k)
