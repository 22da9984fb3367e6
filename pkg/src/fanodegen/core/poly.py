"""Sparse multivariate polynomials with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import ExponentOverflow, RingMismatch, UnknownVariable
from .ring import EXPONENT_LIMIT, MonomialOrder, PolyRing, grevlex, monomial_str


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object]):
        self.ring = ring
        self.terms = dict(terms)
        self._hash = None

    @classmethod
    def from_terms(cls, ring: PolyRing, terms: Mapping[tuple, object]) -> "Polynomial":
        F = ring.field
        out = {}
        for e, c in terms.items():
            c = F(c)
            if c != 0:
                out[tuple(e)] = c
        return cls(ring, out)

    # basic queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.ring.nvars: self.ring.field(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), self.ring.field(0))

    def variables_used(self) -> set:
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return {self.ring.variables[i] for i in used}

    def leading_term(self, order: MonomialOrder | None = None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = (order or grevlex()).keyfunc(self.ring)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder | None = None) -> tuple:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder | None = None):
        key = (order or grevlex()).keyfunc(self.ring)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self * self.ring.field.inv(c)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.normalize(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.normalize(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        F = self.ring.field
        if not isinstance(other, Polynomial):
            c = F(other)
            if c == 0:
                return Polynomial(self.ring, {})
            return Polynomial(self.ring, {e: F.normalize(a * c) for e, a in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        res = {}
        for e, c in out.items():
            c = F.normalize(c)
            if c:
                res[e] = c
        if res and max(max(e) for e in res) >= EXPONENT_LIMIT:
            raise ExponentOverflow("exponent exceeds 2^63")
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c):
        return self * self.ring.field.inv(self.ring.field(c))

    def mul_monomial(self, exps, coeff=1) -> "Polynomial":
        F = self.ring.field
        c = F(coeff)
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): F.normalize(v * c) for e, v in self.terms.items()},
        )

    def derivative(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        F = self.ring.field
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                v = F.normalize(c * e[i])
                if v:
                    out[tuple(d)] = v
        return Polynomial(self.ring, out)

    def specialize(self, assignment: Mapping[str, object]) -> "Polynomial":
        return specialize(self, assignment)

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Reinterpret in a ring containing all used variables (by name)."""
        pos = []
        for v in self.ring.variables:
            pos.append(ring.index(v) if v in ring else None)
        out = {}
        for e, c in self.terms.items():
            new = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    if pos[i] is None:
                        raise RingMismatch(f"variable {self.ring.variables[i]} not in target ring")
                    new[pos[i]] = a
            out[tuple(new)] = ring.field(self.ring.field.to_fraction(c))
        return Polynomial.from_terms(ring, out)

    # printing -------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        F = self.ring.field
        parts = []
        for e, c in self.sorted_terms():
            c = F.to_fraction(c)
            neg = c < 0
            a = -c if neg else c
            mono = monomial_str(names, e)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def specialize(p: Polynomial, assignment: Mapping[str, object]) -> Polynomial:
    """Apply the substitution homomorphism ``x -> assignment[x]``.

    Values may be rationals or polynomials; polynomial values fix the target
    ring, and variables left unassigned are carried over by name.
    """
    ring = p.ring
    targets = {v for v in assignment.values() if isinstance(v, Polynomial)}
    rings = {t.ring for t in targets}
    if len(rings) > 1:
        raise RingMismatch("substitution values live in different rings")
    target = rings.pop() if rings else ring
    for name in assignment:
        if name not in ring:
            raise UnknownVariable(name)
    images = []
    for v in ring.variables:
        if v in assignment:
            val = assignment[v]
            images.append(val if isinstance(val, Polynomial) else target.constant(val))
        else:
            if v not in target:
                raise RingMismatch(f"variable {v} has no image in the target ring")
            images.append(target.gen(v))
    cache: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] ** k
        return cache[key]

    out = target.zero()
    for e, c in p.terms.items():
        term = target.constant(target.field(ring.field.to_fraction(c)) if target.field != ring.field else c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    return out
