"""Polynomial rings, monomials and monomial orders."""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Sequence

from ..errors import ExponentOverflow, RingMismatch, UnknownVariable
from .field import QQ

EXPONENT_LIMIT = 2**63
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class PolyRing:
    """``k[x_0, ..., x_n]`` with an ordered variable list.

    The list order is the order every monomial order refers to.
    """

    def __init__(self, variables: Sequence[str], field=QQ):
        names = tuple(_canonical_name(v) for v in variables)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for v in names:
            if not _NAME_RE.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        self.variables = names
        self.field = field
        self.nvars = len(names)
        self._index = {v: i for i, v in enumerate(names)}

    def index(self, name: str) -> int:
        name = _canonical_name(name)
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def __contains__(self, name) -> bool:
        return _canonical_name(name) in self._index

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.field!r})"

    # constructors -------------------------------------------------------
    def gen(self, name: str):
        from .poly import Polynomial

        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def zero(self):
        from .poly import Polynomial

        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        from .poly import Polynomial

        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c != 0 else {})

    def monomial(self, exps: Sequence[int], coeff=1):
        from .poly import Polynomial

        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c != 0 else {})

    def __call__(self, text: str):
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.variables, field)

    def extend(self, names: Sequence[str], front: bool = False) -> "PolyRing":
        names = list(names)
        vs = names + list(self.variables) if front else list(self.variables) + names
        return PolyRing(vs, self.field)


def _canonical_name(name: str) -> str:
    # x[3] and x3 name the same variable
    m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_]*)\[(\d+)\]\s*", name)
    if m:
        return m.group(1) + m.group(2)
    return name.strip()


@dataclass(frozen=True)
class Monomial:
    ring: PolyRing
    exponents: tuple

    def __post_init__(self):
        if len(self.exponents) != self.ring.nvars:
            raise ValueError("exponent vector length does not match ring")
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")
        if any(e >= EXPONENT_LIMIT for e in self.exponents):
            raise ExponentOverflow("exponent exceeds 2^63")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if other.ring != self.ring:
            raise RingMismatch("monomials from different rings")
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self):
        return monomial_str(self.ring.variables, self.exponents)


def monomial_str(names, exps) -> str:
    parts = []
    for v, e in zip(names, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


# --------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``variant`` is one of ``lex``, ``grevlex``, ``weight`` or ``elim``.  Weight
    orders compare the weight first and fall back to ``tiebreak``.  Elimination
    orders compare the exponents of the ``block`` variables with ``outer``
    first, then the remaining variables with ``inner``.
    """

    variant: str
    weights: tuple | None = None
    tiebreak: "MonomialOrder | None" = None
    block: tuple | None = None
    outer: "MonomialOrder | None" = None
    inner: "MonomialOrder | None" = None

    def keyfunc(self, ring: PolyRing) -> Callable[[tuple], tuple]:
        return _make_key(self, ring, tuple(range(ring.nvars)))

    def compare(self, a: Monomial, b: Monomial) -> Cmp:
        if a.ring != b.ring:
            raise RingMismatch("monomials from different rings")
        key = self.keyfunc(a.ring)
        ka, kb = key(a.exponents), key(b.exponents)
        if ka == kb:
            return Cmp.EQ
        return Cmp.GT if ka > kb else Cmp.LT

    def describe(self) -> str:
        if self.variant in ("lex", "grevlex"):
            return self.variant
        if self.variant == "weight":
            return "weight:" + ",".join(str(w) for w in self.weights)
        return "elim:" + ",".join(self.block)


def lex() -> MonomialOrder:
    return MonomialOrder("lex")


def grevlex() -> MonomialOrder:
    return MonomialOrder("grevlex")


def weight(w: Sequence[int], tiebreak: MonomialOrder | None = None) -> MonomialOrder:
    return MonomialOrder("weight", weights=tuple(w), tiebreak=tiebreak or grevlex())


def elimination(block: Sequence[str], outer: MonomialOrder | None = None,
                inner: MonomialOrder | None = None) -> MonomialOrder:
    return MonomialOrder("elim", block=tuple(_canonical_name(b) for b in block),
                         outer=outer or grevlex(), inner=inner or grevlex())


def _make_key(order: MonomialOrder, ring: PolyRing, positions: tuple) -> Callable:
    """Key on full exponent vectors that only looks at ``positions``."""
    v = order.variant
    pos = positions
    if v == "lex":
        if pos == tuple(range(ring.nvars)):
            return lambda e: e
        return lambda e: tuple(e[i] for i in pos)
    if v == "grevlex":
        rev = pos[::-1]
        return lambda e: (sum(e[i] for i in pos), tuple(-e[i] for i in rev))
    if v == "weight":
        w = order.weights
        if len(w) != len(pos):
            raise ValueError(f"weight vector has length {len(w)}, expected {len(pos)}")
        tie = _make_key(order.tiebreak, ring, pos)
        pairs = [(i, wi) for i, wi in zip(pos, w) if wi]
        return lambda e: (sum(wi * e[i] for i, wi in pairs), tie(e))
    if v == "elim":
        blk = {ring.index(b) for b in order.block}
        bpos = tuple(i for i in pos if i in blk)
        rpos = tuple(i for i in pos if i not in blk)
        ko = _make_key(order.outer, ring, bpos)
        ki = _make_key(order.inner, ring, rpos)
        return lambda e: (ko(e), ki(e))
    raise ValueError(f"unknown order variant {v!r}")


def compare_monomials(order: MonomialOrder, a: Monomial, b: Monomial) -> Cmp:
    return order.compare(a, b)


def parse_order(text: str) -> MonomialOrder:
    """Parse the CLI spelling ``grevlex|lex|weight:<csv>|elim:<vars>``."""
    text = text.strip()
    if text in ("grevlex", "lex"):
        return MonomialOrder(text)
    if text.startswith("weight:"):
        return weight([int(x) for x in text[7:].split(",") if x.strip()])
    if text.startswith("elim:"):
        return elimination([x.strip() for x in text[5:].split(",") if x.strip()])
    raise ValueError(f"unknown monomial order {text!r}")
