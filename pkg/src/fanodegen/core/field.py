"""Coefficient fields: exact rationals and prime fields."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

DEFAULT_PRIME = 32003


class RationalField:
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    characteristic = 0
    name = "QQ"

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, str):
            return Fraction(value)
        return Fraction(value)

    def normalize(self, c):
        return c

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(c)

    def to_fraction(self, c) -> Fraction:
        return Fraction(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a prime ``p``; elements are ints in ``[0, p)``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"fp{p}"

    def __call__(self, value) -> int:
        p = self.p
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def normalize(self, c):
        return c % self.p

    def inv(self, c):
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def to_fraction(self, c) -> Fraction:
        # symmetric representative
        c %= self.p
        return Fraction(c - self.p if c > self.p // 2 else c)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def field_from_name(name: str):
    """Parse ``rational``/``QQ`` or ``fp<p>`` into a field object."""
    if name in ("rational", "QQ", "qq", "rationals"):
        return QQ
    if name.startswith("fp"):
        tail = name[2:]
        return PrimeField(int(tail) if tail else DEFAULT_PRIME)
    raise ValueError(f"unknown coefficient field {name!r}")


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
