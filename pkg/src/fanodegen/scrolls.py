"""Rational normal scrolls and rolling factors."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core.poly import Polynomial
from .core.ring import PolyRing, monomial_str
from .errors import InvalidType, NotRollable, OddB3
from .groebner.ideal import Ideal

_LETTERS = "xyzwuvabcdefgh"


@dataclass(frozen=True)
class ScrollDescription:
    """Scroll of type ``(d_0, ..., d_k)``.

    Block ``i`` with ``d_i > 0`` has variables ``<name>0 .. <name>d_i``; every
    zero entry contributes one free variable.  Names default to ``x, y, z, ...``
    for blocks and ``z1, z2, ...`` for free variables.
    """

    type: tuple
    block_names: tuple
    free_names: tuple

    def __init__(self, type: Sequence[int], block_names: Sequence[str] | None = None,
                 free_names: Sequence[str] | None = None):
        t = tuple(int(d) for d in type)
        if not t or any(d < 0 for d in t) or any(a < b for a, b in zip(t, t[1:])):
            raise InvalidType(f"scroll type must be non-increasing and non-negative, got {t}")
        nblocks = sum(1 for d in t if d > 0)
        nfree = len(t) - nblocks
        if nblocks == 0:
            raise InvalidType("scroll type needs a positive entry")
        blocks = tuple(block_names) if block_names else tuple(_LETTERS[:nblocks])
        if len(blocks) != nblocks:
            raise InvalidType(f"expected {nblocks} block names")
        if free_names is None:
            letter = next(c for c in "zwuvabc" if c not in blocks)
            free = tuple(f"{letter}{j + 1}" for j in range(nfree))
        else:
            free = tuple(free_names)
        if len(free) != nfree:
            raise InvalidType(f"expected {nfree} free variable names")
        object.__setattr__(self, "type", t)
        object.__setattr__(self, "block_names", blocks)
        object.__setattr__(self, "free_names", free)

    @property
    def degrees(self) -> tuple:
        return tuple(d for d in self.type if d > 0)

    def block_variables(self) -> list:
        return [[f"{b}{j}" for j in range(d + 1)] for b, d in zip(self.block_names, self.degrees)]

    def variables(self) -> list:
        return [v for blk in self.block_variables() for v in blk] + list(self.free_names)

    def ring(self, field=None) -> PolyRing:
        return PolyRing(self.variables()) if field is None else PolyRing(self.variables(), field)

    @property
    def ambient_dimension(self) -> int:
        return sum(self.type) + len(self.type) - 1

    def matrix(self) -> list:
        """The two rows of variable names of the catalecticant matrix."""
        top, bottom = [], []
        for blk in self.block_variables():
            top += blk[:-1]
            bottom += blk[1:]
        return [top, bottom]

    def successor(self) -> dict:
        """Top-row variable name -> the name below it."""
        top, bottom = self.matrix()
        return dict(zip(top, bottom))


def scroll_ideal(s: ScrollDescription, ring: PolyRing | None = None) -> tuple[list, Ideal]:
    """The matrix (as polynomials) and the ideal of its 2x2 minors."""
    ring = ring or s.ring()
    top, bottom = s.matrix()
    M = [[ring.gen(v) for v in top], [ring.gen(v) for v in bottom]]
    minors = [M[0][a] * M[1][b] - M[0][b] * M[1][a] for a, b in combinations(range(len(top)), 2)]
    return M, Ideal(ring, minors)


def roll(f: Polynomial, s: ScrollDescription, step: int | None = None) -> Polynomial:
    """Roll one factor in every term of ``f``.

    Each term rolls its last eligible top-row variable in ring order, which
    yields the lexicographically greatest of the possible results.  Other
    choices differ by an element of the scroll ideal.
    """
    ring = f.ring
    succ = s.successor()
    pairs = [(ring.index(a), ring.index(b)) for a, b in succ.items()]
    pairs.sort()
    out: dict = {}
    F = ring.field
    for e, c in f.terms.items():
        choice = None
        for a, b in reversed(pairs):
            if e[a] > 0:
                choice = (a, b)
                break
        if choice is None:
            raise NotRollable(monomial_str(ring.variables, e), step)
        a, b = choice
        ne = list(e)
        ne[a] -= 1
        ne[b] += 1
        ne = tuple(ne)
        v = F.normalize(out.get(ne, 0) + c)
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return Polynomial(ring, out)


def roll_room(exps: Sequence[int], s: ScrollDescription, ring: PolyRing) -> int:
    """How many times a monomial can be rolled."""
    room = 0
    for blk in s.block_variables():
        d = len(blk) - 1
        for j, v in enumerate(blk):
            room += exps[ring.index(v)] * (d - j)
    return room


def rolling_chain(f0: Polynomial, s: ScrollDescription, m: int) -> list:
    chain = [f0]
    for i in range(m):
        chain.append(roll(chain[-1], s, step=i + 1))
    return chain


def rolling_divisor_ideal(s: ScrollDescription, f0: Polynomial, m: int) -> Ideal:
    """Scroll minors together with ``f_0, ..., f_m``."""
    _, minors = scroll_ideal(s, f0.ring)
    return Ideal(f0.ring, minors.generators + rolling_chain(f0, s, m))


def h0N_formula(g: int, b2: int, b3: int) -> int:
    """Sections of the normal sheaf of an anticanonically embedded Fano threefold."""
    if b3 % 2:
        raise OddB3(f"b3 must be even, got {b3}")
    return g * g + 3 * g + 22 - b2 + b3 // 2


#: name, degree, b2, b3/2, tabulated h0(N) for the very ample smooth cases
FANO_TABLE = (
    ("V4", 4, 1, 30, 69),
    ("V6", 6, 1, 20, 69),
    ("V8", 8, 1, 14, 75),
    ("V10", 10, 1, 10, 85),
    ("V10'", 10, 2, 10, 84),
    ("V12", 12, 1, 5, 98),
    ("V12_2_6", 12, 2, 6, 96),
    ("V12_2_9", 12, 2, 9, 99),
    ("V12_3", 12, 3, 8, 97),
)


def fano_table_rows() -> list:
    """Each row with the formula value and whether it matches the table."""
    rows = []
    for name, d, b2, half_b3, table in FANO_TABLE:
        g = d // 2 + 1
        value = h0N_formula(g, b2, 2 * half_b3)
        rows.append({"name": name, "degree": d, "genus": g, "b2": b2, "b3": 2 * half_b3,
                     "table": table, "formula": value, "consistent": value == table})
    return rows


__all__ = [
    "ScrollDescription", "scroll_ideal", "roll", "roll_room", "rolling_chain",
    "rolling_divisor_ideal", "h0N_formula", "FANO_TABLE", "fano_table_rows",
]
