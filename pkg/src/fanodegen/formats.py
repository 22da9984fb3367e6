"""Readers and writers for ``.ideal`` and ``.poly`` files.

``.ideal``: the first nonempty line is ``ring`` followed by the variable
names (spaces or commas); each further nonempty line is one polynomial.
``.poly``: ``#`` comment lines are ignored; the first data line is ``d n``,
followed by ``n`` lines of ``d`` integers, the vertices.
"""
from __future__ import annotations

import re
from pathlib import Path

from .core.field import QQ
from .core.parse import parse_polynomial
from .core.ring import PolyRing
from .errors import FileFormatError, PolynomialSyntaxError, UnknownVariable
from .groebner.ideal import Ideal


def _numbered(text: str):
    for i, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield i, s


def parse_ideal_text(text: str, path="<text>", field=QQ) -> Ideal:
    lines = list(_numbered(text))
    if not lines:
        raise FileFormatError(path, 1, "empty ideal file")
    n, head = lines[0]
    words = [w for w in re.split(r"[\s,]+", head) if w]
    if words[0] != "ring" or len(words) < 2:
        raise FileFormatError(path, n, "first line must be 'ring' followed by variable names")
    try:
        ring = PolyRing(words[1:], field)
    except ValueError as e:
        raise FileFormatError(path, n, str(e)) from None
    gens = []
    for n, s in lines[1:]:
        try:
            gens.append(parse_polynomial(s, ring))
        except (PolynomialSyntaxError, UnknownVariable) as e:
            raise FileFormatError(path, n, str(e)) from None
    return Ideal(ring, gens)


def read_ideal(path, field=QQ) -> Ideal:
    p = Path(path)
    return parse_ideal_text(p.read_text(), p, field)


def format_ideal(I: Ideal) -> str:
    out = ["ring " + " ".join(I.ring.variables)]
    out += [str(g) for g in I.generators]
    return "\n".join(out) + "\n"


def parse_poly_text(text: str, path="<text>") -> list:
    lines = list(_numbered(text))
    if not lines:
        raise FileFormatError(path, 1, "empty polytope file")
    n0, head = lines[0]
    try:
        d, n = (int(x) for x in head.split())
    except ValueError:
        raise FileFormatError(path, n0, "first data line must be 'd n'") from None
    if len(lines) - 1 != n:
        raise FileFormatError(path, n0, f"expected {n} vertex lines, found {len(lines) - 1}")
    verts = []
    for k, s in lines[1:]:
        try:
            v = [int(x) for x in s.split()]
        except ValueError:
            raise FileFormatError(path, k, "vertex coordinates must be integers") from None
        if len(v) != d:
            raise FileFormatError(path, k, f"expected {d} coordinates, found {len(v)}")
        verts.append(tuple(v))
    return verts


def read_poly(path) -> list:
    p = Path(path)
    return parse_poly_text(p.read_text(), p)
