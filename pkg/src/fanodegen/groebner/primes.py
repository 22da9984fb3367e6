"""Minimal primes of square-free monomial ideals."""
from __future__ import annotations

from ..errors import NotSquareFreeMonomial
from .ideal import Ideal


def _supports(I: Ideal) -> list:
    out = []
    for g in I.generators:
        if not g.is_monomial():
            raise NotSquareFreeMonomial(f"{g} is not a monomial")
        (e,) = g.terms
        if any(a > 1 for a in e):
            raise NotSquareFreeMonomial(f"{g} is not square-free")
        out.append(frozenset(i for i, a in enumerate(e) if a))
    return out


def minimal_vertex_covers(edges: list) -> list:
    """All minimal sets meeting every edge (edges are frozensets)."""
    edges = sorted(set(edges), key=lambda s: (len(s), sorted(s)))
    covers = [frozenset()]
    for e in edges:
        nxt = set()
        for c in covers:
            if c & e:
                nxt.add(c)
            else:
                for v in e:
                    nxt.add(c | {v})
        covers = [c for c in nxt if not any(d < c for d in nxt)]
    return covers


def minimal_primes_monomial(I: Ideal) -> list:
    """Minimal primes of ``I``, each an :class:`Ideal` generated by variables.

    These are the minimal vertex covers of the hypergraph of generator
    supports, equivalently complements of facets of the associated complex.
    """
    ring = I.ring
    supp = _supports(I)
    if any(not s for s in supp):
        return []
    covers = minimal_vertex_covers(supp)
    covers.sort(key=lambda c: (len(c), sorted(c)))
    return [Ideal(ring, [ring.gen(ring.variables[i]) for i in sorted(c)]) for c in covers]
