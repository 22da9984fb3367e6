"""Order-by-order lifting of a first-order deformation, and flatness checks."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..core.poly import Polynomial
from ..errors import ObstructedLifting, PowerSeriesNonTermination
from ..groebner.hilbert import hilbert_data
from ..groebner.ideal import Ideal
from .cohomology import NormalModule, TangentVector
from .linalg import exact_echelon_blocks
from .presentation import Presentation, padd, pmul

log = logging.getLogger(__name__)


@dataclass
class LiftResult:
    """A polynomial one-parameter family ``g(t) = sum_j t^j g^(j)``.

    ``orders[j]`` holds the perturbations ``g^(j)``; ``relations`` the lifted
    syzygies, one list of per-order coefficient vectors per syzygy, which
    certify flatness exactly.
    """

    family: Ideal
    parameter: str
    terminated_at: int
    orders: list
    relations: list
    base: Ideal

    def fiber(self, value) -> Ideal:
        """The member of the family at ``parameter = value``."""
        ring = self.base.ring
        gens = [p.specialize({self.parameter: Fraction(value)}).to_ring(ring) for p in self.family.generators]
        return Ideal(ring, gens)


def _tangent_dicts(pres: Presentation, v: TangentVector) -> list:
    if len(v.perturbations) != len(pres.gens):
        raise ValueError(f"expected {len(pres.gens)} perturbations, got {len(v.perturbations)}")
    return [pres.from_polynomial(p) for p in v.perturbations]


def lift_one_parameter(I: Ideal, v: TangentVector, max_order: int = 8,
                       parameter: str = "t") -> LiftResult:
    """Lift ``v`` order by order, choosing the echelon particular solution.

    Stops once the perturbations and the syzygy corrections both vanish long
    enough that every later order is identically zero.  Raises
    :class:`ObstructedLifting` if some order has no solution and
    :class:`PowerSeriesNonTermination` if ``max_order`` is reached first.
    """
    pres = Presentation(I, use_generators=True, check_dimension=False)
    N = NormalModule(pres)
    h = _tangent_dicts(pres, v)
    if not N.contains(h):
        raise ValueError("tangent vector violates the syzygy conditions")
    syz = pres.syzygies
    r = len(pres.gens)
    g = [pres.gens, h]
    rel = []
    for sigma in syz:
        acc: dict = {}
        for a, hk in zip(sigma, h):
            if a and hk:
                padd(acc, pmul(a, hk))
        b = pres.divide(acc) if acc else [dict() for _ in range(r)]
        rel.append([sigma, [{m: -c for m, c in bk.items()} for bk in b]])

    def last_nonzero() -> int:
        return max((j for j, gj in enumerate(g) if any(gj)), default=0)

    def terminated(k: int) -> bool:
        ng = last_nonzero()
        if ng == 0:
            return all(not any(rs[j]) for rs in rel for j in range(1, len(rs)))
        if k <= ng:
            return False
        return all(not any(rs[j]) for rs in rel for j in range(k - ng + 1, k + 1))

    if terminated(1):
        return _result(I, pres, g, rel, parameter)
    ncols = len(N.columns)
    for k in range(2, max_order + 1):
        residual = []
        for sigma, rs in zip(syz, rel):
            acc: dict = {}
            for i in range(1, k):
                if i < len(rs) and k - i < len(g):
                    for a, gk in zip(rs[i], g[k - i]):
                        if a and gk:
                            padd(acc, pmul(a, gk))
            residual.append(acc)
        nfs = [pres.nf(e) for e in residual]
        if not any(any(x for x in f.values()) for f in nfs):
            gk = [dict() for _ in range(r)]
        else:
            rows = []
            for sigma, f in zip(syz, nfs):
                block = N.constraint_rows_for(sigma)
                for nu, c in f.items():
                    if c:
                        block.setdefault(nu, {})[ncols] = c
                rows += [row for row in block.values() if row]
            E = exact_echelon_blocks(rows, ncols + 1)
            if ncols not in E.free:
                raise ObstructedLifting(k)
            sol = E.kernel[E.free.index(ncols)]
            gk = N.perturbations_of({j: c for j, c in sol.items() if j != ncols})
        g.append(gk)
        for sigma, rs, e in zip(syz, rel, residual):
            acc = dict(e)
            for a, x in zip(sigma, gk):
                if a and x:
                    padd(acc, pmul(a, x))
            b = pres.divide(acc) if acc else [dict() for _ in range(r)]
            rs.append([{m: -c for m, c in bk.items()} for bk in b])
        while len(g) > 1 and not any(g[-1]) and not terminated(k):
            break
        if terminated(k):
            return _result(I, pres, g, rel, parameter)
    raise PowerSeriesNonTermination(max_order)


def _result(I: Ideal, pres: Presentation, g: list, rel: list, parameter: str) -> LiftResult:
    ng = max((j for j, gj in enumerate(g) if any(gj)), default=0)
    g = g[:ng + 1]
    _certify(pres, g, rel)
    base = I.ring
    ring = base.extend([parameter])
    gens = []
    for i in range(len(pres.gens)):
        terms: dict = {}
        for j, gj in enumerate(g):
            for m, c in gj[i].items():
                e = pres.codec.decode(m) + (j,)
                terms[e] = terms.get(e, 0) + Fraction(c)
        gens.append(Polynomial.from_terms(ring, terms))
    orders = [[pres.to_polynomial(x) for x in gj] for gj in g]
    return LiftResult(Ideal(ring, gens), parameter, ng, orders, rel, I)


def _certify(pres: Presentation, g: list, rel: list) -> None:
    """Every lifted relation must vanish identically on the family."""
    for rs in rel:
        top = len(rs) + len(g)
        for k in range(top):
            acc: dict = {}
            for i in range(len(rs)):
                j = k - i
                if 0 <= j < len(g):
                    for a, x in zip(rs[i], g[j]):
                        if a and x:
                            padd(acc, pmul(a, x))
            if acc:
                raise ArithmeticError(f"lifted relation fails at order {k}")


def verify_flat_fiber(fiber, reference: Ideal, value=None) -> bool:
    """Whether the fiber has the Hilbert data of ``reference``.

    ``fiber`` is an :class:`Ideal` or a :class:`LiftResult` together with a
    parameter ``value`` (default 1).
    """
    if isinstance(fiber, LiftResult):
        fiber = fiber.fiber(1 if value is None else value)
    return hilbert_data(fiber) == hilbert_data(reference)
