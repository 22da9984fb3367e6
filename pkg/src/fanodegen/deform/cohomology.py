"""Normal module, T^1 and T^2 in degree zero.

Every space is the kernel or cokernel of an explicit rational matrix whose
columns are (generator, standard monomial) pairs.  Column blocks that share
no rows are solved separately, which splits torus-invariant ideals into
many small systems.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..core.poly import Polynomial
from ..groebner.engine import Basis, reduce_with_quotients
from ..groebner.ideal import Ideal
from ..groebner.syzygy import schreyer_raw, vector_components
from .linalg import Echelon, column_blocks, exact_echelon, exact_echelon_blocks, rank_lower_bound
from .presentation import Presentation, padd, pmul

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TangentVector:
    """A first-order deformation: one perturbation per generator."""

    perturbations: tuple

    def __post_init__(self):
        object.__setattr__(self, "perturbations", tuple(self.perturbations))

    @property
    def ring(self):
        return self.perturbations[0].ring

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.perturbations)

    def __add__(self, other: "TangentVector") -> "TangentVector":
        return TangentVector(a + b for a, b in zip(self.perturbations, other.perturbations))

    def __mul__(self, c) -> "TangentVector":
        return TangentVector(p * c for p in self.perturbations)

    __rmul__ = __mul__

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.perturbations) + ")"


# --------------------------------------------------------------------------
# normal module


class NormalModule:
    """``Hom(I/I^2, A)_0`` as the kernel of the syzygy constraints."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self.columns = [(k, m) for k, d in enumerate(pres.degrees) for m in pres.standard(d)]
        self.index = {c: j for j, c in enumerate(self.columns)}
        self.rows = self._constraint_rows()
        self.echelon: Echelon = exact_echelon_blocks(self.rows, len(self.columns))

    @property
    def dimension(self) -> int:
        return self.echelon.nullity

    def constraint_rows_for(self, vec: list) -> dict:
        """Rows ``nu -> {column: coeff}`` of ``NF(sum vec_k h_k)``."""
        pres = self.pres
        rows: dict = {}
        for k, a in enumerate(vec):
            if not a:
                continue
            for m in pres.standard(pres.degrees[k]):
                j = self.index[(k, m)]
                for t, c in a.items():
                    for nu, v in pres.nf_mono(t + m).items():
                        row = rows.setdefault(nu, {})
                        x = row.get(j, 0) + c * v
                        if x:
                            row[j] = x
                        else:
                            del row[j]
        return rows

    def _constraint_rows(self) -> list:
        out = []
        for sigma in self.pres.syzygies:
            out += [r for r in self.constraint_rows_for(sigma).values() if r]
        return out

    def vector_of(self, hs: list) -> dict:
        """Column vector of a tuple of per-generator dicts (normal forms taken)."""
        out: dict = {}
        for k, h in enumerate(hs):
            for m, c in self.pres.nf(h).items():
                if c:
                    out[self.index[(k, m)]] = c
        return out

    def perturbations_of(self, vec: dict) -> list:
        hs = [dict() for _ in self.pres.gens]
        for j, c in vec.items():
            if c:
                k, m = self.columns[j]
                hs[k][m] = c
        return hs

    def contains(self, hs: list) -> bool:
        pres = self.pres
        for sigma in pres.syzygies:
            acc: dict = {}
            for a, h in zip(sigma, hs):
                if a and h:
                    padd(acc, pmul(a, h))
            if any(pres.nf(acc).values()):
                return False
        return True

    def basis_vectors(self) -> list:
        return self.echelon.kernel

    def derivation_vectors(self) -> list:
        """Images of ``g -> x_a * dg/dx_b`` for all variable pairs."""
        pres = self.pres
        n = len(pres.units)
        out = []
        for a in range(n):
            for b in range(n):
                hs = []
                for g in pres.gens:
                    d = pres.derivative(g, b)
                    hs.append({m + pres.units[a]: c for m, c in d.items()})
                out.append(self.vector_of(hs))
        return out

    def coordinates(self, vec: dict) -> dict:
        free = self.echelon.free
        return {i: vec[f] for i, f in enumerate(free) if vec.get(f)}

    def derivation_rank(self) -> int:
        coords = [self.coordinates(v) for v in self.derivation_vectors()]
        return exact_echelon_blocks(coords, self.dimension).rank

    def t1_representatives(self) -> list:
        """Kernel vectors spanning a complement of the derivation image."""
        coords = [self.coordinates(v) for v in self.derivation_vectors()]
        E = exact_echelon_blocks(coords, self.dimension)
        piv = set(E.pivots)
        kern = self.echelon.kernel
        return [kern[i] for i in range(self.dimension) if i not in piv]

    def tangent_vector(self, vec: dict, generators: str = "ideal") -> TangentVector:
        pres = self.pres
        hs = self.perturbations_of(vec)
        if generators == "ideal" and not pres.use_generators:
            hs = _to_ideal_generators(pres, hs)
        return TangentVector(pres.to_polynomial(h) for h in hs)


def _to_ideal_generators(pres: Presentation, hs: list) -> list:
    """Transport perturbations of the reduced basis to the ideal's generators."""
    out = []
    for g in pres.ideal.generators:
        raw = pres.from_polynomial(g)
        # g = sum_k q_k gb_k  ->  h(g) = sum_k q_k h_k  (mod I)
        q = pres.divide(raw)
        acc: dict = {}
        for qk, hk in zip(q, hs):
            if qk and hk:
                padd(acc, pmul(qk, hk))
        out.append(pres.nf(acc))
    return out


_NM_CACHE: dict = {}


def _normal_module(I: Ideal) -> NormalModule:
    key = I.key()
    hit = _NM_CACHE.get(key)
    if hit is None:
        hit = NormalModule(Presentation(I))
        if len(_NM_CACHE) > 32:
            _NM_CACHE.clear()
        _NM_CACHE[key] = hit
    return hit


def normal_module_dim(I: Ideal) -> tuple[int, list]:
    """Dimension and a basis of ``Hom(I/I^2, A)_0``.

    The basis is the reduced-echelon kernel basis in the fixed column order,
    expressed as perturbations of the ideal's generators.
    """
    N = _normal_module(I)
    return N.dimension, [N.tangent_vector(v) for v in N.basis_vectors()]


def t1_dim(I: Ideal) -> int:
    """Degree-0 ``T^1``: normal module modulo the image of the derivations."""
    N = _normal_module(I)
    return N.dimension - N.derivation_rank()


# --------------------------------------------------------------------------
# T^2


class ObstructionSpace:
    """``Hom(R/R_0, A)_0`` modulo ``Hom(F, A)_0`` on the reduced basis.

    ``R`` is generated by the Schreyer syzygies; a homomorphism is a choice
    of values on them compatible with the second syzygies and vanishing on the
    Koszul relations, each written in the syzygy generators by module
    division.
    """

    def __init__(self, pres: Presentation, normal_dim: int | None = None):
        if pres.use_generators:
            raise ValueError("obstruction space uses the reduced basis as generators")
        self.pres = pres
        raws, eng2 = pres._gb_syzygies()
        self.syz_raw = raws
        self.eng2 = eng2
        self.syz = pres.syzygies
        self.syz_degrees = [pres.syzygy_degree(s) for s in self.syz]
        self.columns = [(l, m) for l, D in enumerate(self.syz_degrees) for m in pres.standard(D)]
        self.index = {c: j for j, c in enumerate(self.columns)}
        self._rows = None
        self._img = None
        self._echelon = None
        self._img_echelon = None
        self.normal_dim = normal_dim

    @property
    def image_rank(self) -> int:
        """Rank of ``Hom(F, A)_0 -> Hom(R, A)_0``, whose kernel is the normal module."""
        if self.normal_dim is None:
            return self.image_echelon.rank
        return sum(len(self.pres.standard(d)) for d in self.pres.degrees) - self.normal_dim

    # relations among the syzygy generators
    def relations(self) -> list:
        """Coefficient vectors ``c`` (over the syzygies) that ``phi`` must kill."""
        out = []
        second, _ = schreyer_raw(self.syz_raw, self.eng2)
        for v in second:
            out.append(vector_components(v, self.eng2, len(self.syz_raw)))
        B = Basis(self.eng2)
        for f in self.syz_raw:
            B.add(f)
        B.active = list(range(len(self.syz_raw)))
        shift = self.pres.codec.comp_shift
        G = self.pres.gb_raw
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                kappa: dict = {}
                for m, c in G[j].items():
                    kappa[m + (i << shift)] = c
                for m, c in G[i].items():
                    kappa[m + (j << shift)] = -c
                r, q, _ = reduce_with_quotients(kappa, B)
                if r:
                    raise ArithmeticError("Koszul relation outside the syzygy module")
                vec = [q.get(l, {}) for l in range(len(self.syz_raw))]
                if any(vec):
                    out.append(vec)
        return out

    def rows_for(self, vec: list) -> dict:
        pres = self.pres
        rows: dict = {}
        for l, a in enumerate(vec):
            if not a:
                continue
            for m in pres.standard(self.syz_degrees[l]):
                j = self.index[(l, m)]
                for t, c in a.items():
                    for nu, v in pres.nf_mono(t + m).items():
                        row = rows.setdefault(nu, {})
                        x = row.get(j, 0) + c * v
                        if x:
                            row[j] = x
                        else:
                            del row[j]
        return rows

    @property
    def rows(self) -> list:
        if self._rows is None:
            out = []
            for vec in self.relations():
                out += [r for r in self.rows_for(vec).values() if r]
            self._rows = out
        return self._rows

    def phi_of(self, hs: list) -> dict:
        """Column vector of ``sigma -> NF(sum_k sigma_k h_k)``."""
        pres = self.pres
        out: dict = {}
        for l, sigma in enumerate(self.syz):
            acc: dict = {}
            for a, h in zip(sigma, hs):
                if a and h:
                    padd(acc, pmul(a, h))
            for m, c in pres.nf(acc).items():
                if c:
                    out[self.index[(l, m)]] = c
        return out

    @property
    def image(self) -> list:
        """Images of the elementary homomorphisms ``e_k -> m``."""
        if self._img is None:
            pres = self.pres
            out = []
            for k, d in enumerate(pres.degrees):
                for m in pres.standard(d):
                    hs = [dict() for _ in pres.gens]
                    hs[k] = {m: 1}
                    v = self.phi_of(hs)
                    if v:
                        out.append(v)
            self._img = out
        return self._img

    def _blocks(self):
        rows, img = self.rows, self.image
        return column_blocks(rows + img, len(self.columns)), len(rows)

    def dimension_upper_bound(self) -> int:
        """Certified upper bound from modular ranks (lower bounds)."""
        blocks, nrows = self._blocks()
        rows, img = self.rows, self.image
        total = 0
        ri_total = 0
        for cols, ridx in blocks:
            local = {c: i for i, c in enumerate(cols)}
            crow = [{local[c]: v for c, v in rows[i].items()} for i in ridx if i < nrows]
            irow = [{local[c]: v for c, v in img[i - nrows].items()} for i in ridx if i >= nrows]
            ri = rank_lower_bound(iter(irow), len(cols))
            rc = rank_lower_bound(iter(crow), len(cols), target=len(cols) - ri)
            total += len(cols) - rc
            ri_total += ri
        if self.normal_dim is not None:
            ri_total = self.image_rank
        return total - ri_total

    @property
    def echelon(self) -> Echelon:
        if self._echelon is None:
            self._echelon = exact_echelon_blocks(self.rows, len(self.columns))
        return self._echelon

    def coordinates(self, vec: dict) -> dict:
        free = self.echelon.free
        return {i: vec[f] for i, f in enumerate(free) if vec.get(f)}

    @property
    def image_echelon(self) -> Echelon:
        if self._img_echelon is None:
            coords = [self.coordinates(v) for v in self.image]
            self._img_echelon = exact_echelon_blocks(coords, self.echelon.nullity)
        return self._img_echelon

    def exact_dimension(self) -> int:
        return self.echelon.nullity - self.image_rank

    def dimension(self) -> int:
        ub = self.dimension_upper_bound()
        if ub == 0:
            return 0
        return self.exact_dimension()

    def quotient_coordinates(self, vec: dict) -> list:
        """Coordinates of a cocycle in ``T^2`` (complement of the image pivots)."""
        E = self.echelon
        # check that vec is a cocycle: it must equal the combination of kernel vectors
        coords = self.coordinates(vec)
        recon: dict = {}
        for i, c in coords.items():
            padd(recon, E.kernel[i], c)
        if {k: v for k, v in recon.items() if v} != {k: v for k, v in vec.items() if v}:
            raise ArithmeticError("vector does not satisfy the obstruction constraints")
        IE = self.image_echelon
        # reduce by the image rref: x - sum x[piv_i] * row_i ; the rref rows are
        # recovered from the kernel of the image echelon's complement
        red = dict(coords)
        for p, row in zip(IE.pivots, self._image_rref_rows()):
            c = red.get(p)
            if c:
                padd(red, row, -c)
        piv = set(IE.pivots)
        return [red.get(i, 0) for i in range(E.nullity) if i not in piv]

    def _image_rref_rows(self) -> list:
        """Rows of the reduced echelon form of the image, from its kernel."""
        if getattr(self, "_rref_rows", None) is None:
            IE = self.image_echelon
            free_pos = {f: j for j, f in enumerate(IE.free)}
            rows = []
            for p in IE.pivots:
                # rref row for pivot p: 1 at p, and at free f the value -K_f[p]
                row = {p: Fraction(1)}
                for f, j in free_pos.items():
                    v = IE.kernel[j].get(p, 0)
                    if v:
                        row[f] = -v
                rows.append(row)
            self._rref_rows = rows
        return self._rref_rows


_T2_CACHE: dict = {}


def obstruction_space(I: Ideal) -> ObstructionSpace:
    key = I.key()
    hit = _T2_CACHE.get(key)
    if hit is None:
        N = _normal_module(I)
        hit = ObstructionSpace(N.pres, N.dimension)
        if len(_T2_CACHE) > 32:
            _T2_CACHE.clear()
        _T2_CACHE[key] = hit
    return hit


def t2_dim(I: Ideal) -> int:
    """Degree-0 ``T^2``.

    A vanishing modular upper bound is already a proof; otherwise the exact
    rational computation runs.
    """
    return obstruction_space(I).dimension()
