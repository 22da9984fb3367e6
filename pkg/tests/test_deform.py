import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanodegen.constructions import construct_named
from fanodegen.core.ring import PolyRing
from fanodegen.deform import (
    TangentVector, lift_one_parameter, linear_factors, monomialize, normal_module_dim, t1_dim, t2_dim,
    verify_flat_fiber,
)
from fanodegen.deform import bipyramid
from fanodegen.deform.linalg import exact_echelon, exact_rank, rank_lower_bound, rational_reconstruction
from fanodegen.groebner.hilbert import hilbert_data, hilbert_function, hilbert_series_monomial
from fanodegen.errors import WrongDimension
from fanodegen.groebner.ideal import Ideal, initial_ideal

# ---------------------------------------------------------------------------
# exact linear algebra against plain Fraction elimination


def _rank(rows, n):
    M = [[Fraction(r.get(j, 0)) for j in range(n)] for r in rows]
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


@st.composite
def sparse_matrices(draw):
    n = draw(st.integers(1, 6))
    m = draw(st.integers(1, 20))
    vals = st.one_of(st.just(0), st.just(0), st.integers(-4, 4), st.fractions(-3, 3, max_denominator=5))
    rows = []
    for _ in range(m):
        rows.append({j: Fraction(v) for j in range(n) if (v := draw(vals))})
    return rows, n


@settings(max_examples=200, deadline=None)
@given(sparse_matrices())
def test_exact_echelon_matches_fraction_elimination(data):
    rows, n = data
    E = exact_echelon(rows, n)
    assert E.rank == _rank(rows, n)
    for k in E.kernel:
        for r in rows:
            assert sum(c * k.get(j, 0) for j, c in r.items()) == 0
    assert exact_rank(rows, n) == E.rank
    assert rank_lower_bound(iter(rows), n) <= E.rank


def test_rational_reconstruction():
    p = (1 << 61) - 1
    for x in [Fraction(3, 7), Fraction(-22, 5), Fraction(1)]:
        a = x.numerator * pow(x.denominator, -1, p) % p
        assert rational_reconstruction(a, p) == x


# ---------------------------------------------------------------------------
# hypersurfaces: T^1 in degree d is (S / (f, df))_d


def _hypersurface_t1(f):
    R = f.ring
    J = Ideal(R, [f] + [f.derivative(v) for v in R.variables])
    num, d = hilbert_series_monomial(initial_ideal(J))
    return hilbert_function(num, d, f.degree())


@pytest.mark.parametrize("text", ["x1*x2*x3*x4", "x1*x2*x3*x4 - x0^4", "x0^4 + x1^4 + x2^4 + x3^4 + x4^4",
                                  "x0*x1*x2 - x3^3", "x0^2 + x1*x2 + x3*x4"])
def test_hypersurface_invariants(text):
    R = PolyRing(["x0", "x1", "x2", "x3", "x4"])
    f = R(text)
    I = Ideal(R, [f])
    d = f.degree()
    nd = len(list(combinations_with_replacement(range(5), d)))
    assert normal_module_dim(I)[0] == nd - 1
    assert t1_dim(I) == _hypersurface_t1(f)
    assert t2_dim(I) == 0


def _segre():
    # P1 x P2 in P5 (a threefold cone in the affine sense), 2x2 minors of a 2x3 matrix
    R = PolyRing(["a0", "a1", "a2", "b0", "b1", "b2"])
    return Ideal(R, [R("a0*b1 - a1*b0"), R("a0*b2 - a2*b0"), R("a1*b2 - a2*b1")])


def test_segre_normal_module():
    # PGL6 has dimension 35 and the automorphisms of P1 x P2 dimension 11
    I = _segre()
    assert normal_module_dim(I)[0] == 24
    assert t1_dim(I) == 0
    assert t2_dim(I) == 0


def test_complete_intersections_unobstructed():
    assert t2_dim(construct_named("CI_2_3")) == 0


def test_normal_basis_vectors_are_tangent():
    I = _segre()
    dim, basis = normal_module_dim(I)
    assert len(basis) == dim
    assert all(isinstance(v, TangentVector) and not v.is_zero() for v in basis)


# ---------------------------------------------------------------------------
# lifting


def test_lift_of_a_hypersurface_stops_at_first_order():
    R = PolyRing(["x0", "x1", "x2", "x3", "x4"])
    I = Ideal(R, [R("x1*x2*x3*x4")])
    L = lift_one_parameter(I, TangentVector([R("x0^4")]))
    assert L.terminated_at == 1
    assert verify_flat_fiber(L, I, 3)


def test_lift_rejects_non_tangent_vectors():
    I = _segre()
    R = I.ring
    with pytest.raises(ValueError):
        lift_one_parameter(I, TangentVector([R("a0^2"), R.zero(), R.zero()]))


def test_wrong_dimension_rejected():
    R = PolyRing(["x", "y", "z", "w"])
    with pytest.raises(WrongDimension):
        normal_module_dim(Ideal(R, [R("x*z - y^2"), R("y*w - z^2"), R("x*w - y*z")]))


# ---------------------------------------------------------------------------
# factoring obstruction quadrics


linear = st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(any)


@settings(max_examples=150, deadline=None)
@given(linear, linear)
def test_linear_factors_recover_products(a, b):
    R = PolyRing(["t1", "t2", "t3", "t4"])
    la = sum((c * g for c, g in zip(a, R.gens())), R.zero())
    lb = sum((c * g for c, g in zip(b, R.gens())), R.zero())
    q = la * lb
    out = linear_factors(q)
    assert out is not None
    c, forms = out
    prod = R.constant(c)
    for f in forms:
        prod = prod * sum((Fraction(v) * R.gens()[i] for i, v in f.items()), R.zero())
    if len(forms) == 1:
        prod = prod * sum((Fraction(v) * R.gens()[i] for i, v in forms[0].items()), R.zero())
    assert prod == q


def test_irreducible_quadric_does_not_factor():
    R = PolyRing(["a", "b", "c"])
    assert linear_factors(R("a^2 + b^2")) is None
    assert linear_factors(R("a*b - c^2")) is None


def test_monomialize_cross_shape():
    R = PolyRing(["t1", "t2", "t3", "t4"])
    M = monomialize([R("(t1 + t2)*(t1 - t2)"), R("t3*(t1 + t2)")])
    assert sorted(M.codimensions()) == [1, 2]
    assert len(M.component_ideals()) == 2


# ---------------------------------------------------------------------------
# the bipyramid family


def test_family_needs_its_correction_terms():
    ref = hilbert_data(construct_named("Xbp"))
    rng = random.Random(5)
    p = bipyramid.random_point("Z99", rng)
    assert hilbert_data(bipyramid.family_fiber(p)) == ref
    assert hilbert_data(bipyramid.family_fiber(p, drop="cross")) != ref
    assert hilbert_data(bipyramid.family_fiber(p, drop="square")) != ref


def test_series_value_needs_vanishing_product():
    rng = random.Random(0)
    p = bipyramid.random_point("Z97", rng, s1_zero=False)
    for i in range(1, 7):
        p[f"s{i}"] = Fraction(1)
    with pytest.raises(ValueError):
        bipyramid.series_values(p)
    p["s3"] = Fraction(0)
    assert bipyramid.series_values(p) == (-1, -1)
