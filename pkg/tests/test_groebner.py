import random
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanodegen.constructions import construct_named
from fanodegen.core.ring import PolyRing, elimination, grevlex, lex, weight
from fanodegen.errors import NotSquareFreeMonomial
from fanodegen.groebner.hilbert import hilbert_data, hilbert_function, hilbert_series_monomial
from fanodegen.groebner.ideal import (
    Ideal, contains, eliminate, groebner_basis, ideal_membership, ideals_equal, initial_ideal,
    intersect, krull_dimension, normal_form, quotient, radical_membership, saturate,
)
from fanodegen.groebner.primes import minimal_primes_monomial
from fanodegen.groebner.syzygy import check_syzygy, syzygies

S = PolyRing(["x", "y", "z", "w"])


def twisted_cubic():
    return Ideal(S, [S("x*z - y^2"), S("y*w - z^2"), S("x*w - y*z")])


# ---------------------------------------------------------------------------
# an independent Buchberger-criterion check written with plain polynomial ops


def _lead(p, order):
    e, c = p.leading_term(order)
    return e, c


def _reduce(f, G, order):
    r = f.ring.zero()
    while f:
        e, c = _lead(f, order)
        for g in G:
            eg, cg = _lead(g, order)
            if all(a >= b for a, b in zip(e, eg)):
                f = f - g.mul_monomial(tuple(a - b for a, b in zip(e, eg)), c / cg)
                break
        else:
            r = r + f.ring.monomial(e, c)
            f = f - f.ring.monomial(e, c)
    return r


def _is_groebner(G, order):
    for f, g in combinations(G, 2):
        ef, cf = _lead(f, order)
        eg, cg = _lead(g, order)
        L = tuple(max(a, b) for a, b in zip(ef, eg))
        s = (f.mul_monomial(tuple(a - b for a, b in zip(L, ef)), 1 / cf)
             - g.mul_monomial(tuple(a - b for a, b in zip(L, eg)), 1 / cg))
        if _reduce(s, G, order):
            return False
    return True


def test_twisted_cubic():
    G = groebner_basis(twisted_cubic())
    assert {str(g) for g in G.basis} == {"y^2 - x*z", "y*z - x*w", "z^2 - y*w"}
    H = hilbert_data(twisted_cubic())
    assert (H.dimension, H.degree) == (1, 3)
    assert [H(k) for k in range(5)] == [1, 4, 7, 10, 13]


@pytest.mark.parametrize("order", [grevlex(), lex(), weight([1, 3, 2, 5]), elimination(["x"])])
def test_basis_satisfies_criterion(order):
    G = groebner_basis(twisted_cubic(), order)
    assert _is_groebner(G.basis, order)
    for g in twisted_cubic().generators:
        assert not _reduce(g, G.basis, order)


coeff = st.integers(-3, 3)


@st.composite
def small_ideals(draw):
    mons = [m for d in (1, 2) for m in combinations_with_replacement(range(3), d)]
    R = PolyRing(["a", "b", "c"])
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        p = R.zero()
        for m in draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3)):
            e = [0, 0, 0]
            for i in m:
                e[i] += 1
            p = p + R.monomial(e, draw(coeff))
        gens.append(p)
    return Ideal(R, gens)


@settings(max_examples=60, deadline=None)
@given(small_ideals(), st.randoms(use_true_random=False))
def test_reduced_basis_is_unique_under_shuffles(I, rnd):
    G = groebner_basis(I, lex())
    gens = list(I.generators)
    rnd.shuffle(gens)
    extra = [g * I.ring.gen("a") + h for g, h in zip(gens, gens[1:])]
    J = Ideal(I.ring, gens + extra)
    H = groebner_basis(J, lex())
    assert [str(g) for g in G.basis] == [str(g) for g in H.basis]
    assert _is_groebner(G.basis, lex())


@settings(max_examples=40, deadline=None)
@given(small_ideals())
def test_membership_of_combinations(I):
    R = I.ring
    f = sum((g * R.gen(v) for g, v in zip(I.generators, R.variables)), R.zero())
    assert ideal_membership(f, I)
    assert normal_form(f, groebner_basis(I)).is_zero()


# ---------------------------------------------------------------------------
# Hilbert functions


def _count_standard(gens, n, k):
    count = 0
    for m in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in m:
            e[i] += 1
        if not any(all(a >= b for a, b in zip(e, g)) for g in gens):
            count += 1
    return count


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 2)] * 4).filter(any), min_size=1, max_size=5))
def test_monomial_hilbert_function_matches_count(exps):
    I = Ideal(S, [S.monomial(e) for e in exps])
    num, d = hilbert_series_monomial(I)
    for k in range(7):
        assert hilbert_function(num, d, k) == _count_standard(exps, 4, k)


FIXTURES = ["SR_T4", "SR_T5", "SR_T7", "V4_toric", "CI_2_3", "275510", "5953", "T3"]


@pytest.mark.parametrize("name", FIXTURES)
def test_initial_ideals_preserve_hilbert_polynomial(name):
    I = construct_named(name)
    ref = hilbert_data(I)
    n = I.ring.nvars
    rng = random.Random(1)
    orders = [grevlex(), lex(), weight([rng.randint(1, 10**6) for _ in range(n)])]
    for o in orders:
        assert hilbert_data(initial_ideal(I, o)) == ref


def test_fano_fixtures_have_expected_degrees():
    for name, d in [("SR_T7", 10), ("CI_2_3", 6), ("CI_2_2_2", 8), ("275510", 10), ("Xbp", 12)]:
        H = hilbert_data(construct_named(name))
        assert (H.dimension, H.degree, H.genus) == (3, d, d // 2 + 1)


# ---------------------------------------------------------------------------
# ideal operations


def test_intersection_and_quotient():
    R = PolyRing(["x", "y"])
    I, J = Ideal(R, [R("x")]), Ideal(R, [R("y")])
    assert ideals_equal(intersect(I, J), Ideal(R, [R("x*y")]))
    assert ideals_equal(quotient(Ideal(R, [R("x^2*y")]), R("x")), Ideal(R, [R("x*y")]))
    assert ideals_equal(saturate(Ideal(R, [R("x^3*y"), R("x^2*y^2")]), R("x")), Ideal(R, [R("y")]))


def test_elimination_of_twisted_cubic_parametrization():
    R = PolyRing(["s", "t", "x", "y", "z", "w"])
    I = Ideal(R, [R("x - s^3"), R("y - s^2*t"), R("z - s*t^2"), R("w - t^3")])
    E = eliminate(I, ["s", "t"])
    T = Ideal(E.ring, [E.ring(str(g)) for g in twisted_cubic().generators])
    assert ideals_equal(E, T)


def test_radical_membership_and_dimension():
    R = PolyRing(["x", "y", "z"])
    I = Ideal(R, [R("x^3"), R("y^2*z")])
    assert radical_membership(R("x"), I)
    assert radical_membership(R("y*z"), I)
    assert not radical_membership(R("z"), I)
    assert krull_dimension(I) == 1
    assert krull_dimension(Ideal(R, [R.one()])) == -1
    assert contains(I, Ideal(R, [R("x^4")]))


def test_syzygies_are_relations():
    G = groebner_basis(twisted_cubic())
    M = syzygies(G)
    assert len(M) >= 2
    assert all(check_syzygy(row, G.basis) for row in M.generators)


# ---------------------------------------------------------------------------
# monomial minimal primes


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=n), min_size=1, max_size=6))))
def test_minimal_primes_against_brute_force(data):
    n, supports = data
    R = PolyRing([f"v{i}" for i in range(n)])
    I = Ideal(R, [R.monomial([1 if i in s else 0 for i in range(n)]) for s in supports])
    got = {frozenset(str(g) for g in P.generators) for P in minimal_primes_monomial(I)}
    covers = [set(c) for k in range(n + 1) for c in combinations(range(n), k)
              if all(set(c) & s for s in supports)]
    minimal = [c for c in covers if not any(d < c for d in covers)]
    assert got == {frozenset(f"v{i}" for i in c) for c in minimal}


def test_minimal_primes_reject_non_squarefree():
    R = PolyRing(["x", "y"])
    with pytest.raises(NotSquareFreeMonomial):
        minimal_primes_monomial(Ideal(R, [R("x^2")]))
