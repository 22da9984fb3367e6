import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanodegen.errors import InvalidType, NotRollable, OddB3
from fanodegen.groebner.hilbert import hilbert_data
from fanodegen.groebner.ideal import ideal_membership
from fanodegen.scrolls import (
    ScrollDescription, fano_table_rows, h0N_formula, roll, roll_room, rolling_chain,
    rolling_divisor_ideal, scroll_ideal,
)

S2200 = ScrollDescription((2, 2, 0, 0), "xy", ("z1", "z2"))
TYPES = [(2, 2, 0, 0), (4, 1, 0, 0), (2, 1, 1, 0), (1, 1, 1, 1), (3, 2, 0, 0)]


def test_rolling_example():
    R = S2200.ring()
    chain = rolling_chain(R("x0^2*x2 - y0*z1*z2"), S2200, 2)
    assert chain[1] == R("x0*x1*x2 - y1*z1*z2")
    assert chain[2] == R("x0*x2^2 - y2*z1*z2")


def test_scroll_invariants():
    _, I = scroll_ideal(S2200)
    H = hilbert_data(I)
    assert (H.dimension, H.degree) == (4, 4)
    assert S2200.ambient_dimension == 7


def _other_roll(m_exps, s, ring, rnd):
    succ = s.successor()
    choices = [a for a in succ if m_exps[ring.index(a)]]
    a = rnd.choice(choices)
    e = list(m_exps)
    e[ring.index(a)] -= 1
    e[ring.index(succ[a])] += 1
    return ring.monomial(e)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(TYPES), st.randoms(use_true_random=False))
def test_any_roll_choice_agrees_modulo_minors(t, rnd):
    s = ScrollDescription(t)
    ring = s.ring()
    _, I = scroll_ideal(s, ring)
    top = list(s.successor())
    e = [0] * ring.nvars
    e[ring.index(rnd.choice(top))] += 1
    for _ in range(2):
        e[rnd.randrange(ring.nvars)] += 1
    m = ring.monomial(e)
    assert ideal_membership(roll(m, s) - _other_roll(e, s, ring, rnd), I)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(TYPES), st.randoms(use_true_random=False))
def test_roll_room_decreases_by_one(t, rnd):
    s = ScrollDescription(t)
    ring = s.ring()
    e = [rnd.randint(0, 2) for _ in range(ring.nvars)]
    room = roll_room(e, s, ring)
    m = ring.monomial(e)
    for k in range(room):
        m = roll(m, s)
        (e2,) = m.terms
        assert roll_room(e2, s, ring) == room - k - 1
    with pytest.raises(NotRollable):
        roll(m, s)


def test_divisor_on_scroll_is_fano_threefold():
    R = S2200.ring()
    H = hilbert_data(rolling_divisor_ideal(S2200, R("x0^2*x2 - y0*z1*z2"), 2))
    assert (H.dimension, H.degree, H.genus) == (3, 10, 6)


def test_formula_and_table():
    assert h0N_formula(3, 1, 60) == 69
    with pytest.raises(OddB3):
        h0N_formula(3, 1, 3)
    rows = {r["name"]: r for r in fano_table_rows()}
    assert all(r["consistent"] for n, r in rows.items() if n != "V12")
    assert (rows["V12"]["formula"], rows["V12"]["table"]) == (96, 98)


def test_invalid_types():
    for t in [(), (0, 0), (1, 2), (-1,)]:
        with pytest.raises(InvalidType):
            ScrollDescription(t)
