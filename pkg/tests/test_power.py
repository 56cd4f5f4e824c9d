from math import comb

import pytest
from hypothesis import given, strategies as st

from gwsym.errors import TruncationExceeded
from gwsym.fields import QQ, prime_field, square_class
from gwsym.gw import GWElement, bracket, hyperbolic, rank_hom
from gwsym.power import a_basic, a_hyperbolic, a_line, a_n, a_series, binom, t_alpha

H = hyperbolic(QQ)
B = lambda a: bracket(QQ, a)
sq = lambda a: square_class(QQ, a)
entry = st.sampled_from([1, -1, 2, -2, 3, -3, 5, -5])


@st.composite
def forms(draw, max_terms=3):
    x = GWElement.zero(QQ)
    for _ in range(draw(st.integers(0, max_terms))):
        x = x + draw(st.integers(-2, 2)) * B(draw(entry))
    return x


def test_binom_extension():
    assert binom(5, 2) == 10
    assert binom(-1, 3) == -1
    assert binom(-3, 2) == 6  # (-3)(-4)/2
    assert binom(4, -1) == 0
    # C(-m, n) (-1)^n = C(m + n - 1, n)
    assert all(binom(-m, n) * (-1) ** n == comb(m + n - 1, n) for m in range(1, 6) for n in range(6))


def test_t_alpha_examples():
    assert t_alpha(sq(1)) == 0
    assert t_alpha(sq(-1)) == 0
    for a in (3, 5, 7):
        assert 2 * t_alpha(sq(a)) == 0
    assert t_alpha(sq(3)) != 0
    # alpha = 2 must not collapse the two <2> summands
    assert t_alpha(sq(2)).rank == 0
    assert t_alpha(square_class(prime_field(7), 3)) == 0


@pytest.mark.parametrize("a", [2, 3, 5, 7, 15, 6, 10])
def test_t_minus_alpha(a):
    assert t_alpha(sq(-a)) == t_alpha(sq(a))


def test_a_line_examples():
    assert a_line(sq(3), 1).same_terms(B(3))
    assert a_line(sq(3), 0) == 1
    assert a_line(sq(3), 2) == B(2) + B(3) - B(6)
    assert a_line(sq(3), 2) == 1 + t_alpha(sq(3))


def test_a_n_examples():
    for n in range(1, 9):
        assert a_n(GWElement.zero(QQ), n) == 0
        assert a_n(GWElement.one(QQ), n) == 1
    assert a_n(B(2) + B(6), 2) == B(1) + B(2) + B(6)
    assert a_n(H, 2) == H + 1
    with pytest.raises(TruncationExceeded):
        a_n(H, 40)
    assert a_n(H, 40, truncation=40).rank == 41


def test_a_basic_examples():
    assert a_basic(2, 0, 3).same_terms(4 * B(1))
    assert a_basic(1, 1, 2).same_terms(B(1))
    assert a_basic(4, 1, 0) == 1
    # (1 - t)^2 = 1 - 2t + t^2
    assert [a_basic(-2, 0, n) for n in range(4)] == [1, -2, 1, 0]


def test_a_hyperbolic_examples():
    assert a_hyperbolic(2, 2).same_terms(6 * B(1) + 4 * B(-1))
    assert a_hyperbolic(1, 3) == 2 * H
    assert a_hyperbolic(0, 5) == 0
    assert a_hyperbolic(0, 0) == 1
    assert a_hyperbolic(-1, 1) == -H


@given(forms(), forms(), st.integers(0, 8))
def test_additivity(q, r, n):
    aq, ar = a_series(q, n), a_series(r, n)
    assert a_n(q + r, n) == sum((aq[i] * ar[n - i] for i in range(n + 1)), GWElement.zero(QQ))


@given(forms())
def test_low_degree_axioms(q):
    assert a_n(q, 0) == 1
    assert a_n(q, 1) == q


@given(forms(), st.integers(0, 6))
def test_minus_one_twist(q, n):
    assert a_n(B(-1) * q, n) == B((-1) ** n) * a_n(q, n)


@given(forms(), st.integers(0, 8))
def test_rank_specialization(q, n):
    assert rank_hom(a_n(q, n)) == binom(q.rank + n - 1, n)


@pytest.mark.parametrize("m", range(-4, 6))
def test_closed_forms_match_series(m):
    for n in range(9):
        for i in (0, 1):
            assert a_basic(m, i, n) == a_n(m * B((-1) ** i), n)
        assert a_hyperbolic(m, n) == a_n(m * H, n)
        if n % 2:
            x = a_hyperbolic(m, n)
            assert x.rank % 2 == 0 and x == (x.rank // 2) * H


def _literal_negative(m, n):
    # the negative case read with C(m, i) the falling-factorial binomial of m < 0
    out = GWElement.zero(QQ)
    for i in range(n + 1):
        out = out + (-1) ** n * binom(m, i) * binom(m, n - i) * (B(-1) if (n - i) % 2 else B(1))
    return out


@pytest.mark.parametrize("m", [-1, -2, -3])
def test_literal_negative_reading_gives_positive_multiple(m):
    # the falling-factorial reading reproduces a_n(|m| H), not a_n(m H)
    assert all(_literal_negative(m, n) == a_n(-m * H, n) for n in range(7))
    assert _literal_negative(m, 1) != a_n(m * H, 1)


def test_powers_over_finite_field():
    F = prime_field(7)
    q = bracket(F, 3) + 2 * bracket(F, 1)
    # every t_alpha vanishes over F_7, so a_n is multiplicative on lines
    assert all(a_n(bracket(F, 3), n) == bracket(F, 3**n) for n in range(6))
    assert rank_hom(a_n(q, 4)) == comb(6, 4)
