from itertools import combinations
from math import comb

import pytest

from gwsym.errors import OutOfRange
from gwsym.fields import QQ, prime_field
from gwsym.grassmann import (
    chi_grassmannian,
    chi_grassmannian_recursive,
    chi_sym_grassmannian,
    complex_points_series,
    grassmann_zeta,
    losanitsch,
    losanitsch_closed,
    losanitsch_recurrence,
    losanitsch_table,
    real_euler_characteristic,
    real_points_series,
)
from gwsym.gw import bracket, rank_hom, sign_hom
from gwsym.power import a_n, binom
from gwsym.series import GWSeries, int_series_pow

B = lambda a: bracket(QQ, a)

# OEIS A034851, rows r = 0..8
A034851 = [
    [1],
    [1, 1],
    [1, 1, 1],
    [1, 2, 2, 1],
    [1, 2, 4, 2, 1],
    [1, 3, 6, 6, 3, 1],
    [1, 3, 9, 10, 9, 3, 1],
    [1, 4, 12, 19, 19, 12, 4, 1],
    [1, 4, 16, 28, 38, 28, 16, 4, 1],
]


def strings_up_to_reversal(d, r):
    seen = set()
    for ones in combinations(range(r), d):
        s = tuple(1 if i in ones else 0 for i in range(r))
        seen.add(min(s, s[::-1]))
    return len(seen)


def test_losanitsch_examples():
    assert losanitsch(2, 4) == (4, 2)
    assert all(losanitsch(0, r) == (1, 0) for r in range(10))
    assert losanitsch(1, 2) == (1, 1)
    with pytest.raises(OutOfRange):
        losanitsch(3, 2)
    with pytest.raises(OutOfRange):
        losanitsch(-1, 2)


def test_losanitsch_against_oeis():
    assert [[e for e, _ in row] for row in losanitsch_table(8)] == A034851


@pytest.mark.parametrize("r", range(13))
def test_losanitsch_counts_strings_up_to_reversal(r):
    for d in range(r + 1):
        assert losanitsch(d, r)[0] == strings_up_to_reversal(d, r)


def test_recurrence_equals_closed_form():
    for r in range(21):
        for d in range(r + 1):
            e, o = losanitsch_recurrence(d, r)
            assert (e, o) == losanitsch_closed(d, r)
            assert e + o == comb(r, d)


def test_hockey_stick():
    for m in range(1, 7):
        for n in range(8):
            assert sum(binom(m + i - 1, i) for i in range(n + 1)) == binom(m + n, n)
            assert sum(comb(i, m) for i in range(m, m + n + 1)) == comb(m + n + 1, m + 1)


def test_chi_grassmannian_examples():
    assert chi_grassmannian(1, 2) == B(1) + B(-1)
    assert chi_grassmannian(2, 4).same_terms(4 * B(1) + 2 * B(-1))
    assert chi_grassmannian(0, 5) == 1
    F = prime_field(7)
    assert chi_grassmannian(2, 4, F) == 4 * bracket(F, 1) + 2 * bracket(F, -1)


def test_chi_grassmannian_recursion():
    for r in range(9):
        for d in range(r + 1):
            x = chi_grassmannian(d, r, verify=False)
            assert x == chi_grassmannian_recursive(d, r)
            assert rank_hom(x) == comb(r, d)
            assert sign_hom(x) == real_euler_characteristic(d, r)


def test_real_euler_characteristic():
    assert real_euler_characteristic(1, 2) == 0  # circle
    assert real_euler_characteristic(1, 3) == 1  # RP^2
    assert real_euler_characteristic(2, 4) == 2


def test_sym_grassmannian_examples():
    assert chi_sym_grassmannian(1, 2, 2) == 2 * B(1) + B(-1)
    for d, r in [(1, 3), (2, 4), (2, 5)]:
        assert chi_sym_grassmannian(d, r, 1) == chi_grassmannian(d, r)
        for n in range(6):
            assert rank_hom(chi_sym_grassmannian(d, r, n)) == binom(comb(r, d) + n - 1, n)
    with pytest.raises(OutOfRange):
        chi_sym_grassmannian(1, 2, -1)


def test_zeta_examples():
    N = 5
    assert grassmann_zeta(0, 1, N) == GWSeries.from_ints(QQ, [1] * (N + 1))
    assert grassmann_zeta(1, 2, 2) == GWSeries(QQ, [B(1), B(1) + B(-1), 2 * B(1) + B(-1)])


@pytest.mark.parametrize("r", range(7))
def test_zeta_coefficients(r):
    N = 10
    for d in range(r + 1):
        z = grassmann_zeta(d, r, N)
        chi = chi_grassmannian(d, r)
        e, o = losanitsch(d, r)
        for n in range(N + 1):
            assert z[n] == chi_sym_grassmannian(d, r, n, verify=False)
            assert z[n] == a_n(chi, n)
        assert z.map_int(rank_hom) == int_series_pow([1, -1], -comb(r, d), N)
        assert z.map_int(rank_hom) == complex_points_series(d, r, N)
        a, b = int_series_pow([1, -1], -e, N), int_series_pow([1, 1], -o, N)
        sign = [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)]
        assert z.map_int(sign_hom) == sign == real_points_series(d, r, N)


def test_complex_exponent_is_negative():
    # a printed positive exponent would give a polynomial with alternating signs
    assert complex_points_series(2, 4, 4) != int_series_pow([1, -1], comb(4, 2), 4)
    assert complex_points_series(2, 4, 4) == [1, 6, 21, 56, 126]
