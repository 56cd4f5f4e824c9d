from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gwsym.errors import BadPrime, CharTwo, FactorizationLimit, ParseError, ZeroInput
from gwsym.fields import (
    CC,
    QQ,
    RR,
    REAL,
    Place,
    factorize,
    hilbert_symbol,
    is_prime,
    legendre,
    parse_field,
    prime_field,
    relevant_places,
    square_class,
    squarefree_part,
)
from gwsym.oracles import hilbert_oracle, legendre_table

nonzero = st.integers(-10**4, 10**4).filter(bool)
small = st.integers(-60, 60).filter(bool)
PRIMES = [p for p in range(3, 98) if is_prime(p)]


def test_square_class_examples():
    c = square_class(QQ, 18)
    assert (c.sign, c.core) == (1, 2)
    c = square_class(QQ, -75)
    assert (c.sign, c.core) == (-1, 3)
    # 3^2 = 2 mod 7
    assert square_class(prime_field(7), 2).is_trivial
    assert not square_class(prime_field(7), 3).is_trivial


def test_square_class_rationals_and_other_fields():
    assert square_class(QQ, Fraction(3, 4)) == square_class(QQ, 3)
    assert square_class(QQ, "2/3") == square_class(QQ, 6)
    assert square_class(RR, -7) == square_class(RR, -1)
    assert square_class(CC, -7).is_trivial
    assert square_class(prime_field(7), Fraction(1, 2)) == square_class(prime_field(7), 4)


def test_square_class_errors():
    with pytest.raises(ZeroInput):
        square_class(QQ, 0)
    with pytest.raises(ZeroInput):
        square_class(prime_field(7), 14)
    with pytest.raises(CharTwo):
        prime_field(2)
    with pytest.raises(BadPrime):
        prime_field(9)


def test_factorization_limit():
    p = 1_000_003
    assert is_prime(p)
    assert squarefree_part(p * 20) == p * 5
    with pytest.raises(FactorizationLimit):
        factorize(p * 1_000_033, bound=1000)


@given(nonzero, nonzero)
def test_square_class_ignores_squares(a, c):
    assert square_class(QQ, a * c * c) == square_class(QQ, a)


@given(nonzero, nonzero)
def test_square_class_multiplicative(a, b):
    assert square_class(QQ, a) * square_class(QQ, b) == square_class(QQ, a * b)


def test_legendre_examples():
    assert legendre(2, 7) == 1
    assert legendre(3, 7) == -1
    assert legendre(14, 7) == 0
    assert all(legendre(1, p) == 1 for p in PRIMES)
    with pytest.raises(BadPrime):
        legendre(3, 2)


@pytest.mark.parametrize("p", PRIMES)
def test_legendre_matches_square_table(p):
    assert all(legendre(a, p) == legendre_table(a, p) for a in range(-p, 2 * p))


def test_hilbert_examples():
    assert hilbert_symbol(-1, -1, REAL) == -1
    assert hilbert_symbol(2, 3, Place(3)) == -1
    assert hilbert_symbol(5, 7, Place(11)) == 1
    assert hilbert_symbol(-1, -1, Place(2)) == -1
    with pytest.raises(ZeroInput):
        hilbert_symbol(0, 3, REAL)


@pytest.mark.parametrize("p", [0, 2, 3, 5, 7, 11, 13])
def test_hilbert_matches_local_solvability(p):
    v = Place(p)
    for a in range(-15, 16):
        for b in range(-15, 16):
            if a and b:
                assert hilbert_symbol(a, b, v) == hilbert_oracle(a, b, v), (a, b, v)


@given(small, small, small, st.sampled_from([0, 2, 3, 5, 7]))
def test_hilbert_symmetric_and_bimultiplicative(a, a2, b, p):
    v = Place(p)
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v)


@given(nonzero, nonzero)
def test_hilbert_product_formula(a, b):
    prod = 1
    for v in relevant_places([a, b]):
        prod *= hilbert_symbol(a, b, v)
    assert prod == 1


def test_place_and_field_parsing():
    assert str(REAL) == "inf" and str(Place(5)) == "5"
    assert parse_field("Fp:11") == prime_field(11)
    assert parse_field("Q") == QQ
    assert str(prime_field(7)) == "Fp:7"
    with pytest.raises(ParseError):
        parse_field("Z")
