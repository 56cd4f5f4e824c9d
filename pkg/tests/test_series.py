import pytest
from hypothesis import given, strategies as st

from gwsym.errors import FieldMismatch, NotAUnit
from gwsym.fields import QQ, prime_field
from gwsym.gw import GWElement, bracket, rank_hom, sign_hom
from gwsym.k0var import affine, chi, etale, point, proj_space
from gwsym.power import binom
from gwsym.series import (
    GWSeries,
    geom_pow,
    int_series_pow,
    kapranov_chi_zeta,
    linear,
    s_add,
    s_inv,
    s_mul,
)

B = lambda a: bracket(QQ, a)
N = 6
entry = st.sampled_from([1, -1, 2, -2, 3, -3, 5, -5])


@st.composite
def forms(draw):
    x = GWElement.zero(QQ)
    for _ in range(draw(st.integers(0, 3))):
        x = x + draw(st.integers(-2, 2)) * B(draw(entry))
    return x


def ones(order):
    return GWSeries.from_ints(QQ, [1] * (order + 1))


def test_ring_examples():
    assert s_mul(linear(QQ, 1, N), ones(N)) == GWSeries.one(QQ, N)
    alternating = GWSeries(QQ, [B((-1) ** n) for n in range(N + 1)])
    assert s_inv(linear(QQ, -1, N)) == alternating
    f = geom_pow(B(3), N)
    assert s_add(f, GWSeries(QQ, [], N)) == f
    with pytest.raises(NotAUnit):
        s_inv(GWSeries.from_ints(QQ, [2, 1], N))
    with pytest.raises(FieldMismatch):
        f + geom_pow(bracket(prime_field(7), 3), N)


def test_geom_pow_examples():
    assert geom_pow(GWElement.one(QQ), N) == ones(N)
    assert geom_pow(GWElement.zero(QQ), N) == GWSeries.one(QQ, N)


@given(forms(), forms())
def test_geom_pow_is_a_homomorphism(q, r):
    assert geom_pow(q + r, N) == geom_pow(q, N) * geom_pow(r, N)
    assert geom_pow(-q, N) == s_inv(geom_pow(q, N))


@given(forms())
def test_inverse(q):
    f = geom_pow(q, N)
    assert f * s_inv(f) == GWSeries.one(QQ, N)


@given(forms())
def test_rank_specialization(q):
    assert geom_pow(q, N).map_int(rank_hom) == [binom(q.rank + n - 1, n) for n in range(N + 1)]


@given(st.integers(0, 5), st.integers(0, 5))
def test_sign_specialization(e, o):
    f = geom_pow(e * B(1) + o * B(-1), N)
    a, b = int_series_pow([1, -1], -e, N), int_series_pow([1, 1], -o, N)
    expected = [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)]
    assert f.map_int(sign_hom) == expected


def test_kapranov_examples():
    assert kapranov_chi_zeta(point(), N) == ones(N)
    P1 = kapranov_chi_zeta(proj_space(1), 2)
    assert P1 == GWSeries(QQ, [B(1), B(1) + B(-1), 2 * B(1) + B(-1)])
    assert kapranov_chi_zeta(affine(1), 3) == GWSeries(QQ, [B((-1) ** n) for n in range(4)])


@pytest.mark.parametrize(
    "x", [etale(QQ, 3), etale(QQ, 3, 5) - affine(1), proj_space(2) - etale(QQ, -1)], ids=str
)
def test_kapranov_matches_geom_pow(x):
    assert kapranov_chi_zeta(x, 5) == geom_pow(chi(x), 5)


def test_int_series_pow():
    assert int_series_pow([1, -1], -2, 3) == [1, 2, 3, 4]
    assert int_series_pow([1, 1], -7, 3) == [1, -7, 28, -84]
    assert int_series_pow([1, -1], 3, 4) == [1, -3, 3, -1, 0]


def test_render_and_json():
    f = kapranov_chi_zeta(proj_space(1), 2)
    assert str(f) == "1 + (⟨1⟩ + ⟨-1⟩)t + (2⟨1⟩ + ⟨-1⟩)t^2 + O(t^3)"
    j = f.to_json()
    assert j["order"] == 2 and j["coeffs"][1] == [[1, 1], [-1, 1]]
    assert str(GWSeries.one(QQ, 1)) == "1 + O(t^2)"
