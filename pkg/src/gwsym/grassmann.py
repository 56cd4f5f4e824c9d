"""Losanitsch's triangle and Euler characteristics of Grassmannians.

Gr(d, r) is the variety of d-planes in r-space, of rank C(r, d).  Its Euler
characteristic is e(d, r)<1> + o(d, r)<-1> where e is the Losanitsch
triangle (OEIS A034851) and o = C(r, d) - e.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import ConsistencyError, OutOfRange
from .fields import QQ, BaseField, square_class
from .gw import GWElement
from .power import a_n, binom
from .series import GWSeries, linear, s_inv
from .truncated import spow


def _check_range(d: int, r: int):
    if not (0 <= d <= r):
        raise OutOfRange(f"need 0 <= d <= r, got d={d}, r={r}")


@lru_cache(maxsize=None)
def losanitsch_recurrence(d: int, r: int) -> tuple[int, int]:
    if d < 0 or d > r:
        return (0, 0)
    if d == 0:
        return (1, 0)
    e1, o1 = losanitsch_recurrence(d - 1, r - 1)
    e2, o2 = losanitsch_recurrence(d, r - 1)
    if d % 2 == 0:
        return (e1 + e2, o1 + o2)
    return (e1 + o2, o1 + e2)


def losanitsch_closed(d: int, r: int) -> tuple[int, int]:
    in_A = r % 2 == 1 or d % 2 == 0
    b = comb(r, d)
    corr = comb(r // 2, d // 2) if in_A else 0
    return ((b + corr) // 2, (b - corr) // 2)


def losanitsch(d: int, r: int) -> tuple[int, int]:
    """(e(d, r), o(d, r)), computed by recurrence and by closed formula."""
    _check_range(d, r)
    rec, closed = losanitsch_recurrence(d, r), losanitsch_closed(d, r)
    if rec != closed:
        raise ConsistencyError(f"Losanitsch({d},{r}): recurrence {rec} != closed {closed}")
    return closed


def losanitsch_table(R: int) -> list[list[tuple[int, int]]]:
    return [[losanitsch(d, r) for d in range(r + 1)] for r in range(R + 1)]


def _pm(field, e, o) -> GWElement:
    return e * GWElement.one(field) + o * GWElement.of_class(square_class(field, -1))


@lru_cache(maxsize=None)
def chi_grassmannian_recursive(d: int, r: int, field: BaseField = QQ) -> GWElement:
    """chi(Gr(d,r)) = chi(Gr(d-1,r-1)) + <(-1)^d> chi(Gr(d,r-1))."""
    if d < 0 or d > r:
        return GWElement.zero(field)
    if d == 0:
        return GWElement.one(field)
    twist = GWElement.of_class(square_class(field, (-1) ** d))
    return chi_grassmannian_recursive(d - 1, r - 1, field) + twist * chi_grassmannian_recursive(
        d, r - 1, field
    )


def chi_grassmannian(d: int, r: int, field: BaseField = QQ, verify: bool = True) -> GWElement:
    e, o = losanitsch(d, r)
    out = _pm(field, e, o)
    if verify and not out == chi_grassmannian_recursive(d, r, field):
        raise ConsistencyError(f"chi(Gr({d},{r})): closed form and recursion differ")
    return out


def chi_sym_grassmannian(d: int, r: int, n: int, field: BaseField = QQ, verify: bool = True) -> GWElement:
    """chi(Gr(d,r)^(n)) = sum_i C(e+i-1, i) C(o+n-i-1, n-i) <(-1)^(n-i)>."""
    if n < 0:
        raise OutOfRange("n must be nonnegative")
    e, o = losanitsch(d, r)
    plus = minus = 0
    for i in range(n + 1):
        c = binom(e + i - 1, i) * binom(o + n - i - 1, n - i)
        if (n - i) % 2:
            minus += c
        else:
            plus += c
    out = _pm(field, plus, minus)
    if verify and not out == a_n(chi_grassmannian(d, r, field), n):
        raise ConsistencyError(f"chi(Gr({d},{r})^({n})): sum formula and a_n differ")
    return out


def grassmann_zeta(d: int, r: int, N: int, field: BaseField = QQ) -> GWSeries:
    """(1 - t)^(-e(d,r)) (1 - <-1> t)^(-o(d,r)) truncated at t^N."""
    e, o = losanitsch(d, r)
    f = s_inv(linear(field, 1, N))
    g = s_inv(linear(field, -1, N))
    one, zero = GWElement.one(field), GWElement.zero(field)
    fe = spow(f.coeffs, e, N, one, zero)
    go = spow(g.coeffs, o, N, one, zero)
    return GWSeries(field, fe) * GWSeries(field, go)


def complex_points_series(d: int, r: int, N: int) -> list[int]:
    """sum_n e_c(Gr(d,r)^(n)(C)) t^n = (1 - t)^(-C(r,d))."""
    _check_range(d, r)
    b = comb(r, d)
    return [binom(b + n - 1, n) for n in range(N + 1)]


def real_points_series(d: int, r: int, N: int) -> list[int]:
    """sum_n e_c(Gr(d,r)^(n)(R)) t^n = (1 - t)^(-e) (1 + t)^(-o)."""
    e, o = losanitsch(d, r)
    out = []
    for n in range(N + 1):
        out.append(
            sum(binom(e + i - 1, i) * (-1) ** (n - i) * binom(o + n - i - 1, n - i) for i in range(n + 1))
        )
    return out


def real_euler_characteristic(d: int, r: int) -> int:
    """Euler characteristic of the real Grassmannian: 0 if r even and d odd."""
    _check_range(d, r)
    if r % 2 == 0 and d % 2 == 1:
        return 0
    return comb(r // 2, d // 2)
