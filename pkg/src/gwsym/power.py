"""The power structure a_n on GW(k).

On rank one forms a_n(<a>) = <a^n> + n(n-1)/2 * t_a with
t_a = <2> + <a> - <1> - <2a>.  On a general virtual form the structure is
extended through the additivity axiom, i.e. the series sum_n a_n(q) t^n is
the product of the series of the rank one summands, with multiplicities
taken as (possibly negative) powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import TruncationExceeded
from .fields import QQ, BaseField, SquareClass, square_class
from .gw import GWElement
from .truncated import spow, smul

DEFAULT_TRUNCATION = 32


@dataclass(frozen=True)
class PowerContext:
    field: BaseField = QQ
    truncation: int = DEFAULT_TRUNCATION

    def __post_init__(self):
        if self.truncation < 1:
            raise ValueError("truncation must be >= 1")


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the falling-factorial extension to n < 0."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    # n(n-1)...(n-k+1)/k! = (-1)^k C(k-n-1, k)
    return (-1) ** k * comb(k - n - 1, k)


def t_alpha(alpha: SquareClass) -> GWElement:
    F = alpha.field
    two = square_class(F, 2)
    one = SquareClass(F)
    cls = GWElement.of_class
    return cls(two) + cls(alpha) - cls(one) - cls(two * alpha)


def a_line(alpha: SquareClass, n: int) -> GWElement:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return GWElement.of_class(alpha ** n) + (n * (n - 1) // 2) * t_alpha(alpha)


def _line_series(alpha: SquareClass, N: int) -> list[GWElement]:
    return [a_line(alpha, k) for k in range(N + 1)]


def a_series(q: GWElement, N: int) -> list[GWElement]:
    """[a_0(q), ..., a_N(q)]."""
    F = q.field
    one, zero = GWElement.one(F), GWElement.zero(F)
    out = [one] + [zero] * N
    for alpha, m in q.items():
        out = smul(out, spow(_line_series(alpha, N), m, N, one, zero), N, zero)
    return out


def a_n(q: GWElement, n: int, truncation: int = DEFAULT_TRUNCATION) -> GWElement:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > truncation:
        raise TruncationExceeded(f"n = {n} exceeds truncation {truncation}")
    return a_series(q, n)[n]


def a_basic(m: int, i: int, n: int, field: BaseField = QQ) -> GWElement:
    """Closed form a_n(m<(-1)^i>) = C(m+n-1, n) <(-1)^(i n)>.

    Negative m uses the generalized binomial, which is still the coefficient
    of t^n in (1 - t)^(-m).
    """
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    if n == 0:
        return GWElement.one(field)
    return binom(m + n - 1, n) * GWElement.of_class(square_class(field, (-1) ** (i * n)))


def a_hyperbolic(m: int, n: int, field: BaseField = QQ) -> GWElement:
    """Closed form of a_n(m H).

    m > 0: sum_i C(m+i-1, m-1) C(m+n-i-1, m-1) <-1>^(n-i).
    m < 0: (-1)^n sum_i C(|m|, i) C(|m|, n-i) <-1>^(n-i), the coefficient of
    t^n in (1-t)^|m| (1-<-1>t)^|m|.
    """
    one = GWElement.one(field)
    minus = GWElement.of_class(square_class(field, -1))
    if n == 0:
        return one
    if m == 0:
        return GWElement.zero(field)
    out = GWElement.zero(field)
    for i in range(n + 1):
        if m > 0:
            c = comb(m + i - 1, m - 1) * comb(m + n - i - 1, m - 1)
        else:
            c = (-1) ** n * comb(-m, i) * comb(-m, n - i)
        out = out + c * (minus if (n - i) % 2 else one)
    return out
