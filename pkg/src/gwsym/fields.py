"""Base fields, square classes and local symbols.

Supported base fields are Q, R, C and F_p for odd primes p.  A square class
is an element of k^x / (k^x)^2 stored in a canonical form, which is what makes
equality in GW(k) decidable downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import BadPrime, CharTwo, FactorizationLimit, FieldMismatch, ParseError, ZeroInput

DEFAULT_FACTOR_BOUND = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; the base set is exact below 3.3e24
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| by trial division up to `bound`.

    A leftover cofactor is accepted only if it is provably prime; otherwise the
    squarefree part cannot be certified and FactorizationLimit is raised.
    """
    n = abs(n)
    if n == 0:
        raise ZeroInput("cannot factor 0")
    out = []
    for d in (2, 3):
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
    d = 5
    step = 2
    while d * d <= n and d <= bound:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += step
        step = 6 - step
    if n > 1:
        if d * d <= n and not is_prime(n):
            raise FactorizationLimit(f"cofactor {n} has no prime factor <= {bound}")
        out.append((n, 1))
    return tuple(out)


def squarefree_part(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """Squarefree positive integer in the square class of |n|."""
    core = 1
    for p, e in factorize(n, bound):
        if e % 2:
            core *= p
    return core


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def to_rational(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, bool):
        raise ParseError(f"not a number: {a!r}")
    if isinstance(a, int):
        return Fraction(a)
    if isinstance(a, str):
        try:
            return Fraction(a.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {a!r}") from exc
    raise ParseError(f"unsupported scalar {a!r}")


# ---------------------------------------------------------------- fields


@dataclass(frozen=True)
class BaseField:
    """One of Q, R, C or F_p.  `p` is only meaningful for kind "Fp"."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "R", "C", "Fp"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p == 2:
                raise CharTwo("characteristic 2 is not supported")
            if not is_prime(self.p):
                raise BadPrime(f"{self.p} is not an odd prime")
        elif self.p:
            raise ValueError("only F_p carries a prime")

    @property
    def has_real_place(self) -> bool:
        return self.kind in ("Q", "R")

    def __str__(self):
        return f"Fp:{self.p}" if self.kind == "Fp" else self.kind


QQ = BaseField("Q")
RR = BaseField("R")
CC = BaseField("C")


def prime_field(p: int) -> BaseField:
    return BaseField("Fp", p)


def parse_field(text: str) -> BaseField:
    t = text.strip()
    if t in ("Q", "R", "C"):
        return BaseField(t)
    for prefix in ("Fp:", "F:", "GF:"):
        if t.startswith(prefix):
            try:
                p = int(t[len(prefix):])
            except ValueError:
                break
            return prime_field(p)
    raise ParseError(f"unknown field selector {text!r} (expected Q, R, C or Fp:<p>)")


# ---------------------------------------------------------------- square classes


@lru_cache(maxsize=None)
def _least_nonresidue(p: int) -> int:
    n = 2
    while legendre(n, p) != -1:
        n += 1
    return n


@dataclass(frozen=True)
class SquareClass:
    """Canonical representative of a coset in k^x / (k^x)^2.

    Q:  sign in {+1, -1} and a squarefree positive `core`.
    R:  sign only (core is 1).
    C:  the unit class (sign 1, core 1).
    Fp: `sign` holds the Legendre symbol (+1 residue, -1 non-residue).
    """

    field: BaseField
    sign: int = 1
    core: int = 1

    @property
    def rep(self) -> int:
        """Small integer lying in this class."""
        if self.field.kind == "Fp":
            return 1 if self.sign == 1 else _least_nonresidue(self.field.p)
        return self.sign * self.core

    @property
    def is_trivial(self) -> bool:
        return self.sign == 1 and self.core == 1

    def __mul__(self, other: SquareClass) -> SquareClass:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.field.kind == "Q":
            a, b = self.core, other.core
            # product of two squarefree numbers, divided by the square of their gcd
            g = _gcd(a, b)
            return SquareClass(self.field, self.sign * other.sign, (a // g) * (b // g))
        return SquareClass(self.field, self.sign * other.sign, 1)

    def __pow__(self, n: int) -> SquareClass:
        return self if n % 2 else SquareClass(self.field)

    def atoms(self) -> frozenset:
        """Support of the F_2 exponent vector (-1 and the primes of the core)."""
        s = {-1} if self.sign < 0 else set()
        if self.field.kind == "Q" and self.core > 1:
            s.update(prime_factors(self.core))
        return frozenset(s)

    def sort_key(self):
        r = self.rep
        return (abs(r), r < 0)

    def __str__(self):
        return str(self.rep)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def one_class(field: BaseField) -> SquareClass:
    return SquareClass(field)


def square_class(field: BaseField, a, bound: int = DEFAULT_FACTOR_BOUND) -> SquareClass:
    """Canonical square class of a nonzero rational (or residue, over F_p)."""
    x = to_rational(a)
    if x == 0:
        raise ZeroInput("square class of 0")
    kind = field.kind
    if kind == "C":
        return SquareClass(field)
    n = x.numerator * x.denominator
    if kind == "R":
        return SquareClass(field, 1 if n > 0 else -1)
    if kind == "Q":
        return SquareClass(field, 1 if n > 0 else -1, squarefree_part(n, bound))
    p = field.p
    if x.denominator % p == 0:
        raise ZeroInput(f"{x} is not a unit mod {p}")
    r = x.numerator * pow(x.denominator, -1, p) % p
    if r == 0:
        raise ZeroInput(f"{x} vanishes mod {p}")
    return SquareClass(field, legendre(r, p))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise BadPrime(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


# ---------------------------------------------------------------- places and Hilbert symbols


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q.  p = 0 stands for the real place."""

    p: int = 0

    def __post_init__(self):
        if self.p and not is_prime(self.p):
            raise BadPrime(f"{self.p} is not prime")

    @property
    def is_real(self) -> bool:
        return self.p == 0

    def __str__(self):
        return "inf" if self.p == 0 else str(self.p)


REAL = Place(0)


def _signed_core(a) -> int:
    x = to_rational(a)
    if x == 0:
        raise ZeroInput("Hilbert symbol of 0")
    n = x.numerator * x.denominator
    return (1 if n > 0 else -1) * squarefree_part(n)


def hilbert_symbol(a, b, v: Place) -> int:
    """(a, b)_v for nonzero rationals a, b."""
    a, b = _signed_core(a), _signed_core(b)
    if v.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    va, ua = (1, a // p) if a % p == 0 else (0, a)
    vb, ub = (1, b // p) if b % p == 0 else (0, b)
    if p != 2:
        s = -1 if (va * vb * ((p - 1) // 2)) % 2 else 1
        if vb:
            s *= legendre(ua, p)
        if va:
            s *= legendre(ub, p)
        return s
    eps = lambda u: ((u - 1) // 2) % 2
    omega = lambda u: ((u * u - 1) // 8) % 2
    e = eps(ua) * eps(ub) + va * omega(ub) + vb * omega(ua)
    return -1 if e % 2 else 1


def relevant_places(values) -> list[Place]:
    """Real place, 2, and every prime dividing one of the given integers."""
    primes = {2}
    for n in values:
        primes.update(prime_factors(n))
    return [REAL] + [Place(p) for p in sorted(primes)]
