"""Truncated power series with coefficients in GW(k)."""

from __future__ import annotations

from .errors import FieldMismatch, NotAUnit
from .fields import QQ, BaseField, square_class
from .gw import GWElement
from .k0var import K0Class, chi, sym_series, MAX_MULTISETS
from .power import a_series
from .truncated import sinv, smul, spow


class GWSeries:
    """c_0 + c_1 t + ... + c_N t^N + O(t^(N+1)); `==` compares coefficients in GW(k)."""

    __slots__ = ("field", "order", "coeffs")

    def __init__(self, field: BaseField, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        zero = GWElement.zero(field)
        coeffs = (coeffs + [zero] * (order + 1 - len(coeffs)))[: order + 1]
        for c in coeffs:
            if c.field != field:
                raise FieldMismatch(f"coefficient over {c.field} in series over {field}")
        self.field = field
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def one(cls, field: BaseField, order: int) -> GWSeries:
        return cls(field, [GWElement.one(field)], order)

    @classmethod
    def from_ints(cls, field: BaseField, ints, order: int | None = None) -> GWSeries:
        return cls(field, [k * GWElement.one(field) for k in ints], order)

    def _check(self, other):
        if not isinstance(other, GWSeries):
            raise TypeError("expected a GWSeries")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.order != self.order:
            raise ValueError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return GWSeries(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GWSeries(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return GWSeries(
            self.field, smul(self.coeffs, other.coeffs, self.order, GWElement.zero(self.field))
        )

    def __eq__(self, other):
        if not isinstance(other, GWSeries):
            return NotImplemented
        self._check(other)
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __getitem__(self, n):
        return self.coeffs[n]

    def map_int(self, hom) -> list[int]:
        """Apply an integer-valued homomorphism (rank_hom, sign_hom) coefficientwise."""
        return [hom(c) for c in self.coeffs]

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"GWSeries({self.field}, {render(self)!r})"

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "order": self.order,
            "coeffs": [[[c.rep, m] for c, m in x.items()] for x in self.coeffs],
            "text": render(self),
        }


def s_add(f: GWSeries, g: GWSeries) -> GWSeries:
    return f + g


def s_mul(f: GWSeries, g: GWSeries) -> GWSeries:
    return f * g


def s_inv(f: GWSeries) -> GWSeries:
    F = f.field
    if not f.coeffs[0] == GWElement.one(F):
        raise NotAUnit(f"constant term {f.coeffs[0]} is not 1")
    return GWSeries(F, sinv(f.coeffs, f.order, GWElement.one(F), GWElement.zero(F)))


def geom_pow(q: GWElement, N: int) -> GWSeries:
    """(1 - t)^(-q) = sum_n a_n(q) t^n."""
    return GWSeries(q.field, a_series(q, N))


def kapranov_chi_zeta(x: K0Class, N: int, max_multisets: int = MAX_MULTISETS) -> GWSeries:
    """sum_n chi([X^(n)]) t^n, with the symmetric powers computed geometrically."""
    return GWSeries(x.field, [chi(s) for s in sym_series(x, N, max_multisets)])


def linear(field: BaseField, a, order: int, c0: int = 1) -> GWSeries:
    """c0 - <a> t, handy for building (1 - <a> t)^(-1)."""
    return GWSeries(
        field,
        [c0 * GWElement.one(field), -GWElement.of_class(square_class(field, a))],
        order,
    )


def int_series_pow(base, m: int, N: int) -> list[int]:
    """Integer series base**m (m may be negative) truncated at t^N."""
    return spow(list(base), m, N, 1, 0)


# ---------------------------------------------------------------- text


def _coeff_text(c: GWElement) -> str:
    s = str(c)
    if c.same_terms(GWElement.one(c.field)):
        return "1"
    return s if len(c.items()) == 1 else f"({s})"


def render(f: GWSeries) -> str:
    parts = []
    for n, c in enumerate(f.coeffs):
        if not c.items():
            continue
        body = _coeff_text(c)
        if n == 0:
            parts.append(body)
            continue
        mon = "t" if n == 1 else f"t^{n}"
        parts.append(mon if body == "1" else f"{body}{mon}")
    parts.append(f"O(t^{f.order + 1})")
    return " + ".join(parts)
