"""Virtual quadratic forms: the Grothendieck-Witt ring GW(k).

Elements are kept as integer combinations of square classes, i.e. as elements
of the group ring Z[k^x/(k^x)^2].  No normal form modulo the GW relations is
attempted; equality is decided from classical invariants instead (rank,
discriminant, signature and, over Q, local Hasse invariants).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .errors import FieldMismatch, NoRealPlace, ParseError
from .fields import (
    QQ,
    BaseField,
    Place,
    SquareClass,
    hilbert_symbol,
    one_class,
    relevant_places,
    square_class,
)


class GWElement:
    """A virtual form sum_i m_i <a_i>.  `==` is equality in GW(k)."""

    __slots__ = ("field", "_terms")

    def __init__(self, field: BaseField, terms=None):
        self.field = field
        t = {}
        for c, m in (terms or {}).items():
            if c.field != field:
                raise FieldMismatch(f"class over {c.field} in element over {field}")
            if m:
                t[c] = t.get(c, 0) + m
        self._terms = {c: m for c, m in t.items() if m}

    # -- constructors

    @classmethod
    def zero(cls, field: BaseField = QQ) -> GWElement:
        return cls(field)

    @classmethod
    def one(cls, field: BaseField = QQ) -> GWElement:
        return cls(field, {one_class(field): 1})

    @classmethod
    def of_class(cls, c: SquareClass, mult: int = 1) -> GWElement:
        return cls(c.field, {c: mult})

    # -- accessors

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda cm: cm[0].sort_key())

    @property
    def rank(self) -> int:
        return sum(self._terms.values())

    @property
    def is_genuine(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def same_terms(self, other: GWElement) -> bool:
        """Structural identity of the stored combination (stronger than ==)."""
        return self.field == other.field and self._terms == other._terms

    # -- ring structure

    def _check(self, other):
        if not isinstance(other, GWElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = other * GWElement.one(self.field)
        if self._check(other) is NotImplemented:
            return NotImplemented
        t = dict(self._terms)
        for c, m in other._terms.items():
            t[c] = t.get(c, 0) + m
        return GWElement(self.field, t)

    __radd__ = __add__

    def __neg__(self):
        return GWElement(self.field, {c: -m for c, m in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = other * GWElement.one(self.field)
        if not isinstance(other, GWElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GWElement(self.field, {c: m * other for c, m in self._terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        t = {}
        for a, m in self._terms.items():
            for b, n in other._terms.items():
                ab = a * b
                t[ab] = t.get(ab, 0) + m * n
        return GWElement(self.field, t)

    __rmul__ = __mul__

    # -- equality in GW(k)

    def __eq__(self, other):
        if isinstance(other, int):
            other = other * GWElement.one(self.field)
        if not isinstance(other, GWElement):
            return NotImplemented
        return eq(self, other)

    def __hash__(self):
        # rank, discriminant and signature are GW invariants, so this hash is
        # compatible with ==
        inv = invariants(self, with_hasse=False)
        return hash((self.field, inv.rank, inv.disc, inv.signature))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"GWElement({self.field}, {render(self)!r})"

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "terms": [[c.rep, m] for c, m in self.items()],
            "rank": self.rank,
            "text": render(self),
        }


# ---------------------------------------------------------------- constructors


def bracket(field: BaseField, a) -> GWElement:
    """The rank one form <a>."""
    return GWElement.of_class(square_class(field, a))


def diag(field: BaseField, entries) -> GWElement:
    t = {}
    for a in entries:
        c = square_class(field, a)
        t[c] = t.get(c, 0) + 1
    return GWElement(field, t)


def hyperbolic(field: BaseField = QQ) -> GWElement:
    return diag(field, [1, -1])


def add(x: GWElement, y: GWElement) -> GWElement:
    return x + y


def neg(x: GWElement) -> GWElement:
    return -x


def mul(x: GWElement, y: GWElement) -> GWElement:
    return x * y


# ---------------------------------------------------------------- invariants


@dataclass
class GWInvariants:
    rank: int
    disc: SquareClass
    signature: int | None = None
    hasse: dict[Place, int] | None = dc_field(default=None)


def _disc(terms) -> SquareClass:
    d = None
    for c, m in terms.items():
        if m % 2:
            d = c if d is None else d * c
    return d


def _signature(terms) -> int:
    return sum(m * c.sign for c, m in terms.items())


def _hasse(terms, v: Place) -> int:
    """prod_{i<j} (a_i, a_j)_v over the expanded diagonal of a genuine form."""
    items = sorted(terms.items(), key=lambda cm: cm[0].sort_key())
    e = 0
    for i, (a, m) in enumerate(items):
        if hilbert_symbol(a.rep, a.rep, v) == -1:
            e += m * (m - 1) // 2
        for b, n in items[i + 1:]:
            if hilbert_symbol(a.rep, b.rep, v) == -1:
                e += m * n
    return -1 if e % 2 else 1


def invariants(x: GWElement, with_hasse: bool = True) -> GWInvariants:
    t = x._terms
    disc = _disc(t) or one_class(x.field)
    sig = _signature(t) if x.field.has_real_place else None
    hasse = None
    if with_hasse and x.field.kind == "Q" and x.is_genuine:
        hasse = {v: _hasse(t, v) for v in relevant_places(c.core for c in t)}
    return GWInvariants(x.rank, disc, sig, hasse)


def _isometric(P: dict, N: dict, field: BaseField) -> bool:
    """Decide P = N for genuine forms of equal rank."""
    if field.kind == "C":
        return True
    if field.kind == "R":
        return _signature(P) == _signature(N)
    if (_disc(P) or one_class(field)) != (_disc(N) or one_class(field)):
        return False
    if field.kind == "Fp":
        return True
    if _signature(P) != _signature(N):
        return False
    places = relevant_places([c.core for c in P] + [c.core for c in N])
    return all(_hasse(P, v) == _hasse(N, v) for v in places)


def eq(x: GWElement, y: GWElement) -> bool:
    """Equality in GW(k): x - y = P - N with P, N genuine; test P isometric to N."""
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} vs {y.field}")
    d = (x - y)._terms
    P = {c: m for c, m in d.items() if m > 0}
    N = {c: -m for c, m in d.items() if m < 0}
    if sum(P.values()) != sum(N.values()):
        return False
    return _isometric(P, N, x.field)


def rank_hom(x: GWElement) -> int:
    return x.rank


def sign_hom(x: GWElement) -> int:
    if not x.field.has_real_place:
        raise NoRealPlace(f"{x.field} has no real embedding")
    return _signature(x._terms)


def disc_hom(x: GWElement) -> SquareClass:
    return _disc(x._terms) or one_class(x.field)


def trace_form(G) -> GWElement:
    """Trace form of the multiquadratic algebra k_G: <|G|> * sum_{g in G} <g>."""
    order = square_class(G.field, G.order)
    return GWElement(G.field, {order * g: 1 for g in G.elements})


# ---------------------------------------------------------------- text


def _fmt_term(c: SquareClass, m: int, first: bool) -> str:
    a = abs(m)
    body = f"{'' if a == 1 else a}⟨{c.rep}⟩"
    if first:
        return body if m > 0 else f"-{body}"
    return f"{'+' if m > 0 else '-'} {body}"


def render(x: GWElement) -> str:
    items = x.items()
    if not items:
        return "0"
    return " ".join(_fmt_term(c, m, i == 0) for i, (c, m) in enumerate(items))


_TERM = re.compile(
    r"\s*([+\-−])?\s*(\d+)?\s*\*?\s*"
    r"(?:(?:⟨|<)\s*([+\-−]?\s*\d+(?:\s*/\s*\d+)?)\s*(?:⟩|>)|(ℍ|H))?\s*"
)


def parse(text: str, field: BaseField = QQ) -> GWElement:
    """Parse "2⟨1⟩ + ⟨-6⟩ - 3<2> + H"; a bare integer n means n<1>."""
    s = text.strip()
    if not s:
        raise ParseError("empty form")
    pos, out, first = 0, GWElement.zero(field), True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign_tok, coef, entry, hyp = m.groups()
        if m.end() == pos or (coef is None and entry is None and hyp is None):
            raise ParseError(f"cannot parse form at {s[pos:]!r}")
        if sign_tok is None and not first:
            raise ParseError(f"missing operator before {s[pos:]!r}")
        k = int(coef) if coef is not None else 1
        if sign_tok in ("-", "−"):
            k = -k
        if hyp:
            out = out + k * hyperbolic(field)
        elif entry is not None:
            out = out + k * bracket(field, entry.replace(" ", "").replace("−", "-"))
        else:
            out = out + k * GWElement.one(field)
        pos, first = m.end(), False
    return out
