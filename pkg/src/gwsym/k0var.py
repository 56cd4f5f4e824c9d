"""Symbolic classes in the etale-linear part of K_0(Var_k).

A class is an integer combination of monomials [A^l] * [Spec k_G], where G is
a finite subgroup of k^x/(k^x)^2 and k_G = k(sqrt g : g in G) is the
corresponding multiquadratic algebra.  Symmetric powers are computed on the
geometric side by enumerating Galois orbits of multisets of geometric points;
they never go through the power structure on GW(k).

Identities for symmetric powers hold in K_0^uh(Var_k); in characteristic 0
this is K_0(Var_k) itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .errors import (
    BadCodim,
    DependentGenerators,
    FieldMismatch,
    ParseError,
    SizeLimit,
    TrivialClass,
)
from .fields import QQ, BaseField, SquareClass, square_class
from .gw import GWElement, trace_form
from .truncated import smul, spow

MAX_MULTISETS = 250_000


# ---------------------------------------------------------------- subgroups


def _atom_key(a):
    return (a != -1, a)


def _class_from_atoms(field: BaseField, atoms) -> SquareClass:
    sign = -1 if -1 in atoms else 1
    core = 1
    for a in atoms:
        if a != -1:
            core *= a
    return SquareClass(field, sign, core)


def _reduced_echelon(rows):
    """Reduced row echelon form over F_2 of atom sets; rows are frozensets."""
    basis = []  # (pivot, row)
    for r in rows:
        r = set(r)
        for piv, b in basis:
            if piv in r:
                r ^= b
        if not r:
            continue
        piv = min(r, key=_atom_key)
        for i, (p2, b) in enumerate(basis):
            if piv in b:
                basis[i] = (p2, b ^ r)
        basis.append((piv, r))
    basis.sort(key=lambda pr: _atom_key(pr[0]))
    return [(p, frozenset(b)) for p, b in basis]


class SqClassSubgroup:
    """A finite subgroup G of k^x/(k^x)^2, i.e. the multiquadratic algebra k_G."""

    __slots__ = ("field", "elements", "_basis")

    def __init__(self, field: BaseField, generators=()):
        elems = {SquareClass(field)}
        gens = []
        for g in generators:
            if not isinstance(g, SquareClass):
                g = square_class(field, g)
            if g.field != field:
                raise FieldMismatch(f"generator over {g.field}, group over {field}")
            if g.is_trivial:
                raise TrivialClass("a generator is the trivial square class")
            if g in elems:
                raise DependentGenerators(f"generator {g} lies in the span of the others")
            elems |= {g * e for e in elems}
            gens.append(g)
        self.field = field
        self.elements = frozenset(elems)
        self._basis = _reduced_echelon([g.atoms() for g in gens])

    @classmethod
    def from_elements(cls, field: BaseField, elements) -> SqClassSubgroup:
        """Subgroup generated by an arbitrary collection of classes."""
        basis = _reduced_echelon([e.atoms() for e in elements])
        return cls(field, [_class_from_atoms(field, b) for _, b in basis])

    @property
    def generators(self) -> list[SquareClass]:
        return [_class_from_atoms(self.field, b) for _, b in self._basis]

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def order(self) -> int:
        return len(self.elements)

    def coords(self, g: SquareClass) -> tuple[int, ...]:
        """Exponent vector of g in the canonical generators."""
        if g not in self.elements:
            raise ValueError(f"{g} is not in the subgroup")
        atoms = g.atoms()
        return tuple(1 if piv in atoms else 0 for piv, _ in self._basis)

    def __mul__(self, other: SqClassSubgroup) -> SqClassSubgroup:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return SqClassSubgroup.from_elements(self.field, self.generators + other.generators)

    def __and__(self, other: SqClassSubgroup) -> SqClassSubgroup:
        return SqClassSubgroup.from_elements(self.field, self.elements & other.elements)

    def __contains__(self, g):
        return g in self.elements

    def __le__(self, other):
        return self.elements <= other.elements

    def __eq__(self, other):
        if not isinstance(other, SqClassSubgroup):
            return NotImplemented
        return self.field == other.field and self.elements == other.elements

    def __hash__(self):
        return hash((self.field, self.elements))

    def sort_key(self):
        return (self.rank, tuple(g.sort_key() for g in self.generators))

    def __str__(self):
        return "Et(" + ",".join(str(g.rep) for g in self.generators) + ")"

    __repr__ = __str__


def trivial_group(field: BaseField = QQ) -> SqClassSubgroup:
    return SqClassSubgroup(field)


# ---------------------------------------------------------------- classes


@dataclass(frozen=True)
class K0Monomial:
    """[A^l] * [Spec k_G]."""

    affine_exp: int
    algebra: SqClassSubgroup

    def __post_init__(self):
        if self.affine_exp < 0:
            raise ValueError("affine exponent must be nonnegative")

    def sort_key(self):
        return (-self.affine_exp, self.algebra.sort_key())

    def __str__(self):
        parts = []
        if self.affine_exp:
            parts.append(f"A^{self.affine_exp}")
        if self.algebra.rank:
            parts.append(str(self.algebra))
        return "*".join(parts) or "1"


def _mono_product(x: K0Monomial, y: K0Monomial) -> tuple[int, K0Monomial]:
    # k_G1 (x) k_G2 = |G1 n G2| copies of k_{G1 G2}
    G1, G2 = x.algebra, y.algebra
    mult = (G1 & G2).order
    return mult, K0Monomial(x.affine_exp + y.affine_exp, G1 * G2)


class K0Class:
    __slots__ = ("field", "_terms")

    def __init__(self, field: BaseField = QQ, terms=None):
        self.field = field
        t = {}
        for mono, c in (terms or {}).items():
            if mono.algebra.field != field:
                raise FieldMismatch(f"monomial over {mono.algebra.field} in class over {field}")
            t[mono] = t.get(mono, 0) + c
        self._terms = {k: v for k, v in t.items() if v}

    @classmethod
    def zero(cls, field: BaseField = QQ) -> K0Class:
        return cls(field)

    @classmethod
    def one(cls, field: BaseField = QQ) -> K0Class:
        return monomial(0, trivial_group(field))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def _coerce(self, other):
        if isinstance(other, int):
            return other * K0Class.one(self.field)
        if not isinstance(other, K0Class):
            return None
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self._terms)
        for k, v in o._terms.items():
            t[k] = t.get(k, 0) + v
        return K0Class(self.field, t)

    __radd__ = __add__

    def __neg__(self):
        return K0Class(self.field, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return K0Class(self.field, {k: v * other for k, v in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = {}
        for x, a in self._terms.items():
            for y, b in o._terms.items():
                mult, z = _mono_product(x, y)
                t[z] = t.get(z, 0) + a * b * mult
        return K0Class(self.field, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (int, K0Class)) else None
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash((self.field, frozenset(self._terms.items())))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"K0Class({self.field}, {render(self)!r})"

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "terms": [
                {"affine": m.affine_exp, "etale": [g.rep for g in m.algebra.generators], "coeff": c}
                for m, c in self.items()
            ],
            "text": render(self),
        }


# ---------------------------------------------------------------- constructors


def monomial(l: int, G: SqClassSubgroup) -> K0Class:
    return K0Class(G.field, {K0Monomial(l, G): 1})


def etale(field: BaseField, *generators) -> K0Class:
    """[Spec k(sqrt g_1, ..., sqrt g_r)]."""
    return monomial(0, SqClassSubgroup(field, generators))


def affine(n: int, field: BaseField = QQ) -> K0Class:
    return monomial(n, trivial_group(field))


def point(field: BaseField = QQ) -> K0Class:
    return K0Class.one(field)


def proj_space(n: int, field: BaseField = QQ) -> K0Class:
    out = K0Class.zero(field)
    for i in range(n + 1):
        out = out + affine(i, field)
    return out


def gm(field: BaseField = QQ) -> K0Class:
    return affine(1, field) - 1


def torus_1d(alpha, field: BaseField = QQ) -> K0Class:
    """The norm-one torus x^2 - alpha y^2 = 1: [P^1] - [Spec k(sqrt alpha)]."""
    if isinstance(alpha, SquareClass):
        field = alpha.field
    else:
        alpha = square_class(field, alpha)
    if alpha.is_trivial:
        raise TrivialClass("torus_1d needs a nonsquare alpha")
    return proj_space(1, field) - etale(field, alpha)


def nodal_union(field: BaseField = QQ) -> K0Class:
    """{xy = 0}: two copies of G_m glued at the origin."""
    return 2 * gm(field) + 1


def cuspidal_cubic(field: BaseField = QQ) -> K0Class:
    return affine(1, field) + 1


def blowup_class(X: K0Class, Z: K0Class, codim: int) -> K0Class:
    """[Bl_Z X] = [X] - [Z] + [Z][P^(c-1)]."""
    if codim < 1:
        raise BadCodim(f"codimension must be >= 1, got {codim}")
    return X - Z + Z * proj_space(codim - 1, X.field)


# ---------------------------------------------------------------- Euler characteristic


def chi(x: K0Class) -> GWElement:
    """Ring map K_0 -> GW(k): [A^1] -> <-1>, [Spec k_G] -> trace form of k_G."""
    F = x.field
    minus = GWElement.of_class(square_class(F, -1))
    one = GWElement.one(F)
    out = GWElement.zero(F)
    for mono, c in x._terms.items():
        sign = minus if mono.affine_exp % 2 else one
        out = out + c * (sign * trace_form(mono.algebra))
    return out


# ---------------------------------------------------------------- symmetric powers


def multiset_count(G: SqClassSubgroup, n: int) -> int:
    return comb(G.order + n - 1, n)


@lru_cache(maxsize=None)
def _orbits(r: int, n: int) -> tuple:
    """Orbits of F_2^r (acting by translation) on size-n multisets of F_2^r.

    Returns (representative, orbit size, stabilizer) triples; points and
    characters are bitmasks.
    """
    D = range(1 << r)
    seen = set()
    out = []
    for m in combinations_with_replacement(D, n):
        if m in seen:
            continue
        orbit = set()
        stab = []
        for chi_ in D:
            image = tuple(sorted(p ^ chi_ for p in m))
            orbit.add(image)
            if image == m:
                stab.append(chi_)
        seen |= orbit
        out.append((m, len(orbit), tuple(stab)))
    return tuple(out)


def _annihilator(G: SqClassSubgroup, H) -> SqClassSubgroup:
    keep = []
    for g in G.elements:
        v = G.coords(g)
        mask = sum(b << i for i, b in enumerate(v))
        if all(bin(mask & h).count("1") % 2 == 0 for h in H):
            keep.append(g)
    return SqClassSubgroup.from_elements(G.field, keep)


@lru_cache(maxsize=None)
def _sym_orbits(G: SqClassSubgroup, n: int) -> K0Class:
    out = K0Class.zero(G.field)
    for _, _, stab in _orbits(G.rank, n):
        out = out + monomial(0, _annihilator(G, stab))
    return out


def sym_orbits(G: SqClassSubgroup, n: int, max_multisets: int = MAX_MULTISETS) -> K0Class:
    """[Sym^n(Spec k_G)] by enumerating Galois orbits of multisets of geometric points.

    The geometric points of Spec k_G form a torsor under D = Hom(G, +-1), the
    Galois group of k_G.  An orbit with stabilizer H contributes the spectrum
    of the fixed field of H, which is k_{H^perp}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if multiset_count(G, n) > max_multisets:
        raise SizeLimit(f"{multiset_count(G, n)} multisets exceed the limit {max_multisets}")
    return _sym_orbits(G, n)


def _mono_sym_series(mono: K0Monomial, N: int, max_multisets: int) -> list[K0Class]:
    out = []
    for k in range(N + 1):
        shift = monomial(k * mono.affine_exp, trivial_group(mono.algebra.field))
        out.append(shift * sym_orbits(mono.algebra, k, max_multisets))
    return out


def sym_series(x: K0Class, N: int, max_multisets: int = MAX_MULTISETS) -> list[K0Class]:
    """[S_0(x), ..., S_N(x)]: the Kapranov zeta series of x truncated at t^N.

    Monomials use S_n([A^l][Spec k_G]) = [A^(nl)] [Sym^n Spec k_G]; sums go
    through the power-structure convolution, negative coefficients through
    series inversion.
    """
    F = x.field
    one, zero = K0Class.one(F), K0Class.zero(F)
    out = [one] + [zero] * N
    for mono, c in x.items():
        s = spow(_mono_sym_series(mono, N, max_multisets), c, N, one, zero)
        out = smul(out, s, N, zero)
    return out


def sym_power(x: K0Class, n: int, max_multisets: int = MAX_MULTISETS) -> K0Class:
    return sym_series(x, n, max_multisets)[n]


# ---------------------------------------------------------------- text


def render(x: K0Class) -> str:
    items = x.items()
    if not items:
        return "0"
    parts = []
    for i, (mono, c) in enumerate(items):
        body = str(mono)
        a = abs(c)
        if a != 1:
            body = f"{a}" if body == "1" else f"{a}*{body}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


_FACTOR = re.compile(
    r"\s*(?:A\^(\d+)|A(?![\^\w])|P\^(\d+)|Gm|Et\(\s*([^)]*)\)|(\d+))\s*"
)


def _parse_term(s: str, field: BaseField) -> K0Class:
    out = K0Class.one(field)
    pos, expect_factor = 0, True
    while pos < len(s):
        if not expect_factor:
            if s[pos] != "*":
                raise ParseError(f"expected '*' at {s[pos:]!r}")
            pos += 1
            expect_factor = True
            continue
        m = _FACTOR.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse class factor at {s[pos:]!r}")
        a_exp, p_exp, et, num = m.groups()
        if a_exp is not None:
            f = affine(int(a_exp), field)
        elif p_exp is not None:
            f = proj_space(int(p_exp), field)
        elif et is not None:
            gens = [g for g in et.replace(" ", "").split(",") if g]
            f = etale(field, *gens)
        elif num is not None:
            f = int(num) * K0Class.one(field)
        elif m.group(0).strip() == "Gm":
            f = gm(field)
        else:
            f = affine(1, field)
        out = out * f
        pos, expect_factor = m.end(), False
    if expect_factor:
        raise ParseError(f"dangling '*' in {s!r}")
    return out


def parse(text: str, field: BaseField = QQ) -> K0Class:
    """Parse e.g. "A^2*Et(3,5) + 2*A^1 - Et(7) + 1" (also P^n and Gm)."""
    s = text.replace("−", "-").strip()
    if not s:
        raise ParseError("empty class")
    out = K0Class.zero(field)
    # split on top-level + and - (none occur inside Et(...) except signs of generators)
    pieces, depth, cur, signs = [], 0, "", [1]
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-":
            if cur.strip():
                pieces.append(cur)
                signs.append(1 if ch == "+" else -1)
            elif not pieces and not cur.strip():
                signs[-1] *= 1 if ch == "+" else -1
            else:
                raise ParseError(f"doubled operator in {text!r}")
            cur = ""
        else:
            cur += ch
    if not cur.strip():
        raise ParseError(f"dangling operator in {text!r}")
    pieces.append(cur)
    for sgn, piece in zip(signs, pieces):
        out = out + sgn * _parse_term(piece.strip(), field)
    return out
