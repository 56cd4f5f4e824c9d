"""The cubic surface X = Bl_Y P^2, with Y = Spec k(sqrt a) + Spec k(sqrt b) + Spec k(sqrt c).

The six geometric points of Y are assumed to be in general position, so X is
a smooth cubic surface.  Its Euler characteristic is assembled from the
K_0 blow-up identity, and chi(X^(3)) is compared with a fixed closed
expression.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, TrivialClass
from .fields import QQ, SquareClass, square_class
from .gw import GWElement, bracket, hyperbolic
from .k0var import blowup_class, chi, etale, proj_space
from .power import a_n, t_alpha


@dataclass(frozen=True)
class CubicSurfaceSpec:
    alpha: SquareClass
    beta: SquareClass
    gamma: SquareClass

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            c = getattr(self, name)
            if c.field != QQ:
                raise ValueError("cubic surface specs live over Q")
            if c.is_trivial:
                raise TrivialClass(f"{name} must be a nonsquare")

    @classmethod
    def of(cls, a, b, c) -> CubicSurfaceSpec:
        return cls(square_class(QQ, a), square_class(QQ, b), square_class(QQ, c))

    @property
    def reps(self) -> tuple[int, int, int]:
        return (self.alpha.rep, self.beta.rep, self.gamma.rep)

    def __str__(self):
        return "({}, {}, {})".format(*self.reps)


def _b(c) -> GWElement:
    return bracket(QQ, c)


def center(spec: CubicSurfaceSpec):
    a, b, c = spec.reps
    return etale(QQ, a) + etale(QQ, b) + etale(QQ, c)


def phi(spec: CubicSurfaceSpec) -> GWElement:
    a, b, c = spec.reps
    return _b(-2 * a) + _b(-2 * b) + _b(-2 * c)


def cubic_chi_computed(spec: CubicSurfaceSpec) -> GWElement:
    """chi of the K_0 class [P^2] - [Y] + [Y][P^1], unsimplified."""
    return chi(blowup_class(proj_space(2, QQ), center(spec), 2))


def cubic_chi_canonical_form(spec: CubicSurfaceSpec) -> GWElement:
    """2H + <-1> + <-2> + <-2a> + <-2b> + <-2c>."""
    return 2 * hyperbolic(QQ) + _b(-1) + _b(-2) + phi(spec)


def cubic_chi_alt_form(spec: CubicSurfaceSpec) -> GWElement:
    """2<1> + 4<-1> + <-a> + <-b> + <-c>."""
    a, b, c = spec.reps
    return 2 * _b(1) + 4 * _b(-1) + _b(-a) + _b(-b) + _b(-c)


def cubic_chi(spec: CubicSurfaceSpec) -> GWElement:
    computed = cubic_chi_computed(spec)
    canonical = cubic_chi_canonical_form(spec)
    if not computed == canonical:
        raise ConsistencyError(f"blow-up computation {computed} != {canonical}")
    return canonical


def cubic_sym3_printed(spec: CubicSurfaceSpec) -> GWElement:
    a, b, c = spec.reps
    H = hyperbolic(QQ)
    return (
        60 * H
        + 11 * _b(-1)
        + 3 * _b(-2)
        + 7 * phi(spec)
        + (_b(-a) + _b(-b) + _b(-c))
        + (_b(1) + _b(2)) * (_b(a * b) + _b(a * c) + _b(b * c))
        + _b(-2 * a * b * c)
        + _tail(spec)
    )


def _t(x) -> GWElement:
    return t_alpha(square_class(QQ, x))


def _tail(spec: CubicSurfaceSpec) -> GWElement:
    a, b, c = spec.reps
    return _t(a * b) + _t(b * c) + _t(a * c)


def cubic_sym3_corrected(spec: CubicSurfaceSpec) -> GWElement:
    """What the a_3 computation actually produces, in the printed layout.

    Differs from cubic_sym3_printed in two places: the factor multiplying
    <ab> + <ac> + <bc> is <-1> + <-2>, and the torsion tail is t_a + t_b + t_c.
    Kept as a diagnostic next to the printed form.
    """
    a, b, c = spec.reps
    H = hyperbolic(QQ)
    return (
        60 * H
        + 11 * _b(-1)
        + 3 * _b(-2)
        + 7 * phi(spec)
        + (_b(-a) + _b(-b) + _b(-c))
        + (_b(-1) + _b(-2)) * (_b(a * b) + _b(a * c) + _b(b * c))
        + _b(-2 * a * b * c)
        + _t(a)
        + _t(b)
        + _t(c)
    )


@dataclass
class Sym3Result:
    computed: GWElement
    printed: GWElement

    @property
    def equal(self) -> bool:
        return self.computed == self.printed

    def to_json(self) -> dict:
        return {
            "computed": self.computed.to_json(),
            "printed": self.printed.to_json(),
            "equal": self.equal,
        }


def cubic_sym3(spec: CubicSurfaceSpec) -> Sym3Result:
    return Sym3Result(a_n(cubic_chi(spec), 3), cubic_sym3_printed(spec))


def cubic_chain(spec: CubicSurfaceSpec) -> dict[str, bool]:
    """The intermediate identities used to assemble a_3(chi(X))."""
    F = QQ
    a, b, c = spec.reps
    H = hyperbolic(F)
    psi = 2 * H + _b(-1) + _b(-2)
    ph = phi(spec)
    psi_split = 2 * _b(1) + 3 * _b(-1) + _b(-2)
    return {
        "a3(2H+<-1>+<-2>) = 24H+8<-1>": a_n(psi, 3) == 24 * H + 8 * _b(-1),
        "a2(2H+<-1>+<-2>)*phi = 24H+4phi+<2>phi": a_n(psi, 2) * ph == 24 * H + 4 * ph + _b(2) * ph,
        "(2<1>+3<-1>+<-2>)*a2(phi) = 12H+(<-1>+<-2>)(3<1>+<-ab>+<-bc>+<-ac>)": psi_split * a_n(ph, 2)
        == 12 * H + (_b(-1) + _b(-2)) * (3 * _b(1) + _b(-a * b) + _b(-b * c) + _b(-a * c)),
        "a3(phi) = 3phi+<-2abc>+t_ab+t_bc+t_ac": a_n(ph, 3) == 3 * ph + _b(-2 * a * b * c) + _tail(spec),
        "a3(phi) = 3phi+<-2abc>+t_a+t_b+t_c": a_n(ph, 3)
        == 3 * ph + _b(-2 * a * b * c) + _t(a) + _t(b) + _t(c),
        "(2<1>+3<-1>+<-2>)*a2(phi) = 12H+(<-1>+<-2>)(3<1>+<ab>+<bc>+<ac>)": psi_split * a_n(ph, 2)
        == 12 * H + (_b(-1) + _b(-2)) * (3 * _b(1) + _b(a * b) + _b(b * c) + _b(a * c)),
        "psi = 2<1>+3<-1>+<-2>": psi == psi_split,
    }


def alt_form_agrees(spec: CubicSurfaceSpec) -> bool:
    return cubic_chi_alt_form(spec) == cubic_chi_canonical_form(spec)
