"""Symbolic Grothendieck-Witt arithmetic, the power structure a_n, and
Euler characteristics of symmetric powers of K_0-etale-linear varieties."""

from .errors import GWError, ParseError
from .fields import CC, QQ, RR, BaseField, Place, SquareClass, hilbert_symbol, parse_field, prime_field, square_class
from .gw import GWElement, bracket, diag, eq, hyperbolic, invariants, rank_hom, sign_hom
from .k0var import K0Class, SqClassSubgroup, chi, etale, sym_power
from .power import a_hyperbolic, a_n, t_alpha
from .series import GWSeries

__all__ = [
    "BaseField",
    "CC",
    "GWElement",
    "GWError",
    "GWSeries",
    "K0Class",
    "ParseError",
    "Place",
    "QQ",
    "RR",
    "SqClassSubgroup",
    "SquareClass",
    "a_hyperbolic",
    "a_n",
    "bracket",
    "chi",
    "diag",
    "eq",
    "etale",
    "hilbert_symbol",
    "hyperbolic",
    "invariants",
    "parse_field",
    "prime_field",
    "rank_hom",
    "sign_hom",
    "square_class",
    "sym_power",
    "t_alpha",
]
