"""Brute-force reference computations.

Each function here recomputes something the main modules compute, by a route
that shares no code with them beyond square-class canonicalisation: square
tables for Legendre symbols, exhaustive local solvability for Hilbert
symbols, Gram matrices for trace forms, Galois orbit counting for products of
etale algebras, and chains of explicit relation rewrites for GW equality.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .fields import Place, squarefree_part
from .k0var import K0Class, SqClassSubgroup, monomial


def squares_mod(p: int) -> frozenset:
    return frozenset(x * x % p for x in range(1, p))


def legendre_table(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


# ---------------------------------------------------------------- Hilbert symbol


def _sqfree(a: int) -> int:
    return (1 if a > 0 else -1) * squarefree_part(a)


def hilbert_oracle(a: int, b: int, v: Place) -> int:
    """Local solvability of z^2 = a x^2 + b y^2 by exhaustive search.

    Over R: the ternary form a x^2 + b y^2 - z^2 is isotropic iff it is
    indefinite.  Over Q_p with a, b squarefree, a primitive solution modulo
    p^3 (p odd) or 2^5 lifts by Hensel's lemma, since the gradient at a
    primitive solution then has valuation at most 1 (resp. 2).  A primitive
    solution can be scaled so that one coordinate equals 1.
    """
    a, b = _sqfree(a), _sqfree(b)
    if v.is_real:
        coeffs = (a, b, -1)
        return 1 if min(coeffs) < 0 < max(coeffs) else -1
    return _local_oracle(a, b, v.p)


@lru_cache(maxsize=None)
def _local_oracle(a: int, b: int, p: int) -> int:
    N = p ** (5 if p == 2 else 3)
    sq = {z * z % N for z in range(N)}
    by2 = {b * y * y % N for y in range(N)}
    # z = 1: a x^2 + b y^2 = 1
    if any((1 - a * x * x) % N in by2 for x in range(N)):
        return 1
    # x = 1: a + b y^2 = z^2
    if any((a + b * y * y) % N in sq for y in range(N)):
        return 1
    # y = 1: a x^2 + b = z^2
    if any((a * x * x + b) % N in sq for x in range(N)):
        return 1
    return -1


# ---------------------------------------------------------------- trace forms


def trace_gram(G: SqClassSubgroup) -> list[list[Fraction]]:
    """Gram matrix of (x, y) -> Tr(xy) on k_G = k[x_1..x_r]/(x_i^2 - g_i).

    Basis: squarefree monomials x^S.  x^S x^T = prod_{S&T} g_i x^(S^T) and
    Tr(x^S) = 2^r if S is empty, else 0.
    """
    gens = [Fraction(g.rep) for g in G.generators]
    r = len(gens)
    size = 1 << r
    M = [[Fraction(0)] * size for _ in range(size)]
    for S in range(size):
        for T in range(size):
            if S ^ T:
                continue
            c = Fraction(size)
            for i in range(r):
                if S & T & (1 << i):
                    c *= gens[i]
            M[S][T] = c
    return M


def diagonalize(M) -> list[Fraction]:
    """Diagonal entries of a symmetric matrix after congruence diagonalisation over Q."""
    A = [row[:] for row in M]
    n = len(A)
    out = []
    for k in range(n):
        if A[k][k] == 0:
            for j in range(k + 1, n):
                if A[j][j] != 0:
                    A[k], A[j] = A[j], A[k]
                    for row in A:
                        row[k], row[j] = row[j], row[k]
                    break
            else:
                for j in range(k + 1, n):
                    if A[k][j] != 0:
                        # replace e_k by e_k + e_j
                        for i in range(n):
                            A[k][i] += A[j][i]
                        for i in range(n):
                            A[i][k] += A[i][j]
                        break
        d = A[k][k]
        if d == 0:
            continue
        out.append(d)
        for i in range(k + 1, n):
            f = A[i][k] / d
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
                for j in range(k, n):
                    A[j][i] -= f * A[j][k]
    return out


# ---------------------------------------------------------------- Galois orbits on products


def product_orbits(G1: SqClassSubgroup, G2: SqClassSubgroup) -> K0Class:
    """[Spec k_G1 x Spec k_G2] by counting Galois orbits of pairs of geometric points.

    Everything is split by k_{G1 G2}, whose Galois group D = Hom(G1 G2, +-1)
    acts on the points of Spec k_Gi = Hom(Gi, +-1) by multiplication of
    characters after restriction.  Each orbit with stabilizer H contributes
    the spectrum of the fixed field of H.
    """
    F = G1.field
    amb = SqClassSubgroup.from_elements(F, G1.generators + G2.generators)
    s = amb.rank
    chars = list(product((0, 1), repeat=s))

    def ev(chi_, g):
        return sum(c * e for c, e in zip(chi_, amb.coords(g))) % 2

    pts1 = list(product((0, 1), repeat=G1.rank))
    pts2 = list(product((0, 1), repeat=G2.rank))
    gens1, gens2 = G1.generators, G2.generators

    def act(chi_, pt):
        p1, p2 = pt
        q1 = tuple((x + ev(chi_, g)) % 2 for x, g in zip(p1, gens1))
        q2 = tuple((x + ev(chi_, g)) % 2 for x, g in zip(p2, gens2))
        return (q1, q2)

    seen = set()
    out = K0Class.zero(F)
    for pt in product(pts1, pts2):
        if pt in seen:
            continue
        stab = [c for c in chars if act(c, pt) == pt]
        seen |= {act(c, pt) for c in chars}
        fixed = [g for g in amb.elements if all(ev(c, g) == 0 for c in stab)]
        out = out + monomial(0, SqClassSubgroup.from_elements(F, fixed))
    return out


# ---------------------------------------------------------------- GW equality by rewriting


def _rewrites(form: tuple, coef_range: int):
    """Forms reachable in one step: <a> + <b> -> <c> + <abc> with c = a x^2 + b y^2."""
    n = len(form)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = form[i], form[j]
            rest = form[:i] + form[i + 1:j] + form[j + 1:]
            for x in range(coef_range + 1):
                for y in range(coef_range + 1):
                    c = a * x * x + b * y * y
                    if c == 0:
                        continue
                    c = _sqfree(c)
                    d = _sqfree(a * b * c)
                    yield tuple(sorted(rest + (c, d)))


def rewrite_component(entries, coef_range: int = 3, max_entry: int = 1000, max_states: int = 20000) -> frozenset:
    """All diagonal forms reachable from `entries` by binary relation rewrites.

    Relation (1) is built into the squarefree entries; (3) and (4) are the
    instances c = a x^2 + b y^2 of "<a,b> represents c".  States whose entries
    exceed max_entry in absolute value are not expanded further.
    """
    start = tuple(sorted(_sqfree(int(e)) for e in entries))
    seen = {start}
    todo = deque([start])
    while todo and len(seen) < max_states:
        f = todo.popleft()
        for g in _rewrites(f, coef_range):
            if g in seen or max(abs(e) for e in g) > max_entry:
                continue
            seen.add(g)
            todo.append(g)
    return frozenset(seen)



# ---------------------------------------------------------------- symmetric powers by marks


def _subgroups_f2(r: int) -> list[frozenset]:
    """All subgroups of F_2^r, as sets of bitmasks."""
    found = {frozenset([0])}
    frontier = list(found)
    while frontier:
        nxt = []
        for K in frontier:
            for v in range(1 << r):
                if v not in K:
                    K2 = K | {k ^ v for k in K}
                    if K2 not in found:
                        found.add(K2)
                        nxt.append(K2)
        frontier = nxt
    return sorted(found, key=lambda K: (len(K), sorted(K)))


def sym_marks(G: SqClassSubgroup, n: int) -> dict[frozenset, int]:
    """Number of size-n multisets of geometric points of Spec k_G fixed by each K <= D.

    D = F_2^r acts on itself by translation; a K-fixed multiset is a multiset
    of K-cosets, so the count is C(|D/K| + n/|K| - 1, n/|K|) when |K| divides n.
    """
    r = G.rank
    out = {}
    for K in _subgroups_f2(r):
        k = len(K)
        cosets = (1 << r) // k
        out[K] = comb(cosets + n // k - 1, n // k) if n % k == 0 else 0
    return out


def class_marks(x: K0Class, G: SqClassSubgroup) -> dict[frozenset, int]:
    """Marks of a combination of [Spec k_G'] with G' <= G, as a D-set.

    Spec k_G' is the D-set D/G'^perp; K fixes all |G'| of its points when K
    kills every element of G', and none otherwise.
    """
    r = G.rank
    out = {K: 0 for K in _subgroups_f2(r)}
    for mono, c in x.items():
        if mono.affine_exp:
            raise ValueError("expected a zero-dimensional class")
        masks = [sum(b << i for i, b in enumerate(G.coords(g))) for g in mono.algebra.elements]
        for K in out:
            if all(bin(h & m).count("1") % 2 == 0 for h in K for m in masks):
                out[K] += c * mono.algebra.order
    return out
