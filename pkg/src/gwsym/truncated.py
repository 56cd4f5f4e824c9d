"""Truncated power-series arithmetic over any commutative ring.

Series are plain lists of coefficients [c_0, ..., c_N]; the coefficient type
only needs +, -, * and the caller supplies its zero and one.
"""


def smul(f, g, N, zero):
    out = []
    for n in range(N + 1):
        acc = zero
        for i in range(max(0, n - len(g) + 1), min(n, len(f) - 1) + 1):
            acc = acc + f[i] * g[n - i]
        out.append(acc)
    return out


def sinv(f, N, one, zero):
    """Inverse of a series whose constant term is 1."""
    g = [one]
    for n in range(1, N + 1):
        acc = zero
        for i in range(1, min(n, len(f) - 1) + 1):
            acc = acc + f[i] * g[n - i]
        g.append(-acc)
    return g


def spow(f, m, N, one, zero):
    """f**m to order N; negative m goes through sinv."""
    if m < 0:
        f, m = sinv(f, N, one, zero), -m
    result = [one] + [zero] * N
    base = list(f[: N + 1]) + [zero] * (N + 1 - len(f))
    while m:
        if m & 1:
            result = smul(result, base, N, zero)
        m >>= 1
        if m:
            base = smul(base, base, N, zero)
    return result
