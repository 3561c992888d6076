"""
Fincke–Pohst enumeration with exact rational bounds.
"""

import logging
from fractions import Fraction
from math import ceil, floor, isqrt

from borcherds.exceptions import LatticeError

logger = logging.getLogger(__name__)


def ldl(gram):
    """
    Exact decomposition ``q(x) = Σ d_i (x_i + Σ_{j>i} μ_ij x_j)²`` of a
    positive-definite form.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise LatticeError("The form is not positive definite.")
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                a[k][l] -= mu[i][k] * a[i][l]
                a[l][k] = a[k][l]
    return d, mu


def close_vectors(gram, center=None, bound=0):
    """
    All integer vectors ``y`` with ``(y - center)·gram·(y - center)ᵀ <= bound``
    for a positive-definite rational ``gram``, in lexicographic order.
    """
    n = len(gram)
    bound = Fraction(bound)
    if bound < 0:
        return []
    if n == 0:
        return [()]
    c = [Fraction(x) for x in center] if center is not None else [Fraction(0)] * n
    d, mu = ldl(gram)
    y = [0] * n
    found = []

    def descend(i, remaining):
        shift = sum(
            (mu[i][j] * (y[j] - c[j]) for j in range(i + 1, n) if mu[i][j]),
            Fraction(0),
        )
        middle = c[i] - shift
        radius = remaining / d[i]
        reach = isqrt(radius.numerator // radius.denominator) + 1
        for value in range(floor(middle) - reach, ceil(middle) + reach + 1):
            t = value - middle
            used = d[i] * t * t
            if used > remaining:
                continue
            y[i] = value
            if i == 0:
                found.append(tuple(y))
            else:
                descend(i - 1, remaining - used)
        y[i] = 0

    descend(n - 1, bound)
    found.sort()
    return found


def pair_reduce(gram):
    """
    Greedy pairwise reduction of a positive-definite Gram matrix.

    Returns ``(reduced, u)`` with ``reduced = u·gram·uᵀ`` and ``u``
    unimodular. No vector can be shortened by adding or subtracting a
    multiple of another one.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for j in sorted(range(n), key=lambda k: g[k][k]):
            for i in range(n):
                if i == j or 2 * abs(g[i][j]) <= g[j][j]:
                    continue
                k = round(g[i][j] / g[j][j])
                gij, gjj = g[i][j], g[j][j]
                for l in range(n):
                    if l != i:
                        g[i][l] -= k * g[j][l]
                g[i][i] = g[i][i] - 2 * k * gij + k * k * gjj
                for l in range(n):
                    g[l][i] = g[i][l]
                u[i] = [a - k * b for a, b in zip(u[i], u[j])]
                changed = True
    order = sorted(range(n), key=lambda k: g[k][k])
    reduced = tuple(tuple(g[i][j] for j in order) for i in order)
    return reduced, tuple(tuple(u[i]) for i in order)
