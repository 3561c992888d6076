"""
Exact vector and matrix helpers.

Vectors are tuples of ``int`` or ``Fraction``; matrices are tuples of row
vectors. Small hot-path operations are done directly on Python numbers; the
heavier linear algebra (inverse, kernels, Smith normal form, characteristic
polynomials) goes through sympy's ``DomainMatrix`` over ``ZZ`` and ``QQ``.
"""

from fractions import Fraction
from math import gcd, lcm

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp


def frac(x):
    """Convert an int, Fraction or sympy ZZ/QQ element to an exact Python number."""
    if isinstance(x, (int, Fraction)):
        return x
    numerator = getattr(x, "numerator", None)
    if numerator is not None:
        return Fraction(int(numerator), int(x.denominator))
    return int(x)


def normalize(x):
    """Return ``x`` as an ``int`` when it is integral."""
    x = frac(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def vector(values):
    return tuple(normalize(v) for v in values)


def matrix(rows):
    return tuple(vector(row) for row in rows)


def is_integral(v):
    return all(isinstance(x, int) or x.denominator == 1 for x in v)


def zero(n):
    return (0,) * n


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def dot(x, y):
    return sum(a * b for a, b in zip(x, y) if a and b)


def add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def scale(k, x):
    return tuple(k * a for a in x)


def neg(x):
    return tuple(-a for a in x)


def vecmat(x, m):
    """Row vector times matrix."""
    n = len(m[0]) if m else 0
    out = [0] * n
    for a, row in zip(x, m):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] += a * b
    return tuple(out)


def matmul(a, b):
    return tuple(vecmat(row, b) for row in a)


def transpose(m):
    return tuple(zip(*m)) if m else ()


def bilinear(x, gram, y):
    return dot(vecmat(x, gram), y)


def primitive(v):
    """
    The primitive integer vector on the ray through a nonzero rational vector.
    """
    denominators = [x.denominator for x in v if isinstance(x, Fraction)]
    d = lcm(*denominators) if denominators else 1
    ints = [int(x * d) for x in v]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("The zero vector has no primitive representative.")
    return tuple(x // g for x in ints)


def content(v):
    """The positive rational ``c`` with ``v = c * primitive(v)``."""
    p = primitive(v)
    i = next(i for i, x in enumerate(p) if x)
    return Fraction(v[i]) / p[i]


def to_domain(rows, domain=QQ):
    rows = [list(row) for row in rows]
    shape = (len(rows), len(rows[0]) if rows else 0)
    if domain == ZZ:
        elements = [[ZZ(int(x)) for x in row] for row in rows]
    else:
        fractions = [[Fraction(x) for x in row] for row in rows]
        elements = [
            [QQ(int(x.numerator), int(x.denominator)) for x in row] for row in fractions
        ]
    return DomainMatrix(elements, shape, domain)


def from_domain(dm):
    return matrix(dm.to_list())


def inverse(m):
    return from_domain(to_domain(m).inv())


def determinant(m):
    if not m:
        return 1
    return normalize(to_domain(m).det())


def rank(m):
    if not m:
        return 0
    return to_domain(m).rank()


def left_kernel(m):
    """A basis (rational rows) of ``{x : x·m = 0}``."""
    if not m:
        return ()
    kernel = to_domain(transpose(m)).nullspace()
    return tuple(row for row in from_domain(kernel) if any(row))


def integer_left_kernel(m):
    """
    A basis of the saturated lattice ``{x ∈ Z^n : x·m = 0}``.

    With ``D = S·m·T`` in Smith form, the rows of ``S`` at zero rows of
    ``D`` span the kernel and are primitive because ``S`` is unimodular.
    """
    rows = len(m)
    scaled = []
    for row in m:
        denominators = [x.denominator for x in row if isinstance(x, Fraction)]
        d = lcm(*denominators) if denominators else 1
        scaled.append([int(x * d) for x in row])
    smf, s, _ = smith_normal_decomp(to_domain(scaled, ZZ))
    smf = smf.to_list()
    cols = len(scaled[0])
    s = from_domain(s)
    return tuple(s[i] for i in range(rows) if i >= cols or smf[i][i] == 0)


def smith_invariants(m):
    """Nonzero invariant factors of an integer matrix."""
    factors = invariant_factors(to_domain(m, ZZ))
    return tuple(abs(int(f)) for f in factors if int(f) != 0)


def smith_decomposition(m):
    """Return ``(diagonal, S, T)`` with ``S·m·T`` diagonal."""
    smf, s, t = smith_normal_decomp(to_domain(m, ZZ))
    smf = smf.to_list()
    diagonal = tuple(abs(int(smf[i][i])) for i in range(min(len(smf), len(smf[0]))))
    return diagonal, from_domain(s), from_domain(t)


def charpoly(m):
    """Coefficients of ``det(t·I − m)``, leading coefficient first."""
    return tuple(int(c) for c in to_domain(m, ZZ).charpoly())


def add_matrices(a, b):
    return tuple(add(x, y) for x, y in zip(a, b))


def sub_matrices(a, b):
    return tuple(sub(x, y) for x, y in zip(a, b))


def vector_sum(vectors, n):
    total = zero(n)
    for v in vectors:
        total = add(total, v)
    return total
