"""
Characteristic polynomials of isometries and their Salem factors.

The characteristic polynomial of an isometry ``g`` of a hyperbolic lattice
is a product of cyclotomic polynomials and at most one Salem polynomial.
The spectral radius ``λ(g)`` is the Salem number, or 1 when there is no
Salem factor, and ``log λ(g)`` is the entropy of ``g``.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, Rational, cyclotomic_poly, symbols, totient

from borcherds import matrices as mx
from borcherds.exceptions import InvariantError

logger = logging.getLogger(__name__)

t = symbols("t")

# Φ_n is tried for every n with φ(n) up to this degree.
CYCLOTOMIC_DEGREE = 10
PRECISION = Fraction(1, 10**8)


def _to_fraction(r):
    return Fraction(int(r.p), int(r.q))


@lru_cache(maxsize=None)
def cyclotomic_orders(max_degree=CYCLOTOMIC_DEGREE):
    """``{n: Φ_n}`` for all ``n`` with ``φ(n) <= max_degree``."""
    # φ(n) >= sqrt(n/2), so n <= 2·max_degree² is enough.
    return {
        n: Poly(cyclotomic_poly(n, t), t)
        for n in range(1, 2 * max_degree**2 + 1)
        if totient(n) <= max_degree
    }


def is_reciprocal(coefficients):
    return tuple(coefficients) == tuple(reversed(coefficients))


def trace_polynomial(p):
    """The ``q`` with ``p(t) = t^m q(t + 1/t)`` for reciprocal ``p`` of degree 2m."""
    degree = p.degree()
    if degree % 2:
        raise InvariantError(f"{p.as_expr()} has odd degree.")
    m = degree // 2
    rest = p
    coefficients = []
    for k in range(m, -1, -1):
        c = rest.coeff_monomial(t ** (m + k))
        coefficients.append(c)
        rest = rest - Poly(c * t ** (m - k) * (t**2 + 1) ** k, t)
    if not rest.is_zero:
        raise InvariantError(f"{p.as_expr()} is not reciprocal.")
    return Poly(coefficients, t)


def is_salem(p):
    """
    Whether ``p`` has exactly one root outside the unit circle, which is
    real, and all others but its inverse on the circle.

    Through ``y = t + 1/t``: the trace polynomial has one root ``> 2`` and
    all others real in ``(-2, 2)``.
    """
    if not is_reciprocal(p.all_coeffs()):
        return False
    q = trace_polynomial(p)
    m = q.degree()
    if q.eval(2) == 0 or q.eval(-2) == 0:
        return False
    return q.count_roots(Rational(2), None) == 1 and q.count_roots(-2, 2) == m - 1


def largest_root(p, precision=PRECISION):
    """
    An interval ``(a, b)`` of rationals with ``b - a <= precision`` holding
    the largest real root of ``p``.
    """
    intervals = p.intervals()
    (a, b), _ = max(intervals, key=lambda interval: interval[0][1])
    a, b = p.refine_root(a, b, eps=Rational(precision.numerator, precision.denominator))
    return _to_fraction(a), _to_fraction(b)


@dataclass(frozen=True)
class SalemReport:
    char_poly: tuple
    cyclotomic: tuple
    salem: tuple
    spectral_radius: tuple

    @property
    def degree(self):
        return max(len(self.salem) - 1, 0)

    @property
    def salem_poly(self):
        return Poly(self.salem, t) if self.salem else None

    def truncated(self, digits):
        """``λ`` truncated to ``digits`` decimals, as a string."""
        scale = 10**digits
        low, high = self.spectral_radius
        while math.floor(low * scale) != math.floor(high * scale):
            width = (high - low) / 16
            low, high = largest_root(self.salem_poly, width)
        value = math.floor(low * scale)
        return f"{value // scale}.{value % scale:0{digits}d}"

    def entropy(self):
        low, high = self.spectral_radius
        return math.log((low + high) / 2)

    def as_dict(self):
        return {
            "char_poly": list(self.char_poly),
            "cyclotomic": list(self.cyclotomic),
            "salem": list(self.salem),
            "spectral_radius": [str(x) for x in self.spectral_radius],
            "lambda": self.truncated(6),
        }


def salem_analyze(g, precision=PRECISION):
    """Factor the characteristic polynomial of ``g`` into cyclotomic and Salem parts."""
    coefficients = mx.charpoly(g.matrix)
    p = Poly(coefficients, t)
    _, factors = p.factor_list()
    cyclotomic_table = cyclotomic_orders()
    cyclotomic = []
    salem = None
    for factor, multiplicity in factors:
        if factor.LC() < 0:
            factor = -factor
        orders = [
            n for n, phi in cyclotomic_table.items()
            if phi.degree() == factor.degree() and phi == factor
        ]
        if orders:
            cyclotomic.extend(orders * multiplicity)
            continue
        if salem is not None or multiplicity != 1 or not is_salem(factor):
            raise InvariantError(
                f"The characteristic polynomial {p.as_expr()} is not a product of "
                "cyclotomic polynomials and one Salem polynomial."
            )
        salem = factor
    if salem is None:
        report = SalemReport(
            coefficients, tuple(sorted(cyclotomic)), (), (Fraction(1), Fraction(1))
        )
    else:
        report = SalemReport(
            coefficients,
            tuple(sorted(cyclotomic)),
            tuple(int(c) for c in salem.all_coeffs()),
            largest_root(salem, precision),
        )
    logger.debug("Salem degree %d, λ in %s", report.degree, report.spectral_radius)
    return report
