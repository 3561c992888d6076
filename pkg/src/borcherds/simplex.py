"""
Exact rational simplex method for deciding walls of polyhedral cones.

A cone is given by linear forms ``f`` (row vectors, ``f(y) = f·y``). The form
``f0`` defines a wall of ``{y : f(y) >= 0 for all f}`` exactly when
minimizing ``f0`` over ``{y : f(y) >= 0, f ≠ f0}`` is unbounded below.
"""

import enum
import logging
from fractions import Fraction

from borcherds import matrices as mx
from borcherds.exceptions import ChamberError

logger = logging.getLogger(__name__)


class Status(enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"


class SimplexTableau:
    """
    Maximize ``c·x`` subject to ``A·x <= b``, ``x >= 0`` with ``b >= 0``.

    Basic variables are kept as ``x_B = b - A·x_N``. Variables are labelled
    ``0..n-1`` (structural) and ``n..n+m-1`` (slacks); Bland's rule uses the
    labels to break ties, so the method terminates on degenerate problems.
    """

    def __init__(self, a, b, c):
        self.m = len(a)
        self.n = len(c)
        if any(x < 0 for x in b):
            raise ValueError("The origin must be feasible (b >= 0).")
        self.A = [[Fraction(x) for x in row] for row in a]
        self.b = [Fraction(x) for x in b]
        self.c = [Fraction(x) for x in c]
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0
        self.entering = None

    def pivot(self, i, j):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        row = self.A[i]
        for l in range(self.n):
            if row[l]:
                self.c[l] -= delta * row[l]
        self.c[j] = -delta
        self.A[i] = [1 / piv if l == j else x / piv for l, x in enumerate(row)]
        self.b[i] /= piv
        row = self.A[i]
        for k in range(self.m):
            f = self.A[k][j]
            if k == i or not f:
                continue
            other = self.A[k]
            for l in range(self.n):
                if l == j:
                    other[l] = -f / piv
                elif row[l]:
                    other[l] -= f * row[l]
            self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def step(self):
        """One Bland pivot; returns a ``Status`` when the method stops."""
        candidates = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
        if not candidates:
            return Status.OPTIMAL
        _, j = min(candidates)
        ratios = [
            (self.b[i] / self.A[i][j], self.b_vars[i], i)
            for i in range(self.m)
            if self.A[i][j] > 0
        ]
        if not ratios:
            self.entering = j
            return Status.UNBOUNDED
        _, _, i = min(ratios)
        self.pivot(i, j)
        return None

    def solve(self):
        while True:
            status = self.step()
            if status is not None:
                logger.debug("simplex: %s after %d pivots", status.value, self.pivots)
                return status

    def solution(self):
        """Values of the structural variables at the current basic solution."""
        values = {label: Fraction(0) for label in range(self.n)}
        for i, label in enumerate(self.b_vars):
            if label < self.n:
                values[label] = self.b[i]
        return values

    def ray(self):
        """Values of all labelled variables along the unbounded direction."""
        if self.entering is None:
            raise ValueError("The problem is not unbounded.")
        values = {label: Fraction(0) for label in self.nb_vars}
        values[self.nb_vars[self.entering]] = Fraction(1)
        for i, label in enumerate(self.b_vars):
            values[label] = -self.A[i][self.entering]
        return values


def check_distinct(forms):
    """Raise ``ChamberError`` when two forms define the same half-space."""
    seen = {}
    for index, f in enumerate(forms):
        if not any(f):
            raise ChamberError(f"Form {index} is zero.")
        key = mx.primitive(f)
        if key in seen:
            raise ChamberError(
                f"Forms {seen[key]} and {index} define the same half-space."
            )
        seen[key] = index


def escaping_direction(forms, f0):
    """
    A vector ``y`` with ``f0(y) < 0`` and ``f(y) >= 0`` for every ``f`` in
    ``forms``, or ``None`` when no such vector exists.
    """
    n = len(f0)
    # y = p - q with p, q >= 0; the slack of each row is f(y) >= 0.
    a = [[-x for x in f] + [x for x in f] for f in forms]
    c = [-x for x in f0] + [x for x in f0]
    tableau = SimplexTableau(a, [0] * len(forms), c)
    if tableau.solve() is Status.OPTIMAL:
        return None
    values = tableau.ray()
    return mx.vector(values[k] - values[k + n] for k in range(n))


def wall_direction(forms, index, order=None):
    """
    A direction certifying that ``forms[index]`` defines a wall, or ``None``.

    Constraints are added lazily: the problem is solved with a working set
    and the constraints violated by the returned direction join it, until
    the direction satisfies all of them or the problem becomes bounded.
    ``order`` lists the other indices in the order they should join.
    """
    f0 = forms[index]
    if order is None:
        order = range(len(forms))
    others = [i for i in order if i != index]
    working = others[: len(f0)]
    pending = set(others[len(f0):])
    while True:
        y = escaping_direction([forms[i] for i in working], f0)
        if y is None:
            return None
        violated = sorted(
            (i for i in pending if mx.dot(forms[i], y) < 0),
            key=lambda i: (mx.dot(forms[i], y), i),
        )
        if not violated:
            return y
        batch = violated[: len(f0)]
        working.extend(batch)
        pending.difference_update(batch)
        logger.debug("wall_direction: working set grown to %d", len(working))


def defines_wall(forms, index, order=None, check=True):
    """Whether ``forms[index]`` defines a wall of the cone cut out by ``forms``."""
    if check:
        check_distinct(forms)
    return wall_direction(forms, index, order) is not None
