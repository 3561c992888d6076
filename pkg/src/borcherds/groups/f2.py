"""
Reduction of isometries of ``L10`` modulo 2.

``L10/2L10`` is the discriminant group of ``L10(2)``, and carries the
quadratic form ``q(x) = ⟨x, x⟩/2 mod 2``. An isometry ``g`` of ``L10``
reduces to an element ``ρ(g)`` of ``O(q) ≅ GO⁺₁₀(2)``.

Vectors of ``F_2^n`` are bitmasks, bit ``i`` holding coordinate ``i``.
Matrices are tuples of row bitmasks and act on the right, like isometries.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy.combinatorics import Permutation, PermutationGroup

from borcherds import conway
from borcherds.exceptions import InvariantError

logger = logging.getLogger(__name__)


def to_bits(v):
    return sum(1 << i for i, x in enumerate(v) if x % 2)


def from_bits(x, n):
    return tuple((x >> i) & 1 for i in range(n))


@dataclass(frozen=True)
class F2Matrix:
    rows: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(1 << i for i in range(n)))

    @classmethod
    def of(cls, matrix):
        return cls(tuple(to_bits(row) for row in matrix))

    @property
    def n(self):
        return len(self.rows)

    def __call__(self, x):
        result = 0
        i = 0
        while x:
            if x & 1:
                result ^= self.rows[i]
            x >>= 1
            i += 1
        return result

    def __matmul__(self, other):
        """``a @ b`` acts as first ``a`` then ``b``."""
        return F2Matrix(tuple(other(row) for row in self.rows))

    def is_identity(self):
        return self == F2Matrix.identity(self.n)

    def order(self):
        identity = F2Matrix.identity(self.n)
        power, k = self, 1
        while power != identity:
            power, k = power @ self, k + 1
        return k

    def as_list(self):
        return [list(from_bits(row, self.n)) for row in self.rows]

    def permutation(self):
        """The permutation of ``F_2^n``, as integers ``0 … 2^n - 1``."""
        return Permutation([self(x) for x in range(1 << self.n)])


class QuadraticForm:
    """``q(x) = ⟨x, x⟩/2 mod 2`` on ``L/2L`` for an even lattice ``L``."""

    def __init__(self, lattice):
        self.lattice = lattice
        self.n = lattice.rank

    @cached_property
    def values(self):
        gram = self.lattice.gram
        n = self.n
        values = []
        for x in range(1 << n):
            bits = [i for i in range(n) if (x >> i) & 1]
            norm = sum(gram[i][j] for i in bits for j in bits)
            values.append((norm // 2) % 2)
        return tuple(values)

    def __call__(self, x):
        return self.values[x]

    def singular_count(self):
        """The number of ``x`` with ``q(x) = 0``, zero included."""
        return self.values.count(0)

    def is_plus_type(self):
        m = self.n // 2
        plus = 2 ** (self.n - 1) + 2 ** (m - 1)
        return self.n % 2 == 0 and self.singular_count() == plus

    def preserved_by(self, a):
        return all(self.values[a(x)] == q for x, q in enumerate(self.values))


@lru_cache(maxsize=None)
def l10_form():
    form = QuadraticForm(conway.l10())
    if not form.is_plus_type():
        raise InvariantError(
            f"q on L10/2L10 has {form.singular_count()} singular vectors; "
            "it is not of plus type."
        )
    return form


def mod2(g, form=None):
    """``ρ(g)``: the reduction modulo 2 of an isometry of ``L10``."""
    a = F2Matrix.of(g.matrix)
    form = l10_form() if form is None else form
    if not form.preserved_by(a):
        raise InvariantError(f"The reduction of {g!r} does not preserve q.")
    return a


def group_order(generators):
    """The order of the group generated by ``generators``, by Schreier–Sims."""
    generators = list(generators)
    if not generators:
        return 1
    group = PermutationGroup([a.permutation() for a in generators])
    order = group.order()
    logger.info("%d generators span a group of order %d", len(generators), order)
    return order


def go10_generators():
    """The reductions of the reflections in ``e1, …, e10``, generating ``GO⁺₁₀(2)``."""
    lattice = conway.l10()
    return [mod2(lattice.reflection(r)) for r in conway.vinberg_roots()]


def go10_order():
    """``|GO⁺₁₀(2)| = 2·2^20·(2^5 - 1)·∏(2^{2i} - 1)`` for ``i = 1, …, 4``."""
    return 2 * 2**20 * (2**5 - 1) * math.prod(2 ** (2 * i) - 1 for i in range(1, 5))
