"""
Even lattices with exact Gram matrices.

Vectors are row vectors of basis coordinates; an isometry ``g`` acts from the
right, ``x ↦ x·g``. Dual vectors use the same coordinates: ``v`` lies in the
dual lattice exactly when ``v·gram`` is integral.
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from borcherds import matrices as mx
from borcherds.enumeration import close_vectors, pair_reduce
from borcherds.exceptions import LatticeError

logger = logging.getLogger(__name__)


def _sign_changes(coefficients):
    signs = [c > 0 for c in coefficients if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def negated(gram):
    return tuple(tuple(-x for x in row) for row in gram)


def _short_vectors(gram, bound):
    """Sorted nonzero integral y with y·gram·yᵀ <= bound, for positive-definite gram."""
    reduced, u = pair_reduce(gram)
    found = close_vectors(reduced, bound=bound)
    return sorted(mx.vector(mx.vecmat(y, u)) for y in found if any(y))


class Signature(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    NEGATIVE_DEFINITE = "negative-definite"

    @classmethod
    def of(cls, gram):
        # Real eigenvalues, so Descartes' rule counts the positive ones exactly.
        if not gram:
            return cls.NEGATIVE_DEFINITE
        positive = _sign_changes(mx.charpoly(gram))
        match positive:
            case 0:
                return cls.NEGATIVE_DEFINITE
            case 1:
                return cls.HYPERBOLIC
            case _:
                raise LatticeError(
                    f"Gram matrix has {positive} positive eigenvalues; only "
                    "hyperbolic and negative-definite lattices are supported."
                )


class IntegerLattice:
    def __init__(self, gram, name=None, signature=None):
        gram = mx.matrix(gram)
        n = len(gram)
        self.name = name or f"L{n}"
        if any(len(row) != n for row in gram):
            raise LatticeError(f"Gram matrix of {self.name} is not square.")
        if not all(mx.is_integral(row) for row in gram):
            raise LatticeError(f"Gram matrix of {self.name} is not integral.")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(i)):
            raise LatticeError(f"Gram matrix of {self.name} is not symmetric.")
        if any(gram[i][i] % 2 for i in range(n)):
            raise LatticeError(f"{self.name} is not even.")
        self.gram = gram
        self.rank = n
        if self.det == 0:
            raise LatticeError(f"{self.name} is degenerate.")
        self.signature = Signature.of(gram)
        if signature is not None and Signature(signature) is not self.signature:
            raise LatticeError(
                f"{self.name} was declared {Signature(signature).value} but is "
                f"{self.signature.value}."
            )

    def __repr__(self):
        return f"<IntegerLattice {self.name} rank={self.rank} det={self.det}>"

    @classmethod
    def from_basis(cls, basis, gram=None, scale=1, name=None):
        """The lattice spanned by ``basis`` under ``scale`` times ``gram``.

        ``gram`` defaults to the dot product.
        """
        basis = mx.matrix(basis)
        if gram is None:
            products = mx.matmul(basis, mx.transpose(basis))
        else:
            products = mx.matmul(mx.matmul(basis, gram), mx.transpose(basis))
        return cls([[Fraction(scale) * x for x in row] for row in products], name=name)

    @cached_property
    def det(self):
        return mx.determinant(self.gram)

    @cached_property
    def gram_inverse(self):
        if not self.rank:
            return ()
        return mx.inverse(self.gram)

    def check_vector(self, x):
        if len(x) != self.rank:
            raise LatticeError(
                f"Vector of length {len(x)} does not belong to {self.name} "
                f"of rank {self.rank}."
            )

    def inner(self, x, y):
        self.check_vector(x)
        self.check_vector(y)
        return mx.normalize(mx.bilinear(x, self.gram, y))

    def norm(self, x):
        return self.inner(x, x)

    def functional(self, v):
        """The row ``v·gram``, so that ``⟨x, v⟩ = x·functional(v)``."""
        self.check_vector(v)
        return mx.vecmat(v, self.gram)

    def is_dual_vector(self, v):
        return mx.is_integral(self.functional(v))

    def primitive_dual(self, v):
        """The primitive vector of the dual lattice on the ray ``R_{>0}·v``."""
        if not any(v):
            raise LatticeError("The zero vector does not define a half-space.")
        return mx.vector(mx.vecmat(mx.primitive(self.functional(v)), self.gram_inverse))

    def scaled(self, k, name=None):
        return IntegerLattice(
            [[k * x for x in row] for row in self.gram],
            name=name or f"{self.name}({k})",
        )

    def sublattice(self, basis, name=None):
        return IntegerLattice.from_basis(basis, self.gram, name=name)

    def reflection(self, r):
        """The reflection ``x ↦ x + ⟨x, r⟩ r`` in a root ``r``."""
        r = mx.vector(r)
        if len(r) != self.rank or not mx.is_integral(r) or self.norm(r) != -2:
            raise LatticeError(f"{r} is not a root of {self.name}.")
        column = self.functional(r)
        m = [
            [(1 if i == j else 0) + column[i] * r[j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        return Isometry(self, m, check=False)

    def identity(self):
        return Isometry(self, mx.identity(self.rank), check=False)

    @cached_property
    def discriminant_group(self):
        return DiscriminantGroup.of(self)

    def _require_negative_definite(self, norm_min):
        if self.signature is not Signature.NEGATIVE_DEFINITE:
            raise LatticeError(f"{self.name} is not negative definite.")
        if norm_min >= 0:
            raise LatticeError("norm_min must be negative.")

    def enumerate_negdef(self, norm_min):
        """All nonzero ``v`` with ``norm_min <= ⟨v, v⟩``, in lexicographic order."""
        self._require_negative_definite(norm_min)
        found = _short_vectors(negated(self.gram), -norm_min)
        logger.debug("%s: %d vectors of norm >= %s", self.name, len(found), norm_min)
        return found

    def enumerate_dual_negdef(self, norm_min):
        """All nonzero dual vectors ``v`` with ``norm_min <= ⟨v, v⟩``, sorted."""
        self._require_negative_definite(norm_min)
        # v = y·gram⁻¹ with y integral, and ⟨v, v⟩ = y·gram⁻¹·yᵀ.
        return sorted(
            mx.vector(mx.vecmat(y, self.gram_inverse))
            for y in _short_vectors(negated(self.gram_inverse), -Fraction(norm_min))
        )

    @cached_property
    def _orthogonal_kernels(self):
        return {}

    def orthogonal_kernel(self, h):
        """
        Data for the sublattice ``K = {x : ⟨x, h⟩ = 0}``.

        Returns ``(content, unit, basis, gram)``: ``⟨x, h⟩ = content·(x·c)``
        for the primitive functional ``c`` of ``h``, ``unit·c = 1``, and
        ``basis`` is a pair-reduced basis of ``K`` with Gram matrix ``gram``.
        """
        key = mx.vector(h)
        if key in self._orthogonal_kernels:
            return self._orthogonal_kernels[key]
        functional = self.functional(key)
        c = mx.primitive(functional)
        content = mx.content(functional)
        _, s, _ = mx.smith_decomposition([[x] for x in c])
        unit = mx.scale(mx.dot(s[0], c), s[0])
        basis = s[1:]
        gram = ()
        if basis:
            gram = mx.matmul(mx.matmul(basis, self.gram), mx.transpose(basis))
            if self.norm(key) > 0:
                _, u = pair_reduce(negated(gram))
                basis = mx.matmul(u, basis)
                gram = mx.matmul(mx.matmul(basis, self.gram), mx.transpose(basis))
        result = (content, unit, basis, gram)
        self._orthogonal_kernels[key] = result
        return result

    def vectors_with_norm_and_pairing(self, h, a, b, dual=False, offset=None):
        """
        All ``r`` with ``⟨r, r⟩ = a`` and ``⟨r, h⟩ = b``, sorted.

        ``r`` ranges over the lattice, over ``offset + L`` when an offset is
        given, or over the whole dual lattice when ``dual`` is true. The
        component of ``r`` in ``h^⊥`` is found by close-vector enumeration in
        the negative-definite lattice ``L ∩ h^⊥``.
        """
        if self.signature is not Signature.HYPERBOLIC:
            raise LatticeError(f"{self.name} is not hyperbolic.")
        h = mx.vector(h)
        a, b = Fraction(a), Fraction(b)
        hh = self.norm(h)
        if hh <= 0:
            raise LatticeError("h must have positive norm.")
        if a >= 0:
            raise LatticeError("The norm a must be negative.")
        # Norm of the component of r orthogonal to h.
        target = a - b * b / hh
        if dual:
            offsets = self.discriminant_group.elements()
        elif offset is not None:
            offsets = [mx.vector(offset)]
        else:
            offsets = [mx.zero(self.rank)]
        content, unit, basis, gram = self.orthogonal_kernel(h)
        to_kernel = ()
        if basis:
            to_kernel = mx.matmul(
                mx.matmul(self.gram, mx.transpose(basis)), mx.inverse(gram)
            )
        found = set()
        for o in offsets:
            rhs = (b - self.inner(o, h)) / content
            if rhs.denominator != 1:
                continue
            x0 = mx.add(o, mx.scale(rhs, unit))
            if not basis:
                candidates = [x0]
            else:
                # r = x0 + y·basis; the center is minus the K-coordinates of the
                # h^⊥ part of x0.
                z0 = mx.sub(x0, mx.scale(b / hh, h))
                center = mx.neg(mx.vecmat(z0, to_kernel))
                candidates = [
                    mx.add(x0, mx.vecmat(y, basis))
                    for y in close_vectors(negated(gram), center=center, bound=-target)
                ]
            for r in candidates:
                r = mx.vector(r)
                if self.norm(r) == a and self.inner(r, h) == b:
                    found.add(r)
        return sorted(found)

    def separating_roots(self, h1, h2):
        """
        All roots ``r`` with ``⟨r, h1⟩ > 0 > ⟨r, h2⟩``, for integral ``h1``
        and ``h2`` in the same component of the positive cone.
        """
        h1, h2 = mx.vector(h1), mx.vector(h2)
        n1, n2, c = self.norm(h1), self.norm(h2), self.inner(h1, h2)
        if n1 <= 0 or n2 <= 0 or c <= 0:
            raise LatticeError("h1 and h2 must lie in the same positive cone.")
        det = n1 * n2 - c * c
        if det == 0:
            return []
        # r = r_P + r_⊥ with r_P in span(h1, h2) and r_⊥ negative definite,
        # so ⟨r_P, r_P⟩ >= -2; with a = ⟨r, h1⟩ and b = -⟨r, h2⟩ this reads
        # n2·a² + 2c·ab + n1·b² <= -2·det.
        bound = -2 * det
        found = []
        a = 1
        while n2 * a * a + 2 * c * a + n1 <= bound:
            found.extend(
                r
                for r in self.vectors_with_norm_and_pairing(h1, -2, a)
                if self.inner(r, h2) < 0
            )
            a += 1
        return sorted(found)


@dataclass(frozen=True)
class DiscriminantGroup:
    """``L^∨/L`` as a product of cyclic groups generated by ``generators``."""

    lattice: IntegerLattice
    invariant_factors: tuple
    generators: tuple
    rows: tuple
    to_smith: tuple

    @classmethod
    def of(cls, lattice):
        if lattice.rank == 0:
            return cls(lattice, (), (), (), ())
        # S·gram·T = D, so (v·S⁻¹)_i·d_i is integral for every dual v.
        diagonal, s, _ = mx.smith_decomposition(lattice.gram)
        factors, generators, rows = [], [], []
        for i, (d, row) in enumerate(zip(diagonal, s)):
            if d > 1:
                factors.append(d)
                generators.append(mx.vector(mx.scale(Fraction(1, d), row)))
                rows.append(i)
        return cls(
            lattice, tuple(factors), tuple(generators), tuple(rows), mx.inverse(s)
        )

    @property
    def order(self):
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    @property
    def q_values(self):
        return tuple(self.q(g) for g in self.generators)

    @property
    def pairings(self):
        generators = self.generators
        return tuple(tuple(self.b(g, h) for h in generators) for g in generators)

    def q(self, v):
        """The discriminant quadratic form, ``⟨v, v⟩ mod 2``."""
        return Fraction(self.lattice.norm(v)) % 2

    def b(self, v, w):
        return Fraction(self.lattice.inner(v, w)) % 1

    def coordinates(self, v):
        """Coordinates ``k_i mod d_i`` of a dual vector in terms of the generators."""
        if not self.lattice.is_dual_vector(v):
            raise LatticeError(f"{v} is not in the dual of {self.lattice.name}.")
        w = mx.vecmat(v, self.to_smith)
        return tuple(
            int(Fraction(w[i]) * d) % d
            for d, i in zip(self.invariant_factors, self.rows)
        )

    def element(self, coordinates):
        v = mx.zero(self.lattice.rank)
        for k, g in zip(coordinates, self.generators):
            if k:
                v = mx.add(v, mx.scale(k, g))
        return mx.vector(v)

    def elements(self):
        """One representative for every element of ``L^∨/L``."""
        return [
            self.element(ks)
            for ks in itertools.product(*(range(d) for d in self.invariant_factors))
        ]


class Isometry:
    """An integer matrix ``g`` with ``g·gram·gᵀ = gram``, acting by ``x ↦ x·g``."""

    def __init__(self, lattice, matrix, check=True):
        self.lattice = lattice
        self.matrix = mx.matrix(matrix)
        if check:
            self.validate()

    def validate(self):
        n = self.lattice.rank
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise LatticeError(f"Matrix is not {n}×{n}.")
        if not all(mx.is_integral(row) for row in self.matrix):
            raise LatticeError("Isometry matrix is not integral.")
        g, gram = self.matrix, self.lattice.gram
        if mx.matmul(mx.matmul(g, gram), mx.transpose(g)) != gram:
            raise LatticeError(
                f"Matrix does not preserve the form of {self.lattice.name}."
            )

    def __repr__(self):
        return f"<Isometry of {self.lattice.name}>"

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __matmul__(self, other):
        """``g @ h`` acts as first ``g`` then ``h``."""
        return Isometry(self.lattice, mx.matmul(self.matrix, other.matrix), check=False)

    def __call__(self, x):
        return mx.vector(mx.vecmat(x, self.matrix))

    def inverse(self):
        lattice = self.lattice
        m = mx.matmul(
            mx.matmul(lattice.gram, mx.transpose(self.matrix)), lattice.gram_inverse
        )
        return Isometry(self.lattice, m, check=False)

    def power(self, k):
        result = self.lattice.identity()
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result @ base
        return result

    def is_identity(self):
        return self.matrix == mx.identity(self.lattice.rank)

    def disc_action(self):
        """Images of the discriminant generators, in generator coordinates."""
        group = self.lattice.discriminant_group
        return tuple(group.coordinates(self(g)) for g in group.generators)

    def acts_on_discriminant_as(self, sign):
        generators = self.lattice.discriminant_group.generators
        return all(
            mx.is_integral(mx.sub(self(g), mx.scale(sign, g))) for g in generators
        )

    def is_plus_minus_identity(self):
        return self.acts_on_discriminant_as(1) or self.acts_on_discriminant_as(-1)


@dataclass(frozen=True)
class Complement:
    lattice: IntegerLattice
    basis: tuple


class PrimitiveEmbedding:
    """An isometric embedding ``x ↦ x·matrix`` with torsion-free cokernel."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = mx.matrix(matrix)
        m, n = source.rank, target.rank
        if len(self.matrix) != m or any(len(row) != n for row in self.matrix):
            raise LatticeError(f"Embedding matrix is not {m}×{n}.")
        if not all(mx.is_integral(row) for row in self.matrix):
            raise LatticeError("Embedding matrix is not integral.")
        image_gram = mx.matmul(
            mx.matmul(self.matrix, target.gram), mx.transpose(self.matrix)
        )
        if image_gram != source.gram:
            raise LatticeError(
                f"Embedding of {source.name} into {target.name} is not isometric."
            )
        factors = mx.smith_invariants(self.matrix) if m else ()
        if len(factors) != m or any(f != 1 for f in factors):
            raise LatticeError(
                f"Embedding of {source.name} into {target.name} is not primitive "
                f"(invariant factors {factors})."
            )

    def __repr__(self):
        return f"<PrimitiveEmbedding {self.source.name} -> {self.target.name}>"

    def __call__(self, x):
        return mx.vector(mx.vecmat(x, self.matrix))

    @cached_property
    def _projector(self):
        # w·gram_S = v·gram_T·Mᵀ
        back = mx.matmul(self.target.gram, mx.transpose(self.matrix))
        return mx.matmul(back, self.source.gram_inverse)

    def orthogonal_projection(self, v):
        """Source coordinates of the orthogonal projection of a target vector."""
        self.target.check_vector(v)
        if not self.source.rank:
            return ()
        return mx.vector(mx.vecmat(v, self._projector))

    @cached_property
    def orthogonal_complement(self):
        name = f"{self.source.name}^⊥"
        if self.source.rank == 0:
            basis = mx.identity(self.target.rank)
        else:
            basis = mx.integer_left_kernel(
                mx.matmul(self.target.gram, mx.transpose(self.matrix))
            )
        if not basis:
            return Complement(IntegerLattice((), name=name), ())
        lattice = self.target.sublattice(basis, name=name)
        if lattice.signature is Signature.NEGATIVE_DEFINITE:
            _, u = pair_reduce(negated(lattice.gram))
            basis = mx.matmul(u, basis)
            lattice = self.target.sublattice(basis, name=name)
        return Complement(lattice, basis)

    def complement_projection(self, v):
        """Complement coordinates of the projection of ``v`` onto the complement."""
        complement = self.orthogonal_complement
        if not complement.basis:
            return ()
        functional = mx.vecmat(
            mx.vecmat(v, self.target.gram), mx.transpose(complement.basis)
        )
        return mx.vector(mx.vecmat(functional, complement.lattice.gram_inverse))
