"""
The Néron–Severi lattice of the general quartic Hessian K3 surface.

``S_X`` has the basis of ten exceptional curves ``E_α`` (``α`` a 3-subset of
``{1, …, 5}``) and six lines ``L_β`` (``β`` a 2-subset). ``E_α`` meets ``L_β``
once when ``α ⊃ β``; the curves of each kind are disjoint.
"""

import enum
import itertools
import logging
from fractions import Fraction
from functools import cached_property
from math import isqrt

from borcherds import conway, data
from borcherds import matrices as mx
from borcherds.checks import Check
from borcherds.dynkin import ade_type, simple_roots
from borcherds.exceptions import DataError, InvariantError, LatticeError
from borcherds.lattice import IntegerLattice, Isometry, PrimitiveEmbedding

logger = logging.getLogger(__name__)

DIGITS = "12345"
A = tuple("".join(c) for c in itertools.combinations(DIGITS, 3))
B = tuple("".join(c) for c in itertools.combinations(DIGITS, 2))


def bar(index):
    """``ᾱ ∈ B`` for ``α ∈ A`` and ``β̄ ∈ A`` for ``β ∈ B``."""
    return "".join(d for d in DIGITS if d not in index)


def incidence(first, second):
    if first == second:
        return -2
    if first[0] == second[0]:
        return 0
    e, l = (first, second) if first[0] == "E" else (second, first)
    return 1 if set(l[1:]) <= set(e[1:]) else 0


def permute(label, sigma):
    """Apply a permutation of ``{1, …, 5}``, given as a dict on digits."""
    return label[0] + "".join(sorted(sigma[d] for d in label[1:]))


def switch(label):
    return ("L" if label[0] == "E" else "E") + bar(label[1:])


def is_root_multiple(norm):
    """Whether ``k²·norm = -2`` for some positive integer ``k``."""
    if norm >= 0:
        return False
    k2 = Fraction(-2) / norm
    if k2.denominator != 1:
        return False
    return isqrt(k2.numerator) ** 2 == k2.numerator


class WallType(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"

    @classmethod
    def of(cls, pairing, norm):
        match (pairing, norm):
            case (1, -2):
                return cls.A
            case (2, -1):
                return cls.B
            case (5, n) if n == Fraction(-2, 3):
                return cls.C
            case (4, n) if n == Fraction(-2, 3):
                return cls.D
        raise InvariantError(
            f"No wall type has ⟨v, h_X⟩ = {pairing} and ⟨v, v⟩ = {norm}."
        )

    @property
    def outer(self):
        return self is WallType.A


class HessianK3:
    def __init__(self, document):
        self.document = document
        self.basis = document["basis"]
        self.h_Q = document["h_Q"]
        self.h_X = document["h_X"]

    def __repr__(self):
        return "<HessianK3>"

    @classmethod
    def load(cls):
        return cls(data.hessian())

    @cached_property
    def lattice(self):
        gram = [[incidence(a, b) for b in self.basis] for a in self.basis]
        lattice = IntegerLattice(gram, name="S_X", signature="hyperbolic")
        if lattice.det != -48:
            raise DataError(
                f"The Gram matrix of S_X has determinant {lattice.det}, not -48."
            )
        return lattice

    @cached_property
    def classes(self):
        """Coordinates of all twenty classes ``E_α`` and ``L_β``, by label."""
        lattice = self.lattice
        classes = {}
        for label in [f"E{a}" for a in A] + [f"L{b}" for b in B]:
            if label in self.basis:
                v = mx.identity(16)[self.basis.index(label)]
            else:
                pairings = [incidence(label, other) for other in self.basis]
                v = mx.vector(mx.vecmat(pairings, lattice.gram_inverse))
                if not mx.is_integral(v) or lattice.norm(v) != -2:
                    raise DataError(f"The class of {label} is not a root of S_X.")
            classes[label] = v
        return classes

    def E(self, alpha):
        return self.classes[f"E{alpha}"]

    def L(self, beta):
        return self.classes[f"L{beta}"]

    @cached_property
    def embedding(self):
        try:
            return PrimitiveEmbedding(
                self.lattice, conway.l26(), self.document["embedding"]
            )
        except LatticeError as e:
            raise DataError(f"The embedding of S_X into L26 is invalid: {e}") from e

    @cached_property
    def chamber(self):
        """The induced chamber ``D_X``."""
        induced = conway.induced_chamber(self.embedding, name="D_X")
        if induced.interior_point != self.h_X:
            raise DataError("h_X is not the projection of w26.")
        return induced

    def wall_type(self, v):
        lattice = self.lattice
        kind = WallType.of(lattice.inner(v, self.h_X), lattice.norm(v))
        if not kind.outer and is_root_multiple(lattice.norm(v)):
            raise InvariantError(
                f"The inner wall {v} is defined by a multiple of a root."
            )
        return kind

    def walls_by_type(self):
        result = {kind: [] for kind in WallType}
        for v in self.chamber.walls:
            result[self.wall_type(v)].append(v)
        return result

    def _permutation_isometry(self, mapping):
        rows = [self.classes[mapping(label)] for label in self.basis]
        return Isometry(self.lattice, rows)

    def permutation_isometry(self, image, switched=False):
        """
        The isometry induced by the permutation ``i ↦ image[i - 1]`` of
        ``{1, …, 5}``, followed by the switch when ``switched`` is true.
        """
        sigma = dict(zip(DIGITS, image))

        def mapping(label):
            label = permute(label, sigma)
            return switch(label) if switched else label

        return self._permutation_isometry(mapping)

    @cached_property
    def aut_DX(self):
        """
        The 240 isometries induced by permutations of ``{1, …, 5}``, each
        optionally followed by the switch ``E_α ↔ L_ᾱ``.
        """
        group = []
        for image in itertools.permutations(DIGITS):
            for switched in (False, True):
                g = self.permutation_isometry(image, switched)
                if g(self.h_X) != self.h_X:
                    raise InvariantError("An automorphism of D_X does not fix h_X.")
                group.append(g)
        return group

    @cached_property
    def enriques_involution(self):
        g = self._permutation_isometry(switch)
        if g.matrix != self.document["enriques_involution"]:
            raise DataError(
                "The Enriques involution does not match the switch E_α ↔ L_ᾱ."
            )
        return g

    @cached_property
    def plus_embedding(self):
        """``S_Y = L10`` with its form doubled, embedded onto ``S_X⁺``."""
        g = self.enriques_involution
        basis = self.document["plus_basis"]
        if any(g(eta) != eta for eta in basis):
            raise DataError("A vector of the S_X+ basis is not fixed by g_ε.")
        fixed = mx.integer_left_kernel(mx.sub_matrices(g.matrix, mx.identity(16)))
        if len(fixed) != 10:
            raise InvariantError(
                f"g_ε fixes a sublattice of rank {len(fixed)}, not 10."
            )
        l10_2 = conway.l10().scaled(2, name="L10(2)")
        try:
            return PrimitiveEmbedding(l10_2, self.lattice, basis)
        except LatticeError as e:
            raise DataError(f"The S_X+ basis is invalid: {e}") from e

    @cached_property
    def minus_basis(self):
        g = self.enriques_involution
        return mx.integer_left_kernel(mx.add_matrices(g.matrix, mx.identity(16)))

    @cached_property
    def minus_lattice(self):
        return self.lattice.sublattice(self.minus_basis, name="S_X-")

    def anti_invariant_roots(self):
        """The 72 vectors of norm -4 in ``S_X-``, in ``S_X`` coordinates."""
        minus = self.minus_lattice
        return [
            mx.vector(mx.vecmat(t, self.minus_basis))
            for t in minus.enumerate_negdef(-4)
            if minus.norm(t) == -4
        ]

    def v_alpha(self, alpha):
        """The dual vector with ``⟨v_α, E_α'⟩ = δ_αα'`` and ``⟨v_α, L_β⟩ = δ_ᾱβ``."""
        pairings = []
        for label in self.basis:
            if label[0] == "E":
                pairings.append(1 if label[1:] == alpha else 0)
            else:
                pairings.append(1 if label[1:] == bar(alpha) else 0)
        return mx.vector(mx.vecmat(pairings, self.lattice.gram_inverse))

    def fixed_space(self, alpha):
        """Ten vectors spanning the fixed space of ``g_α``."""
        E, L = self.E, self.L
        rows = [mx.sub(self.h_Q, E(alpha))]
        for beta in itertools.combinations(alpha, 2):
            beta = "".join(beta)
            rows.append(L(beta))
            others = [a for a in A if set(beta) <= set(a) and a != alpha]
            rows.append(mx.add(E(others[0]), E(others[1])))
        rows.extend(E(a) for a in A if set(bar(alpha)) <= set(a))
        return tuple(rows)

    def g_alpha(self, alpha):
        """
        The involution ``+1`` on the fixed space and ``-1`` on its orthogonal
        complement, from the double plane given by projecting from ``p_α``.
        """
        lattice = self.lattice
        basis = self.fixed_space(alpha)
        if mx.rank(basis) != 10:
            raise InvariantError(
                f"The fixed space of g_{alpha} does not have dimension 10."
            )
        gram = mx.matmul(mx.matmul(basis, lattice.gram), mx.transpose(basis))
        dual = mx.matmul(mx.matmul(lattice.gram, mx.transpose(basis)), mx.inverse(gram))
        projector = mx.matmul(dual, basis)
        matrix = [
            [2 * projector[i][j] - (1 if i == j else 0) for j in range(16)]
            for i in range(16)
        ]
        try:
            return Isometry(lattice, matrix)
        except LatticeError as e:
            raise InvariantError(f"g_{alpha} is not an integral isometry: {e}") from e

    @cached_property
    def g_alphas(self):
        return {alpha: self.g_alpha(alpha) for alpha in A}

    def sigma(self, label):
        return self.lattice.reflection(self.classes[label])

    def sigma_reflections(self):
        return {label: self.sigma(label) for label in self.classes}

    def contracted_curves(self, alpha):
        """Smooth rational curves contracted by projecting from ``p_α``."""
        lattice = self.lattice
        line = mx.sub(self.h_Q, self.E(alpha))
        roots = [
            r for r in lattice.vectors_with_norm_and_pairing(line, -2, 0)
            if lattice.inner(r, self.h_X) > 0
        ]
        return simple_roots(lattice, roots, self.h_X)

    def adjacent_walls(self, g):
        """The walls ``v`` of ``D_X`` across which ``g`` maps ``D_X`` to a neighbour."""
        return [
            v for v in self.chamber.walls if conway.verify_adjacent(self.chamber, v, g)
        ]

    def verify_extra(self, matrices):
        """
        Check externally supplied isometries against the walls of ``D_X``.

        Returns ``{label: [wall type, …]}`` for every matrix that is an
        isometry of ``S_X``.
        """
        result = {}
        for label, m in matrices.items():
            try:
                g = Isometry(self.lattice, m)
            except LatticeError as e:
                raise DataError(f"Matrix {label} is not an isometry of S_X: {e}") from e
            result[label] = [self.wall_type(v) for v in self.adjacent_walls(g)]
            logger.info("Matrix %s: adjacent across %s", label, result[label])
        return result

    def checks(self):
        """Every structural check on ``S_X``, ``D_X`` and the involutions."""
        expected = data.expected()
        lattice, h_Q, h_X = self.lattice, self.h_Q, self.h_X
        yield Check("S_X determinant", expected["data"]["sx_determinant"], lattice.det)
        yield Check("⟨h_Q, h_Q⟩", 4, lattice.norm(h_Q))
        yield Check(
            "⟨h_Q, E_α⟩ = 0", True, all(lattice.inner(h_Q, self.E(a)) == 0 for a in A)
        )
        yield Check(
            "roots orthogonal to h_Q",
            sorted([self.E(a) for a in A] + [mx.neg(self.E(a)) for a in A]),
            lattice.vectors_with_norm_and_pairing(h_Q, -2, 0),
        )
        yield Check("⟨h_X, h_X⟩", expected["data"]["h_x_norm"], lattice.norm(h_X))
        yield Check(
            "h_X = ΣE_α + ΣL_β",
            h_X,
            mx.vector(mx.vector_sum(self.classes.values(), 16)),
        )
        yield Check(
            "⟨h_X, E_α⟩ = 1", True, all(lattice.inner(h_X, self.E(a)) == 1 for a in A)
        )
        yield Check(
            "roots separating h_Q from h_X", [], lattice.separating_roots(h_Q, h_X)
        )
        yield Check(
            "roots orthogonal to h_X",
            [],
            lattice.vectors_with_norm_and_pairing(h_X, -2, 0),
        )
        yield Check(
            "h_X = pr_S(w26)",
            h_X,
            self.embedding.orthogonal_projection(conway.w26()),
        )

        walls = self.walls_by_type()
        types = expected["dx_walls"]["types"]
        yield Check("D_X walls", expected["dx_walls"]["total"], len(self.chamber.walls))
        for kind in WallType:
            pairing, norm, count = types[kind.value]
            yield Check(f"D_X walls of type ({kind.value})", count, len(walls[kind]))
            yield Check(
                f"type ({kind.value}) values",
                True,
                all(
                    lattice.inner(v, h_X) == pairing
                    and lattice.norm(v) == Fraction(norm)
                    for v in walls[kind]
                ),
            )
        yield Check(
            "type (a) walls are the E_α and L_β",
            sorted(self.classes.values()),
            sorted(walls[WallType.A]),
        )
        yield Check(
            "type (b) walls are the v_α",
            sorted(self.v_alpha(a) for a in A),
            sorted(walls[WallType.B]),
        )

        involutions = expected["involutions"]
        aut = self.aut_DX
        g_e = self.enriques_involution
        yield Check("|aut(D_X)|", involutions["aut_dx_order"], len(set(aut)))
        walls_of_dx = list(self.chamber.walls)
        yield Check(
            "aut(D_X) preserves the walls",
            True,
            all(sorted(g(v) for v in walls_of_dx) == walls_of_dx for g in aut),
        )
        plus_minus = [g for g in aut if g.is_plus_minus_identity()]
        yield Check(
            "±1 on the discriminant",
            involutions["plus_minus_identity"],
            len(plus_minus),
        )
        yield Check(
            "g_ε in aut(D_X)", True, g_e in plus_minus and not g_e.is_identity()
        )
        yield Check("g_ε² = 1", True, (g_e @ g_e).is_identity())
        plus = self.plus_embedding
        yield Check(
            "S_X+ ≅ L10(2)",
            mx.matrix([[2 * x for x in row] for row in conway.l10().gram]),
            self.lattice.sublattice(plus.matrix).gram,
        )
        minus = self.minus_lattice
        yield Check("S_X- rank", 6, minus.rank)
        short = minus.enumerate_negdef(-4)
        roots = sum(1 for v in short if minus.norm(v) == -2)
        yield Check("S_X- roots", involutions["minus_roots"], roots)
        yield Check("S_X- vectors of norm -4", involutions["minus_norm_4"], len(short))

        for alpha in A:
            v, g = self.v_alpha(alpha), self.g_alphas[alpha]
            yield Check(
                f"v_{alpha} values", (2, -1), (lattice.inner(v, h_X), lattice.norm(v))
            )
            yield Check(f"v_{alpha} fixed by g_ε", v, g_e(v))
            yield Check(f"g_{alpha}² = 1", True, (g @ g).is_identity())
            yield Check(f"g_{alpha} commutes with g_ε", g @ g_e, g_e @ g)
            yield Check(
                f"g_{alpha} ±1 on the discriminant", True, g.is_plus_minus_identity()
            )
            yield Check(
                f"g_{alpha} adjacent across v_{alpha}",
                True,
                conway.verify_adjacent(self.chamber, v, g),
            )
            yield Check(
                f"curves contracted from p_{alpha}",
                "3A3+3A1",
                ade_type(lattice, self.contracted_curves(alpha)),
            )
        for alpha in A:
            s = self.sigma(f"E{alpha}") @ self.sigma(f"L{bar(alpha)}")
            yield Check(f"σ_{alpha}σ_{bar(alpha)} commutes with g_ε", s @ g_e, g_e @ s)

    def as_dict(self):
        walls = self.walls_by_type()
        return {
            "basis": list(self.basis),
            "gram": [list(row) for row in self.lattice.gram],
            "h_Q": list(self.h_Q),
            "h_X": list(self.h_X),
            "walls": {
                kind.value: [[str(x) for x in v] for v in walls[kind]]
                for kind in WallType
            },
            "witnesses": {
                ",".join(str(x) for x in v): list(r)
                for v, r in self.chamber.witnesses.items()
            },
            "enriques_involution": [
                list(row) for row in self.enriques_involution.matrix
            ],
            "g_alpha": {
                a: [list(row) for row in g.matrix] for a, g in self.g_alphas.items()
            },
        }
