"""
The Enriques surface ``Y = X/ε`` and the induced chamber ``D_Y``.

``S_Y`` is identified with ``L10`` through the basis of ``S_X⁺`` in the data
file, so that ``⟨y, y'⟩_X = 2⟨y, y'⟩_Y`` on ``S_X⁺``.
"""

import itertools
import logging
from functools import cached_property

from borcherds import conway, data
from borcherds import matrices as mx
from borcherds.chambers import Chamber, Position, classify_point
from borcherds.checks import Check
from borcherds.exceptions import DataError, InvariantError, LatticeError
from borcherds.hessian import A, DIGITS, HessianK3, bar
from borcherds.lattice import Isometry

logger = logging.getLogger(__name__)


def intersection(alpha, other):
    return len(set(alpha) & set(other))


class EnriquesSurface:
    def __init__(self, k3, document):
        self.k3 = k3
        self.document = document
        self.lattice = conway.l10()

    def __repr__(self):
        return f"<EnriquesSurface of {self.k3!r}>"

    @classmethod
    def load(cls):
        return cls(HessianK3.load(), data.enriques())

    @property
    def plus(self):
        return self.k3.plus_embedding

    def project(self, v):
        """``pr⁺(v)`` in ``S_Y`` coordinates."""
        return self.plus.orthogonal_projection(v)

    def pull_back(self, y):
        """The image of ``y ∈ S_Y`` in ``S_X``."""
        return self.plus(y)

    @cached_property
    def h_Y(self):
        h = self.project(self.k3.h_X)
        if h != self.document["h_Y"]:
            raise DataError(f"pr⁺(h_X) = {h} does not match h_Y in the data file.")
        return h

    @cached_property
    def outer_walls(self):
        """``ū_α = 2 pr⁺(E_α)``, the classes of the images of the curves ``E_α``."""
        walls = {alpha: self.image(self.k3.E(alpha)) for alpha in A}
        return self._compare_walls(walls, "outer_walls")

    @cached_property
    def inner_walls(self):
        """``v̄_α = 2 pr⁺(v_α)``."""
        walls = {alpha: self.image(self.k3.v_alpha(alpha)) for alpha in A}
        return self._compare_walls(walls, "inner_walls")

    def image(self, v):
        """``2 pr⁺(v)`` in coordinates of ``S_Y``."""
        return mx.vector(mx.scale(2, self.project(v)))

    def _compare_walls(self, walls, key):
        for alpha, v in walls.items():
            if v != self.document[key][alpha]:
                raise DataError(
                    f"The computed {key} vector for {alpha} is {v}, "
                    "not the tabulated one."
                )
        return walls

    @cached_property
    def chamber(self):
        """``D_Y``: the points ``y`` with ``plus(y)`` in ``D_X``."""
        lattice = self.lattice
        defining = []
        for v in self.k3.chamber.walls:
            w = self.project(v)
            if any(w) and lattice.norm(w) < 0:
                defining.append(w)
        chamber = Chamber(lattice, defining, self.h_Y, name="D_Y")
        expected = sorted([*self.outer_walls.values(), *self.inner_walls.values()])
        if list(chamber.walls) != expected:
            raise InvariantError(
                f"D_Y has {len(chamber.walls)} walls that differ from the ū_α and v̄_α."
            )
        return chamber

    @cached_property
    def wall_labels(self):
        """``{index of the wall in D_Y.walls: ("u" or "v", α)}``."""
        index = {v: i for i, v in enumerate(self.chamber.walls)}
        labels = {index[v]: ("u", alpha) for alpha, v in self.outer_walls.items()}
        labels.update({index[v]: ("v", alpha) for alpha, v in self.inner_walls.items()})
        return labels

    @cached_property
    def outer_indices(self):
        return frozenset(i for i, (kind, _) in self.wall_labels.items() if kind == "u")

    def inner_alphas(self, active):
        """The ``α`` with ``w(α)`` among the active walls, sorted."""
        labels = self.wall_labels
        return sorted(labels[i][1] for i in active if labels[i][0] == "v")

    def outer_alphas(self, active):
        labels = self.wall_labels
        return sorted(labels[i][1] for i in active if labels[i][0] == "u")

    def restrict(self, g):
        """
        The isometry of ``S_Y`` induced by an isometry of ``S_X`` commuting
        with ``ε``.
        """
        rows = []
        for eta in self.plus.matrix:
            image = g(eta)
            y = self.project(image)
            if not mx.is_integral(y) or self.pull_back(y) != image:
                raise InvariantError(f"{g!r} does not preserve S_X+.")
            rows.append(y)
        try:
            return Isometry(self.lattice, rows)
        except LatticeError as e:
            raise InvariantError(
                f"The restriction of {g!r} is not an isometry: {e}"
            ) from e

    @cached_property
    def generators(self):
        """``{α: ḡ_α}``, the restrictions of the involutions ``g_α``."""
        return {alpha: self.restrict(g) for alpha, g in self.k3.g_alphas.items()}

    @cached_property
    def reflections(self):
        """``{α: σ̄_α}``, the reflections in the outer walls."""
        return {
            alpha: self.lattice.reflection(u) for alpha, u in self.outer_walls.items()
        }

    @cached_property
    def identity(self):
        return self.lattice.identity()

    def element(self, word):
        """
        ``ḡ(α_1)⋯ḡ(α_k)`` for ``word = (α_1, …, α_k)``, acting first by
        ``ḡ(α_1)``.
        """
        result = self.identity
        for alpha in word:
            result = result @ self.generators[alpha]
        return result

    def neighbour(self, alpha, g):
        """The element mapping ``D_Y`` to the chamber across ``w(α)^g``."""
        return self.generators[alpha] @ g

    def aut_generators(self):
        """
        ``ḡ_α`` as ``"g" + α`` and ``σ̄_α`` as ``"s" + α``: aut(Y) together
        with the reflections in curves.
        """
        result = {f"g{alpha}": g for alpha, g in self.generators.items()}
        result.update({f"s{alpha}": s for alpha, s in self.reflections.items()})
        return result

    @cached_property
    def aut_DY(self):
        """The 120 isometries of ``S_Y`` induced by permutations of ``{1, …, 5}``."""
        return [
            self.restrict(self.k3.permutation_isometry(image))
            for image in itertools.permutations(DIGITS)
        ]

    def locate(self, x):
        """The face of ``D_Y`` holding ``x`` in its relative interior."""
        position, active = classify_point(self.chamber, x)
        if position is Position.OUTSIDE:
            raise InvariantError(f"{x} lies outside D_Y.")
        if position is Position.INTERIOR:
            return self.chamber.faces.top
        return self.chamber.faces[active]

    def eigenvalue_one_multiplicity(self, g):
        shifted = mx.sub_matrices(g.matrix, mx.identity(self.lattice.rank))
        return len(mx.left_kernel(shifted))

    def checks(self):
        expected = data.expected()
        lattice, h = self.lattice, self.h_Y
        u, v = self.outer_walls, self.inner_walls
        yield Check("⟨h_Y, h_Y⟩", expected["data"]["h_y_norm"], lattice.norm(h))
        basis = self.plus.matrix
        gram = mx.matmul(mx.matmul(basis, self.k3.lattice.gram), mx.transpose(basis))
        yield Check(
            "⟨y, y'⟩_X = 2⟨y, y'⟩_Y",
            mx.matrix([[2 * x for x in row] for row in lattice.gram]),
            gram,
        )
        yield Check("D_Y walls", expected["dy"]["walls"], len(self.chamber.walls))
        yield Check("h_Y = Σū_α", h, mx.vector(mx.vector_sum(u.values(), 10)))
        yield Check(
            "⟨ū_α, h_Y⟩ = 1", True, all(lattice.inner(x, h) == 1 for x in u.values())
        )
        yield Check(
            "⟨v̄_α, h_Y⟩ = 2", True, all(lattice.inner(x, h) == 2 for x in v.values())
        )
        yield Check(
            "⟨ū_α, ū_α'⟩",
            True,
            all(
                lattice.inner(u[a], u[b]) == {3: -2, 1: 1}.get(intersection(a, b), 0)
                for a in A for b in A
            ),
        )
        yield Check(
            "⟨v̄_α, v̄_α'⟩",
            True,
            all(
                lattice.inner(v[a], v[b]) == {3: -2, 2: 1}.get(intersection(a, b), 0)
                for a in A for b in A
            ),
        )
        yield Check(
            "⟨ū_α, v̄_α'⟩ = 2δ",
            True,
            all(
                lattice.inner(u[a], v[b]) == (2 if a == b else 0)
                for a in A
                for b in A
            ),
        )
        multiplicity = expected["involutions"]["eigenvalue_one_multiplicity"]
        for alpha, g in self.generators.items():
            yield Check(f"ḡ_{alpha}² = 1", True, (g @ g).is_identity())
            yield Check(
                f"ḡ_{alpha} eigenvalue 1",
                multiplicity,
                self.eigenvalue_one_multiplicity(g),
            )
            yield Check(
                f"ḡ_{alpha} adjacent across w({alpha})",
                True,
                conway.verify_adjacent(self.chamber, v[alpha], g),
            )
        for alpha, s in self.reflections.items():
            k3 = self.k3
            lifted = self.restrict(k3.sigma(f"E{alpha}") @ k3.sigma(f"L{bar(alpha)}"))
            yield Check(f"σ̄_{alpha} is the restriction of σ_E σ_L", s, lifted)
        aut = self.aut_DY
        walls = list(self.chamber.walls)
        yield Check("|aut(D_Y)|", expected["dy"]["aut_order"], len(set(aut)))
        yield Check(
            "aut(D_Y) fixes h_Y and permutes the walls",
            True,
            all(g(h) == h and sorted(g(w) for w in walls) == walls for g in aut),
        )

    def as_dict(self):
        return {
            "h_Y": list(self.h_Y),
            "outer_walls": {a: list(x) for a, x in self.outer_walls.items()},
            "inner_walls": {a: list(x) for a, x in self.inner_walls.items()},
            "generators": {
                a: [list(row) for row in g.matrix] for a, g in self.generators.items()
            },
        }
