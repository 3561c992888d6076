"""
Faces of ``D_Y`` up to ``aut(Y)``, the groups ``G(F)`` and the defining
relations of ``aut(Y)``.

Words are tuples ``(α_1, …, α_k)`` standing for ``ḡ(α_1)⋯ḡ(α_k)``, which
acts first by ``ḡ(α_1)``.
"""

import collections
import logging
from dataclasses import dataclass, field
from functools import cached_property

from borcherds.exceptions import ChamberError, InvariantError
from borcherds.hessian import A

logger = logging.getLogger(__name__)

MAX_RELATOR_LENGTH = 64


@dataclass
class FaceClass:
    """
    An ``aut(Y)``-class of faces, with words mapping the representative to
    each member.
    """

    representative: object
    witnesses: dict = field(default_factory=dict)

    @property
    def members(self):
        return list(self.witnesses)

    def __len__(self):
        return len(self.witnesses)


@dataclass(frozen=True)
class Relation:
    face: tuple
    word: tuple

    @property
    def kind(self):
        match len(self.word):
            case 2:
                return "square"
            case 4:
                return "commuting"
            case 6:
                return "hexagon"
            case _:
                return f"length {len(self.word)}"


class FaceClassification:
    """The faces of ``D_Y`` split into outer and inner faces and into classes."""

    def __init__(self, surface):
        self.surface = surface
        self.faces = surface.chamber.faces
        self.rank = surface.lattice.rank

    def is_outer(self, face):
        return bool(face.active & self.surface.outer_indices)

    def pull_back(self, face, g):
        """The face ``F'`` of ``D_Y`` with ``F'^g = F``."""
        return self.surface.locate(g.inverse()(face.point))

    def push(self, face, g):
        """``F^g`` for a face ``F`` of ``D_Y`` whose image is a face of ``D_Y``."""
        return self.surface.locate(g(face.point))

    def adjacent(self, face):
        """``{α: F^{ḡ(α)}}`` over the inner walls ``w(α)`` containing ``F``."""
        generators = self.surface.generators
        return {
            alpha: self.push(face, generators[alpha])
            for alpha in self.surface.inner_alphas(face.active)
        }

    @cached_property
    def classes(self):
        """``{dim: [FaceClass, …]}`` for ``dim = 1, …, rank - 1``."""
        result = {}
        for dim in range(1, self.rank):
            seen = {}
            classes = []
            for face in self.faces.faces(dim):
                if face.active in seen:
                    continue
                cls = FaceClass(face, {face.active: ()})
                seen[face.active] = cls
                queue = collections.deque([face])
                while queue:
                    current = queue.popleft()
                    word = cls.witnesses[current.active]
                    for alpha, image in self.adjacent(current).items():
                        if image.active not in seen:
                            seen[image.active] = cls
                            cls.witnesses[image.active] = word + (alpha,)
                            queue.append(image)
                classes.append(cls)
            result[dim] = classes
            logger.info(
                "Dimension %d: %d faces in %d classes", dim, len(seen), len(classes)
            )
        return result

    @cached_property
    def class_of(self):
        """``{active set: FaceClass}``."""
        return {
            active: cls
            for classes in self.classes.values()
            for cls in classes
            for active in cls.witnesses
        }

    def verify_witnesses(self):
        """
        Re-evaluate every witness word; raise if one does not map the
        representative to its member.
        """
        surface = self.surface
        for classes in self.classes.values():
            for cls in classes:
                for active, word in cls.witnesses.items():
                    image = self.push(cls.representative, surface.element(word))
                    if image.active != active:
                        raise InvariantError(
                            f"The witness {word} maps {cls.representative} to {image}, "
                            f"not to the face with active walls {sorted(active)}."
                        )

    def table(self):
        """Per dimension: outer faces, inner faces and their numbers of classes."""
        rows = {}
        for dim in range(1, self.rank):
            faces = self.faces.faces(dim)
            classes = self.classes[dim]
            outer = sum(1 for f in faces if self.is_outer(f))
            outer_classes = sum(1 for c in classes if self.is_outer(c.representative))
            rows[dim] = {
                "outer": outer,
                "inner": len(faces) - outer,
                "outer_classes": outer_classes,
                "inner_classes": len(classes) - outer_classes,
            }
        return rows

    def ideal_faces(self):
        return [face for face in self.faces.faces(1) if face.ideal]

    def ideal_classes(self):
        return [cls for cls in self.classes[1] if cls.representative.ideal]

    def group_around(self, face):
        """
        ``G(F) = {g ∈ aut(Y) : F ⊂ D_Y^g}`` for a non-ideal face ``F``, as
        ``{g: word}``.
        """
        if face.ideal:
            raise ChamberError(f"{face} is ideal; infinitely many chambers contain it.")
        surface = self.surface
        identity = surface.identity
        found = {identity: ()}
        queue = collections.deque([identity])
        while queue:
            g = queue.popleft()
            pulled = self.pull_back(face, g)
            for alpha in surface.inner_alphas(pulled.active):
                neighbour = surface.neighbour(alpha, g)
                if neighbour not in found:
                    found[neighbour] = (alpha,) + found[g]
                    queue.append(neighbour)
        return found

    def curves_through(self, face):
        """
        ``R(F)``: the classes ``ū_α^g`` of the walls through ``F`` of the
        chambers ``D_Y^g ∋ F``.
        """
        surface = self.surface
        curves = set()
        for g in self.group_around(face):
            pulled = self.pull_back(face, g)
            for alpha in surface.outer_alphas(pulled.active):
                curves.add(g(surface.outer_walls[alpha]))
        return tuple(sorted(curves))

    def relation(self, face):
        """
        The relator of an 8-dimensional inner face: ``ḡ(α_m)⋯ḡ(α_1) = 1``
        for the cycle of chambers around ``F``.
        """
        surface = self.surface
        alphas = surface.inner_alphas(face.active)
        if len(alphas) != 2 or len(face.active) != 2:
            raise ChamberError(f"{face} is not an 8-dimensional inner face.")
        previous = surface.identity
        word = (alphas[0],)
        current = surface.generators[alphas[0]]
        while not current.is_identity():
            if len(word) > MAX_RELATOR_LENGTH:
                raise InvariantError(
                    f"The cycle of chambers around {face} does not close."
                )
            pulled = self.pull_back(face, current)
            candidates = [
                (alpha, surface.neighbour(alpha, current))
                for alpha in surface.inner_alphas(pulled.active)
            ]
            alpha, following = next(
                (alpha, g) for alpha, g in candidates if g != previous
            )
            previous, current = current, following
            word = (alpha,) + word
        if not surface.element(word).is_identity():
            raise InvariantError(f"The relator {word} of {face} is not the identity.")
        return Relation(face.key, word)

    def relations(self):
        """Squares ``ḡ(α)²`` and one relator per class of 8-dimensional inner faces."""
        result = [Relation((), (alpha, alpha)) for alpha in A]
        for cls in self.classes[self.rank - 2]:
            if not self.is_outer(cls.representative):
                result.append(self.relation(cls.representative))
        return result
