"""
Generators of the kernel of ``ρ`` by the Reidemeister–Schreier method.

The cosets of the kernel are the elements of the finite image. Their
representatives come from a breadth-first Schreier tree, so each one is a
shortest word in the generators. For a representative ``t`` and generator
``s``, the element ``t·s·u⁻¹`` lies in the kernel, where ``u`` represents
the coset of ``t·s``.
"""

import collections
import logging
from dataclasses import dataclass

from borcherds.exceptions import InvariantError
from borcherds.groups.f2 import mod2

logger = logging.getLogger(__name__)


def inverse_word(word, involutions):
    """
    The word of the inverse element. A letter ``a`` that is not an involution
    inverts to ``a⁻``.
    """
    result = []
    for letter in reversed(word):
        if letter in involutions:
            result.append(letter)
        elif letter.endswith("⁻"):
            result.append(letter[:-1])
        else:
            result.append(letter + "⁻")
    return tuple(result)


@dataclass(frozen=True)
class Coset:
    word: tuple
    representative: object


@dataclass(frozen=True)
class KernelGenerator:
    word: tuple
    element: object


class CosetTable:
    """``{ρ(g): Coset}`` over the finite image of the group ``generators`` span."""

    def __init__(self, generators, images=None, expected_order=None):
        self.generators = dict(generators)
        if images is None:
            images = {label: mod2(g) for label, g in self.generators.items()}
        self.images = dict(images)
        self.involutions = frozenset(
            label for label, g in self.generators.items() if (g @ g).is_identity()
        )
        self.rows = self._build()
        if expected_order is not None and len(self.rows) != expected_order:
            raise InvariantError(
                f"The coset table has {len(self.rows)} rows, not {expected_order}."
            )

    def __len__(self):
        return len(self.rows)

    def _build(self):
        first = next(iter(self.generators.values()))
        self.identity = first.lattice.identity()
        start = mod2(self.identity)
        rows = {start: Coset((), self.identity)}
        queue = collections.deque([start])
        while queue:
            key = queue.popleft()
            coset = rows[key]
            for label, g in self.generators.items():
                image = key @ self.images[label]
                if image not in rows:
                    rows[image] = Coset(coset.word + (label,), coset.representative @ g)
                    queue.append(image)
        logger.info("Coset table: %d rows", len(rows))
        return rows

    def evaluate(self, word):
        result = self.identity
        for letter in word:
            if letter.endswith("⁻"):
                result = result @ self.generators[letter[:-1]].inverse()
            else:
                result = result @ self.generators[letter]
        return result

    def representative(self, image):
        try:
            return self.rows[image]
        except KeyError:
            raise InvariantError("The image group is not closed under the generators.")

    def kernel_generators(self, limit=None):
        """
        The non-trivial Schreier generators ``t·s·u⁻¹``, without repeats, in
        table order. Stops after ``limit`` of them when given.
        """
        found = {}
        for key, coset in self.rows.items():
            for label, g in self.generators.items():
                target = self.representative(key @ self.images[label])
                element = coset.representative @ g @ target.representative.inverse()
                if element.is_identity() or element in found:
                    continue
                inverse = inverse_word(target.word, self.involutions)
                word = coset.word + (label,) + inverse
                found[element] = KernelGenerator(word, element)
                if limit is not None and len(found) >= limit:
                    return list(found.values())
        logger.info("%d Schreier generators of the kernel", len(found))
        return list(found.values())


def kernel_generators(generators, images=None, limit=None):
    return CosetTable(generators, images).kernel_generators(limit)
