"""
Elliptic fibrations of ``Y`` from the ideal faces of ``D_Y``.
"""

import collections
import logging
from dataclasses import dataclass

from borcherds import matrices as mx
from borcherds.dynkin import connected_components, extended_type, format_type
from borcherds.enriques.curves import curves_up_to
from borcherds.exceptions import InvariantError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fiber:
    component: tuple
    curves: tuple
    multiplicities: tuple
    degree: int
    multiple: bool


@dataclass(frozen=True)
class Fibration:
    f: tuple
    degree: int
    fibers: tuple
    class_size: int = 1

    @property
    def full(self):
        return format_type(
            [fiber.component for fiber in self.fibers if not fiber.multiple]
        )

    @property
    def half(self):
        return format_type([fiber.component for fiber in self.fibers if fiber.multiple])

    @property
    def signature(self):
        return (self.full, self.half)


def fiber_degree(surface, f):
    """``d_φ = ⟨2f, h_Y⟩``."""
    return surface.lattice.inner(mx.scale(2, f), surface.h_Y)


def fibration(surface, f, curves, class_size=1):
    """
    The reducible fibers of the fibration with fiber class ``2f``.

    ``curves`` must hold ``R_d`` for every ``d < d_φ``.
    """
    lattice, h = surface.lattice, surface.h_Y
    d = fiber_degree(surface, f)
    if max(curves, default=0) < d - 1:
        raise InvariantError(
            f"Curves up to degree {d - 1} are needed for the fibration {f}."
        )
    vertical = [r for r in curves_up_to(curves, d - 1) if lattice.inner(r, f) == 0]
    fibers = []
    for component in connected_components(lattice, vertical):
        kind, multiplicities = extended_type(lattice, component)
        t = sum(m * lattice.inner(r, h) for m, r in zip(multiplicities, component))
        if t == d:
            multiple = False
        elif 2 * t == d:
            multiple = True
        else:
            raise InvariantError(f"A fiber of {f} has degree {t}, not {d} or {d}/2.")
        fibers.append(Fiber(kind, tuple(component), tuple(multiplicities), t, multiple))
    logger.debug("Fibration %s: degree %d, %d reducible fibers", f, d, len(fibers))
    return Fibration(mx.vector(f), d, tuple(fibers), class_size)


def elliptic_fibrations(surface, classification, curves):
    """One fibration per ``aut(Y)``-class of ideal faces of ``D_Y``."""
    return [
        fibration(surface, cls.representative.ray, curves, len(cls))
        for cls in classification.ideal_classes()
    ]


def required_degree(surface, classification):
    """The largest curve degree needed to classify every fibration."""
    return max(
        fiber_degree(surface, cls.representative.ray) - 1
        for cls in classification.ideal_classes()
    )


def table(fibrations):
    """``[(full, half, count), …]`` sorted by type."""
    counts = collections.Counter(fibration.signature for fibration in fibrations)
    return sorted((full, half, count) for (full, half), count in counts.items())
