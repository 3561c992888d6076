"""
Counting the Vinberg chambers of ``L10`` contained in ``D_Y``.

A Vinberg chamber ``V`` has a unique ray ``f_1(V)`` off the wall of its
first root; the ``10!`` Vinberg chambers sharing it form a Σ-chamber with
that center. Σ-chambers tile the positive cone; each has 120 walls, the
orbit of the first root under the ``A_9`` reflection group at the center.
"""

import collections
import logging
import math
from dataclasses import dataclass, field

from borcherds import conway
from borcherds import matrices as mx
from borcherds.conf import settings
from borcherds.dynkin import ade_type, weyl_group_order
from borcherds.exceptions import InvariantError

logger = logging.getLogger(__name__)

SIGMA_ORDER = math.factorial(10)


@dataclass
class VinbergCount:
    total: int = 0
    centers: int = 0
    interior: int = 0
    boundary: collections.Counter = field(default_factory=collections.Counter)


def sigma_walls():
    """The 120 wall roots of the Σ-chamber of the Vinberg chamber ``D10``."""
    lattice = conway.l10()
    roots = conway.vinberg_roots()
    reflections = [lattice.reflection(r) for r in roots[1:]]
    orbit = {roots[0]}
    queue = collections.deque(orbit)
    while queue:
        r = queue.popleft()
        for s in reflections:
            image = s(r)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return sorted(orbit)


def first_center():
    """``f_1(D10)``: the primitive ray orthogonal to the last nine Vinberg roots."""
    lattice = conway.l10()
    roots = conway.vinberg_roots()
    kernel = mx.left_kernel(mx.transpose([lattice.functional(r) for r in roots[1:]]))
    f = mx.primitive(kernel[0])
    if lattice.inner(f, roots[0]) < 0:
        f = mx.neg(f)
    return f


def vinberg_count(surface, cap=None):
    """
    Cover ``D_Y`` by Σ-chambers from the center ``h_Y`` and count the
    Vinberg chambers inside.
    """
    lattice = surface.lattice
    cap = settings.VINBERG_FRONTIER_CAP if cap is None else cap
    walls = surface.chamber.walls
    center = first_center()
    if center != surface.h_Y:
        raise InvariantError(f"f_1(D10) = {center} is not h_Y.")
    base = sigma_walls()
    result = VinbergCount()
    seen = {center}
    queue = collections.deque([(center, lattice.identity())])
    while queue:
        v, g = queue.popleft()
        pairings = [lattice.inner(w, v) for w in walls]
        if any(p < 0 for p in pairings):
            continue
        result.centers += 1
        vanishing = [w for w, p in zip(walls, pairings) if p == 0]
        if vanishing:
            kind = ade_type(lattice, vanishing)
            result.boundary[kind] += 1
            result.total += SIGMA_ORDER // weyl_group_order(kind)
        else:
            result.interior += 1
            result.total += SIGMA_ORDER
        for u in base:
            root = g(u)
            s = lattice.reflection(root)
            image = s(v)
            if image not in seen:
                seen.add(image)
                queue.append((image, g @ s))
        if len(queue) > cap:
            raise InvariantError(f"The Σ-chamber frontier exceeded {cap} centers.")
    logger.info(
        "%d Σ-chambers meet D_Y, %d of them with center inside: %d Vinberg chambers",
        result.centers, result.interior, result.total,
    )
    return result
