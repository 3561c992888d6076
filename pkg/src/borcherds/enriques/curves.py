"""
Classes of smooth rational curves on ``Y`` by degree ``⟨r, h_Y⟩``.

Two methods give the sets ``R_d``:

``sieve``
    For each ``d``, the vectors ``v`` of norm ``-2`` and degree ``d`` whose
    image in ``S_X`` is congruent mod 2 to a vector of norm ``-4`` in
    ``S_X⁻`` (so that it is the sum of two disjoint ``(-2)``-vectors
    exchanged by ``ε``), minus those pairing negatively with a curve of
    lower degree.

``chambers``
    A walk over the chambers ``D_Y^g``, ``g ∈ aut(Y)``, collecting the
    images ``ū_α^g``. A curve ``r`` of degree ``d`` is a wall of a chamber
    meeting the segment from ``h_Y`` to ``h_Y + (d/2)r``, and every inner
    wall that segment crosses has degree at most ``d``.
"""

import collections
import enum
import logging

from borcherds.conf import settings
from borcherds.exceptions import InvariantError

logger = logging.getLogger(__name__)


class Method(enum.Enum):
    SIEVE = "sieve"
    CHAMBERS = "chambers"


def _parities(vectors):
    return {tuple(x % 2 for x in t) for t in vectors}


def sieve(surface, d_max):
    lattice, h = surface.lattice, surface.h_Y
    lifts = _parities(surface.k3.anti_invariant_roots())
    curves = {}
    found = []
    for d in range(1, d_max + 1):
        candidates = [
            v
            for v in lattice.vectors_with_norm_and_pairing(h, -2, d)
            if tuple(x % 2 for x in surface.pull_back(v)) in lifts
        ]
        curves[d] = [
            v for v in candidates if all(lattice.inner(v, r) >= 0 for r in found)
        ]
        logger.info(
            "Degree %d: %d lifting vectors, %d curves",
            d,
            len(candidates),
            len(curves[d]),
        )
        found.extend(curves[d])
    return curves


def chamber_walk(surface, d_max, cap=None):
    lattice, h = surface.lattice, surface.h_Y
    cap = settings.CHAMBER_WALK_CAP if cap is None else cap
    outer = list(surface.outer_walls.values())
    inner = list(surface.inner_walls.items())
    identity = surface.identity
    seen = {h}
    queue = collections.deque([identity])
    found = set()
    while queue:
        g = queue.popleft()
        for u in outer:
            r = g(u)
            if lattice.inner(r, h) <= d_max:
                found.add(r)
        for alpha, v in inner:
            w = g(v)
            if 0 < lattice.inner(w, h) <= d_max:
                neighbour = surface.neighbour(alpha, g)
                key = neighbour(h)
                if key not in seen:
                    seen.add(key)
                    queue.append(neighbour)
        if len(seen) > cap:
            raise InvariantError(
                f"The chamber walk to degree {d_max} passed {cap} chambers."
            )
    logger.info("Chamber walk to degree %d: %d chambers", d_max, len(seen))
    curves = {d: [] for d in range(1, d_max + 1)}
    for r in found:
        curves[lattice.inner(r, h)].append(r)
    return {d: sorted(rs) for d, rs in curves.items()}


def rational_curves(surface, d_max=None, method=None):
    """
    ``{d: R_d}`` for ``1 <= d <= d_max``, each ``R_d`` sorted.

    Without an explicit method the sieve is used up to
    ``settings.CURVE_SIEVE_DEGREE`` and the chamber walk beyond.
    """
    d_max = settings.MAX_CURVE_DEGREE if d_max is None else d_max
    if method is None:
        if d_max <= settings.CURVE_SIEVE_DEGREE:
            method = Method.SIEVE
        else:
            method = Method.CHAMBERS
    match Method(method):
        case Method.SIEVE:
            return sieve(surface, d_max)
        case Method.CHAMBERS:
            return chamber_walk(surface, d_max)


def curves_up_to(curves, d):
    """All curves of degree at most ``d``."""
    return [r for degree, rs in sorted(curves.items()) if degree <= d for r in rs]


def counts(curves):
    return {d: len(rs) for d, rs in curves.items() if rs}


def is_invariant(curves, group):
    """Whether every ``R_d`` is mapped to itself by every element of ``group``."""
    return all(
        sorted(g(r) for r in rs) == rs for g in group for rs in curves.values()
    )
