"""
RDP-configurations: the sets of smooth rational curves contracted by the
morphisms ``Y → Ȳ`` onto surfaces with rational double points.
"""

import collections
import logging

from borcherds.dynkin import ade_type

logger = logging.getLogger(__name__)


def curves_by_face(classification):
    """``{active set: R(F)}`` over all non-ideal proper faces of ``D_Y``."""
    result = {}
    for dim in range(1, classification.rank):
        for face in classification.faces.faces(dim):
            if not face.ideal:
                result[face.active] = classification.curves_through(face)
        logger.info("R(F) computed for the faces of dimension %d", dim)
    return result


def maximal_faces(classification, curves):
    """
    The faces ``F`` with ``R(F)`` non-empty and no face ``F' ⊋ F`` of one
    dimension more with ``R(F') = R(F)``.
    """
    maximal = []
    for active, rs in curves.items():
        if not rs:
            continue
        face = classification.faces[active]
        if all(curves.get(parent, ()) != rs for parent in face.parents):
            maximal.append(face)
    return maximal


def rdp_configurations(classification, curves=None):
    """``{ADE type: number of aut(Y)-classes}`` of maximal faces."""
    lattice = classification.surface.lattice
    curves = curves_by_face(classification) if curves is None else curves
    seen = set()
    counts = collections.Counter()
    for face in maximal_faces(classification, curves):
        cls = classification.class_of[face.active]
        if id(cls) in seen:
            continue
        seen.add(id(cls))
        counts[ade_type(lattice, curves[face.active])] += 1
    return dict(counts)
