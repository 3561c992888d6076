"""
The Enriques surface covered by the quartic Hessian K3 surface.
"""

from borcherds.enriques.curves import Method, rational_curves
from borcherds.enriques.faces import FaceClass, FaceClassification, Relation
from borcherds.enriques.fibrations import Fibration, elliptic_fibrations
from borcherds.enriques.rdp import rdp_configurations
from borcherds.enriques.surface import EnriquesSurface
from borcherds.enriques.vinberg import VinbergCount, vinberg_count

__all__ = [
    "EnriquesSurface",
    "FaceClass",
    "FaceClassification",
    "Fibration",
    "Method",
    "Relation",
    "VinbergCount",
    "elliptic_fibrations",
    "rational_curves",
    "rdp_configurations",
    "vinberg_count",
]
