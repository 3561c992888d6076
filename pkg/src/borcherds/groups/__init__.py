"""
Finite groups over F_2 and Salem numbers of lattice isometries.
"""

from borcherds.groups.entropy import coxeter_element, entropy_search
from borcherds.groups.f2 import F2Matrix, go10_generators, group_order, mod2
from borcherds.groups.salem import SalemReport, salem_analyze
from borcherds.groups.schreier import CosetTable, kernel_generators

__all__ = [
    "CosetTable",
    "F2Matrix",
    "SalemReport",
    "coxeter_element",
    "entropy_search",
    "go10_generators",
    "group_order",
    "kernel_generators",
    "mod2",
    "salem_analyze",
]
