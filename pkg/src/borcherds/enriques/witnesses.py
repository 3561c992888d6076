"""
Lattice facts behind the injectivity of ``Aut(Y) → O(S_Y)``.

Three disjoint curves ``C_1, C_2, C_3``, a fourth curve ``C_0`` meeting each
of them once, and an elliptic fibration whose fiber meets ``C_0`` with
multiplicity 12.
"""

from borcherds import matrices as mx
from borcherds.chambers import Position, classify_point
from borcherds.checks import Check

CURVES = ("123", "134", "135")


def checks(surface, curves):
    """``curves`` must hold ``R_d`` up to degree 5."""
    lattice = surface.lattice
    document = surface.document
    c = [surface.outer_walls[alpha] for alpha in CURVES]
    c0 = document["curve_c0"]
    f = document["fibration_f"]
    for i in range(3):
        for j in range(i):
            yield Check(f"⟨C_{j + 1}, C_{i + 1}⟩", 0, lattice.inner(c[i], c[j]))
    degree = lattice.inner(c0, surface.h_Y)
    yield Check("C_0 ∈ R_5", True, c0 in curves.get(degree, ()))
    yield Check("deg C_0", 5, lattice.inner(c0, surface.h_Y))
    for i, ci in enumerate(c, start=1):
        yield Check(f"⟨C_0, C_{i}⟩", 1, lattice.inner(c0, ci))
    yield Check("⟨f, f⟩", 0, lattice.norm(f))
    yield Check("f is primitive", f, mx.primitive(f))
    position, active = classify_point(surface.chamber, f)
    walls = [surface.chamber.walls[i] for i in sorted(active)]
    yield Check(
        "f spans an ideal face of D_Y",
        True,
        position is Position.BOUNDARY and mx.rank(walls) == lattice.rank - 1,
    )
    yield Check("⟨C_0, 2f⟩", 12, lattice.inner(c0, mx.scale(2, f)))
