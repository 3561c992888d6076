"""
Vinberg and Conway chambers, and chambers induced from the Conway chamber.

``L26 = U ⊕ Λ`` is written in the basis ``f1, f2`` of ``U`` followed by the
24 vectors of the Leech basis, with ``⟨f1, f2⟩ = 1``. The Weyl vector of the
standard Conway chamber is ``w26 = f1``, and its walls are the roots
``r_λ = (-λ²/2 - 1)·f1 + f2 + λ`` for ``λ ∈ Λ``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from borcherds import data
from borcherds import matrices as mx
from borcherds.chambers import Chamber
from borcherds.checks import Check
from borcherds.exceptions import ChamberError, DataError, InvariantError, LatticeError
from borcherds.lattice import IntegerLattice, PrimitiveEmbedding, Signature

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def l10():
    lattice = IntegerLattice(data.l10()["gram"], name="L10", signature="hyperbolic")
    if abs(lattice.det) != 1:
        raise DataError("The L10 Gram matrix is not unimodular.")
    return lattice


def vinberg_roots():
    """The roots ``e1, …, e10`` of the Vinberg chamber, in order."""
    document = data.l10()
    basis = mx.identity(10)
    return tuple(basis[2:]) + (document["e9"], document["e10"])


def w10():
    return data.l10()["w10"]


@lru_cache(maxsize=None)
def leech():
    document = data.leech()
    lattice = IntegerLattice.from_basis(
        document["basis"], scale=Fraction(1, document["denominator"]), name="Leech"
    )
    if lattice.det != 1:
        raise DataError(f"The Leech basis has Gram determinant {lattice.det}, not 1.")
    if lattice.signature is not Signature.NEGATIVE_DEFINITE:
        raise DataError("The Leech lattice must be negative definite.")
    return lattice


@lru_cache(maxsize=None)
def l26():
    gram = [[0] * 26 for _ in range(26)]
    gram[0][1] = gram[1][0] = 1
    for i, row in enumerate(leech().gram):
        gram[i + 2][2:] = row
    return IntegerLattice(gram, name="L26", signature="hyperbolic")


def w26():
    return (1,) + (0,) * 25


def leech_root(lam):
    """The Conway-chamber wall root ``r_λ`` of a Leech vector ``λ``."""
    lam = mx.vector(lam)
    if len(lam) != 24 or not mx.is_integral(lam):
        raise LatticeError(f"{lam} is not a vector of the Leech lattice.")
    norm = leech().norm(lam)
    return (-norm // 2 - 1, 1) + lam


def check_vinberg_chamber():
    """
    Confirm ``⟨w10, w10⟩ = 1240`` and that ``e1, …, e10`` are the roots with
    ``⟨r, w10⟩ = 1``.
    """
    lattice = l10()
    w = w10()
    if lattice.norm(w) != 1240:
        raise DataError(f"⟨w10, w10⟩ = {lattice.norm(w)}, not 1240.")
    roots = lattice.vectors_with_norm_and_pairing(w, -2, 1)
    if set(roots) != set(vinberg_roots()):
        raise DataError("The roots r with ⟨r, w10⟩ = 1 are not e1, …, e10.")
    return roots


@dataclass
class InducedChamber:
    """A chamber of ``S`` induced from a Conway chamber through ``S ↪ L26``."""

    embedding: PrimitiveEmbedding
    weyl: tuple
    chamber: Chamber
    witnesses: dict = field(default_factory=dict)

    @property
    def lattice(self):
        return self.chamber.lattice

    @property
    def walls(self):
        return self.chamber.walls

    @property
    def interior_point(self):
        return self.chamber.interior_point

    @property
    def key(self):
        return (self.interior_point, self.walls)

    def witness(self, v):
        """
        An ``L26`` root ``r`` with ``⟨r, weyl⟩ = 1`` projecting to a positive
        multiple of ``v``.
        """
        return self.witnesses[v]

    def check_witnesses(self):
        target = self.embedding.target
        for v in self.walls:
            r = self.witnesses.get(v)
            if r is None:
                raise InvariantError(f"Wall {v} has no witness root.")
            is_root = mx.is_integral(r) and target.norm(r) == -2
            if not is_root or target.inner(r, self.weyl) != 1:
                raise InvariantError(
                    f"The witness of wall {v} is not a root r with ⟨r, w⟩ = 1."
                )
            projected = self.embedding.orthogonal_projection(r)
            if self.lattice.primitive_dual(projected) != v:
                raise InvariantError(
                    f"The witness of wall {v} does not project onto it."
                )


def induced_walls(embedding, weyl=None):
    """
    The negative-norm projections ``pr_S(r)`` of the roots ``r`` of ``L26``
    with ``⟨r, weyl⟩ = 1``, as primitive dual vectors with a witness root each.

    Roots are split as ``r = r_S + r_R`` along ``S ⊕ R`` (``R`` the orthogonal
    complement). The finitely many ``r_R ∈ R^∨`` with ``-2 < ⟨r_R, r_R⟩ <= 0``
    are enumerated first, then the matching ``r_S`` in the glued coset of
    ``S^∨``.
    """
    source, target = embedding.source, embedding.target
    weyl = mx.vector(weyl or w26())
    complement = embedding.orthogonal_complement
    r_lattice, r_basis = complement.lattice, complement.basis
    if r_lattice.signature is not Signature.NEGATIVE_DEFINITE or not r_lattice.rank:
        raise LatticeError(f"The complement of {source.name} is not negative definite.")
    if not r_lattice.enumerate_negdef(-2):
        raise LatticeError(
            f"The complement of {source.name} has no roots, so its induced chambers "
            "cannot be computed from the Weyl vector."
        )
    h = embedding.orthogonal_projection(weyl)
    weyl_r = embedding.complement_projection(weyl)
    candidates = [mx.zero(r_lattice.rank)] + [
        v for v in r_lattice.enumerate_dual_negdef(-2) if r_lattice.norm(v) > -2
    ]
    logger.info(
        "%s: %d candidates for the complement part", source.name, len(candidates)
    )
    cosets = source.discriminant_group.elements()
    glue = {}
    found = {}
    for r_r in candidates:
        ambient_r = mx.vecmat(r_r, r_basis)
        key = r_lattice.discriminant_group.coordinates(r_r)
        if key not in glue:
            glue[key] = next(
                (
                    o
                    for o in cosets
                    if mx.is_integral(mx.add(embedding(o), ambient_r))
                ),
                None,
            )
        offset = glue[key]
        if offset is None:
            continue
        norm_r = r_lattice.norm(r_r)
        pairing = 1 - Fraction(r_lattice.inner(r_r, weyl_r))
        parts = source.vectors_with_norm_and_pairing(
            h, -2 - norm_r, pairing, offset=offset
        )
        for r_s in parts:
            root = mx.vector(mx.add(embedding(r_s), ambient_r))
            v = source.primitive_dual(r_s)
            found.setdefault(v, root)
    logger.info("%s: %d distinct projections of roots", source.name, len(found))
    return found


def induced_chamber(embedding, weyl=None, name=None):
    weyl = mx.vector(weyl or w26())
    projections = induced_walls(embedding, weyl)
    h = embedding.orthogonal_projection(weyl)
    name = name or embedding.source.name
    chamber = Chamber(embedding.source, projections, h, name=name)
    induced = InducedChamber(
        embedding, weyl, chamber, {v: projections[v] for v in chamber.walls}
    )
    induced.check_witnesses()
    return induced


def verify_adjacent(chamber, v, g):
    """
    Whether ``g`` maps ``chamber`` to the chamber adjacent to it across the
    wall ``v^⊥``: ``v^g = -v`` and ``⟨h^g, u⟩ > 0`` for every other wall ``u``.
    """
    v = mx.vector(v)
    if v not in chamber.walls:
        raise ChamberError(f"{v} is not a wall of {chamber}.")
    if g(v) != mx.neg(v):
        return False
    lattice = chamber.lattice
    hg = g(chamber.interior_point)
    return all(lattice.inner(hg, u) > 0 for u in chamber.walls if u != v)


def checks():
    """Checks on the constant data for ``L10``, the Leech lattice and ``L26``."""
    expected = data.expected()["data"]
    yield Check("Leech determinant", expected["leech_determinant"], leech().det)
    negative = leech().signature is Signature.NEGATIVE_DEFINITE
    yield Check("Leech is negative definite", True, negative)
    yield Check("Leech has no roots", [], leech().enumerate_negdef(-2))
    yield Check("L26 is unimodular", 1, abs(l26().det))
    yield Check("⟨w10, w10⟩", expected["w10_norm"], l10().norm(w10()))
    yield Check(
        "roots r with ⟨r, w10⟩ = 1", sorted(vinberg_roots()), check_vinberg_chamber()
    )
