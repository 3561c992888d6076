"""
Chambers in the positive cone of a hyperbolic lattice and their faces.

A chamber is cut out by finitely many dual vectors ``v`` through the
half-spaces ``⟨v, x⟩ >= 0``. Walls are found by exact linear programming,
and faces of every dimension by descending induction from the walls. A face
is identified by its saturated active set: the indices of all walls whose
hyperplane contains it.
"""

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from borcherds import matrices as mx
from borcherds.conf import settings
from borcherds.exceptions import ChamberError, LatticeError
from borcherds.lattice import IntegerLattice
from borcherds.simplex import check_distinct, wall_direction

logger = logging.getLogger(__name__)


class Position(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "on-boundary"
    OUTSIDE = "outside"


def projected_point(lattice, x, v):
    """The point ``x - (⟨x, v⟩/⟨v, v⟩)·v`` of the hyperplane ``v^⊥``, or ``None``."""
    vv = lattice.norm(v)
    if not vv:
        return None
    return mx.vector(mx.sub(x, mx.scale(Fraction(lattice.inner(x, v)) / vv, v)))


_worker_forms = None


def _init_worker(forms):
    global _worker_forms
    _worker_forms = forms


def _is_wall(task):
    index, order = task
    return index, wall_direction(_worker_forms, index, order) is not None


class Chamber:
    def __init__(self, lattice, defining, interior_point, name=None):
        self.lattice = lattice
        self.name = name or "chamber"
        self.interior_point = mx.vector(interior_point)
        if lattice.norm(self.interior_point) <= 0:
            raise ChamberError(
                f"The interior point of {self.name} has nonpositive norm."
            )
        canonical = set()
        for v in defining:
            try:
                canonical.add(lattice.primitive_dual(v))
            except LatticeError:
                raise ChamberError(f"{self.name} has a zero defining vector.")
        self.defining = tuple(sorted(canonical))
        for v in self.defining:
            if lattice.inner(v, self.interior_point) <= 0:
                raise ChamberError(
                    f"The interior point of {self.name} is not strictly inside {v}^⊥."
                )

    def __repr__(self):
        return f"<Chamber {self.name} with {len(self.defining)} defining vectors>"

    @cached_property
    def walls(self):
        return walls_of(self)

    @cached_property
    def faces(self):
        return FaceLattice(self)

    def pairings(self, x):
        return tuple(self.lattice.inner(v, x) for v in self.walls)

    def as_dict(self):
        return {
            "name": self.name,
            "gram": [list(row) for row in self.lattice.gram],
            "interior_point": encode_vector(self.interior_point),
            "walls": [encode_vector(v) for v in self.walls],
        }

    @classmethod
    def from_dict(cls, data):
        lattice = IntegerLattice(data["gram"])
        walls = [decode_vector(v) for v in data["walls"]]
        point = decode_vector(data["interior_point"])
        chamber = cls(lattice, walls, point, data.get("name"))
        chamber.__dict__["walls"] = chamber.defining
        return chamber


def encode_vector(v):
    """Rational entries as ``[numerator, denominator]`` pairs."""
    return [[Fraction(x).numerator, Fraction(x).denominator] for x in v]


def decode_vector(pairs):
    return mx.vector(Fraction(n, d) for n, d in pairs)


def walls_of(chamber, jobs=None):
    """The primitive defining vectors of the walls of ``chamber``, sorted."""
    lattice = chamber.lattice
    defining = chamber.defining
    forms = [lattice.functional(v) for v in defining]
    check_distinct(forms)
    h = chamber.interior_point
    walls, undecided = set(), []
    for index, v in enumerate(defining):
        y = projected_point(lattice, h, v)
        if y is None:
            undecided.append((index, None))
            continue
        values = [mx.dot(f, y) for f in forms]
        if all(x > 0 for i, x in enumerate(values) if i != index):
            walls.add(index)
        else:
            others = (i for i in range(len(forms)) if i != index)
            order = sorted(others, key=lambda i: values[i])
            undecided.append((index, order))
    logger.info(
        "%s: %d of %d candidates certified directly, %d need linear programming",
        chamber.name, len(walls), len(defining), len(undecided),
    )
    jobs = settings.JOBS if jobs is None else jobs
    if jobs > 1 and len(undecided) > 1:
        with ProcessPoolExecutor(
            jobs, initializer=_init_worker, initargs=(forms,)
        ) as pool:
            results = list(pool.map(_is_wall, undecided, chunksize=8))
    else:
        results = [
            (i, wall_direction(forms, i, order) is not None) for i, order in undecided
        ]
    walls.update(i for i, is_wall in results if is_wall)
    return tuple(defining[i] for i in sorted(walls))


def classify_point(chamber, x):
    """``(Position, active)`` for a point ``x`` with ``⟨x, x⟩ >= 0``."""
    values = chamber.pairings(x)
    if any(value < 0 for value in values):
        return Position.OUTSIDE, frozenset()
    active = frozenset(i for i, value in enumerate(values) if value == 0)
    if active:
        return Position.BOUNDARY, active
    return Position.INTERIOR, active


@dataclass(eq=False)
class Face:
    dim: int
    active: frozenset
    point: tuple
    span: tuple
    parents: set = field(default_factory=set)
    ideal: bool = False

    @property
    def key(self):
        return tuple(sorted(self.active))

    @property
    def ray(self):
        """The primitive integral vector on a 1-dimensional face."""
        if self.dim != 1:
            raise ChamberError(f"A face of dimension {self.dim} has no ray.")
        return mx.primitive(self.point)

    def __repr__(self):
        return f"<Face dim={self.dim} active={self.key}>"


class FaceLattice:
    """All faces of a chamber, computed by descending induction on the dimension."""

    def __init__(self, chamber):
        self.chamber = chamber
        self.lattice = chamber.lattice
        self.walls = chamber.walls
        self.forms = [self.lattice.functional(v) for v in self.walls]
        n = self.lattice.rank
        self.top = Face(n, frozenset(), chamber.interior_point, mx.identity(n))
        self.by_key = {}
        self.by_dim = {n: [self.top]}
        self._rejected = set()
        self.build()

    def build(self):
        level = [self.top]
        for dim in range(self.lattice.rank - 1, 0, -1):
            found = {}
            for face in level:
                for child in self._children(face, found):
                    found[child.active] = child
            level = sorted(found.values(), key=lambda face: face.key)
            self.by_dim[dim] = level
            self.by_key.update((face.active, face) for face in level)
            logger.info(
                "%s: %d faces of dimension %d", self.chamber.name, len(level), dim
            )

    def faces(self, dim):
        return self.by_dim.get(dim, [])

    def __getitem__(self, active):
        return self.by_key[frozenset(active)]

    def _children(self, face, found):
        groups = {}
        for i, form in enumerate(self.forms):
            if i in face.active:
                continue
            restricted = tuple(mx.dot(row, form) for row in face.span)
            if not any(restricted):
                raise ChamberError(f"Wall {i} vanishes on {face} but is not active.")
            groups.setdefault(mx.primitive(restricted), []).append(i)
        for key in groups:
            if tuple(-x for x in key) in groups:
                raise ChamberError(f"{face} lies in opposite half-spaces of two walls.")
        forms = sorted(groups)
        representatives = [self.walls[groups[key][0]] for key in forms]
        inverse = self._restricted_inverse(face)
        children = []
        for index, key in enumerate(forms):
            active = face.active | frozenset(groups[key])
            if active in found:
                found[active].parents.add(face.active)
                continue
            if active in self._rejected:
                continue
            point = self._facet_point(face, index, forms, representatives, inverse)
            if point is None:
                self._rejected.add(active)
                continue
            child = self._make_face(face.dim - 1, active, point)
            child.parents.add(face.active)
            found[active] = child
            children.append(child)
        return children

    def _restricted_inverse(self, face):
        span = face.span
        gram = mx.matmul(mx.matmul(span, self.lattice.gram), mx.transpose(span))
        if not mx.determinant(gram):
            return None
        return mx.inverse(gram)

    def _facet_point(self, face, index, forms, representatives, inverse):
        """A relative-interior point of ``face ∩ v^⊥`` when that is a facet."""
        lattice = self.lattice
        x = face.point
        v = representatives[index]
        xv = Fraction(lattice.inner(x, v))
        order = None
        if inverse is not None:
            # w is a positive multiple of the projection of v to the span of the face.
            w = mx.vecmat(mx.vecmat(forms[index], inverse), face.span)
            wv = lattice.inner(w, v)
            if wv:
                y = mx.vector(mx.sub(x, mx.scale(xv / wv, w)))
                pairings = [lattice.inner(u, y) for u in representatives]
                if all(p > 0 for j, p in enumerate(pairings) if j != index):
                    return y
                others = (j for j in range(len(forms)) if j != index)
                order = sorted(others, key=lambda j: pairings[j])
        d = wall_direction(forms, index, order)
        if d is None:
            return None
        direction = mx.vecmat(d, face.span)
        t = xv / -Fraction(lattice.inner(direction, v))
        return mx.vector(mx.add(x, mx.scale(t, direction)))

    def _make_face(self, dim, active, point):
        saturated = frozenset(
            i for i, f in enumerate(self.forms) if not mx.dot(f, point)
        )
        if saturated != active:
            raise ChamberError(
                f"Face with active walls {sorted(active)} has a point on walls "
                f"{sorted(saturated - active)} as well."
            )
        span = mx.left_kernel(mx.transpose([self.forms[i] for i in sorted(active)]))
        if len(span) != dim:
            raise ChamberError(
                f"Face with active walls {sorted(active)} spans {len(span)} "
                f"dimensions, not {dim}."
            )
        if dim == 1:
            span = (mx.primitive(point),)
        ideal = dim == 1 and self.lattice.norm(point) == 0
        return Face(dim, active, point, span, ideal=ideal)

    def as_dict(self):
        return {
            str(dim): [
                {"active": list(face.key), "ideal": face.ideal}
                for face in self.faces(dim)
            ]
            for dim in sorted(self.by_dim)
            if dim < self.lattice.rank
        }


def faces_of(chamber, dim):
    """The faces of ``chamber`` of dimension ``dim``, sorted by active set."""
    if not 1 <= dim < chamber.lattice.rank:
        raise ChamberError(
            f"Faces have dimension 1..{chamber.lattice.rank - 1}, not {dim}."
        )
    return chamber.faces.faces(dim)
