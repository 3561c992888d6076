import itertools
import random
from fractions import Fraction
from unittest import TestCase

from borcherds import matrices as mx
from borcherds.chambers import (
    Chamber,
    Position,
    classify_point,
    faces_of,
    walls_of,
)
from borcherds.exceptions import ChamberError
from borcherds.lattice import IntegerLattice

# ⟨x, y⟩ = 2x0y0 - 2x1y1 - 2x2y2
GRAM = [[2, 0, 0], [0, -2, 0], [0, 0, -2]]


def dual_of_form(f):
    """The dual vector v with ⟨v, x⟩ = f·x."""
    return (Fraction(f[0], 2), Fraction(-f[1], 2), Fraction(-f[2], 2))


def cross(f, g):
    return (
        f[1] * g[2] - f[2] * g[1],
        f[2] * g[0] - f[0] * g[2],
        f[0] * g[1] - f[1] * g[0],
    )


def brute_force(forms):
    """Extreme rays and facet-defining forms of a pointed 3-dimensional cone."""
    rays = set()
    for f, g in itertools.combinations(forms, 2):
        r = cross(f, g)
        if not any(r):
            continue
        for candidate in (r, mx.neg(r)):
            if all(mx.dot(h, candidate) >= 0 for h in forms):
                rays.add(mx.primitive(candidate))
    walls = {
        mx.primitive(f) for f in forms if sum(1 for r in rays if mx.dot(f, r) == 0) >= 2
    }
    return walls, rays


class SquareConeTests(TestCase):
    forms = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (2, 1, 1), (1, 0, 0)]

    def setUp(self):
        self.lattice = IntegerLattice(GRAM)
        self.chamber = Chamber(
            self.lattice,
            [dual_of_form(f) for f in self.forms],
            (1, 0, 0),
            name="square",
        )

    def test_walls(self):
        self.assertEqual(
            set(walls_of(self.chamber)), {dual_of_form(f) for f in self.forms[:4]}
        )
        for v in self.chamber.walls:
            self.assertGreater(self.lattice.inner(v, self.chamber.interior_point), 0)

    def test_walls_are_idempotent(self):
        again = Chamber(self.lattice, self.chamber.walls, (1, 0, 0))
        self.assertEqual(walls_of(again), self.chamber.walls)

    def test_faces(self):
        self.assertEqual(len(faces_of(self.chamber, 2)), 4)
        rays = faces_of(self.chamber, 1)
        self.assertEqual(
            {face.ray for face in rays},
            {(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)},
        )
        for face in rays:
            self.assertFalse(face.ideal)
            self.assertEqual(len(face.parents), 2)
            self.assertEqual(len(face.active), 2)
            for i in face.active:
                self.assertEqual(self.lattice.inner(self.chamber.walls[i], face.ray), 0)

    def test_face_dimension_bounds(self):
        with self.assertRaises(ChamberError):
            faces_of(self.chamber, 3)
        with self.assertRaises(ChamberError):
            faces_of(self.chamber, 0)

    def test_classify_point(self):
        self.assertEqual(
            classify_point(self.chamber, (1, 0, 0)), (Position.INTERIOR, frozenset())
        )
        wall = self.chamber.walls.index(dual_of_form((1, 1, 0)))
        self.assertEqual(
            classify_point(self.chamber, (1, -1, 0)),
            (Position.BOUNDARY, frozenset({wall})),
        )
        self.assertEqual(classify_point(self.chamber, (-1, 0, 0))[0], Position.OUTSIDE)

    def test_interior_point_must_be_inside(self):
        with self.assertRaises(ChamberError):
            Chamber(self.lattice, [dual_of_form((1, 1, 0))], (1, -2, 0))
        with self.assertRaises(ChamberError):
            Chamber(self.lattice, [(0, 0, 0)], (1, 0, 0))

    def test_round_trip_through_a_dict(self):
        chamber = Chamber.from_dict(self.chamber.as_dict())
        self.assertEqual(chamber.walls, self.chamber.walls)
        self.assertEqual(chamber.interior_point, (1, 0, 0))


class IdealConeTests(TestCase):
    def test_rays_on_the_null_cone(self):
        lattice = IntegerLattice(GRAM)
        forms = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]
        chamber = Chamber(lattice, [dual_of_form(f) for f in forms], (1, 0, 0))
        rays = faces_of(chamber, 1)
        self.assertEqual(
            {face.ray for face in rays}, {(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1)}
        )
        self.assertTrue(all(face.ideal for face in rays))


class RandomConeTests(TestCase):
    def test_against_brute_force(self):
        rng = random.Random(20240)
        lattice = IntegerLattice(GRAM)
        checked = 0
        while checked < 25:
            forms = set()
            for _ in range(rng.randint(3, 8)):
                a = rng.randint(3, 6)
                b = rng.randint(-2, 2)
                c = rng.randint(-2, 2)
                if abs(b) + abs(c) < a:
                    forms.add(mx.primitive((a, b, c)))
            forms = sorted(forms)
            if len(forms) < 3 or mx.rank(forms) < 3:
                continue
            walls, rays = brute_force(forms)
            shuffled = forms[:]
            rng.shuffle(shuffled)
            chamber = Chamber(lattice, [dual_of_form(f) for f in shuffled], (1, 0, 0))
            with self.subTest(forms=forms):
                self.assertEqual(
                    {mx.primitive(lattice.functional(v)) for v in chamber.walls}, walls
                )
                self.assertEqual({face.ray for face in faces_of(chamber, 1)}, rays)
                self.assertEqual(len(faces_of(chamber, 2)), len(walls))
            checked += 1
