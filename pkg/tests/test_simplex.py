import json
from unittest import TestCase

from borcherds import matrices as mx
from borcherds.conf import settings
from borcherds.exceptions import ChamberError
from borcherds.lattice import IntegerLattice
from borcherds.simplex import (
    SimplexTableau,
    Status,
    check_distinct,
    defines_wall,
    escaping_direction,
    wall_direction,
)


class SimplexTableauTests(TestCase):
    def test_bounded_problem(self):
        # maximize x + y with x <= 2, y <= 3, x + y <= 4
        tableau = SimplexTableau([[1, 0], [0, 1], [1, 1]], [2, 3, 4], [1, 1])
        self.assertIs(tableau.solve(), Status.OPTIMAL)
        solution = tableau.solution()
        self.assertEqual(solution[0] + solution[1], 4)

    def test_unbounded_problem(self):
        # maximize x with y - x <= 1
        tableau = SimplexTableau([[-1, 1]], [1], [1, 0])
        self.assertIs(tableau.solve(), Status.UNBOUNDED)
        ray = tableau.ray()
        self.assertGreater(ray[0], 0)
        self.assertLessEqual(ray[1] - ray[0], 0)

    def test_infeasible_origin(self):
        with self.assertRaises(ValueError):
            SimplexTableau([[1]], [-1], [1])

    def test_ray_requires_unbounded_problem(self):
        tableau = SimplexTableau([[1]], [1], [1])
        tableau.solve()
        with self.assertRaises(ValueError):
            tableau.ray()


class WallTests(TestCase):
    square = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (2, 1, 1), (1, 0, 0)]

    def test_escaping_direction(self):
        y = escaping_direction(self.square[1:], self.square[0])
        self.assertLess(mx.dot(self.square[0], y), 0)
        for f in self.square[1:]:
            self.assertGreaterEqual(mx.dot(f, y), 0)

    def test_square_cone(self):
        walls = [i for i in range(len(self.square)) if defines_wall(self.square, i)]
        self.assertEqual(walls, [0, 1, 2, 3])

    def test_wall_direction_certificate(self):
        self.assertIsNone(wall_direction(self.square, 5))
        y = wall_direction(self.square, 2, order=[5, 4, 3, 1, 0])
        self.assertLess(mx.dot(self.square[2], y), 0)

    def test_distinct_half_spaces(self):
        f, g = (1, 0, 1), (1, 1, 0)
        with self.assertRaises(ChamberError):
            check_distinct([f, (2, 0, 2), g])
        with self.assertRaises(ChamberError):
            defines_wall([f, (2, 0, 2), g], 0)
        with self.assertRaises(ChamberError):
            check_distinct([f, (0, 0, 0)])
        # Opposite forms cut different half-spaces.
        check_distinct([f, (-1, 0, -1)])

    def test_vinberg_roots_all_define_walls(self):
        data = json.loads((settings.DATA_DIR / "l10.json").read_text())
        lattice = IntegerLattice(data["gram"])
        roots = [mx.identity(10)[i] for i in range(2, 10)] + [data["e9"], data["e10"]]
        forms = [lattice.functional(r) for r in roots]
        self.assertTrue(all(defines_wall(forms, i) for i in range(10)))
