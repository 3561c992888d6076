import os
from fractions import Fraction
from unittest import TestCase, skipUnless

from borcherds import conway
from borcherds import matrices as mx
from borcherds.checks import format_table
from borcherds.dynkin import ade_type
from borcherds.exceptions import ChamberError, InvariantError
from borcherds.hessian import (
    A,
    B,
    HessianK3,
    WallType,
    bar,
    incidence,
    is_root_multiple,
    permute,
    switch,
)

SLOW = os.environ.get("BORCHERDS_SLOW_TESTS") == "1"


class LabelTests(TestCase):
    def test_index_sets(self):
        self.assertEqual(len(A), 10)
        self.assertEqual(len(B), 10)
        self.assertEqual(bar("123"), "45")
        self.assertEqual(bar("45"), "123")

    def test_incidence(self):
        self.assertEqual(incidence("E123", "E123"), -2)
        self.assertEqual(incidence("E123", "E124"), 0)
        self.assertEqual(incidence("E123", "L12"), 1)
        self.assertEqual(incidence("L45", "E123"), 0)
        self.assertEqual(incidence("L12", "L13"), 0)

    def test_permute_and_switch(self):
        sigma = dict(zip("12345", "21345"))
        self.assertEqual(permute("E134", sigma), "E234")
        self.assertEqual(permute("L12", sigma), "L12")
        self.assertEqual(switch("E123"), "L45")
        self.assertEqual(switch("L45"), "E123")

    def test_wall_types(self):
        self.assertIs(WallType.of(1, -2), WallType.A)
        self.assertIs(WallType.of(2, -1), WallType.B)
        self.assertIs(WallType.of(5, Fraction(-2, 3)), WallType.C)
        self.assertIs(WallType.of(4, Fraction(-2, 3)), WallType.D)
        self.assertTrue(WallType.A.outer)
        self.assertFalse(WallType.C.outer)
        with self.assertRaises(InvariantError):
            WallType.of(3, -2)

    def test_is_root_multiple(self):
        self.assertTrue(is_root_multiple(-2))
        self.assertTrue(is_root_multiple(Fraction(-1, 2)))
        self.assertFalse(is_root_multiple(-1))
        self.assertFalse(is_root_multiple(Fraction(-2, 3)))
        self.assertFalse(is_root_multiple(2))


class HessianLatticeTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.k3 = HessianK3.load()

    def test_lattice(self):
        lattice = self.k3.lattice
        self.assertEqual(lattice.rank, 16)
        self.assertEqual(lattice.det, -48)
        self.assertEqual(lattice.discriminant_group.order, 48)

    def test_classes(self):
        classes = self.k3.classes
        self.assertEqual(len(classes), 20)
        lattice = self.k3.lattice
        for a, x in classes.items():
            for b, y in classes.items():
                self.assertEqual(lattice.inner(x, y), incidence(a, b))

    def test_polarizations(self):
        k3 = self.k3
        lattice = k3.lattice
        self.assertEqual(lattice.norm(k3.h_Q), 4)
        self.assertEqual(lattice.norm(k3.h_X), 20)
        self.assertEqual(lattice.inner(k3.h_Q, k3.h_X), 10)
        self.assertEqual(k3.h_X, mx.vector(mx.vector_sum(k3.classes.values(), 16)))
        self.assertTrue(all(lattice.inner(k3.h_Q, k3.E(a)) == 0 for a in A))
        self.assertTrue(all(lattice.inner(k3.h_Q, k3.L(b)) == 1 for b in B))

    def test_no_roots_separate_the_polarizations(self):
        self.assertEqual(self.k3.lattice.separating_roots(self.k3.h_Q, self.k3.h_X), [])

    def test_aut_DX(self):
        aut = self.k3.aut_DX
        self.assertEqual(len(set(aut)), 240)
        plus_minus = [g for g in aut if g.is_plus_minus_identity()]
        self.assertEqual(len(plus_minus), 2)
        self.assertIn(self.k3.enriques_involution, plus_minus)

    def test_enriques_involution(self):
        g = self.k3.enriques_involution
        self.assertTrue((g @ g).is_identity())
        self.assertEqual(g(self.k3.E("123")), self.k3.L("45"))
        self.assertEqual(g(self.k3.h_X), self.k3.h_X)

    def test_anti_invariant_lattice(self):
        k3 = self.k3
        minus = k3.minus_lattice
        self.assertEqual(minus.rank, 6)
        vectors = k3.anti_invariant_roots()
        self.assertEqual(len(vectors), 72)
        g = k3.enriques_involution
        self.assertTrue(all(g(t) == mx.neg(t) for t in vectors))
        self.assertTrue(all(k3.lattice.norm(t) == -4 for t in vectors))

    def test_plus_embedding(self):
        plus = self.k3.plus_embedding
        g = self.k3.enriques_involution
        self.assertTrue(all(g(row) == row for row in plus.matrix))
        self.assertEqual(plus.source.rank, 10)

    def test_v_alpha(self):
        k3 = self.k3
        lattice = k3.lattice
        for alpha in A:
            with self.subTest(alpha=alpha):
                v = k3.v_alpha(alpha)
                self.assertEqual(lattice.inner(v, k3.h_X), 2)
                self.assertEqual(lattice.norm(v), -1)
                self.assertEqual(lattice.inner(v, k3.E(alpha)), 1)

    def test_g_alpha(self):
        k3 = self.k3
        g_e = k3.enriques_involution
        for alpha, g in k3.g_alphas.items():
            with self.subTest(alpha=alpha):
                self.assertTrue((g @ g).is_identity())
                self.assertEqual(g @ g_e, g_e @ g)
                self.assertTrue(g.is_plus_minus_identity())

    def test_contracted_curves(self):
        k3 = self.k3
        self.assertEqual(ade_type(k3.lattice, k3.contracted_curves("123")), "3A3+3A1")

    def test_sigma_reflections(self):
        k3 = self.k3
        g_e = k3.enriques_involution
        sigma = k3.sigma_reflections()
        self.assertEqual(len(sigma), 20)
        for alpha in A:
            s = sigma[f"E{alpha}"] @ sigma[f"L{bar(alpha)}"]
            self.assertEqual(s @ g_e, g_e @ s)


@skipUnless(SLOW, "Set BORCHERDS_SLOW_TESTS=1 to compute D_X.")
class InducedChamberTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.k3 = HessianK3.load()

    def test_checks(self):
        checks = list(self.k3.checks())
        failed = [check for check in checks if not check.passed]
        self.assertEqual(failed, [], format_table(failed))

    def test_walls_by_type(self):
        walls = self.k3.walls_by_type()
        self.assertEqual(
            {kind: len(vs) for kind, vs in walls.items()},
            {WallType.A: 20, WallType.B: 10, WallType.C: 24, WallType.D: 30},
        )

    def test_verify_adjacent(self):
        k3 = self.k3
        v = k3.v_alpha("123")
        self.assertTrue(conway.verify_adjacent(k3.chamber, v, k3.g_alphas["123"]))
        self.assertFalse(conway.verify_adjacent(k3.chamber, v, k3.lattice.identity()))
        with self.assertRaises(ChamberError):
            conway.verify_adjacent(k3.chamber, k3.h_X, k3.g_alphas["123"])

    def test_adjacent_walls(self):
        k3 = self.k3
        g = k3.g_alphas["123"]
        self.assertEqual(k3.adjacent_walls(g), [k3.v_alpha("123")])
