from unittest import TestCase

from borcherds import conway
from borcherds import matrices as mx
from borcherds.exceptions import LatticeError
from borcherds.lattice import IntegerLattice, PrimitiveEmbedding, Signature


class VinbergChamberTests(TestCase):
    def test_l10_is_even_unimodular_hyperbolic(self):
        lattice = conway.l10()
        self.assertEqual(abs(lattice.det), 1)
        self.assertIs(lattice.signature, Signature.HYPERBOLIC)

    def test_vinberg_roots(self):
        lattice = conway.l10()
        roots = conway.vinberg_roots()
        self.assertEqual(len(roots), 10)
        self.assertTrue(all(lattice.norm(r) == -2 for r in roots))
        self.assertTrue(all(lattice.inner(r, conway.w10()) == 1 for r in roots))

    def test_check_vinberg_chamber(self):
        self.assertEqual(
            sorted(conway.check_vinberg_chamber()), sorted(conway.vinberg_roots())
        )

    def test_w10_norm(self):
        self.assertEqual(conway.l10().norm(conway.w10()), 1240)


class ConwayChamberTests(TestCase):
    def test_leech_lattice(self):
        leech = conway.leech()
        self.assertEqual(leech.det, 1)
        self.assertIs(leech.signature, Signature.NEGATIVE_DEFINITE)
        self.assertTrue(all(leech.gram[i][i] <= -4 for i in range(24)))

    def test_l26(self):
        lattice = conway.l26()
        self.assertEqual(lattice.rank, 26)
        self.assertEqual(abs(lattice.det), 1)
        self.assertEqual(lattice.norm(conway.w26()), 0)

    def test_leech_roots(self):
        lattice = conway.l26()
        for lam in (mx.zero(24), mx.identity(24)[0], mx.identity(24)[5]):
            with self.subTest(lam=lam):
                r = conway.leech_root(lam)
                self.assertEqual(lattice.norm(r), -2)
                self.assertEqual(lattice.inner(r, conway.w26()), 1)

    def test_leech_root_of_a_non_vector(self):
        with self.assertRaises(LatticeError):
            conway.leech_root((1,) * 23)

    def test_complement_without_roots(self):
        hyperbolic_plane = IntegerLattice([[0, 1], [1, 0]], name="U")
        embedding = PrimitiveEmbedding(
            hyperbolic_plane, conway.l26(), mx.identity(26)[:2]
        )
        with self.assertRaises(LatticeError):
            conway.induced_walls(embedding)
