import os
from unittest import TestCase, skipUnless

from django.test import override_settings

from borcherds import conway, data
from borcherds import matrices as mx
from borcherds.checks import format_table
from borcherds.conf import settings
from borcherds.enriques import curves as curve_tools
from borcherds.enriques import (
    EnriquesSurface,
    FaceClassification,
    Method,
    Relation,
    elliptic_fibrations,
    rational_curves,
    rdp_configurations,
    vinberg_count,
    witnesses,
)
from borcherds.enriques.fibrations import (
    fiber_degree,
    fibration,
    required_degree,
    table,
)
from borcherds.enriques.surface import intersection
from borcherds.enriques.vinberg import first_center, sigma_walls
from borcherds.exceptions import ChamberError, InvariantError
from borcherds.hessian import A, bar
from borcherds.lattice import PrimitiveEmbedding

SLOW = os.environ.get("BORCHERDS_SLOW_TESTS") == "1"


class SurfaceTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.surface = EnriquesSurface.load()

    def test_h_Y(self):
        surface = self.surface
        self.assertEqual(surface.lattice.norm(surface.h_Y), 10)
        self.assertEqual(
            surface.h_Y, mx.vector(mx.vector_sum(surface.outer_walls.values(), 10))
        )

    def test_wall_pairings(self):
        surface = self.surface
        lattice, u, v = surface.lattice, surface.outer_walls, surface.inner_walls
        for a in A:
            self.assertEqual(lattice.inner(u[a], surface.h_Y), 1)
            self.assertEqual(lattice.inner(v[a], surface.h_Y), 2)
            for b in A:
                with self.subTest(a=a, b=b):
                    k = intersection(a, b)
                    self.assertEqual(lattice.inner(u[a], u[b]), {3: -2, 1: 1}.get(k, 0))
                    self.assertEqual(lattice.inner(v[a], v[b]), {3: -2, 2: 1}.get(k, 0))
                    self.assertEqual(lattice.inner(u[a], v[b]), 2 if a == b else 0)

    def test_generators_are_involutions(self):
        surface = self.surface
        for alpha, g in surface.generators.items():
            with self.subTest(alpha=alpha):
                self.assertTrue((g @ g).is_identity())
                self.assertEqual(surface.eigenvalue_one_multiplicity(g), 6)

    def test_reflections(self):
        surface = self.surface
        k3 = surface.k3
        for alpha, s in surface.reflections.items():
            lifted = k3.sigma(f"E{alpha}") @ k3.sigma(f"L{bar(alpha)}")
            self.assertEqual(surface.restrict(lifted), s)

    def test_restrict_requires_commuting_with_the_involution(self):
        surface = self.surface
        with self.assertRaises(InvariantError):
            surface.restrict(surface.k3.sigma("E123"))

    def test_element(self):
        surface = self.surface
        g = surface.generators
        self.assertTrue(surface.element(()).is_identity())
        self.assertEqual(surface.element(("123", "124")), g["123"] @ g["124"])
        self.assertTrue(surface.element(("345", "345")).is_identity())
        self.assertEqual(surface.neighbour("123", g["124"]), g["123"] @ g["124"])

    def test_aut_DY(self):
        surface = self.surface
        aut = surface.aut_DY
        self.assertEqual(len(set(aut)), 120)
        outer = sorted(surface.outer_walls.values())
        inner = sorted(surface.inner_walls.values())
        for g in aut:
            self.assertEqual(g(surface.h_Y), surface.h_Y)
            self.assertEqual(sorted(g(x) for x in outer), outer)
            self.assertEqual(sorted(g(x) for x in inner), inner)


class CurveTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.surface = EnriquesSurface.load()
        cls.curves = curve_tools.sieve(cls.surface, 9)

    def test_sieve(self):
        self.assertEqual(curve_tools.counts(self.curves), {1: 10, 5: 10, 9: 60})
        self.assertEqual(sorted(self.curves), list(range(1, 10)))
        self.assertEqual(self.curves[1], sorted(self.surface.outer_walls.values()))

    def test_curves_are_roots(self):
        lattice, h = self.surface.lattice, self.surface.h_Y
        for d, rs in self.curves.items():
            for r in rs:
                self.assertEqual(lattice.norm(r), -2)
                self.assertEqual(lattice.inner(r, h), d)

    def test_chamber_walk_agrees(self):
        self.assertEqual(curve_tools.chamber_walk(self.surface, 9), self.curves)

    def test_chamber_walk_cap(self):
        with self.assertRaises(InvariantError):
            curve_tools.chamber_walk(self.surface, 9, cap=1)

    def test_invariant_under_aut_DY(self):
        self.assertTrue(curve_tools.is_invariant(self.curves, self.surface.aut_DY))

    def test_curves_up_to(self):
        self.assertEqual(len(curve_tools.curves_up_to(self.curves, 5)), 20)
        self.assertEqual(len(curve_tools.curves_up_to(self.curves, 9)), 80)

    def test_method_selection(self):
        with override_settings(BORCHERDS_CURVE_SIEVE_DEGREE=5):
            self.assertEqual(
                rational_curves(self.surface, 5), curve_tools.sieve(self.surface, 5)
            )
        self.assertEqual(
            rational_curves(self.surface, 5, method=Method.CHAMBERS),
            curve_tools.chamber_walk(self.surface, 5),
        )
        self.assertEqual(
            rational_curves(self.surface, 5, method="sieve"),
            curve_tools.sieve(self.surface, 5),
        )


@skipUnless(SLOW, "Set BORCHERDS_SLOW_TESTS=1 to find curves of large degree.")
class CurveTableTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.surface = EnriquesSurface.load()

    def test_methods_agree_up_to_the_sieve_bound(self):
        d_max = settings.CURVE_SIEVE_DEGREE
        self.assertEqual(d_max, 13)
        self.assertEqual(
            curve_tools.chamber_walk(self.surface, d_max),
            curve_tools.sieve(self.surface, d_max),
        )

    def test_counts_up_to_degree_45(self):
        curves = rational_curves(self.surface, 45)
        expected = {int(d): n for d, n in data.expected()["curves"].items()}
        self.assertEqual(curve_tools.counts(curves), expected)
        self.assertEqual([d for d, rs in curves.items() if rs and d % 4 != 1], [])
        self.assertTrue(curve_tools.is_invariant(curves, self.surface.aut_DY))


class FibrationTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.surface = EnriquesSurface.load()
        cls.f = data.enriques()["fibration_f"]

    def test_fiber_degree(self):
        self.assertEqual(fiber_degree(self.surface, self.f), 12)

    def test_fibration_needs_curves(self):
        curves = curve_tools.sieve(self.surface, 5)
        with self.assertRaises(InvariantError):
            fibration(self.surface, self.f, curves)

    def test_fibration(self):
        surface = self.surface
        curves = curve_tools.sieve(surface, 11)
        result = fibration(surface, self.f, curves)
        self.assertEqual(result.degree, 12)
        self.assertTrue(result.fibers)
        for fiber in result.fibers:
            self.assertIn(fiber.degree, (6, 12))
            self.assertEqual(fiber.multiple, fiber.degree == 6)
            self.assertTrue(
                all(surface.lattice.inner(r, self.f) == 0 for r in fiber.curves)
            )

    def test_table(self):
        class Stub:
            def __init__(self, signature):
                self.signature = signature

        rows = table([Stub(("E6", "")), Stub(("", "A4")), Stub(("E6", ""))])
        self.assertEqual(rows, [("", "A4", 1), ("E6", "", 2)])


class VinbergTests(TestCase):
    def test_sigma_walls(self):
        self.assertEqual(len(sigma_walls()), 120)

    def test_first_center_is_h_Y(self):
        surface = EnriquesSurface.load()
        self.assertEqual(first_center(), surface.h_Y)


class RelationTests(TestCase):
    def test_kind(self):
        self.assertEqual(Relation((), ("123", "123")).kind, "square")
        self.assertEqual(Relation((0, 1), ("123", "145") * 2).kind, "commuting")
        self.assertEqual(Relation((0, 1), ("123", "124") * 3).kind, "hexagon")
        self.assertEqual(Relation((0, 1), ("123",) * 8).kind, "length 8")


@skipUnless(SLOW, "Set BORCHERDS_SLOW_TESTS=1 to compute D_X and D_Y.")
class ChamberTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.surface = EnriquesSurface.load()
        cls.classification = FaceClassification(cls.surface)
        cls.expected = data.expected()

    def test_checks(self):
        failed = [check for check in self.surface.checks() if not check.passed]
        self.assertEqual(failed, [], format_table(failed))

    def test_locate(self):
        surface = self.surface
        self.assertIs(surface.locate(surface.h_Y), surface.chamber.faces.top)
        with self.assertRaises(InvariantError):
            surface.locate(mx.neg(surface.h_Y))

    def test_face_table(self):
        rows = self.classification.table()
        faces = self.expected["faces"]
        for key in ("outer", "inner", "outer_classes", "inner_classes"):
            with self.subTest(key=key):
                self.assertEqual([rows[dim][key] for dim in range(1, 10)], faces[key])
        self.assertEqual(len(self.classification.ideal_faces()), faces["ideal"])

    def test_witnesses(self):
        self.classification.verify_witnesses()

    def test_wall_classes_cover_the_walls(self):
        members = [
            active
            for cls in self.classification.classes[9]
            for active in cls.members
        ]
        walls = range(len(self.surface.chamber.walls))
        self.assertEqual(len(members), 20)
        self.assertEqual(set(members), {frozenset([i]) for i in walls})
        for cls in self.classification.classes[9]:
            self.assertEqual(cls.members[0], cls.representative.active)

    def test_induced_from_l26(self):
        surface = self.surface
        plus, embedding = surface.plus, surface.k3.embedding
        composite = PrimitiveEmbedding(
            plus.source, embedding.target, mx.matmul(plus.matrix, embedding.matrix)
        )
        complement = composite.orthogonal_complement.lattice
        self.assertEqual(complement.rank, 16)
        roots = complement.enumerate_negdef(-2)
        self.assertTrue(roots)
        self.assertTrue(all(complement.norm(r) == -2 for r in roots))
        induced = conway.induced_chamber(composite, name="D_Y")
        self.assertEqual(induced.interior_point, surface.h_Y)
        self.assertEqual(
            sorted(mx.primitive(v) for v in induced.walls),
            sorted(mx.primitive(v) for v in surface.chamber.walls),
        )

    def test_fibrations(self):
        surface, classification = self.surface, self.classification
        degree = required_degree(surface, classification)
        curves = rational_curves(surface, degree)
        fibrations = elliptic_fibrations(surface, classification, curves)
        expected = self.expected["fibrations"]
        self.assertEqual(len(fibrations), expected["classes"])
        self.assertEqual(sum(f.class_size for f in fibrations), expected["ideal_faces"])
        self.assertEqual(
            table(fibrations),
            [(row["full"], row["half"], row["count"]) for row in expected["table"]],
        )

    def test_rdp_configurations(self):
        counts = rdp_configurations(self.classification)
        self.assertEqual(sum(counts.values()), self.expected["rdp"]["total"])
        self.assertEqual(counts, self.expected["rdp"]["table"])

    def test_relations(self):
        relations = self.classification.relations()
        kinds = [relation.kind for relation in relations]
        expected = self.expected["relations"]
        self.assertEqual(kinds.count("square"), expected["squares"])
        self.assertEqual(kinds.count("hexagon"), expected["hexagons"])
        self.assertEqual(kinds.count("commuting"), expected["commuting"])
        surface = self.surface
        for relation in relations:
            self.assertTrue(surface.element(relation.word).is_identity())

    def face(self, *labels):
        """The face of ``D_Y`` whose active walls are exactly ``labels``."""
        index = {label: i for i, label in self.surface.wall_labels.items()}
        return self.classification.faces[[index[label] for label in labels]]

    def test_group_around_a_wall(self):
        surface = self.surface
        inner = self.face(("v", "123"))
        group = self.classification.group_around(inner)
        self.assertEqual(set(group), {surface.identity, surface.generators["123"]})
        self.assertEqual(self.classification.curves_through(inner), ())
        outer = self.face(("u", "123"))
        self.assertEqual(
            list(self.classification.group_around(outer)), [surface.identity]
        )
        self.assertEqual(
            self.classification.curves_through(outer), (surface.outer_walls["123"],)
        )

    def test_group_around_inner_faces_of_dimension_8(self):
        # |α ∩ α′| = 1 gives a square of chambers, |α ∩ α′| = 2 a hexagon.
        for other, order in (("145", 4), ("124", 6)):
            with self.subTest(other=other):
                face = self.face(("v", "123"), ("v", other))
                self.assertEqual(face.dim, 8)
                group = self.classification.group_around(face)
                self.assertEqual(len(group), order)
                for g, word in group.items():
                    self.assertEqual(self.surface.element(word), g)

    def test_group_around_an_ideal_face(self):
        face = self.classification.ideal_faces()[0]
        with self.assertRaises(ChamberError):
            self.classification.group_around(face)

    def test_lattice_witnesses(self):
        curves = curve_tools.sieve(self.surface, 5)
        checks = witnesses.checks(self.surface, curves)
        failed = [check for check in checks if not check.passed]
        self.assertEqual(failed, [], format_table(failed))

    def test_vinberg_count(self):
        result = vinberg_count(self.surface)
        self.assertEqual(result.total, self.expected["vinberg_count"])
