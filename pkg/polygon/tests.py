from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from polygon.surface import (
    build_surface,
    cell_orbits,
    oracle_total_valency,
    surface_dump,
)
from valency.calculus import hnp, power
from valency.codec import parse_text


class BuildSurfaceTests(SimpleTestCase):
    def test_genus_examples(self):
        self.assertEqual(build_surface(8, 1).genus, 3)
        self.assertEqual(build_surface(4, 1).genus, 1)
        sphere = build_surface(6, 5)
        self.assertEqual(sphere.euler_characteristic, 2)
        self.assertEqual(sphere.genus, 0)

    def test_pairing_is_fixed_point_free_involution(self):
        s = build_surface(12, 2)
        for slot, other in enumerate(s.edge_pairing):
            self.assertNotEqual(slot, other)
            self.assertEqual(s.edge_pairing[other], slot)
        # alpha slots pair with beta slots
        self.assertTrue(all(s.edge_pairing[2 * i + 1] % 2 == 0 for i in range(12)))

    def test_corner_cycles_partition_corners(self):
        s = build_surface(4, 1)
        corners = sorted(c for cycle in s.corner_cycles for c in cycle)
        self.assertEqual(corners, list(range(8)))
        self.assertEqual(sorted(len(c) for c in s.corner_cycles), [2, 2, 4])

    def test_rejects_invalid_arguments(self):
        for n, p in [(2, 1), (5, 0), (5, 5)]:
            with self.assertRaises(ValidationError) as ctx:
                build_surface(n, p)
            self.assertEqual(ctx.exception.code, "range")


class OracleTests(SimpleTestCase):
    def test_h8_1(self):
        self.assertEqual(str(oracle_total_valency(build_surface(8, 1), 1)), "[3,8; 1/8 + 1/8 + 3/4]")

    def test_h6_3_square(self):
        self.assertEqual(oracle_total_valency(build_surface(6, 3), 2), parse_text("[1,3; 1/3×3]"))

    def test_h8_1_cube_matches_power(self):
        self.assertEqual(oracle_total_valency(build_surface(8, 1), 3), power(hnp(8, 1), 3))

    def test_exponent_range(self):
        s = build_surface(5, 1)
        for k in (0, 5, -1):
            with self.assertRaises(ValidationError) as ctx:
                oracle_total_valency(s, k)
            self.assertEqual(ctx.exception.code, "exponent")

    def test_cell_orbits_cover_every_cell(self):
        s = build_surface(8, 1)
        orbits = cell_orbits(s, 2)
        order = 4
        vertices = sum(o.period for o in orbits if o.kind == "vertex")
        edges = sum(o.period for o in orbits if o.kind == "edge")
        self.assertEqual(vertices, s.vertex_count)
        self.assertEqual(edges, s.n)
        self.assertTrue(all(o.period * o.isotropy == order for o in orbits))
        self.assertTrue(all(o.is_free for o in orbits if o.kind == "edge"))

    def test_dump_is_json_friendly(self):
        dump = surface_dump(build_surface(4, 1), k=1)
        self.assertEqual(dump["genus"], 1)
        self.assertEqual(len(dump["edge_pairing"]), 8)
        self.assertEqual(dump["orbits"][0], {"cell": "center", "period": 1, "isotropy": 4, "valency": "1/4"})
        self.assertNotIn("orbits", surface_dump(build_surface(4, 1)))
