"""
Testy walidacyjne klasyfikacji podniesień do nakrycia torusa.

Zawiera:
- Odtworzenie przypadków dla baz h_{4,1}, h_{6,3}, h_{3,1} (TC-LIFT-01 do TC-LIFT-04)
- Przegląd wszystkich baz i lokusów (TC-LIFT-05)
- Pełny raport klasyfikacji z kontrolą krzyżową (TC-THM-01 do TC-THM-03)
"""

from django.test import SimpleTestCase

from census.groups import group_key
from lifts.classifier import LiftProblem, LiftVerdict, base_orbits, candidate_branch_loci, classify_lift
from lifts.report import theorem1_report, torus_bases
from valency.calculus import hnp, power
from valency.codec import parse_text

UNITS_8 = (1, 3, 5, 7)
UNITS_12 = (1, 5, 7, 11)

REPORT_GOLDEN = [
    ("non-cyclic", 2, "⟨h_{6,1}, I⟩"),
    ("cyclic", 3, "⟨h_{8,1}⟩"),
    ("cyclic", 3, "⟨h_{8,5}⟩"),
    ("cyclic", 4, "⟨h_{12,2}⟩"),
    ("cyclic", 3, "⟨h_{12,3}⟩"),
]


def classify(base, labels):
    by_label = {o.label: o.index for o in base_orbits(base)}
    return classify_lift(LiftProblem(base, tuple(by_label[c] for c in labels)))


# =============================================================================
# ODTWORZENIE PRZYPADKÓW
# =============================================================================

class TestLiftCases(SimpleTestCase):

    def test_tc_lift_01_h4_1_tuples(self):
        """
        TC-LIFT-01: h_{4,1}, cały lokus rozgałęziony: krotki (k,k,3k) i (k,5k,k)
        """
        outcome = classify(hnp(4, 1), "xyz")
        self.assertEqual(outcome.indices, (8, 8, 4))
        first, second = outcome.groups
        self.assertEqual(set(first.tuples), {(k, k, 3 * k % 4) for k in UNITS_8})
        self.assertEqual(set(second.tuples), {(k, 5 * k % 8, k % 4) for k in UNITS_8})

    def test_tc_lift_02_h6_3_tuples(self):
        """
        TC-LIFT-02: h_{6,3}: lokus {x,z} daje ⟨h_{12,3}⟩, lokus {x,y,z} daje ⟨h_{12,2}⟩
        """
        (xz,) = classify(hnp(6, 3), "xz").groups
        self.assertEqual(set(xz.tuples), {(u, 2 * u % 3, u % 4) for u in UNITS_12})
        (xyz,) = classify(hnp(6, 3), "xyz").groups
        self.assertEqual(set(xyz.tuples), {(u, u % 6, 3 * u % 4) for u in UNITS_12})
        self.assertEqual(xyz.generator, parse_text("[4,12; 1/12 + 1/6 + 3/4]"))

    def test_tc_lift_03_eliminations(self):
        """
        TC-LIFT-03: trzy eliminacje: hipereliptyczność, Nielsen, g' = -1/2
        """
        hyperelliptic = classify(hnp(4, 1), "xy")
        self.assertEqual(hyperelliptic.audit[-1].rule, "power-projection")
        self.assertFalse(hyperelliptic.audit[-1].passed)

        nielsen = classify(hnp(4, 1), "z")
        self.assertEqual(nielsen.audit[-1].rule, "nielsen")
        self.assertFalse(nielsen.audit[-1].passed)

        rh = next(s for s in classify(hnp(6, 3), "y").audit if s.rule == "rh")
        self.assertIn("-1/2 rejected", rh.detail)

    def test_tc_lift_04_h3_1_is_square_of_h6_1(self):
        """
        TC-LIFT-04: h_{3,1}: każde podniesienie to h_{6,1}^2 w ⟨h_{6,1}, I⟩
        """
        for labels in ("xy", "xz", "yz"):
            outcome = classify(hnp(3, 1), labels)
            self.assertEqual(outcome.upstairs, power(hnp(6, 1), 2))
            self.assertFalse(outcome.companion.hyperelliptic)


# =============================================================================
# PRZEGLĄD WSZYSTKICH BAZ
# =============================================================================

class TestLiftSweep(SimpleTestCase):

    def test_tc_lift_05_every_locus_is_decided(self):
        """
        TC-LIFT-05: każdy lokus każdej bazy kończy się werdyktem innym niż UNSUPPORTED
        """
        for name, base in torus_bases():
            for locus in candidate_branch_loci(base):
                outcome = classify_lift(LiftProblem(base, locus))
                with self.subTest(base=name, locus=locus):
                    self.assertNotEqual(outcome.verdict, LiftVerdict.UNSUPPORTED)
                    self.assertEqual(outcome.audit[0].rule, "brodd")
                    if outcome.verdict is LiftVerdict.NO_LIFT:
                        self.assertFalse(outcome.audit[-1].passed)
                    else:
                        self.assertTrue(all(step.passed for step in outcome.audit))


# =============================================================================
# RAPORT KLASYFIKACJI
# =============================================================================

class TestTheoremReport(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.report = theorem1_report(companion_max_genus=10)

    def test_tc_thm_01_golden_rows(self):
        """
        TC-THM-01: dokładnie pięć grup w ustalonej kolejności
        """
        got = [(r.kind, r.genus, r.label) for r in self.report.rows]
        self.assertEqual(got, REPORT_GOLDEN)

    def test_tc_thm_02_cross_check(self):
        """
        TC-THM-02: każda grupa ma towarzyszącą inwolucję i odwrotnie
        """
        self.assertTrue(self.report.cross_check_passed)
        self.assertEqual(len(self.report.companions), 5)
        for row in self.report.rows:
            self.assertIsNotNone(row.companion)

    def test_tc_thm_03_sources_are_merged(self):
        """
        TC-THM-03: wiersz niecykliczny łączy h_{6,3} i h_{3,1}, wiersze cykliczne obie orientacje
        """
        non_cyclic = self.report.rows[0]
        self.assertIn("h_{6,3} {y}", non_cyclic.sources)
        self.assertIn("h_{3,1} {x,y}", non_cyclic.sources)
        self.assertIn(hnp(6, 1), non_cyclic.members)

        h81 = self.report.rows[1]
        self.assertEqual(h81.sources, ["h_{4,1} {x,y,z}", "h_{4,1}^-1 {x,y,z}"])
        self.assertEqual({group_key(m) for m in h81.members}, {group_key(h81.generator)})
