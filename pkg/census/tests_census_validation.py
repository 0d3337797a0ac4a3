"""
Testy walidacyjne spisu walencji.

Zawiera:
- Wyszukiwanie towarzyszących inwolucji dla 2 <= g <= 10 (TC-COMP-01, TC-COMP-02)
- Przegląd rodziny h_{4g+2,2g+1} dla g <= 50 (TC-SWEEP-01)
- Trychotomię centralizatora (TC-CENT-01, TC-CENT-02)
- Testy własności na losowej próbce spisu (TC-PROP-01 do TC-PROP-05)
- Warunki Nielsena i Harveya dla rodziny h_{n,p}, 3 <= n <= 60 (TC-HNP-01)
- Domknięcie spisu na potęgi względnie pierwsze (TC-CLOSE-01)
"""

import random
from math import gcd

from django.test import SimpleTestCase

from census.centralizer import CentralizerClass, centralizer_structure
from census.companions import lemma_inv_sweep, search_involution_companions
from census.enumeration import EnumerationQuery, enumerate_census
from census.groups import coprime_powers
from valency.calculus import (
    harvey_check,
    hnp,
    hnp_genus,
    inverse,
    is_involution_datum,
    nielsen_check,
    power,
    quotient_signature,
)
from valency.codec import parse_json, parse_text, render_json


COMPANION_GOLDEN = [
    (2, "[2,6; 1/6 + 1/6 + 2/3]"),
    (3, "[3,8; 1/8 + 1/8 + 3/4]"),
    (3, "[3,8; 1/8 + 5/8 + 1/4]"),
    (3, "[3,12; 1/12 + 1/4 + 2/3]"),
    (4, "[4,12; 1/12 + 1/6 + 3/4]"),
]

SAMPLE_SIZE = 1000


# =============================================================================
# TOWARZYSZĄCE INWOLUCJE
# =============================================================================

class TestInvolutionCompanions(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.records = search_involution_companions(2, 10)

    def test_tc_comp_01_golden_groups(self):
        """
        TC-COMP-01: dokładnie pięć grup, brak trafień dla 5 <= g <= 10
        """
        got = [(r.genus, str(r.generator)) for r in self.records]
        self.assertEqual(got, COMPANION_GOLDEN)
        self.assertFalse([r for r in self.records if r.genus >= 5])

    def test_tc_comp_02_records_are_consistent(self):
        """
        TC-COMP-02: f^{n/2} jest inwolucją z ilorazem torusem i 2g - 2 punktami stałymi
        """
        for r in self.records:
            self.assertEqual(r.involution, power(r.generator, r.generator.order // 2))
            self.assertEqual(quotient_signature(r.involution).quotient_genus, 1)
            self.assertEqual(r.involution.size, 2 * r.genus - 2)
            self.assertIn(r.generator, r.members)


# =============================================================================
# RODZINA h_{4g+2,2g+1}
# =============================================================================

class TestLemmaSweep(SimpleTestCase):

    def test_tc_sweep_01_all_genera(self):
        """
        TC-SWEEP-01: 1 <= g <= 50, kwadrat klasy i inwolucja hipereliptyczna
        """
        rows = lemma_inv_sweep(50)
        self.assertEqual(len(rows), 50)
        failed = [r.genus for r in rows if not r.passed]
        self.assertEqual(failed, [])
        self.assertEqual(rows[-1].fixed_points, 102)


# =============================================================================
# CENTRALIZATOR
# =============================================================================

class TestCentralizerTrichotomy(SimpleTestCase):

    def test_tc_cent_01_pair_exactly_for_standard_families(self):
        """
        TC-CENT-01: PAIR dokładnie dla potęg h_{2g+1,1} i h_{2g+2,1}; ALL_EQUAL nie występuje dla g >= 2
        """
        for g in range(2, 11):
            pair_family = set(coprime_powers(hnp(2 * g + 1, 1))) | set(coprime_powers(hnp(2 * g + 2, 1)))
            for entry in enumerate_census(EnumerationQuery(g, require_irreducible=True)):
                t = entry.total_valency
                report = centralizer_structure(t)
                self.assertNotEqual(report.tag, CentralizerClass.ALL_EQUAL, str(t))
                self.assertEqual(report.tag == CentralizerClass.PAIR, t in pair_family, str(t))

    def test_tc_cent_02_inversion_invariant(self):
        """
        TC-CENT-02: klasyfikacja nie zmienia się przy odwróceniu
        """
        for g in range(1, 7):
            for entry in enumerate_census(EnumerationQuery(g, require_irreducible=True)):
                t = entry.total_valency
                self.assertEqual(centralizer_structure(t).tag, centralizer_structure(inverse(t)).tag, str(t))


# =============================================================================
# WŁASNOŚCI
# =============================================================================

class TestPowerProperties(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        population = []
        for g in range(1, 5):
            population.extend(e.total_valency for e in enumerate_census(EnumerationQuery(g)))
        rng = random.Random(42)
        cls.sample = [rng.choice(population) for _ in range(SAMPLE_SIZE)]

    def test_tc_prop_01_power_preserves_invariants(self):
        """
        TC-PROP-01: Nielsen i Riemann-Hurwitz zachowane dla każdej potęgi
        """
        for t in self.sample:
            for k in range(t.order):
                image = power(t, k)
                self.assertTrue(nielsen_check(image.valencies))
                sig = quotient_signature(image)
                self.assertGreaterEqual(sig.quotient_genus, 0)

    def test_tc_prop_02_composition(self):
        """
        TC-PROP-02: power(power(t, a), b) == power(t, a*b)
        """
        rng = random.Random(42)
        for t in self.sample:
            a = rng.randrange(0, 2 * t.order)
            b = rng.randrange(0, 2 * t.order)
            self.assertEqual(power(power(t, a), b), power(t, a * b), f"{t} a={a} b={b}")

    def test_tc_prop_03_involutions_have_even_size(self):
        """
        TC-PROP-03: dane inwolucji mają parzystą liczbę orbit wielokrotnych
        """
        for t in self.sample:
            if t.order % 2 == 0:
                inv = power(t, t.order // 2)
                self.assertTrue(is_involution_datum(inv))
                self.assertEqual(inv.size % 2, 0, str(inv))

    def test_tc_prop_04_text_and_json_round_trip(self):
        """
        TC-PROP-04: postać kanoniczna przechodzi przez tekst i JSON bez zmian
        """
        for t in self.sample:
            self.assertEqual(parse_text(str(t)), t)
            self.assertEqual(parse_json(render_json(t)), t)

    def test_tc_prop_05_inverse_laws(self):
        """
        TC-PROP-05: inverse jest inwolucją i równa się potędze o wykładniku n-1
        """
        for t in self.sample:
            self.assertEqual(inverse(inverse(t)), t)
            self.assertEqual(inverse(t), power(t, t.order - 1), str(t))


class TestCensusClosure(SimpleTestCase):

    def test_tc_close_01_coprime_powers_stay_in_census(self):
        """
        TC-CLOSE-01: spis dla (g, n) jest zamknięty na potęgi o wykładniku względnie pierwszym z n
        """
        for g in (2, 3):
            census = {e.total_valency for e in enumerate_census(EnumerationQuery(g))}
            for t in census:
                for u in range(1, t.order):
                    if gcd(u, t.order) == 1:
                        self.assertIn(power(t, u), census, f"{t}^{u}")


# =============================================================================
# RODZINA h_{n,p}
# =============================================================================

class TestHnpFamily(SimpleTestCase):

    def test_tc_hnp_01_nielsen_harvey_and_signature(self):
        """
        TC-HNP-01: każde h_{n,p} z g >= 1 spełnia warunki Nielsena i Harveya,
        a przy trzech ułamkach niecałkowitych ma g' = 0 i trzy orbity wielokrotne
        """
        checked = 0
        for n in range(3, 61):
            for p in range(1, n):
                if hnp_genus(n, p) < 1:
                    continue
                t = hnp(n, p)
                sig = quotient_signature(t)
                self.assertTrue(nielsen_check(t.valencies), str(t))
                self.assertTrue(harvey_check(t.order, sig.quotient_genus, sig.branch_indices), str(t))
                if p != n - 1:
                    self.assertEqual(sig.quotient_genus, 0, str(t))
                    self.assertEqual(len(sig.branch_indices), 3, str(t))
                checked += 1
        self.assertGreater(checked, 1500)
