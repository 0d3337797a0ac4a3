"""
Testy walidacyjne wyroczni wielokątowej.

Zawiera:
- Porównanie wyroczni z postacią zamkniętą h_{n,p} (TC-ORACLE-01, TC-ORACLE-02)
- Walidację potęg względem wyroczni (TC-POWER-01)
- Własności kombinatoryczne (TC-CELL-01, TC-CELL-02)
"""

from math import gcd

from django.test import SimpleTestCase

from polygon.surface import build_surface, cell_orbits, oracle_total_valency
from valency.calculus import hnp, hnp_genus, nielsen_check, power


ORACLE_MAX_N = 40
POWER_MAX_N = 24


def all_pairs(max_n):
    for n in range(3, max_n + 1):
        for p in range(1, n):
            yield n, p


# =============================================================================
# POSTAĆ ZAMKNIĘTA
# =============================================================================

class TestOracleClosedForm(SimpleTestCase):
    """Wyrocznia dla k = 1 musi dać dokładnie hnp(n, p)."""

    def test_tc_oracle_01_total_valency(self):
        """
        TC-ORACLE-01: oracle(n, p, 1) == hnp(n, p) dla 3 <= n <= 40
        """
        mismatches = []
        for n, p in all_pairs(ORACLE_MAX_N):
            got = oracle_total_valency(build_surface(n, p), 1)
            if got != hnp(n, p):
                mismatches.append((n, p, str(got), str(hnp(n, p))))
        self.assertEqual(mismatches, [], f"Niezgodności: {mismatches[:5]}")

    def test_tc_oracle_02_genus(self):
        """
        TC-ORACLE-02: genus z charakterystyki Eulera == (n - gcd(n,p) - gcd(n,p+1) + 1)/2
        """
        for n, p in all_pairs(ORACLE_MAX_N):
            s = build_surface(n, p)
            self.assertEqual(s.genus, hnp_genus(n, p), f"(n, p) = ({n}, {p})")
            self.assertEqual(s.vertex_count, gcd(n, p) + gcd(n, p + 1))


# =============================================================================
# POTĘGI
# =============================================================================

class TestPowerAgainstOracle(SimpleTestCase):

    def test_tc_power_01_every_exponent(self):
        """
        TC-POWER-01: power(hnp(n, p), k) == oracle(n, p, k) dla 3 <= n <= 24, 1 <= k < n
        """
        mismatches = []
        checked = 0
        for n, p in all_pairs(POWER_MAX_N):
            s = build_surface(n, p)
            base = hnp(n, p)
            for k in range(1, n):
                expected = oracle_total_valency(s, k)
                got = power(base, k)
                checked += 1
                if got != expected:
                    mismatches.append((n, p, k, str(got), str(expected)))
        self.assertGreater(checked, 4000)
        self.assertEqual(mismatches, [], f"Niezgodności: {mismatches[:5]}")


# =============================================================================
# WŁASNOŚCI KOMBINATORYCZNE
# =============================================================================

class TestCellStructure(SimpleTestCase):

    def test_tc_cell_01_rotation_permutes_cells(self):
        """
        TC-CELL-01: orbity rotacji pokrywają wszystkie wierzchołki i krawędzie
        """
        for n, p in all_pairs(16):
            s = build_surface(n, p)
            for k in range(1, n):
                orbits = cell_orbits(s, k)
                order = n // gcd(n, k)
                self.assertEqual(sum(o.period for o in orbits if o.kind == "vertex"), s.vertex_count)
                self.assertEqual(sum(o.period for o in orbits if o.kind == "edge"), n)
                self.assertEqual([o.kind for o in orbits].count("center"), 1)
                for o in orbits:
                    self.assertEqual(o.period * o.isotropy, order)

    def test_tc_cell_02_nielsen_holds(self):
        """
        TC-CELL-02: suma walencji z wyroczni jest całkowita
        """
        for n, p in all_pairs(20):
            s = build_surface(n, p)
            for k in range(1, n):
                valencies = [o.valency for o in cell_orbits(s, k) if o.valency is not None]
                self.assertTrue(nielsen_check(valencies), f"(n, p, k) = ({n}, {p}, {k})")
