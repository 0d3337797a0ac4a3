from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from census.centralizer import CentralizerClass, centralizer_structure, normalized_numerators
from census.companions import lemma_inv_sweep, search_involution_companions
from census.enumeration import (
    EnumerationQuery,
    Witness,
    enumerate_census,
    identify_hnp_power,
    index_multisets,
)
from census.groups import coprime_powers, group_key, group_label, hnp_aliases
from census.schemas import census_entry_out
from census.solver import solve_theta_tuples, units
from valency.calculus import hnp, inverse, power
from valency.codec import parse_text, to_json_dict


TORUS_SPHERE_QUOTIENT = [
    "[1,2; 1/2 + 1/2 + 1/2 + 1/2]",
    "[1,3; 1/3 + 1/3 + 1/3]",
    "[1,3; 2/3 + 2/3 + 2/3]",
    "[1,4; 1/4 + 1/4 + 1/2]",
    "[1,4; 3/4 + 3/4 + 1/2]",
    "[1,6; 1/6 + 1/3 + 1/2]",
    "[1,6; 5/6 + 2/3 + 1/2]",
]


class SolverTests(SimpleTestCase):
    def test_units(self):
        self.assertEqual(units(8), [1, 3, 5, 7])
        self.assertEqual(units(2), [1])

    def test_empty_indices(self):
        self.assertEqual(solve_theta_tuples(5, []), [()])

    def test_multiset_mode(self):
        self.assertEqual(solve_theta_tuples(3, [3, 3, 3]), [(1, 1, 1), (2, 2, 2)])

    def test_ordered_mode(self):
        got = solve_theta_tuples(8, [8, 8, 4], multiset=False)
        self.assertEqual(len(got), 8)
        self.assertIn((1, 5, 1), got)
        self.assertIn((5, 1, 1), got)
        self.assertIn((1, 1, 3), got)

    def test_nielsen_failure_has_no_solutions(self):
        self.assertEqual(solve_theta_tuples(4, [4, 4, 4], multiset=False), [])


class IndexMultisetTests(SimpleTestCase):
    def test_torus_order_six(self):
        from fractions import Fraction

        got = list(index_multisets(6, Fraction(2)))
        self.assertIn((6, 3, 2), got)
        self.assertIn((3, 3, 3), got)
        self.assertIn((2, 2, 2, 2), got)
        self.assertTrue(all(list(m) == sorted(m, reverse=True) for m in got))


class EnumerateTests(SimpleTestCase):
    def test_torus_sphere_quotient(self):
        entries = enumerate_census(EnumerationQuery(1, quotient_genus=0))
        self.assertEqual([str(e.total_valency) for e in entries], TORUS_SPHERE_QUOTIENT)

    def test_torus_irreducible(self):
        entries = enumerate_census(EnumerationQuery(1, require_irreducible=True))
        expected = {
            hnp(4, 1), power(hnp(4, 1), 3),
            hnp(6, 3), power(hnp(6, 3), 5),
            hnp(3, 1), power(hnp(3, 1), 2),
        }
        self.assertEqual({e.total_valency for e in entries}, expected)
        self.assertEqual(len(entries), 6)
        self.assertTrue(all(e.flags["irreducible"] for e in entries))

    def test_entry_payload(self):
        entry = enumerate_census(EnumerationQuery(1, order=4, quotient_genus=0))[0]
        payload = census_entry_out(entry).model_dump(by_alias=True)
        self.assertEqual(payload["total_valency"], to_json_dict(hnp(4, 1)))
        self.assertEqual(payload["text"], "[1,4; 1/4 + 1/4 + 1/2]")
        self.assertEqual(payload["status"], "realized")
        self.assertEqual(payload["realization"], {"n": 4, "p": 1, "k": 1})

    def test_torus_translations_are_admissible_only(self):
        entries = enumerate_census(EnumerationQuery(1, quotient_genus=1))
        self.assertEqual([str(e.total_valency) for e in entries], [f"[1,{n}; 0]" for n in range(2, 7)])
        self.assertTrue(all(e.status == "admissible" for e in entries))

    def test_genus_two_irreducible_contains_h6_1(self):
        entries = enumerate_census(EnumerationQuery(2, require_irreducible=True))
        self.assertIn(parse_text("[2,6; 1/6 + 1/6 + 2/3]"), [e.total_valency for e in entries])

    def test_realization_witness(self):
        entries = enumerate_census(EnumerationQuery(1, quotient_genus=0))
        by_text = {str(e.total_valency): e for e in entries}
        self.assertEqual(by_text["[1,4; 1/4 + 1/4 + 1/2]"].realization, Witness(4, 1, 1))
        self.assertEqual(by_text["[1,2; 1/2 + 1/2 + 1/2 + 1/2]"].realization, Witness(4, 1, 2))
        self.assertTrue(all(e.status == "realized" for e in entries))

    def test_fixed_order(self):
        entries = enumerate_census(EnumerationQuery(3, order=8, require_irreducible=True))
        texts = [str(e.total_valency) for e in entries]
        self.assertIn("[3,8; 1/8 + 1/8 + 3/4]", texts)
        self.assertIn("[3,8; 1/8 + 5/8 + 1/4]", texts)
        self.assertTrue(all(e.total_valency.order == 8 for e in entries))

    def test_genus_zero_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            EnumerationQuery(0)
        self.assertEqual(ctx.exception.code, "genus")

    def test_identify_hnp_power(self):
        self.assertEqual(identify_hnp_power(hnp(8, 1)), Witness(8, 1, 1))
        self.assertEqual(identify_hnp_power(hnp(8, 1), from_oracle=True), Witness(8, 1, 1))
        self.assertIsNone(identify_hnp_power(parse_text("[1,5; 0]")))


class GroupTests(SimpleTestCase):
    def test_coprime_powers(self):
        members = coprime_powers(hnp(6, 3))
        self.assertEqual(members, [hnp(6, 3), inverse(hnp(6, 3))])

    def test_group_key_is_power_invariant(self):
        t = hnp(12, 3)
        for u in (5, 7, 11):
            self.assertEqual(group_key(power(t, u)), group_key(t))

    def test_labels(self):
        self.assertEqual(hnp_aliases(hnp(8, 5)), [2, 5])
        self.assertEqual(group_label(hnp(8, 2)), "⟨h_{8,5}⟩")
        self.assertEqual(hnp_aliases(hnp(12, 3)), [3, 8])
        self.assertEqual(group_label(hnp(12, 8)), "⟨h_{12,3}⟩")
        self.assertEqual(group_label(hnp(12, 2)), "⟨h_{12,2}⟩")
        self.assertEqual(group_label(power(hnp(8, 1), 3)), "⟨h_{8,1}⟩")


class CompanionTests(SimpleTestCase):
    def test_genus_two(self):
        records = search_involution_companions(2, 2)
        self.assertEqual([r.label for r in records], ["⟨h_{6,1}⟩"])
        self.assertEqual(str(records[0].generator), "[2,6; 1/6 + 1/6 + 2/3]")
        self.assertEqual(str(records[0].involution), "[2,2; 1/2 + 1/2]")

    def test_genus_five_is_empty(self):
        self.assertEqual(search_involution_companions(5, 5), [])

    def test_bad_range(self):
        with self.assertRaises(ValidationError):
            search_involution_companions(1, 3)

    def test_sweep_small(self):
        rows = lemma_inv_sweep(2)
        self.assertEqual(str(rows[0].square), "[1,3; 1/3 + 1/3 + 1/3]")
        self.assertEqual(str(rows[0].involution), "[1,2; 1/2 + 1/2 + 1/2 + 1/2]")
        self.assertEqual(rows[0].fixed_points, 4)
        self.assertEqual(str(rows[1].square), "[2,5; 1/5 + 1/5 + 3/5]")
        self.assertTrue(all(r.passed for r in rows))


class CentralizerTests(SimpleTestCase):
    def test_distinct(self):
        report = centralizer_structure(hnp(8, 5))
        self.assertEqual(report.tag, CentralizerClass.DISTINCT)
        self.assertEqual(report.numerators, (1, 5, 2))
        self.assertEqual(report.enclosing_group, "⟨h_{8,5}⟩")

    def test_all_equal(self):
        report = centralizer_structure(parse_text("[1,3; 1/3×3]"))
        self.assertEqual(report.tag, CentralizerClass.ALL_EQUAL)

    def test_pair_even(self):
        report = centralizer_structure(hnp(6, 1))
        self.assertEqual(report.tag, CentralizerClass.PAIR)
        self.assertEqual(report.parity, "even")
        self.assertEqual(report.enclosing_group, "⟨h_{6,1}, I⟩")
        self.assertEqual(report.hnp_exponent, 1)

    def test_pair_odd(self):
        t = power(hnp(5, 1), 2)
        report = centralizer_structure(t)
        self.assertEqual(report.parity, "odd")
        self.assertEqual(report.enclosing_group, "⟨h_{10,5}⟩")
        self.assertEqual(power(hnp(5, 1), report.hnp_exponent), t)

    def test_numerators_use_common_denominator(self):
        self.assertEqual(normalized_numerators(hnp(8, 1)), (1, 1, 6))

    def test_reducible_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            centralizer_structure(parse_text("[1,2; 1/2×4]"))
        self.assertEqual(ctx.exception.code, "reducible")
