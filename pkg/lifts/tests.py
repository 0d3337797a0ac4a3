from fractions import Fraction
from unittest.mock import patch

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from lifts.classifier import (
    LiftProblem,
    LiftVerdict,
    base_orbits,
    candidate_branch_loci,
    classify_lift,
)
from lifts.local_options import LOCAL_OPTIONS, Role, local_options
from valency.calculus import hnp, inverse, power
from valency.codec import parse_text

H41 = hnp(4, 1)
H63 = hnp(6, 3)
H31 = hnp(3, 1)


def locus(base, labels):
    by_label = {o.label: o.index for o in base_orbits(base)}
    return tuple(by_label[c] for c in labels)


def classify(base, labels):
    return classify_lift(LiftProblem(base, locus(base, labels)))


class BaseOrbitTests(SimpleTestCase):
    def test_labels_follow_canonical_order(self):
        orbits = base_orbits(H63)
        self.assertEqual([o.label for o in orbits], ["x", "y", "z"])
        self.assertEqual([str(o.valency) for o in orbits], ["1/6", "1/3", "1/2"])
        self.assertEqual([o.period for o in orbits], [1, 2, 3])


class CandidateLociTests(SimpleTestCase):
    def test_h4_1(self):
        self.assertEqual(set(candidate_branch_loci(H41)), {locus(H41, "xy"), locus(H41, "z"), locus(H41, "xyz")})

    def test_h6_3(self):
        self.assertEqual(set(candidate_branch_loci(H63)), {locus(H63, "y"), locus(H63, "xz"), locus(H63, "xyz")})

    def test_h3_1(self):
        self.assertEqual(set(candidate_branch_loci(H31)), {(0, 1), (0, 2), (1, 2)})

    def test_base_must_be_torus(self):
        with self.assertRaises(ValidationError) as ctx:
            candidate_branch_loci(hnp(8, 1))
        self.assertEqual(ctx.exception.code, "genus")

    def test_malformed_locus(self):
        for bad in [(), (0,), (0, 0, 1), (5,)]:
            with self.assertRaises(ValidationError) as ctx:
                LiftProblem(H41, bad)
            self.assertEqual(ctx.exception.code, "locus")


class LocalOptionTests(SimpleTestCase):
    def test_table_and_inverse(self):
        self.assertEqual(local_options(Role.BRANCHED, Fraction(1, 3)), [(Fraction(2, 3),), (Fraction(1, 6),)])
        self.assertEqual(local_options(Role.BRANCHED, Fraction(2, 3)), [(Fraction(1, 3),), (Fraction(5, 6),)])
        self.assertEqual(local_options(Role.FIXED, Fraction(5, 6)), [(Fraction(5, 6), Fraction(5, 6))])
        self.assertIsNone(local_options(Role.BRANCHED, Fraction(1, 5)))


class CyclicLiftTests(SimpleTestCase):
    def test_h4_1_two_fixed_points_is_eliminated_by_power_projection(self):
        outcome = classify(H41, "xy")
        self.assertEqual(outcome.verdict, LiftVerdict.NO_LIFT)
        self.assertEqual([s.rule for s in outcome.audit], ["brodd", "lemma1", "nielsen", "rh", "power-projection"])
        self.assertFalse(outcome.audit[-1].passed)
        self.assertIn("4 candidates, 0", outcome.audit[-1].detail)

    def test_h4_1_two_point_orbit_fails_nielsen(self):
        outcome = classify(H41, "z")
        self.assertEqual(outcome.verdict, LiftVerdict.NO_LIFT)
        self.assertEqual(outcome.indices, (4, 4, 4))
        self.assertEqual(outcome.audit[-1].rule, "nielsen")
        self.assertFalse(outcome.audit[-1].passed)

    def test_h4_1_everything_branched(self):
        outcome = classify(H41, "xyz")
        self.assertEqual(outcome.verdict, LiftVerdict.CYCLIC_LIFTS)
        self.assertEqual(outcome.involution_power_index, 4)
        self.assertEqual([g.label for g in outcome.groups], ["⟨h_{8,1}⟩", "⟨h_{8,5}⟩"])
        self.assertEqual(sum(len(g.tuples) for g in outcome.groups), 8)
        self.assertEqual(len(outcome.groups[0].members), 4)
        self.assertEqual(len(outcome.groups[1].members), 2)
        self.assertIn(parse_text("[3,8; 1/8 + 1/8 + 3/4]"), outcome.groups[0].members)
        self.assertIn(parse_text("[3,8; 1/8 + 5/8 + 1/4]"), outcome.groups[1].members)

    def test_h6_3_fixed_point_and_three_point_orbit(self):
        outcome = classify(H63, "xz")
        self.assertEqual(outcome.verdict, LiftVerdict.CYCLIC_LIFTS)
        self.assertEqual(sorted(outcome.indices, reverse=True), [12, 4, 3])
        self.assertEqual([g.label for g in outcome.groups], ["⟨h_{12,3}⟩"])
        self.assertEqual(len(outcome.groups[0].tuples), 4)
        self.assertEqual(outcome.groups[0].generator, parse_text("[3,12; 1/12 + 1/4 + 2/3]"))

    def test_h6_3_everything_branched(self):
        outcome = classify(H63, "xyz")
        self.assertEqual(outcome.verdict, LiftVerdict.CYCLIC_LIFTS)
        self.assertEqual(sorted(outcome.indices, reverse=True), [12, 6, 4])
        self.assertEqual([g.label for g in outcome.groups], ["⟨h_{12,2}⟩"])
        self.assertEqual(outcome.groups[0].generator.genus, 4)

    def test_lifts_have_torus_involution_power(self):
        for base, labels in [(H41, "xyz"), (H63, "xz"), (H63, "xyz")]:
            outcome = classify(base, labels)
            for grp in outcome.groups:
                for t in grp.members:
                    middle = power(t, t.order // 2)
                    self.assertEqual(middle.order, 2)
                    self.assertEqual(middle.quotient_genus, 1)
                    self.assertEqual(middle.size, 2 * t.genus - 2)


class NonCyclicLiftTests(SimpleTestCase):
    def test_h6_3_two_point_orbit(self):
        outcome = classify(H63, "y")
        self.assertEqual(outcome.verdict, LiftVerdict.NON_CYCLIC_LIFT)
        self.assertEqual(str(outcome.upstairs), "[2,6; 1/6 + 1/6 + 2/3]")
        self.assertEqual(outcome.enclosing_group, "⟨h_{6,1}, I⟩")
        self.assertTrue(outcome.companion.hyperelliptic)
        self.assertEqual(outcome.companion.exponent, 3)
        self.assertEqual(outcome.companion.fixed_points, 6)
        rh = next(s for s in outcome.audit if s.rule == "rh")
        self.assertIn("g' = -1/2 rejected", rh.detail)
        self.assertEqual([s.rule for s in outcome.audit], ["brodd", "local-option", "rh", "nielsen"])

    def test_h6_3_inverse(self):
        outcome = classify(inverse(H63), "y")
        self.assertEqual(outcome.upstairs, inverse(hnp(6, 1)))
        self.assertEqual(outcome.enclosing_group, "⟨h_{6,1}, I⟩")

    def test_h3_1_pairs(self):
        for labels in ("xy", "xz", "yz"):
            outcome = classify(H31, labels)
            self.assertEqual(outcome.verdict, LiftVerdict.NON_CYCLIC_LIFT)
            self.assertEqual(str(outcome.upstairs), "[2,3; 1/3 + 1/3 + 2/3 + 2/3]")
            self.assertEqual(outcome.upstairs, power(hnp(6, 1), 2))
            self.assertEqual(outcome.enclosing_group, "⟨h_{6,1}, I⟩")
            self.assertIn("cyclic of order 6", outcome.companion.description)

    def test_out_of_table_is_unsupported(self):
        with patch.dict(LOCAL_OPTIONS):
            del LOCAL_OPTIONS[(Role.FIXED, Fraction(1, 6))]
            outcome = classify(H63, "y")
        self.assertEqual(outcome.verdict, LiftVerdict.UNSUPPORTED)
        self.assertIn("no local lift option", outcome.reason)
        self.assertEqual(classify(H63, "y").verdict, LiftVerdict.NON_CYCLIC_LIFT)
