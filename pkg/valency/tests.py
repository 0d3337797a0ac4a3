from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from valency.calculus import (
    KNOWN_DISCREPANCIES,
    harvey_check,
    hnp,
    hnp_genus,
    hnp_notes,
    involution_quotient_genus,
    inverse,
    is_conjugate,
    is_involution_datum,
    is_irreducible,
    make_valency,
    nielsen_check,
    power,
    quotient_signature,
    standard_order_for_genus,
)
from valency.codec import parse_json, parse_text, parse_total_valency, render_json, render_text, to_json_dict
from valency.core import TotalValency, Valency, identity_datum, rh_quotient_genus
from valency.errors import InconsistentValencyError, describe
from valency.schemas import HnpOut


def tv(text):
    return parse_text(text)


class ValencyTests(SimpleTestCase):
    def test_make_valency_accepts_reduced_fraction(self):
        self.assertEqual(str(make_valency(1, 2)), "1/2")
        self.assertEqual(str(make_valency(3, 4)), "3/4")

    def test_make_valency_rejects_non_coprime(self):
        with self.assertRaises(ValidationError) as ctx:
            make_valency(2, 4)
        self.assertEqual(ctx.exception.code, "coprime")

    def test_make_valency_rejects_out_of_range(self):
        for theta, lam, code in [(0, 5, "theta_range"), (5, 5, "theta_range"), (1, 1, "lambda_range")]:
            with self.assertRaises(ValidationError) as ctx:
                make_valency(theta, lam)
            self.assertEqual(ctx.exception.code, code)

    def test_mu_is_inverse_of_theta(self):
        v = Valency(3, 8)
        self.assertEqual((v.mu * v.theta) % v.lam, 1)
        self.assertEqual(v.mu, 3)

    def test_inverted(self):
        self.assertEqual(Valency(1, 6).inverted(), Valency(5, 6))


class TotalValencyTests(SimpleTestCase):
    def test_canonical_order_is_lambda_desc_theta_asc(self):
        t = TotalValency(3, 8, (Valency(1, 4), Valency(5, 8), Valency(1, 8)))
        self.assertEqual(str(t), "[3,8; 1/8 + 5/8 + 1/4]")

    def test_equal_after_reordering(self):
        a = TotalValency(1, 6, (Valency(1, 2), Valency(1, 3), Valency(1, 6)))
        b = TotalValency(1, 6, (Valency(1, 6), Valency(1, 2), Valency(1, 3)))
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))

    def test_rejects_lambda_not_dividing_order(self):
        with self.assertRaises(ValidationError) as ctx:
            TotalValency(1, 6, (Valency(1, 4), Valency(3, 4)))
        self.assertEqual(ctx.exception.code, "divides")

    def test_rejects_nielsen_failure(self):
        with self.assertRaises(ValidationError) as ctx:
            TotalValency(1, 4, (Valency(1, 4), Valency(1, 4), Valency(1, 4)))
        self.assertEqual(ctx.exception.code, "nielsen")

    def test_rejects_riemann_hurwitz_failure(self):
        with self.assertRaises(InconsistentValencyError) as ctx:
            TotalValency(2, 2, (Valency(1, 2), Valency(1, 2), Valency(1, 2), Valency(1, 2)))
        self.assertEqual(ctx.exception.code, "riemann_hurwitz")
        self.assertEqual(ctx.exception.quotient_genus, Fraction(1, 2))

    def test_identity_renders_empty_multiset(self):
        self.assertEqual(str(identity_datum(3)), "[3,1; 0]")

    def test_counts_group_equal_valencies(self):
        t = tv("[1,2; 1/2 + 1/2 + 1/2 + 1/2]")
        self.assertEqual(t.counts(), [(Valency(1, 2), 4)])

    def test_rh_quotient_genus_is_exact(self):
        self.assertEqual(rh_quotient_genus(2, 6, [3, 3]), Fraction(1, 2))
        self.assertEqual(rh_quotient_genus(2, 6, [6, 6, 3, 2, 2]), Fraction(-1, 2))
        self.assertEqual(rh_quotient_genus(3, 8, [8, 8, 4]), 0)


class HnpTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(str(hnp(8, 1)), "[3,8; 1/8 + 1/8 + 3/4]")
        self.assertEqual(str(hnp(6, 3)), "[1,6; 1/6 + 1/3 + 1/2]")
        self.assertEqual(str(hnp(12, 2)), "[4,12; 1/12 + 1/6 + 3/4]")
        self.assertEqual(str(hnp(8, 5)), "[3,8; 1/8 + 5/8 + 1/4]")

    def test_lemma_family(self):
        for g in range(1, 8):
            expected = TotalValency(
                g, 4 * g + 2,
                (Valency(1, 4 * g + 2), Valency(g, 2 * g + 1), Valency(1, 2)),
            )
            self.assertEqual(hnp(4 * g + 2, 2 * g + 1), expected)

    def test_genus_matches_formula(self):
        self.assertEqual(hnp_genus(8, 1), 3)
        self.assertEqual(hnp_genus(6, 5), 0)
        self.assertEqual(hnp(6, 5).genus, 0)

    def test_rejects_bad_arguments(self):
        for n, p in [(2, 1), (5, 0), (5, 5)]:
            with self.assertRaises(ValidationError) as ctx:
                hnp(n, p)
            self.assertEqual(ctx.exception.code, "range")

    def test_notes_flag_known_discrepancy(self):
        self.assertIn((12, 2), KNOWN_DISCREPANCIES)
        self.assertEqual(len(hnp_notes(12, 2)), 1)
        self.assertEqual(hnp_notes(8, 1), [])


class PowerTests(SimpleTestCase):
    def test_torus_examples(self):
        h63 = hnp(6, 3)
        self.assertEqual(str(power(h63, 2)), "[1,3; 1/3 + 1/3 + 1/3]")
        self.assertEqual(str(power(h63, 3)), "[1,2; 1/2 + 1/2 + 1/2 + 1/2]")

    def test_h12_3_sixth_power_is_torus_involution(self):
        t = power(tv("[3,12; 1/12 + 1/4 + 2/3]"), 6)
        self.assertEqual(str(t), "[3,2; 1/2 + 1/2 + 1/2 + 1/2]")
        self.assertEqual(involution_quotient_genus(t), 1)

    def test_zero_exponent_gives_identity(self):
        self.assertEqual(power(hnp(8, 1), 0), identity_datum(3))
        self.assertEqual(power(hnp(8, 1), 8), identity_datum(3))

    def test_exponent_one_and_coprime_inverse(self):
        t = hnp(8, 1)
        self.assertEqual(power(t, 1), t)
        self.assertEqual(power(t, 7), inverse(t))

    def test_negative_exponent_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            power(hnp(8, 1), -1)
        self.assertEqual(ctx.exception.code, "exponent")

    def test_composition_law(self):
        t = hnp(12, 5)
        for a in range(1, 12):
            for b in range(1, 12):
                self.assertEqual(power(power(t, a), b), power(t, a * b))


class InverseAndSignatureTests(SimpleTestCase):
    def test_inverse_examples(self):
        self.assertEqual(str(inverse(hnp(6, 3))), "[1,6; 5/6 + 2/3 + 1/2]")
        inv = tv("[1,2; 1/2×4]")
        self.assertEqual(inverse(inv), inv)
        self.assertEqual(str(inverse(hnp(8, 1))), "[3,8; 7/8 + 7/8 + 1/4]")

    def test_quotient_signature(self):
        sig = quotient_signature(hnp(8, 1))
        self.assertEqual(sig.quotient_genus, 0)
        self.assertEqual(sig.branch_indices, (8, 8, 4))
        self.assertEqual(quotient_signature(tv("[1,2; 1/2×4]")).branch_indices, (2, 2, 2, 2))
        ident = quotient_signature(identity_datum(2))
        self.assertEqual((ident.quotient_genus, ident.branch_indices), (2, ()))


class CheckTests(SimpleTestCase):
    def test_nielsen(self):
        self.assertTrue(nielsen_check([Valency(1, 8), Valency(1, 8), Valency(3, 4)]))
        self.assertFalse(nielsen_check([Valency(1, 4)] * 3))
        self.assertTrue(nielsen_check([]))

    def test_harvey(self):
        self.assertTrue(harvey_check(8, 0, [8, 8, 4]))
        self.assertFalse(harvey_check(6, 0, [2, 3]))
        self.assertFalse(harvey_check(4, 1, [4]))
        self.assertTrue(harvey_check(12, 0, [12, 4, 3]))
        self.assertFalse(harvey_check(12, 0, [6, 6, 3]))

    def test_irreducible(self):
        self.assertTrue(is_irreducible(hnp(8, 1)))
        self.assertFalse(is_irreducible(tv("[1,2; 1/2×4]")))
        self.assertFalse(is_irreducible(identity_datum(2)))

    def test_involution(self):
        a = tv("[2,2; 1/2 + 1/2]")
        self.assertTrue(is_involution_datum(a))
        self.assertEqual(involution_quotient_genus(a), 1)
        b = tv("[2,2; 1/2×6]")
        self.assertEqual(involution_quotient_genus(b), 0)
        c = tv("[1,3; 1/3×3]")
        self.assertFalse(is_involution_datum(c))
        with self.assertRaises(ValidationError) as ctx:
            involution_quotient_genus(c)
        self.assertEqual(ctx.exception.code, "not_involution")

    def test_conjugate(self):
        self.assertTrue(is_conjugate(power(hnp(10, 5), 4), hnp(5, 1)))
        self.assertFalse(is_conjugate(hnp(8, 1), hnp(8, 5)))

    def test_standard_order(self):
        self.assertEqual(standard_order_for_genus(2, "odd"), 5)
        self.assertEqual(standard_order_for_genus(2, "even"), 6)
        self.assertEqual(standard_order_for_genus(1, "odd"), 3)
        with self.assertRaises(ValidationError) as ctx:
            standard_order_for_genus(2, "both")
        self.assertEqual(ctx.exception.code, "parity")
        with self.assertRaises(ValidationError) as ctx:
            standard_order_for_genus(0, "odd")
        self.assertEqual(ctx.exception.code, "genus")


class CodecTests(SimpleTestCase):
    def test_parse_multiplicity_and_empty(self):
        self.assertEqual(tv("[1,2; 1/2×4]"), tv("[1,2; 1/2 + 1/2 + 1/2 + 1/2]"))
        self.assertEqual(tv("[1,2; 1/2*4]"), tv("[1,2; 1/2×4]"))
        self.assertEqual(tv("[3,1; ∅]"), identity_datum(3))
        self.assertEqual(tv("[3,1;]"), identity_datum(3))
        self.assertEqual(tv("[3,1; 0]"), identity_datum(3))
        self.assertEqual(render_text(identity_datum(3)), "[3,1; 0]")
        self.assertEqual(render_text(tv("[1,2; 1/2×4]")), "[1,2; 1/2 + 1/2 + 1/2 + 1/2]")

    def test_parse_errors_are_one_line(self):
        for text in ["3,8; 1/8", "[3,8; 1/8 + x]", "[a,b; 1/2]"]:
            with self.assertRaises(ValidationError) as ctx:
                parse_text(text)
            self.assertEqual(ctx.exception.code, "parse")
            self.assertNotIn("\n", describe(ctx.exception))

    def test_json_shape(self):
        payload = to_json_dict(hnp(8, 1))
        self.assertEqual(payload, {
            "genus": 3,
            "order": 8,
            "valencies": [
                {"theta": 1, "lambda": 8, "count": 2},
                {"theta": 3, "lambda": 4, "count": 1},
            ],
            "quotient_genus": 0,
        })

    def test_total_valency_nests_in_payload(self):
        t = hnp(8, 1)
        payload = HnpOut(n=8, p=1, total_valency=to_json_dict(t), text=str(t)).model_dump(by_alias=True)
        self.assertEqual(payload["total_valency"], to_json_dict(t))
        self.assertEqual(payload["total_valency"]["valencies"][1], {"theta": 3, "lambda": 4, "count": 1})

    def test_zero_multiplicity_rejected(self):
        for text in ["[1,2; 1/2×0]", "[1,2; 1/2*0 + 1/2×4]"]:
            with self.assertRaises(ValidationError) as ctx:
                parse_text(text)
            self.assertEqual(ctx.exception.code, "parse")

    def test_json_and_text_round_trip(self):
        for t in [hnp(8, 1), hnp(6, 3), identity_datum(2), tv("[2,2; 1/2×6]")]:
            self.assertEqual(parse_json(render_json(t)), t)
            self.assertEqual(parse_text(str(t)), t)
            self.assertEqual(parse_total_valency(render_json(t)), t)

    def test_json_rejects_wrong_quotient_genus(self):
        payload = to_json_dict(hnp(8, 1))
        payload["quotient_genus"] = 2
        with self.assertRaises(ValidationError) as ctx:
            parse_json(payload)
        self.assertEqual(ctx.exception.code, "riemann_hurwitz")

    def test_json_rejects_malformed(self):
        with self.assertRaises(ValidationError) as ctx:
            parse_json("{not json")
        self.assertEqual(ctx.exception.code, "parse")
        with self.assertRaises(ValidationError) as ctx:
            parse_json({"genus": 1})
        self.assertEqual(ctx.exception.code, "parse")
