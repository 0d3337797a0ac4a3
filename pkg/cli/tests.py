import json
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from cli.base import table, validate_payload
from cli.golden import BRTO_GOLDEN, structural_diff
from cli.runner import EXIT_INVALID, EXIT_MISMATCH, run


def call(*args, **kwargs):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **kwargs)
    return out.getvalue(), err.getvalue()


def run_quiet(argv):
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


class TextOutputTests(SimpleTestCase):
    def test_hnp(self):
        out, _ = call("hnp", "--n", "8", "--p", "1")
        self.assertEqual(out, "[3,8; 1/8 + 1/8 + 3/4]\n")

    def test_hnp_note_goes_to_stderr(self):
        out, err = call("hnp", "--n", "12", "--p", "2")
        self.assertEqual(out, "[4,12; 1/12 + 1/6 + 3/4]\n")
        self.assertIn("genus 3", err)

    def test_power(self):
        out, _ = call("power", "--tv", "[1,6; 1/6 + 1/3 + 1/2]", "--k", "2")
        self.assertEqual(out, "[1,3; 1/3 + 1/3 + 1/3]\n")

    def test_inverse(self):
        out, _ = call("inverse", "--tv", "[1,6; 1/6 + 1/3 + 1/2]")
        self.assertEqual(out, "[1,6; 5/6 + 2/3 + 1/2]\n")

    def test_quotient(self):
        out, _ = call("quotient", "--tv", "[3,8; 1/8 + 1/8 + 3/4]")
        self.assertEqual(out, "quotient_genus=0 branch_indices=[8, 8, 4]\n")

    def test_checks(self):
        self.assertEqual(call("valencycheck", "nielsen", "--tv", "[1,4; 1/4 + 1/4 + 1/2]")[0], "nielsen: yes\n")
        self.assertEqual(call("valencycheck", "irreducible", "--tv", "[1,2; 1/2×4]")[0], "irreducible: no\n")
        self.assertEqual(call("valencycheck", "involution", "--tv", "[1,2; 1/2×4]")[0], "involution: yes\n")

    def test_oracle_compare(self):
        out, _ = call("oracle", "--n", "8", "--p", "1", "--k", "1", "--compare")
        self.assertEqual(out, "MATCH\n")

    def test_oracle_dump(self):
        out, _ = call("oracle", "--n", "4", "--p", "1", "--dump")
        dump = json.loads(out)
        self.assertEqual(dump["genus"], 1)
        self.assertEqual(len(dump["edge_pairing"]), 8)
        self.assertEqual(
            sorted(o["valency"] for o in dump["orbits"] if o["valency"] != "free"), ["1/2", "1/4", "1/4"]
        )

    def test_enumerate(self):
        out, _ = call("enumerate", "--genus", "1", "--quotient-genus", "0")
        lines = out.splitlines()
        self.assertEqual([line.split("  ")[0] for line in lines], BRTO_GOLDEN)
        self.assertTrue(lines[3].endswith("realized  h_{4,1}^1"))

    def test_centralizer(self):
        out, _ = call("centralizer", "--tv", "[3,8; 1/8 + 1/8 + 3/4]")
        self.assertTrue(out.startswith("PAIR  ⟨h_{8,1}, I⟩"))

    def test_meta_line(self):
        _, err = call("inverse", "--tv", "[1,3; 1/3×3]", "--meta")
        meta = json.loads(err.splitlines()[0])
        self.assertEqual(meta["command"], "inverse")
        self.assertEqual(meta["format"], "text")
        self.assertIn("timestamp", meta)

    def test_output_is_deterministic(self):
        first = call("enumerate", "--genus", "2", "--irreducible")[0]
        self.assertEqual(first, call("enumerate", "--genus", "2", "--irreducible")[0])


class JsonOutputTests(SimpleTestCase):
    def payload(self, *args):
        out, _ = call(*args, "--format", "json")
        return [json.loads(line) for line in out.splitlines()]

    def test_hnp(self):
        (payload,) = self.payload("hnp", "--n", "6", "--p", "3")
        validate_payload("hnpResult", payload)
        self.assertEqual(payload["text"], "[1,6; 1/6 + 1/3 + 1/2]")
        self.assertEqual(payload["total_valency"]["valencies"][0], {"theta": 1, "lambda": 6, "count": 1})

    def test_power_accepts_json_input(self):
        (payload,) = self.payload("power", "--tv", '{"genus": 1, "order": 4, "valencies": '
                                  '[{"theta": 1, "lambda": 4, "count": 2}, {"theta": 1, "lambda": 2, "count": 1}]}',
                                  "--k", "3")
        validate_payload("totalValency", payload)
        self.assertEqual(payload["valencies"][0], {"theta": 3, "lambda": 4, "count": 2})

    def test_check_and_quotient(self):
        (check,) = self.payload("valencycheck", "harvey", "--tv", "[3,8; 1/8 + 5/8 + 1/4]")
        validate_payload("checkResult", check)
        self.assertTrue(check["result"])
        (sig,) = self.payload("quotient", "--tv", "[2,2; 1/2 + 1/2]")
        validate_payload("quotientSignature", sig)
        self.assertEqual(sig, {"quotient_genus": 1, "branch_indices": [2, 2]})

    def test_enumerate_lines(self):
        entries = self.payload("enumerate", "--genus", "1", "--irreducible")
        self.assertEqual(len(entries), 6)
        for entry in entries:
            validate_payload("censusEntry", entry)
            self.assertTrue(entry["flags"]["irreducible"])

    def test_oracle_and_centralizer(self):
        (oracle,) = self.payload("oracle", "--n", "12", "--p", "3", "--k", "5", "--compare")
        validate_payload("oracleResult", oracle)
        self.assertTrue(oracle["match"])
        self.assertEqual(oracle["text"], oracle["closed_form"])
        (report,) = self.payload("centralizer", "--tv", "[1,3; 1/3 + 1/3 + 1/3]")
        validate_payload("centralizerReport", report)
        self.assertEqual(report["tag"], "ALL_EQUAL")

    def test_verify_lemma_inv(self):
        (report,) = self.payload("verify", "lemma-inv", "--max-genus", "5")
        validate_payload("verifyReport", report)
        self.assertTrue(report["passed"])
        self.assertEqual([r["genus"] for r in report["rows"]], [1, 2, 3, 4, 5])


class VerifyTests(SimpleTestCase):
    def test_brto(self):
        out, _ = call("verify", "brto")
        lines = out.splitlines()
        self.assertEqual(len(lines), 1 + 7 + 1)
        self.assertEqual(lines[-1], "PASS")

    def test_irr1(self):
        out, _ = call("verify", "irr1", "--max-genus", "4")
        lines = out.splitlines()
        self.assertEqual(lines[-1], "PASS")
        self.assertEqual(len(lines), 1 + 5 + 1)
        self.assertIn("⟨h_{6,1}, I⟩", lines[1])
        self.assertIn("⟨h_{12,2}⟩", lines[4])

    def test_centralizer(self):
        out, _ = call("verify", "centralizer", "--max-genus", "3")
        self.assertEqual(out.splitlines()[-1], "PASS")

    def test_mismatch_prints_diff_and_raises(self):
        with patch("cli.management.commands.verify.BRTO_GOLDEN", BRTO_GOLDEN[:-1]):
            out = StringIO()
            with self.assertRaises(CommandError) as ctx:
                call_command("verify", "brto", stdout=out, stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, EXIT_MISMATCH)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[-2:], ["FAIL", "+ [1,6; 5/6 + 2/3 + 1/2]"])


class ErrorTests(SimpleTestCase):
    def test_malformed_total_valency(self):
        with self.assertRaises(CommandError) as ctx:
            call("inverse", "--tv", "[1,6; 1/6 + ")
        self.assertEqual(ctx.exception.returncode, EXIT_INVALID)

    def test_inconsistent_total_valency(self):
        with self.assertRaises(CommandError) as ctx:
            call("quotient", "--tv", "[2,6; 1/6 + 1/6]")
        self.assertEqual(ctx.exception.returncode, EXIT_INVALID)

    def test_exponent_out_of_range(self):
        with self.assertRaises(CommandError) as ctx:
            call("oracle", "--n", "8", "--p", "1", "--k", "8")
        self.assertEqual(ctx.exception.returncode, EXIT_INVALID)

    @override_settings(VALENCY_OUTPUT_FORMAT="json")
    def test_format_default_from_settings(self):
        out, _ = call("hnp", "--n", "4", "--p", "1")
        self.assertEqual(json.loads(out)["text"], "[1,4; 1/4 + 1/4 + 1/2]")


class RunnerTests(SimpleTestCase):
    def test_success(self):
        code, out, _ = run_quiet(["check", "nielsen", "--tv", "[1,3; 1/3 + 1/3 + 1/3]"])
        self.assertEqual(code, 0)
        self.assertEqual(out, "nielsen: yes\n")

    def test_oracle_example(self):
        code, out, _ = run_quiet(["oracle", "--n", "8", "--p", "1", "--k", "1", "--compare"])
        self.assertEqual((code, out), (0, "MATCH\n"))

    def test_unknown_subcommand(self):
        code, out, err = run_quiet(["frobnicate"])
        self.assertEqual(code, EXIT_INVALID)
        self.assertEqual(out, "")
        self.assertIn("unknown subcommand", err)

    def test_unknown_flag(self):
        code, _, _ = run_quiet(["hnp", "--n", "8", "--p", "1", "--bogus"])
        self.assertEqual(code, EXIT_INVALID)

    def test_bad_total_valency(self):
        code, out, err = run_quiet(["power", "--tv", "[1,6; 1/7]", "--k", "2"])
        self.assertEqual(code, EXIT_INVALID)
        self.assertEqual(out, "")
        self.assertEqual(len(err.strip().splitlines()), 1)

    def test_verify_mismatch(self):
        with patch("cli.management.commands.verify.BRTO_GOLDEN", BRTO_GOLDEN[1:]):
            code, out, _ = run_quiet(["verify", "brto"])
        self.assertEqual(code, EXIT_MISMATCH)
        self.assertIn("+ [1,2; 1/2 + 1/2 + 1/2 + 1/2]", out)


class HelperTests(SimpleTestCase):
    def test_structural_diff(self):
        self.assertEqual(structural_diff(["a", "b"], ["a", "b"]), [])
        self.assertEqual(structural_diff(["a", "b"], ["b", "c"]), ["- a", "+ c"])
        self.assertEqual(structural_diff(["a", "b"], ["b", "a"]), ["~ b", "~ a"])

    def test_table(self):
        self.assertEqual(table([["a", "bbb"], ["cc", "d"]]), ["a   bbb", "cc  d"])
        self.assertEqual(table([]), [])
