"""
Replays the classification results against the embedded expectations.

    brto         torus census with sphere quotient, and its irreducible part
    irr1         lift classification cross-checked with the companion search
    lemma-inv    h_{4g+2,2g+1} powers for 1 <= g <= --max-genus
    centralizer  trichotomy over the irreducible census for 2 <= g <= --max-genus
"""
import logging
from typing import Any, Dict, List, Tuple

from django.conf import settings
from django.core.exceptions import ValidationError

from census.centralizer import CentralizerClass, centralizer_structure
from census.companions import lemma_inv_sweep
from census.enumeration import EnumerationQuery, enumerate_census
from census.groups import coprime_powers
from census.schemas import census_entry_out, sweep_row_out
from cli.base import ValencyCommand, table
from cli.golden import (
    BRTO_GOLDEN,
    BRTO_IRREDUCIBLE,
    COMPANION_GOLDEN,
    IRR1_GOLDEN,
    structural_diff,
)
from cli.schemas import VerifyReportOut
from lifts.report import theorem1_report
from lifts.schemas import theorem_row_out
from valency.calculus import hnp, inverse
from valency.errors import describe

logger = logging.getLogger(__name__)

Result = Tuple[List[List[str]], List[Dict[str, Any]], List[str]]


class Command(ValencyCommand):
    help = "Verify a classification result: brto, irr1, lemma-inv or centralizer."

    def add_command_arguments(self, parser):
        parser.add_argument("target", choices=["brto", "irr1", "lemma-inv", "centralizer"])
        parser.add_argument("--max-genus", type=int, dest="max_genus")

    def run(self, **options):
        target = options["target"]
        max_genus = options.get("max_genus")
        if max_genus is not None and max_genus < 1:
            raise ValidationError(f"--max-genus must be at least 1, got {max_genus}", code="genus")

        handler = {
            "brto": self.verify_brto,
            "irr1": self.verify_irr1,
            "lemma-inv": self.verify_lemma_inv,
            "centralizer": self.verify_centralizer,
        }[target]
        lines, rows, diff = handler(max_genus)
        passed = not diff
        logger.info("verify %s rows=%s passed=%s", target, len(rows), passed)

        if self.as_json:
            report = VerifyReportOut(target=target, passed=passed, rows=rows, diff=diff)
            self.emit_json("verifyReport", report.model_dump())
        else:
            self.emit_lines(table(lines))
            self.stdout.write("PASS" if passed else "FAIL")
            self.emit_lines(diff)
        if not passed:
            raise self.mismatch(f"verify {target}: {len(diff)} difference(s)")

    @property
    def time_limit(self) -> float:
        return settings.VALENCY_SOLVER_TIME_LIMIT

    def _census(self, query: EnumerationQuery):
        return enumerate_census(
            query, time_limit_sec=self.time_limit, witness_from_oracle=settings.VALENCY_WITNESS_FROM_ORACLE
        )

    def verify_brto(self, max_genus) -> Result:
        sphere = self._census(EnumerationQuery(1, quotient_genus=0))
        irreducible = self._census(EnumerationQuery(1, require_irreducible=True))
        irreducible_set = {e.total_valency for e in irreducible}

        lines = [["total valency", "status", "witness", "irreducible"]]
        for e in sphere:
            lines.append([
                str(e.total_valency), e.status, str(e.realization or "-"),
                "yes" if e.total_valency in irreducible_set else "no",
            ])
        diff = structural_diff(BRTO_GOLDEN, [str(e.total_valency) for e in sphere])
        diff += [f"irreducible {line}" for line in structural_diff(
            BRTO_IRREDUCIBLE, [str(e.total_valency) for e in irreducible]
        )]
        rows = [census_entry_out(e).model_dump(by_alias=True) for e in sphere]
        return lines, rows, diff

    def verify_irr1(self, max_genus) -> Result:
        bound = max_genus if max_genus is not None else settings.VALENCY_COMPANION_MAX_GENUS
        if bound < 2:
            raise ValidationError(f"irr1 needs --max-genus >= 2, got {bound}", code="genus")
        report = theorem1_report(companion_max_genus=bound, time_limit_sec=self.time_limit)

        lines = [["kind", "genus", "order", "group", "names", "companion"]]
        for r in report.rows:
            lines.append([r.kind, str(r.genus), str(r.order), r.label, ", ".join(r.names), r.companion or "-"])

        diff = structural_diff(
            [f"{kind} g={genus} {label}" for kind, genus, label in IRR1_GOLDEN],
            [f"{r.kind} g={r.genus} {r.label}" for r in report.rows],
        )
        diff += [f"companion {line}" for line in structural_diff(
            [f"g={g} {text}" for g, text in COMPANION_GOLDEN if g <= bound],
            [f"g={c.genus} {c.generator}" for c in report.companions],
        )]
        diff += [f"unmatched companion {label}" for label in report.unmatched_companions]
        diff += [
            f"no companion for {r.label}"
            for r in report.rows
            if r.kind == "cyclic" and r.companion is None and r.genus <= bound
        ]
        rows = [theorem_row_out(r).model_dump() for r in report.rows]
        return lines, rows, diff

    def verify_lemma_inv(self, max_genus) -> Result:
        bound = max_genus if max_genus is not None else settings.VALENCY_LEMMA_INV_MAX_GENUS
        sweep = lemma_inv_sweep(bound)
        lines = [["genus", "square", "involution", "fixed", "quotient genus", "result"]]
        diff = []
        for row in sweep:
            lines.append([
                str(row.genus), str(row.square), str(row.involution),
                str(row.fixed_points), str(row.involution_quotient_genus), "ok" if row.passed else "FAIL",
            ])
            if not row.passed:
                diff.append(
                    f"g={row.genus}: square {row.square}, involution {row.involution} "
                    f"with {row.fixed_points} fixed points"
                )
        return lines, [sweep_row_out(r).model_dump() for r in sweep], diff

    def verify_centralizer(self, max_genus) -> Result:
        bound = max_genus if max_genus is not None else settings.VALENCY_CENTRALIZER_MAX_GENUS
        lines = [["genus", "entries", "distinct", "pair", "all-equal"]]
        rows: List[Dict[str, Any]] = []
        diff: List[str] = []

        torus = {hnp(3, 1), inverse(hnp(3, 1))}
        for t in sorted(torus, key=lambda t: t.sort_key):
            tag = centralizer_structure(t).tag
            if tag is not CentralizerClass.ALL_EQUAL:
                diff.append(f"g=1 {t}: {tag.value}, expected {CentralizerClass.ALL_EQUAL.value}")

        for g in range(2, bound + 1):
            pair_members = set(coprime_powers(hnp(2 * g + 1, 1))) | set(coprime_powers(hnp(2 * g + 2, 1)))
            counts = {tag: 0 for tag in CentralizerClass}
            entries = self._census(EnumerationQuery(g, require_irreducible=True))
            for entry in entries:
                t = entry.total_valency
                try:
                    tag = centralizer_structure(t).tag
                    inverse_tag = centralizer_structure(inverse(t)).tag
                except ValidationError as exc:
                    diff.append(f"g={g} {t}: {describe(exc)}")
                    continue
                counts[tag] += 1
                expected = CentralizerClass.PAIR if t in pair_members else CentralizerClass.DISTINCT
                if tag is not expected:
                    diff.append(f"g={g} {t}: {tag.value}, expected {expected.value}")
                if inverse_tag is not tag:
                    diff.append(f"g={g} {t}: inverse is {inverse_tag.value}")
            row = {
                "genus": g,
                "entries": len(entries),
                "distinct": counts[CentralizerClass.DISTINCT],
                "pair": counts[CentralizerClass.PAIR],
                "all_equal": counts[CentralizerClass.ALL_EQUAL],
            }
            rows.append(row)
            lines.append([str(row["genus"]), str(row["entries"]), str(row["distinct"]),
                          str(row["pair"]), str(row["all_equal"])])
        return lines, rows, diff
