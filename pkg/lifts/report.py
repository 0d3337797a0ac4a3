"""
Classification of irreducible actions commuting with a torus-quotient involution.

Runs every candidate branch locus of the irreducible torus bases h_{4,1},
h_{6,3}, h_{3,1} and their inverses through the lift classifier, merges the
results per group and cross-checks them against the companion search.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from census.companions import CompanionRecord, search_involution_companions
from census.groups import group_key, hnp_aliases, hnp_name
from census.solver import DEFAULT_TIME_LIMIT
from valency.calculus import hnp, inverse
from valency.core import TotalValency

from .classifier import LiftProblem, LiftVerdict, candidate_branch_loci, classify_lift

logger = logging.getLogger(__name__)


def torus_bases() -> List[Tuple[str, TotalValency]]:
    out = []
    for n, p in ((4, 1), (6, 3), (3, 1)):
        t = hnp(n, p)
        out.append((hnp_name(n, p), t))
        out.append((f"{hnp_name(n, p)}^-1", inverse(t)))
    return out


@dataclass
class TheoremRow:
    kind: str  # cyclic | non-cyclic
    label: str
    genus: int
    generator: TotalValency
    aliases: List[int]
    members: List[TotalValency] = field(default_factory=list)
    sources: List[str] = field(default_factory=list)
    audits: List[str] = field(default_factory=list)
    companion: Optional[str] = None

    @property
    def order(self) -> int:
        return self.generator.order

    @property
    def names(self) -> List[str]:
        return [hnp_name(self.order, p) for p in self.aliases]


@dataclass
class TheoremReport:
    rows: List[TheoremRow]
    companions: List[CompanionRecord]
    unmatched_companions: List[str]
    rows_without_companion: List[str]

    @property
    def cross_check_passed(self) -> bool:
        return not self.unmatched_companions and not self.rows_without_companion


def theorem1_report(companion_max_genus: int = 10, time_limit_sec: float = DEFAULT_TIME_LIMIT) -> TheoremReport:
    rows: Dict[object, TheoremRow] = {}
    for base_name, base in torus_bases():
        for locus in candidate_branch_loci(base):
            outcome = classify_lift(LiftProblem(base, locus), time_limit_sec=time_limit_sec)
            source = f"{base_name} {outcome.problem.describe()}"
            trail = f"{source}: {outcome.verdict.value}; " + "; ".join(str(step) for step in outcome.audit)
            if outcome.verdict is LiftVerdict.CYCLIC_LIFTS:
                for grp in outcome.groups:
                    row = rows.setdefault(grp.key, TheoremRow(
                        kind="cyclic",
                        label=grp.label,
                        genus=grp.generator.genus,
                        generator=grp.generator,
                        aliases=list(grp.aliases),
                    ))
                    for member in grp.members:
                        if member not in row.members:
                            row.members.append(member)
                    row.sources.append(source)
                    row.audits.append(trail)
            elif outcome.verdict is LiftVerdict.NON_CYCLIC_LIFT:
                up = outcome.upstairs
                row = rows.setdefault(outcome.enclosing_group, TheoremRow(
                    kind="non-cyclic",
                    label=outcome.enclosing_group,
                    genus=up.genus,
                    generator=hnp(2 * up.genus + 2, 1),
                    aliases=hnp_aliases(hnp(2 * up.genus + 2, 1)),
                ))
                if up not in row.members:
                    row.members.append(up)
                row.sources.append(source)
                row.audits.append(trail + f"; {outcome.companion.description}")
            else:
                logger.debug("%s", trail)

    companions = search_involution_companions(2, companion_max_genus, time_limit_sec=time_limit_sec)
    unmatched = []
    for record in companions:
        key = group_key(record.generator)
        match = rows.get(key)
        if match is None:
            match = next(
                (r for r in rows.values() if r.kind == "non-cyclic" and group_key(r.generator) == key), None
            )
        if match is None:
            unmatched.append(record.label)
        else:
            match.companion = record.label
    missing = [r.label for r in rows.values() if r.kind == "cyclic" and r.companion is None]

    ordered = sorted(rows.values(), key=lambda r: (r.kind != "non-cyclic", r.order, min(r.aliases or [0])))
    for r in ordered:
        r.members.sort(key=lambda m: m.sort_key)
    logger.info("classification rows=%s unmatched=%s missing=%s", [r.label for r in ordered], unmatched, missing)
    return TheoremReport(ordered, companions, unmatched, missing)
