"""
Irreducible actions whose middle power is an involution with torus quotient,
and the sweep over the h_{4g+2,2g+1} family.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from django.core.exceptions import ValidationError

from valency.calculus import hnp, involution_quotient_genus, is_conjugate, power
from valency.core import TotalValency

from .enumeration import EnumerationQuery, enumerate_census
from .groups import coprime_powers, group_generator, group_key, group_label, hnp_aliases
from .solver import DEFAULT_TIME_LIMIT

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompanionRecord:
    genus: int
    generator: TotalValency
    involution: TotalValency
    involution_quotient_genus: int
    label: str
    aliases: Tuple[int, ...]
    members: Tuple[TotalValency, ...]


def companion_involution(t: TotalValency) -> TotalValency:
    if t.order % 2:
        raise ValidationError(f"{t} has odd order and no involution power", code="order")
    return power(t, t.order // 2)


def search_involution_companions(g_min: int, g_max: int,
                                 time_limit_sec: float = DEFAULT_TIME_LIMIT) -> List[CompanionRecord]:
    if g_min < 2 or g_max < g_min:
        raise ValidationError(f"companion search needs 2 <= g_min <= g_max, got [{g_min}, {g_max}]", code="genus")
    records: List[CompanionRecord] = []
    for genus in range(g_min, g_max + 1):
        seen: Dict[Tuple, CompanionRecord] = {}
        for entry in enumerate_census(EnumerationQuery(genus, require_irreducible=True), time_limit_sec=time_limit_sec):
            t = entry.total_valency
            if t.order % 2:
                continue
            inv = companion_involution(t)
            if involution_quotient_genus(inv) != 1:
                continue
            key = group_key(t)
            if key in seen:
                continue
            generator = group_generator(t)
            seen[key] = CompanionRecord(
                genus=genus,
                generator=generator,
                involution=companion_involution(generator),
                involution_quotient_genus=1,
                label=group_label(t),
                aliases=tuple(hnp_aliases(t)),
                members=tuple(coprime_powers(t)),
            )
        hits = sorted(seen.values(), key=lambda r: (r.generator.order, r.aliases))
        logger.info("companion search genus=%s hits=%s", genus, [r.label for r in hits])
        records.extend(hits)
    return records


@dataclass(frozen=True)
class SweepRow:
    genus: int
    square: TotalValency
    square_matches: bool
    involution: TotalValency
    fixed_points: int
    involution_quotient_genus: int

    @property
    def passed(self) -> bool:
        return (
            self.square_matches
            and self.involution.order == 2
            and self.fixed_points == 2 * self.genus + 2
            and self.involution_quotient_genus == 0
        )


def lemma_inv_sweep(g_max: int) -> List[SweepRow]:
    """
    For 1 <= g <= g_max: h_{4g+2,2g+1}^{2g} is h_{2g+1,1} and
    h_{4g+2,2g+1}^{2g+1} is a hyperelliptic involution.
    """
    if g_max < 1:
        raise ValidationError(f"sweep needs g_max >= 1, got {g_max}", code="genus")
    rows: List[SweepRow] = []
    for g in range(1, g_max + 1):
        h = hnp(4 * g + 2, 2 * g + 1)
        square = power(h, 2 * g)
        inv = power(h, 2 * g + 1)
        rows.append(SweepRow(
            genus=g,
            square=square,
            square_matches=is_conjugate(square, hnp(2 * g + 1, 1)),
            involution=inv,
            fixed_points=inv.size,
            involution_quotient_genus=involution_quotient_genus(inv),
        ))
    failed = [r.genus for r in rows if not r.passed]
    logger.info("h_{4g+2,2g+1} sweep up to genus %s: %s rows, failed %s", g_max, len(rows), failed)
    return rows
