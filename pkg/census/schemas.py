from typing import Dict, List, Optional

from ninja import Schema

from valency.codec import to_json_dict
from valency.schemas import TotalValencyOut


class WitnessOut(Schema):
    n: int
    p: int
    k: int


class CensusEntryOut(Schema):
    total_valency: TotalValencyOut
    text: str
    flags: Dict[str, bool]
    status: str  # realized | admissible
    realization: Optional[WitnessOut] = None


class SweepRowOut(Schema):
    genus: int
    square: str
    square_matches: bool
    involution: str
    fixed_points: int
    involution_quotient_genus: int
    passed: bool


class CentralizerOut(Schema):
    total_valency: str
    tag: str
    numerators: List[int]
    enclosing_group: str
    parity: Optional[str] = None
    hnp_exponent: Optional[int] = None


def census_entry_out(entry) -> CensusEntryOut:
    w = entry.realization
    return CensusEntryOut(
        total_valency=to_json_dict(entry.total_valency),
        text=str(entry.total_valency),
        flags=dict(entry.flags),
        status=entry.status,
        realization=WitnessOut(n=w.n, p=w.p, k=w.k) if w else None,
    )


def sweep_row_out(row) -> SweepRowOut:
    return SweepRowOut(
        genus=row.genus,
        square=str(row.square),
        square_matches=row.square_matches,
        involution=str(row.involution),
        fixed_points=row.fixed_points,
        involution_quotient_genus=row.involution_quotient_genus,
        passed=row.passed,
    )


def centralizer_out(report) -> CentralizerOut:
    return CentralizerOut(
        total_valency=str(report.total_valency),
        tag=report.tag.value,
        numerators=list(report.numerators),
        enclosing_group=report.enclosing_group,
        parity=report.parity,
        hnp_exponent=report.hnp_exponent,
    )
