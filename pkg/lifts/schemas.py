from typing import List, Optional

from ninja import Schema


class TheoremRowOut(Schema):
    kind: str
    label: str
    genus: int
    order: int
    generator: str
    names: List[str]
    members: List[str]
    sources: List[str]
    audits: List[str]
    companion: Optional[str] = None


def theorem_row_out(row) -> TheoremRowOut:
    return TheoremRowOut(
        kind=row.kind,
        label=row.label,
        genus=row.genus,
        order=row.order,
        generator=str(row.generator),
        names=row.names,
        members=[str(m) for m in row.members],
        sources=list(row.sources),
        audits=list(row.audits),
        companion=row.companion,
    )
