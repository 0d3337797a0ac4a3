from typing import Any, Dict, List, Optional

from ninja import Schema

from valency.schemas import TotalValencyOut


class OracleOut(Schema):
    n: int
    p: int
    k: int
    genus: int
    total_valency: TotalValencyOut
    text: str
    closed_form: str
    match: Optional[bool] = None


class VerifyReportOut(Schema):
    target: str
    passed: bool
    rows: List[Dict[str, Any]]
    diff: List[str] = []
