from typing import List, Optional

from ninja import Schema
from pydantic import Field


class ValencyCountOut(Schema):
    theta: int
    lambda_: int = Field(..., alias="lambda")
    count: int


class TotalValencyOut(Schema):
    genus: int
    order: int
    valencies: List[ValencyCountOut]
    quotient_genus: Optional[int] = None


class HnpOut(Schema):
    n: int
    p: int
    total_valency: TotalValencyOut
    text: str
    notes: List[str] = []


class QuotientSignatureOut(Schema):
    quotient_genus: int
    branch_indices: List[int]


class CheckOut(Schema):
    check: str
    result: bool
    detail: dict = {}
