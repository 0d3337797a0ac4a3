"""
Text and JSON forms of a total valency.

Text: ``[g,n; t1/l1 + t2/l2 + ...]``, canonical order, ``0`` for the empty
multiset. Parsing also accepts ``∅`` or an empty body and a ``×c`` / ``*c``
multiplicity suffix per term.

JSON: ``{"genus", "order", "valencies": [{"theta", "lambda", "count"}], "quotient_genus"}``.
"""
from __future__ import annotations

import json
import re
from typing import Any, Dict, List, Union

from django.core.exceptions import ValidationError
from pydantic import ValidationError as SchemaError

from .core import TotalValency, Valency
from .schemas import TotalValencyOut

_BRACKET = re.compile(r"^\s*\[\s*(\d+)\s*,\s*(\d+)\s*;(.*)\]\s*$", re.S)
_TERM = re.compile(r"^(\d+)\s*/\s*(\d+)\s*(?:[×*x]\s*(\d+))?$")
_EMPTY = {"", "0", "∅"}


def render_text(t: TotalValency) -> str:
    return str(t)


def parse_text(text: str) -> TotalValency:
    match = _BRACKET.match(text or "")
    if not match:
        raise ValidationError(f"malformed total valency {text!r}, expected '[g,n; t/l + ...]'", code="parse")
    genus, order, body = int(match.group(1)), int(match.group(2)), match.group(3).strip()
    valencies: List[Valency] = []
    if body not in _EMPTY:
        for raw in body.split("+"):
            term = _TERM.match(raw.strip())
            if not term:
                raise ValidationError(f"malformed valency term {raw.strip()!r} in {text!r}", code="parse")
            count = int(term.group(3) or 1)
            if count < 1:
                raise ValidationError(f"valency count must be positive in {raw.strip()!r}", code="parse")
            valencies.extend([Valency(int(term.group(1)), int(term.group(2)))] * count)
    return TotalValency(genus, order, tuple(valencies))


def to_schema(t: TotalValency) -> TotalValencyOut:
    return TotalValencyOut(
        genus=t.genus,
        order=t.order,
        valencies=[
            {"theta": v.theta, "lambda": v.lam, "count": count}
            for v, count in t.counts()
        ],
        quotient_genus=t.quotient_genus,
    )


def to_json_dict(t: TotalValency) -> Dict[str, Any]:
    return to_schema(t).model_dump(by_alias=True)


def render_json(t: TotalValency) -> str:
    return json.dumps(to_json_dict(t), ensure_ascii=False)


def parse_json(data: Union[str, Dict[str, Any]]) -> TotalValency:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"malformed JSON total valency: {exc.msg}", code="parse")
    try:
        parsed = TotalValencyOut.model_validate(data)
    except SchemaError as exc:
        raise ValidationError(f"malformed JSON total valency: {exc.errors()[0]['msg']}", code="parse")
    valencies: List[Valency] = []
    for item in parsed.valencies:
        if item.count < 1:
            raise ValidationError(f"valency count must be positive, got {item.count}", code="parse")
        valencies.extend([Valency(item.theta, item.lambda_)] * item.count)
    t = TotalValency(parsed.genus, parsed.order, tuple(valencies))
    if parsed.quotient_genus is not None and parsed.quotient_genus != t.quotient_genus:
        raise ValidationError(
            f"quotient_genus {parsed.quotient_genus} disagrees with Riemann-Hurwitz ({t.quotient_genus})",
            code="riemann_hurwitz",
        )
    return t


def parse_total_valency(text: str) -> TotalValency:
    if (text or "").lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)
