"""
Shared plumbing for the valency management commands.

Payloads go to stdout only; diagnostics and ``--meta`` lines go to stderr.
Invalid input exits 2, verification mismatches exit 1.
"""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Any, Dict, Iterable, List

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.utils import timezone
from jsonschema import Draft7Validator

from cli.runner import EXIT_INVALID, EXIT_MISMATCH
from valency.codec import parse_total_valency
from valency.core import TotalValency
from valency.errors import EnumerationIncompleteError, describe
from valencylab import __version__


@lru_cache(maxsize=None)
def _schema_definitions() -> Dict[str, Any]:
    with open(settings.VALENCY_SCHEMA_PATH, encoding="utf-8") as fh:
        return json.load(fh)["definitions"]


@lru_cache(maxsize=None)
def payload_validator(name: str) -> Draft7Validator:
    return Draft7Validator({"definitions": _schema_definitions(), "$ref": f"#/definitions/{name}"})


def validate_payload(name: str, payload: Any) -> None:
    payload_validator(name).validate(payload)


def dump_json(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, sort_keys=True)


class ValencyCommand(BaseCommand):
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            choices=["text", "json"],
            default=settings.VALENCY_OUTPUT_FORMAT,
            help="Output format (default from VALENCY_OUTPUT_FORMAT).",
        )
        parser.add_argument("--meta", action="store_true", help="Write one JSON metadata line to stderr.")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def handle(self, *args, **options):
        self.output_format = options["format"]
        if options.get("meta"):
            self.stderr.write(dump_json({
                "command": self.command_name,
                "version": __version__,
                "format": self.output_format,
                "timestamp": timezone.now().isoformat(),
            }))
        try:
            self.run(**options)
        except ValidationError as exc:
            raise CommandError(describe(exc), returncode=EXIT_INVALID)
        except EnumerationIncompleteError as exc:
            raise CommandError(str(exc), returncode=EXIT_MISMATCH)

    def run(self, **options):
        raise NotImplementedError

    @property
    def as_json(self) -> bool:
        return self.output_format == "json"

    def total_valency(self, text: str) -> TotalValency:
        return parse_total_valency(text)

    def emit_json(self, name: str, payload: Any) -> None:
        if settings.VALENCY_VALIDATE_OUTPUT:
            validate_payload(name, payload)
        self.stdout.write(dump_json(payload))

    def emit_lines(self, lines: Iterable[str]) -> None:
        for line in lines:
            self.stdout.write(line)

    def mismatch(self, message: str) -> CommandError:
        return CommandError(message, returncode=EXIT_MISMATCH)


def table(rows: List[List[str]]) -> List[str]:
    if not rows:
        return []
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
