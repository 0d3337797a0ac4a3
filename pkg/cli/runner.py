"""
Entry point of ``python -m cli``: maps the public subcommands onto the
management commands of this project and returns the process exit code.
"""
import os
import sys
from typing import List, Optional

EXIT_MISMATCH = 1
EXIT_INVALID = 2

SUBCOMMANDS = {
    "hnp": "hnp",
    "power": "power",
    "inverse": "inverse",
    "quotient": "quotient",
    # Django's own `check` is used by the test runner
    "check": "valencycheck",
    "enumerate": "enumerate",
    "oracle": "oracle",
    "verify": "verify",
    "centralizer": "centralizer",
}

USAGE = "usage: python -m cli {" + "|".join(SUBCOMMANDS) + "} [options]"


def run(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS:
        given = argv[0] if argv else ""
        sys.stderr.write(f"unknown subcommand {given!r}\n{USAGE}\n" if given else f"{USAGE}\n")
        return EXIT_INVALID

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "valencylab.settings")
    from django.core.management import execute_from_command_line

    try:
        execute_from_command_line(["manage.py", SUBCOMMANDS[argv[0]], *argv[1:]])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    return 0
