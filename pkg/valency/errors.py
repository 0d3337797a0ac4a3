from __future__ import annotations

from fractions import Fraction

from django.core.exceptions import ValidationError


class InconsistentValencyError(ValidationError):
    """Riemann-Hurwitz does not give a nonnegative integer quotient genus."""

    def __init__(self, message: str, quotient_genus: Fraction):
        super().__init__(message, code="riemann_hurwitz")
        self.quotient_genus = quotient_genus


class EnumerationIncompleteError(RuntimeError):
    """CP-SAT stopped on its time limit before the enumeration was proven complete."""


def describe(exc: ValidationError) -> str:
    return "; ".join(exc.messages)
