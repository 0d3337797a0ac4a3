"""
Exact value types of the valency calculus.

A periodic map f of order n on a closed oriented surface of genus g is recorded,
up to conjugacy, by its total valency [g, n; θ_1/λ_1 + ... + θ_s/λ_s]: one
valency per multiple orbit, where λ is the isotropy order of the orbit and θ is
the inverse mod λ of the numerator μ of the local clockwise 2πμ/λ rotation.
Free orbits are never stored.

Canonical order of a multiset: λ descending, then θ ascending.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Tuple

from django.core.exceptions import ValidationError

from .errors import InconsistentValencyError


def _require_int(value, name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer, got {value!r}", code="type")


@dataclass(frozen=True)
class Valency:
    theta: int
    lam: int

    def __post_init__(self):
        _require_int(self.theta, "theta")
        _require_int(self.lam, "lambda")
        if self.lam < 2:
            raise ValidationError(f"lambda must be at least 2, got {self.lam}", code="lambda_range")
        if not 1 <= self.theta <= self.lam - 1:
            raise ValidationError(
                f"theta must lie in [1, {self.lam - 1}], got {self.theta}", code="theta_range"
            )
        if gcd(self.theta, self.lam) != 1:
            raise ValidationError(
                f"theta and lambda must be coprime, gcd({self.theta}, {self.lam}) = {gcd(self.theta, self.lam)}",
                code="coprime",
            )

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Valency":
        return cls(value.numerator, value.denominator)

    @property
    def mu(self) -> int:
        """Local rotation numerator, μθ ≡ 1 (mod λ)."""
        return pow(self.theta, -1, self.lam)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.theta, self.lam)

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (-self.lam, self.theta)

    def inverted(self) -> "Valency":
        return Valency(self.lam - self.theta, self.lam)

    def __str__(self) -> str:
        return f"{self.theta}/{self.lam}"


def rh_quotient_genus(genus: int, order: int, lambdas: Iterable[int]) -> Fraction:
    """
    Solve 2g - 2 = n (2g' - 2 + Σ (1 - 1/λ_i)) for g' exactly.

    No validation: the value may be negative or non-integral.
    """
    branch = sum((1 - Fraction(1, lam) for lam in lambdas), Fraction(0))
    return (Fraction(2 * genus - 2, order) + 2 - branch) / 2


def valency_sum(valencies: Iterable[Valency]) -> Fraction:
    return sum((v.fraction for v in valencies), Fraction(0))


@dataclass(frozen=True)
class QuotientSignature:
    quotient_genus: int
    branch_indices: Tuple[int, ...]

    def __str__(self) -> str:
        indices = ", ".join(str(lam) for lam in self.branch_indices)
        return f"quotient_genus={self.quotient_genus} branch_indices=[{indices}]"


@dataclass(frozen=True)
class TotalValency:
    genus: int
    order: int
    valencies: Tuple[Valency, ...] = ()

    def __post_init__(self):
        _require_int(self.genus, "genus")
        _require_int(self.order, "order")
        if self.genus < 0:
            raise ValidationError(f"genus must be nonnegative, got {self.genus}", code="genus")
        if self.order < 1:
            raise ValidationError(f"order must be positive, got {self.order}", code="order")
        ordered = tuple(sorted(self.valencies, key=lambda v: v.sort_key))
        object.__setattr__(self, "valencies", ordered)
        for v in ordered:
            if self.order % v.lam:
                raise ValidationError(
                    f"isotropy {v.lam} of valency {v} does not divide the order {self.order}",
                    code="divides",
                )
        total = valency_sum(ordered)
        if total.denominator != 1:
            raise ValidationError(
                f"valencies sum to {total}, which is not an integer", code="nielsen"
            )
        quotient_genus = rh_quotient_genus(self.genus, self.order, self.lambdas)
        if quotient_genus.denominator != 1 or quotient_genus < 0:
            raise InconsistentValencyError(
                f"Riemann-Hurwitz gives quotient genus {quotient_genus} for "
                f"genus {self.genus}, order {self.order}, indices {list(self.lambdas)}",
                quotient_genus,
            )

    @property
    def lambdas(self) -> Tuple[int, ...]:
        return tuple(v.lam for v in self.valencies)

    @property
    def size(self) -> int:
        return len(self.valencies)

    @property
    def quotient_genus(self) -> int:
        return int(rh_quotient_genus(self.genus, self.order, self.lambdas))

    @property
    def sort_key(self) -> Tuple[int, int, Tuple[Tuple[int, int], ...]]:
        return (self.genus, self.order, tuple(v.sort_key for v in self.valencies))

    def counts(self) -> List[Tuple[Valency, int]]:
        out: List[Tuple[Valency, int]] = []
        for v in self.valencies:
            if out and out[-1][0] == v:
                out[-1] = (v, out[-1][1] + 1)
            else:
                out.append((v, 1))
        return out

    def __str__(self) -> str:
        body = " + ".join(str(v) for v in self.valencies) or "0"
        return f"[{self.genus},{self.order}; {body}]"


def identity_datum(genus: int) -> TotalValency:
    return TotalValency(genus, 1, ())
