"""
Closed-form operations of the valency calculus.

All functions are pure and work in exact arithmetic (int, Fraction).
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence

from django.core.exceptions import ValidationError

from .core import (
    QuotientSignature,
    TotalValency,
    Valency,
    identity_datum,
    rh_quotient_genus,
    valency_sum,
)
from .errors import InconsistentValencyError


# (n, p) -> note; quoted values that disagree with the genus formula
KNOWN_DISCREPANCIES = {
    (12, 2): "h_{12,2} is quoted elsewhere with genus 3; the genus formula and Riemann-Hurwitz give 4",
}


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


def make_valency(theta: int, lam: int) -> Valency:
    return Valency(theta, lam)


def hnp_genus(n: int, p: int) -> int:
    return (n - gcd(n, p) - gcd(n, p + 1) + 1) // 2


def hnp(n: int, p: int) -> TotalValency:
    """
    Total valency of h_{n,p}, the rotation by 2π/n of the 2n-gon with α_i ~ β_j for i - j ≡ p.

    [g, n; 1/n + p/n + (n-p-1)/n], fractions reduced, integral entries dropped.
    """
    if isinstance(n, bool) or not isinstance(n, int) or isinstance(p, bool) or not isinstance(p, int):
        raise ValidationError("n and p must be integers", code="type")
    if n < 3:
        raise ValidationError(f"h_{{n,p}} needs n >= 3, got n = {n}", code="range")
    if not 1 <= p <= n - 1:
        raise ValidationError(f"h_{{n,p}} needs 1 <= p <= n - 1, got p = {p}", code="range")
    parts = [Fraction(1, n), Fraction(p, n), Fraction(n - p - 1, n)]
    valencies = [Valency.from_fraction(fr) for fr in parts if fr.denominator != 1]
    return TotalValency(hnp_genus(n, p), n, tuple(valencies))


def hnp_notes(n: int, p: int) -> List[str]:
    note = KNOWN_DISCREPANCIES.get((n, p))
    return [note] if note else []


def power(t: TotalValency, k: int) -> TotalValency:
    """
    Total valency of f^k for f with total valency t.

    With n = t.order, d = gcd(n, k): an orbit θ/λ (period n/λ) splits into
    d·λ'/λ orbits of isotropy λ' = n / lcm(d, n/λ) and valency θ·(k/d)^{-1} mod λ'.
    Orbits with λ' = 1 become free and are dropped.
    """
    if isinstance(k, bool) or not isinstance(k, int):
        raise ValidationError("exponent must be an integer", code="type")
    if k < 0:
        raise ValidationError(f"exponent must be nonnegative, got {k}", code="exponent")
    n = t.order
    k %= n
    if k == 0:
        return identity_datum(t.genus)
    d = gcd(n, k)
    unit = k // d
    out: List[Valency] = []
    for v in t.valencies:
        lam = n // lcm(d, n // v.lam)
        if lam == 1:
            continue
        theta = (v.theta * pow(unit, -1, lam)) % lam
        out.extend([Valency(theta, lam)] * (d * lam // v.lam))
    return TotalValency(t.genus, n // d, tuple(out))


def inverse(t: TotalValency) -> TotalValency:
    return TotalValency(t.genus, t.order, tuple(v.inverted() for v in t.valencies))


def quotient_signature(t: TotalValency) -> QuotientSignature:
    quotient_genus = rh_quotient_genus(t.genus, t.order, t.lambdas)
    if quotient_genus.denominator != 1 or quotient_genus < 0:
        raise InconsistentValencyError(
            f"Riemann-Hurwitz gives quotient genus {quotient_genus} for {t}", quotient_genus
        )
    return QuotientSignature(int(quotient_genus), t.lambdas)


def nielsen_check(valencies: Iterable[Valency]) -> bool:
    return valency_sum(valencies).denominator == 1


def harvey_check(n: int, quotient_genus: int, indices: Sequence[int]) -> bool:
    """
    Harvey's conditions on the branch indices of a cyclic action of order n:
    (i) omitting any one index leaves the lcm M unchanged, (ii) M | n and M = n
    for a sphere quotient, (iii) s != 1 and s >= 3 for a sphere quotient.
    """
    indices = list(indices)
    s = len(indices)
    m = lcm(*indices)
    for i in range(s):
        if lcm(*(indices[:i] + indices[i + 1:])) != m:
            return False
    if n % m:
        return False
    if quotient_genus == 0 and m != n:
        return False
    if s == 1:
        return False
    if quotient_genus == 0 and s < 3:
        return False
    return True


def is_irreducible(t: TotalValency) -> bool:
    # the identity preserves every curve system
    if t.order < 2:
        return False
    return quotient_signature(t).quotient_genus == 0 and t.size == 3


def is_involution_datum(t: TotalValency) -> bool:
    return t.order == 2


def involution_quotient_genus(t: TotalValency) -> int:
    if not is_involution_datum(t):
        raise ValidationError(f"{t} is not an involution (order {t.order})", code="not_involution")
    return quotient_signature(t).quotient_genus


def is_conjugate(a: TotalValency, b: TotalValency) -> bool:
    return a == b


def standard_order_for_genus(g: int, parity: Parity | str) -> int:
    if g < 1:
        raise ValidationError(f"genus must be at least 1, got {g}", code="genus")
    try:
        parity = Parity(parity)
    except ValueError:
        raise ValidationError(f"parity must be 'odd' or 'even', got {parity!r}", code="parity")
    return 2 * g + 1 if parity is Parity.ODD else 2 * g + 2
