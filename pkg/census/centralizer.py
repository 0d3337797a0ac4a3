from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Optional, Tuple

from django.core.exceptions import ValidationError

from valency.calculus import hnp, is_irreducible, power
from valency.core import TotalValency

from .groups import group_label, hnp_name


class CentralizerClass(str, Enum):
    DISTINCT = "DISTINCT"
    ALL_EQUAL = "ALL_EQUAL"
    PAIR = "PAIR"


@dataclass(frozen=True)
class CentralizerReport:
    total_valency: TotalValency
    tag: CentralizerClass
    numerators: Tuple[int, ...]
    enclosing_group: str
    parity: Optional[str] = None
    hnp_exponent: Optional[int] = None


def normalized_numerators(t: TotalValency) -> Tuple[int, ...]:
    """θ_i·n/λ_i, the valencies over the common denominator n."""
    return tuple(v.theta * (t.order // v.lam) for v in t.valencies)


def centralizer_structure(t: TotalValency) -> CentralizerReport:
    """
    Trichotomy of an irreducible action by its three valency numerators.

    DISTINCT: every finite subgroup of the centralizer lies in ⟨f⟩.
    ALL_EQUAL: only on the torus, f is h_{3,1} or its square.
    PAIR: f is a power of h_{n,1}; odd n = 2g+1 sits in ⟨h_{4g+2,2g+1}⟩,
    even n = 2g+2 in ⟨h_{2g+2,1}, I⟩ with I the hyperelliptic involution.
    """
    if t.genus < 1:
        raise ValidationError(f"centralizer structure needs genus >= 1, got {t.genus}", code="genus")
    if not is_irreducible(t):
        raise ValidationError(f"{t} is reducible", code="reducible")
    n = t.order
    if lcm(*t.lambdas) != n:
        raise ValidationError(f"lcm of {list(t.lambdas)} is not the order {n}", code="harvey")

    nums = normalized_numerators(t)
    distinct = set(nums)
    if len(distinct) == 3:
        return CentralizerReport(t, CentralizerClass.DISTINCT, nums, group_label(t))
    if len(distinct) == 1:
        return CentralizerReport(t, CentralizerClass.ALL_EQUAL, nums, f"⟨{hnp_name(3, 1)}⟩")

    paired = next(a for a in nums if nums.count(a) == 2)
    exponent = pow(paired, -1, n)
    if power(hnp(n, 1), exponent) != t:
        raise ValidationError(f"{t} is not a power of {hnp_name(n, 1)}", code="harvey")
    g = t.genus
    if n % 2:
        return CentralizerReport(
            t, CentralizerClass.PAIR, nums, f"⟨{hnp_name(4 * g + 2, 2 * g + 1)}⟩", "odd", exponent
        )
    return CentralizerReport(
        t, CentralizerClass.PAIR, nums, f"⟨{hnp_name(2 * g + 2, 1)}, I⟩", "even", exponent
    )
