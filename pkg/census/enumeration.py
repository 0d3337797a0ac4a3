"""
Census of admissible total valencies.

For a genus g and each order n the search runs over quotient genera g' with
R = (2g - 2)/n + 2 - 2g' >= 0, builds every non-increasing multiset of
isotropy orders λ | n (λ >= 2) with Σ (1 - 1/λ) = R, keeps those passing
Harvey's conditions (for g = 1 only M = n on a sphere quotient) and asks the
CP-SAT solver for the θ multisets satisfying Nielsen integrality.

Without an explicit order the search covers 2 <= n <= 4g + 2.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, Iterator, List, Optional, Tuple

from django.core.exceptions import ValidationError

from polygon.surface import build_surface, oracle_total_valency
from valency.calculus import harvey_check, hnp, hnp_genus, is_irreducible, nielsen_check, power
from valency.core import TotalValency, Valency

from .solver import DEFAULT_TIME_LIMIT, solve_theta_tuples

logger = logging.getLogger(__name__)


def default_max_order(genus: int) -> int:
    return 4 * genus + 2


@dataclass(frozen=True)
class EnumerationQuery:
    genus: int
    order: Optional[int] = None
    quotient_genus: Optional[int] = None
    require_irreducible: bool = False
    max_order: Optional[int] = None

    def __post_init__(self):
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 1:
            raise ValidationError(f"census needs genus >= 1, got {self.genus!r}", code="genus")
        if self.order is not None and self.order < 2:
            raise ValidationError(f"census order must be at least 2, got {self.order}", code="order")
        if self.max_order is not None and self.max_order < 2:
            raise ValidationError(f"max order must be at least 2, got {self.max_order}", code="order")
        if self.quotient_genus is not None and self.quotient_genus < 0:
            raise ValidationError(
                f"quotient genus must be nonnegative, got {self.quotient_genus}", code="range"
            )

    def orders(self) -> List[int]:
        if self.order is not None:
            return [self.order]
        bound = self.max_order if self.max_order is not None else default_max_order(self.genus)
        return list(range(2, bound + 1))

    def quotient_genera(self, order: int) -> List[int]:
        top = (Fraction(2 * self.genus - 2, order) + 2) / 2
        if top < 0:
            return []
        candidates = range(0, int(top) + 1)
        if self.require_irreducible:
            candidates = [0]
        if self.quotient_genus is not None:
            candidates = [g for g in candidates if g == self.quotient_genus]
        return list(candidates)


@dataclass(frozen=True)
class Witness:
    n: int
    p: int
    k: int

    def __str__(self) -> str:
        return f"h_{{{self.n},{self.p}}}^{self.k}"


@dataclass(frozen=True)
class CensusEntry:
    total_valency: TotalValency
    flags: Dict[str, bool] = field(hash=False, compare=False)
    realization: Optional[Witness] = None

    @property
    def status(self) -> str:
        return "realized" if self.realization else "admissible"


def _divisors_desc(n: int) -> List[int]:
    return [d for d in range(n, 1, -1) if n % d == 0]


def index_multisets(order: int, target: Fraction) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of divisors λ >= 2 of ``order`` with Σ (1 - 1/λ) == target."""
    divisors = _divisors_desc(order)

    def walk(start: int, remaining: Fraction, acc: List[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        # every term contributes at least 1/2
        if remaining < Fraction(1, 2):
            return
        for idx in range(start, len(divisors)):
            lam = divisors[idx]
            term = 1 - Fraction(1, lam)
            if term > remaining:
                continue
            acc.append(lam)
            yield from walk(idx, remaining - term, acc)
            acc.pop()

    if target < 0:
        return
    yield from walk(0, target, [])


def passes_structure_filter(genus: int, order: int, quotient_genus: int, lambdas: Tuple[int, ...]) -> bool:
    if genus > 1:
        return harvey_check(order, quotient_genus, lambdas)
    # Harvey assumes g > 1; on the torus only M = n for a sphere quotient is kept
    if quotient_genus == 0:
        return lcm(*lambdas) == order
    return True


@lru_cache(maxsize=None)
def _witness_index(genus: int, from_oracle: bool) -> Dict[TotalValency, Witness]:
    index: Dict[TotalValency, Witness] = {}
    for n in range(3, default_max_order(genus) + 1):
        for p in range(1, n):
            if hnp_genus(n, p) != genus:
                continue
            base = hnp(n, p)
            surface = build_surface(n, p) if from_oracle else None
            for k in range(1, n):
                t = oracle_total_valency(surface, k) if from_oracle else power(base, k)
                index.setdefault(t, Witness(n, p, k))
    return index


def identify_hnp_power(t: TotalValency, from_oracle: bool = False) -> Optional[Witness]:
    """First (n, p, k) in lexicographic order with hnp(n, p)^k == t and n <= 4g + 2."""
    return _witness_index(t.genus, from_oracle).get(t)


def enumerate_census(query: EnumerationQuery, time_limit_sec: float = DEFAULT_TIME_LIMIT,
                     witness_from_oracle: bool = False) -> List[CensusEntry]:
    g = query.genus
    found: Dict[TotalValency, CensusEntry] = {}
    for n in query.orders():
        for g_quot in query.quotient_genera(n):
            target = Fraction(2 * g - 2, n) + 2 - 2 * g_quot
            for lambdas in index_multisets(n, target):
                if query.require_irreducible and len(lambdas) != 3:
                    continue
                harvey = passes_structure_filter(g, n, g_quot, lambdas)
                logger.debug("order=%s quotient_genus=%s indices=%s structure=%s", n, g_quot, lambdas, harvey)
                if not harvey:
                    continue
                for thetas in solve_theta_tuples(n, lambdas, multiset=True, time_limit_sec=time_limit_sec):
                    valencies = tuple(Valency(th, lam) for th, lam in zip(thetas, lambdas))
                    t = TotalValency(g, n, valencies)
                    if t in found:
                        continue
                    found[t] = CensusEntry(
                        total_valency=t,
                        flags={
                            "nielsen": nielsen_check(valencies),
                            "harvey": harvey,
                            "irreducible": is_irreducible(t),
                        },
                        realization=identify_hnp_power(t, from_oracle=witness_from_oracle),
                    )
    entries = sorted(found.values(), key=lambda e: e.total_valency.sort_key)
    logger.info("census genus=%s orders=%s entries=%s", g, len(query.orders()), len(entries))
    return entries
