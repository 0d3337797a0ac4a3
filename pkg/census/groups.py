"""
Group-level identity of cyclic actions.

Two total valencies generate conjugate cyclic groups exactly when one is a
power of the other with exponent coprime to the order, so a group is keyed by
the smallest member of ``coprime_powers`` in census order.
"""
from __future__ import annotations

from math import gcd
from typing import List, Tuple

from valency.calculus import hnp, hnp_genus, power
from valency.core import TotalValency


def coprime_powers(t: TotalValency) -> List[TotalValency]:
    if t.order == 1:
        return [t]
    members = {power(t, u) for u in range(1, t.order) if gcd(u, t.order) == 1}
    return sorted(members, key=lambda m: m.sort_key)


def group_representative(t: TotalValency) -> TotalValency:
    return coprime_powers(t)[0]


def group_key(t: TotalValency) -> Tuple:
    return group_representative(t).sort_key


def hnp_aliases(t: TotalValency) -> List[int]:
    """Every p with hnp(t.order, p) generating the same cyclic group as t."""
    n = t.order
    if n < 3:
        return []
    members = set(coprime_powers(t))
    return [p for p in range(1, n) if hnp_genus(n, p) == t.genus and hnp(n, p) in members]


def preferred_alias(n: int, aliases: List[int]) -> int:
    for p in aliases:
        if gcd(n, p) == 1:
            return p
    return min(aliases)


def hnp_name(n: int, p: int) -> str:
    return f"h_{{{n},{p}}}"


def group_label(t: TotalValency) -> str:
    aliases = hnp_aliases(t)
    if not aliases:
        return f"⟨{group_representative(t)}⟩"
    return f"⟨{hnp_name(t.order, preferred_alias(t.order, aliases))}⟩"


def group_generator(t: TotalValency) -> TotalValency:
    """hnp(n, min alias) when the group has an h_{n,p} name, otherwise the representative."""
    aliases = hnp_aliases(t)
    if aliases:
        return hnp(t.order, min(aliases))
    return group_representative(t)
