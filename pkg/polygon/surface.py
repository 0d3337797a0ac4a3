"""
Combinatorial 2n-gon surfaces and the rotation acting on them.

Slot layout (documented once, used everywhere below):

- the 2n edge slots are numbered counterclockwise; slot 2i is β_i and slot
  2i+1 is α_i;
- α_i is glued to β_j with j = (i - p) mod n, orientation reversed, so
  ``pair[2i+1] = 2((i - p) mod n)`` and back;
- corner c_s is the start (counterclockwise) of slot s. Gluing slot s to
  pair[s] identifies c_s with c_{pair[s]+1}; following this map walks the
  corners of one vertex in clockwise order;
- the basic rotation turns the polygon clockwise by one sector, sending
  slot s and corner c_s to s - 2 (mod 2n);
- the barycenter ("center") is surrounded by n sectors; rotation^k moves
  them k steps along that cycle.

Nothing here uses the closed forms of ``valency.calculus``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from django.core.exceptions import ValidationError

from valency.core import TotalValency, Valency

logger = logging.getLogger(__name__)


class OracleInvariantError(RuntimeError):
    """The polygon construction met a combinatorial inconsistency."""


@dataclass(frozen=True)
class PolygonSurface:
    n: int
    p: int
    edge_pairing: Tuple[int, ...]
    corner_cycles: Tuple[Tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.corner_cycles)

    @property
    def euler_characteristic(self) -> int:
        # V - E + F with E = n, F = 1
        return self.vertex_count - self.n + 1

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    def vertex_of(self) -> Dict[int, int]:
        return {c: idx for idx, cycle in enumerate(self.corner_cycles) for c in cycle}


@dataclass(frozen=True)
class CellOrbit:
    kind: str  # center | vertex | edge
    representative: int
    period: int
    isotropy: int
    valency: Optional[Valency]

    @property
    def is_free(self) -> bool:
        return self.valency is None

    def label(self) -> str:
        if self.kind == "center":
            return "center"
        return f"{self.kind}:{self.representative}"


def build_surface(n: int, p: int) -> PolygonSurface:
    if isinstance(n, bool) or not isinstance(n, int) or isinstance(p, bool) or not isinstance(p, int):
        raise ValidationError("n and p must be integers", code="type")
    if n < 3:
        raise ValidationError(f"polygon needs n >= 3, got n = {n}", code="range")
    if not 1 <= p <= n - 1:
        raise ValidationError(f"polygon needs 1 <= p <= n - 1, got p = {p}", code="range")

    slots = 2 * n
    pair = [-1] * slots
    for i in range(n):
        alpha, beta = 2 * i + 1, 2 * ((i - p) % n)
        pair[alpha] = beta
        pair[beta] = alpha
    if any(pair[pair[s]] != s or pair[s] == s for s in range(slots)):
        raise OracleInvariantError(f"edge pairing of ({n}, {p}) is not a fixed-point-free involution")

    seen = [False] * slots
    cycles: List[Tuple[int, ...]] = []
    for start in range(slots):
        if seen[start]:
            continue
        cycle = []
        c = start
        while not seen[c]:
            seen[c] = True
            cycle.append(c)
            c = (pair[c] + 1) % slots
        if c != start:
            raise OracleInvariantError(f"corner walk from {start} did not close on itself")
        cycles.append(tuple(cycle))

    surface = PolygonSurface(n, p, tuple(pair), tuple(cycles))
    chi = surface.euler_characteristic
    if chi % 2 or chi > 2:
        raise OracleInvariantError(f"Euler characteristic {chi} of ({n}, {p}) is not even and <= 2")
    logger.debug("surface n=%s p=%s vertices=%s genus=%s", n, p, surface.vertex_count, surface.genus)
    return surface


def _check_exponent(s: PolygonSurface, k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise ValidationError("exponent must be an integer", code="type")
    if not 1 <= k < s.n:
        raise ValidationError(f"exponent must lie in [1, {s.n - 1}], got {k}", code="exponent")


def _local_valency(shift: int, cycle_length: int, isotropy: int) -> Valency:
    """Isotropy generator advancing a corner (or sector) cycle by ``shift`` positions."""
    if (shift * isotropy) % cycle_length:
        raise OracleInvariantError(
            f"local rotation {shift}/{cycle_length} is not a multiple of 1/{isotropy}"
        )
    mu = shift * isotropy // cycle_length
    if gcd(mu, isotropy) != 1:
        raise OracleInvariantError(f"local rotation numerator {mu} is not a unit mod {isotropy}")
    return Valency(pow(mu, -1, isotropy), isotropy)


def _orbits(count: int, step) -> List[List[int]]:
    seen = [False] * count
    out = []
    for start in range(count):
        if seen[start]:
            continue
        orbit = []
        c = start
        while not seen[c]:
            seen[c] = True
            orbit.append(c)
            c = step(c)
        out.append(orbit)
    return out


def cell_orbits(s: PolygonSurface, k: int) -> List[CellOrbit]:
    """Every orbit of rotation^k on center, vertices and edges, free ones included."""
    _check_exponent(s, k)
    slots = 2 * s.n
    order = s.n // gcd(s.n, k)

    def move(corner: int, times: int = 1) -> int:
        return (corner - 2 * k * times) % slots

    out: List[CellOrbit] = []
    out.append(CellOrbit("center", 0, 1, order, _local_valency(k % s.n, s.n, order)))

    vertex_of = s.vertex_of()
    for orbit in _orbits(s.vertex_count, lambda v: vertex_of[move(s.corner_cycles[v][0])]):
        period = len(orbit)
        isotropy = order // period
        cycle = s.corner_cycles[orbit[0]]
        if isotropy == 1:
            out.append(CellOrbit("vertex", orbit[0], period, 1, None))
            continue
        image = move(cycle[0], period)
        if image not in cycle:
            raise OracleInvariantError(f"rotation power does not fix vertex {orbit[0]}")
        shift = cycle.index(image)
        out.append(CellOrbit("vertex", orbit[0], period, isotropy, _local_valency(shift, len(cycle), isotropy)))

    edge_of = {a: min(a, s.edge_pairing[a]) for a in range(slots)}
    edges = sorted(set(edge_of.values()))
    edge_index = {e: idx for idx, e in enumerate(edges)}
    for orbit in _orbits(len(edges), lambda e: edge_index[edge_of[move(edges[e])]]):
        period = len(orbit)
        isotropy = order // period
        rep = edges[orbit[0]]
        if isotropy == 1:
            out.append(CellOrbit("edge", rep, period, 1, None))
            continue
        if isotropy != 2 or move(rep, period) != s.edge_pairing[rep]:
            raise OracleInvariantError(f"edge {rep} has isotropy {isotropy} without being flipped")
        out.append(CellOrbit("edge", rep, period, 2, Valency(1, 2)))

    for orbit in out:
        if orbit.period * orbit.isotropy != order:
            raise OracleInvariantError(f"{orbit.label()}: period x isotropy != {order}")
    return out


def oracle_total_valency(s: PolygonSurface, k: int) -> TotalValency:
    orbits = cell_orbits(s, k)
    order = s.n // gcd(s.n, k)
    valencies = tuple(o.valency for o in orbits if o.valency is not None)
    return TotalValency(s.genus, order, valencies)


def surface_dump(s: PolygonSurface, k: Optional[int] = None) -> Dict[str, Any]:
    dump: Dict[str, Any] = {
        "n": s.n,
        "p": s.p,
        "genus": s.genus,
        "euler_characteristic": s.euler_characteristic,
        "edge_pairing": list(s.edge_pairing),
        "corner_cycles": [list(c) for c in s.corner_cycles],
    }
    if k is not None:
        dump["k"] = k
        dump["orbits"] = [
            {
                "cell": o.label(),
                "period": o.period,
                "isotropy": o.isotropy,
                "valency": str(o.valency) if o.valency else "free",
            }
            for o in cell_orbits(s, k)
        ]
    return dump
