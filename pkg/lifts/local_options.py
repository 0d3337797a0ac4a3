"""
Local lift options for the non-cyclic double-cover case.

Keyed by (role, base valency); each option is the tuple of upstairs valencies
the preimage of one base orbit carries, ``()`` meaning a free orbit. Only the
instances needed for the torus bases h_{6,3} and h_{3,1} are listed; the
inverse base valency uses the inverted options.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

Option = Tuple[Fraction, ...]


class Role(str, Enum):
    BRANCHED = "branched"
    UNBRANCHED = "unbranched"
    # the single unbranched fixed point, lifted pointwise
    FIXED = "fixed"


LOCAL_OPTIONS: Dict[Tuple[Role, Fraction], List[Option]] = {
    (Role.BRANCHED, Fraction(1, 3)): [(Fraction(2, 3),), (Fraction(1, 6),)],
    (Role.UNBRANCHED, Fraction(1, 2)): [(), (Fraction(1, 2), Fraction(1, 2))],
    (Role.FIXED, Fraction(1, 6)): [(Fraction(1, 6), Fraction(1, 6))],
    (Role.FIXED, Fraction(1, 3)): [(Fraction(1, 3), Fraction(1, 3))],
}


def _invert(value: Fraction) -> Fraction:
    return Fraction(value.denominator - value.numerator, value.denominator)


def local_options(role: Role, valency: Fraction) -> Optional[List[Option]]:
    options = LOCAL_OPTIONS.get((role, valency))
    if options is not None:
        return options
    options = LOCAL_OPTIONS.get((role, _invert(valency)))
    if options is None:
        return None
    return [tuple(_invert(v) for v in option) for option in options]
