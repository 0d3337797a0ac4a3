"""
Expected results embedded in the ``verify`` subcommands.
"""
from typing import Iterable, List

# genus 1, sphere quotient, canonical census order
BRTO_GOLDEN = [
    "[1,2; 1/2 + 1/2 + 1/2 + 1/2]",
    "[1,3; 1/3 + 1/3 + 1/3]",
    "[1,3; 2/3 + 2/3 + 2/3]",
    "[1,4; 1/4 + 1/4 + 1/2]",
    "[1,4; 3/4 + 3/4 + 1/2]",
    "[1,6; 1/6 + 1/3 + 1/2]",
    "[1,6; 5/6 + 2/3 + 1/2]",
]

BRTO_IRREDUCIBLE = BRTO_GOLDEN[1:]

# (kind, genus, group) in report order
IRR1_GOLDEN = [
    ("non-cyclic", 2, "⟨h_{6,1}, I⟩"),
    ("cyclic", 3, "⟨h_{8,1}⟩"),
    ("cyclic", 3, "⟨h_{8,5}⟩"),
    ("cyclic", 4, "⟨h_{12,2}⟩"),
    ("cyclic", 3, "⟨h_{12,3}⟩"),
]

# irreducible even-order actions with a torus-quotient involution power, 2 <= g <= 10
COMPANION_GOLDEN = [
    (2, "[2,6; 1/6 + 1/6 + 2/3]"),
    (3, "[3,8; 1/8 + 1/8 + 3/4]"),
    (3, "[3,8; 1/8 + 5/8 + 1/4]"),
    (3, "[3,12; 1/12 + 1/4 + 2/3]"),
    (4, "[4,12; 1/12 + 1/6 + 3/4]"),
]


def structural_diff(expected: Iterable, actual: Iterable) -> List[str]:
    """
    ``- item`` for every expected item that is missing, ``+ item`` for every
    unexpected one, ``~ item`` when both sets agree but the order differs.
    """
    expected, actual = list(expected), list(actual)
    missing = [f"- {item}" for item in expected if item not in actual]
    extra = [f"+ {item}" for item in actual if item not in expected]
    if not missing and not extra and expected != actual:
        return [f"~ {item}" for item in actual]
    return missing + extra
