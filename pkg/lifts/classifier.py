"""
Lifts of torus maps through double covers Σ_g -> T².

A problem is a genus-1 base f̄ with order n̄ and a branch locus made of whole
multiple orbits of f̄. If some branched orbit has even isotropy the lifted
group is cyclic of order 2n̄ and f^{n̄} is the deck involution ι; otherwise the
lift f is taken of order n̄ fixing the preimage of the single unbranched fixed
point pointwise and ⟨f, ι⟩ is not generated by f.

Every step that can eliminate candidates leaves an AuditStep naming its rule:
brodd, lemma1, nielsen, rh, power-projection, local-option.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import prod
from typing import Dict, List, Optional, Tuple

from django.core.exceptions import ValidationError

from census.groups import group_generator, group_key, group_label, hnp_aliases, hnp_name
from census.solver import DEFAULT_TIME_LIMIT, solve_theta_tuples, units
from valency.calculus import hnp, involution_quotient_genus, nielsen_check, power
from valency.core import TotalValency, Valency, rh_quotient_genus

from .local_options import Role, local_options

logger = logging.getLogger(__name__)

ORBIT_LABELS = "xyzwvutsr"


@dataclass(frozen=True)
class BaseOrbit:
    index: int
    label: str
    valency: Valency
    period: int


def base_orbits(base: TotalValency) -> List[BaseOrbit]:
    return [
        BaseOrbit(i, ORBIT_LABELS[i] if i < len(ORBIT_LABELS) else f"o{i}", v, base.order // v.lam)
        for i, v in enumerate(base.valencies)
    ]


def _require_torus(base: TotalValency) -> None:
    if base.genus != 1:
        raise ValidationError(f"lift base must have genus 1, got {base}", code="genus")


@dataclass(frozen=True)
class LiftProblem:
    base: TotalValency
    locus: Tuple[int, ...]

    def __post_init__(self):
        _require_torus(self.base)
        locus = tuple(sorted(self.locus))
        object.__setattr__(self, "locus", locus)
        if not locus:
            raise ValidationError("branch locus must not be empty", code="locus")
        if len(set(locus)) != len(locus) or locus[0] < 0 or locus[-1] >= self.base.size:
            raise ValidationError(
                f"branch locus {list(locus)} must name distinct orbits of {self.base}", code="locus"
            )
        points = sum(o.period for o in self.orbits if o.index in locus)
        if points % 2:
            raise ValidationError(f"branch locus has {points} points, an involution fixes an even number", code="locus")

    @property
    def orbits(self) -> List[BaseOrbit]:
        return base_orbits(self.base)

    @property
    def branched(self) -> List[BaseOrbit]:
        return [o for o in self.orbits if o.index in self.locus]

    @property
    def branch_points(self) -> int:
        return sum(o.period for o in self.branched)

    @property
    def upstairs_genus(self) -> int:
        # 2 - 2g = 2·0 - |B|
        return self.branch_points // 2 + 1

    def describe(self) -> str:
        return "{" + ",".join(o.label for o in self.branched) + "}"


def candidate_branch_loci(base: TotalValency) -> List[Tuple[int, ...]]:
    """Nonempty unions of whole multiple orbits with an even number of points."""
    _require_torus(base)
    orbits = base_orbits(base)
    out = []
    for size in range(1, len(orbits) + 1):
        for combo in itertools.combinations(orbits, size):
            if sum(o.period for o in combo) % 2 == 0:
                out.append(tuple(o.index for o in combo))
    return out


class LiftVerdict(str, Enum):
    NO_LIFT = "NO_LIFT"
    CYCLIC_LIFTS = "CYCLIC_LIFTS"
    NON_CYCLIC_LIFT = "NON_CYCLIC_LIFT"
    UNSUPPORTED = "UNSUPPORTED"


@dataclass(frozen=True)
class AuditStep:
    rule: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"{self.rule}: {'ok' if self.passed else 'fail'} ({self.detail})"


@dataclass(frozen=True)
class LiftGroup:
    label: str
    generator: TotalValency
    aliases: Tuple[int, ...]
    members: Tuple[TotalValency, ...]
    tuples: Tuple[Tuple[int, ...], ...]

    @property
    def key(self) -> Tuple:
        return group_key(self.generator)


@dataclass(frozen=True)
class CompanionInvolution:
    exponent: Optional[int]
    fixed_points: Optional[int]
    hyperelliptic: bool
    description: str


@dataclass
class LiftOutcome:
    problem: LiftProblem
    verdict: LiftVerdict
    audit: List[AuditStep] = field(default_factory=list)
    reason: str = ""
    indices: Tuple[int, ...] = ()
    groups: List[LiftGroup] = field(default_factory=list)
    involution_power_index: Optional[int] = None
    upstairs: Optional[TotalValency] = None
    companion: Optional[CompanionInvolution] = None
    enclosing_group: Optional[str] = None

    def fail(self, verdict: LiftVerdict, reason: str) -> "LiftOutcome":
        self.verdict = verdict
        self.reason = reason
        logger.debug("lift %s %s: %s", self.problem.base, self.problem.describe(), reason)
        return self


def _format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def classify_lift(prob: LiftProblem, time_limit_sec: float = DEFAULT_TIME_LIMIT) -> LiftOutcome:
    outcome = LiftOutcome(prob, LiftVerdict.NO_LIFT)
    even = [o for o in prob.branched if o.valency.lam % 2 == 0]
    if even:
        outcome.audit.append(AuditStep(
            "brodd", True,
            f"branched orbit {even[0].label} has even isotropy {even[0].valency.lam}, the lifted group is cyclic",
        ))
        return _classify_cyclic(prob, outcome, time_limit_sec)
    outcome.audit.append(AuditStep(
        "brodd", True, "no branched orbit has even isotropy, the lift is taken of the base order",
    ))
    return _classify_non_cyclic(prob, outcome)


def _classify_cyclic(prob: LiftProblem, outcome: LiftOutcome, time_limit_sec: float) -> LiftOutcome:
    n_bar = prob.base.order
    n = 2 * n_bar
    g = prob.upstairs_genus
    outcome.audit.append(AuditStep("lemma1", True, f"n = 2·{n_bar} = {n}, genus {g}"))

    branched = set(prob.locus)
    lambdas = tuple(2 * o.valency.lam if o.index in branched else o.valency.lam for o in prob.orbits)
    outcome.indices = lambdas

    candidates = prod(len(units(lam)) for lam in lambdas)
    tuples = solve_theta_tuples(n, lambdas, multiset=False, time_limit_sec=time_limit_sec)
    outcome.audit.append(AuditStep(
        "nielsen", bool(tuples), f"indices {list(lambdas)}: {candidates} theta tuples, {len(tuples)} with integral sum",
    ))
    if not tuples:
        return outcome.fail(LiftVerdict.NO_LIFT, f"no theta tuple over indices {list(lambdas)} has an integral valency sum")

    quotient_genus = rh_quotient_genus(g, n, lambdas)
    rh_ok = quotient_genus.denominator == 1 and quotient_genus >= 0
    outcome.audit.append(AuditStep("rh", rh_ok, f"quotient genus {_format_fraction(quotient_genus)}"))
    if not rh_ok:
        return outcome.fail(LiftVerdict.NO_LIFT, f"Riemann-Hurwitz gives quotient genus {_format_fraction(quotient_genus)}")

    survivors: List[Tuple[Tuple[int, ...], TotalValency]] = []
    rejected: List[str] = []
    for thetas in tuples:
        t = TotalValency(g, n, tuple(Valency(th, lam) for th, lam in zip(thetas, lambdas)))
        middle = power(t, n_bar)
        middle_genus = involution_quotient_genus(middle)
        if middle_genus == 1:
            survivors.append((thetas, t))
        else:
            rejected.append(f"{thetas}: f^{n_bar} = {middle} has quotient genus {middle_genus}")
    outcome.audit.append(AuditStep(
        "power-projection", bool(survivors),
        f"{len(tuples)} candidates, {len(survivors)} with f^{n_bar} an involution over a torus"
        + (f"; rejected {'; '.join(rejected)}" if rejected else ""),
    ))
    if not survivors:
        return outcome.fail(
            LiftVerdict.NO_LIFT, f"f^{n_bar} is never an involution with torus quotient (quotient genus 0 means hyperelliptic)"
        )

    by_group: Dict[Tuple, List[Tuple[Tuple[int, ...], TotalValency]]] = {}
    for thetas, t in survivors:
        by_group.setdefault(group_key(t), []).append((thetas, t))
    groups = []
    for items in by_group.values():
        t0 = items[0][1]
        groups.append(LiftGroup(
            label=group_label(t0),
            generator=group_generator(t0),
            aliases=tuple(hnp_aliases(t0)),
            members=tuple(sorted({t for _, t in items}, key=lambda m: m.sort_key)),
            tuples=tuple(thetas for thetas, _ in items),
        ))
    groups.sort(key=lambda grp: (grp.generator.order, grp.aliases, grp.generator.sort_key))
    outcome.groups = groups
    outcome.verdict = LiftVerdict.CYCLIC_LIFTS
    outcome.involution_power_index = n_bar
    logger.debug("lift %s %s: %s", prob.base, prob.describe(), [grp.label for grp in groups])
    return outcome


def _classify_non_cyclic(prob: LiftProblem, outcome: LiftOutcome) -> LiftOutcome:
    n = prob.base.order
    g = prob.upstairs_genus
    branched = set(prob.locus)
    fixed = [o for o in prob.orbits if o.index not in branched and o.period == 1]
    if len(fixed) != 1:
        return outcome.fail(
            LiftVerdict.UNSUPPORTED,
            f"{len(fixed)} unbranched fixed points, the pointwise-fixed lift needs exactly one",
        )

    # per base orbit: (orbit, role, options)
    per_orbit = []
    for o in prob.orbits:
        if o.index in branched:
            role = Role.BRANCHED
        elif o.index == fixed[0].index:
            role = Role.FIXED
        else:
            role = Role.UNBRANCHED
        options = local_options(role, o.valency.fraction)
        if options is None:
            return outcome.fail(
                LiftVerdict.UNSUPPORTED, f"no local lift option for {role.value} orbit {o.label} = {o.valency}"
            )
        per_orbit.append((o, role, options))

    combos = list(itertools.product(*(options for _, _, options in per_orbit)))
    ordered = []
    for combo in combos:
        ok = True
        for (o, role, _), option in zip(per_orbit, combo):
            upstairs_period = 1 if role is Role.FIXED else o.period
            if any(v.denominator != n // upstairs_period for v in option):
                ok = False
        if ok:
            ordered.append(combo)
    outcome.audit.append(AuditStep(
        "local-option", bool(ordered),
        "; ".join(
            f"{o.label} ({role.value} {o.valency}) -> "
            + " | ".join("free" if not opt else "+".join(_format_fraction(v) for v in opt) for opt in options)
            for o, role, options in per_orbit
        )
        + f"; {len(combos)} combinations, {len(ordered)} consistent with order {n}",
    ))
    if not ordered:
        return outcome.fail(LiftVerdict.NO_LIFT, "no local option combination is consistent with the order")

    rh_ok = []
    rh_detail = []
    for combo in ordered:
        values = [v for option in combo for v in option]
        quotient_genus = rh_quotient_genus(g, n, [v.denominator for v in values])
        label = " + ".join(_format_fraction(v) for v in values) or "0"
        if quotient_genus.denominator == 1 and quotient_genus >= 0:
            rh_ok.append(values)
            rh_detail.append(f"{label}: g' = {_format_fraction(quotient_genus)}")
        else:
            rh_detail.append(f"{label}: g' = {_format_fraction(quotient_genus)} rejected")
    outcome.audit.append(AuditStep("rh", bool(rh_ok), "; ".join(rh_detail)))
    if not rh_ok:
        return outcome.fail(LiftVerdict.NO_LIFT, "every local option combination fails Riemann-Hurwitz")

    survivors = [values for values in rh_ok if nielsen_check(Valency.from_fraction(v) for v in values)]
    outcome.audit.append(AuditStep(
        "nielsen", bool(survivors), f"{len(rh_ok)} candidates, {len(survivors)} with integral valency sum",
    ))
    if not survivors:
        return outcome.fail(LiftVerdict.NO_LIFT, "no surviving combination has an integral valency sum")
    if len(survivors) > 1:
        return outcome.fail(LiftVerdict.UNSUPPORTED, f"{len(survivors)} local option combinations survive")

    upstairs = TotalValency(g, n, tuple(Valency.from_fraction(v) for v in survivors[0]))
    chosen = next(combo for combo in ordered if [v for option in combo for v in option] == survivors[0])
    outcome.upstairs = upstairs
    outcome.companion = companion_involution(prob, chosen, per_orbit)
    outcome.enclosing_group = enclosing_group(upstairs)
    outcome.verdict = LiftVerdict.NON_CYCLIC_LIFT
    logger.debug("lift %s %s: %s in %s", prob.base, prob.describe(), upstairs, outcome.enclosing_group)
    return outcome


def companion_involution(prob: LiftProblem, combo, per_orbit) -> CompanionInvolution:
    """f^{n/2}∘ι for even n; for odd n the group ⟨f, ι⟩ is cyclic, generated by f∘ι."""
    n = prob.base.order
    g = prob.upstairs_genus
    if n % 2:
        return CompanionInvolution(
            None, None, False, f"⟨f, ι⟩ is cyclic of order {2 * n} generated by f∘ι",
        )
    e = n // 2
    fixed_points = 0
    for (o, role, _), option in zip(per_orbit, combo):
        if role is Role.BRANCHED and e % o.period == 0:
            fixed_points += o.period
        elif role is Role.UNBRANCHED and not option and o.period == e:
            fixed_points += 2 * o.period
    hyperelliptic = fixed_points == 2 * g + 2
    kind = "a hyperelliptic involution" if hyperelliptic else "an involution"
    return CompanionInvolution(e, fixed_points, hyperelliptic, f"f^{e}∘ι is {kind} with {fixed_points} fixed points")


def enclosing_group(upstairs: TotalValency) -> str:
    """⟨h_{2g+2,1}, I⟩ when the lift is a power of h_{2g+2,1}."""
    n = 2 * upstairs.genus + 2
    if n >= 3:
        base = hnp(n, 1)
        for k in range(1, n):
            if power(base, k) == upstairs:
                return f"⟨{hnp_name(n, 1)}, I⟩"
    return group_label(upstairs)
