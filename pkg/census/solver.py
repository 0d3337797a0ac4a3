from __future__ import annotations

import logging
from math import gcd
from typing import List, Sequence, Tuple

from ortools.sat.python import cp_model

from valency.errors import EnumerationIncompleteError

logger = logging.getLogger(__name__)

DEFAULT_TIME_LIMIT = 30.0


def units(lam: int) -> List[int]:
    return [u for u in range(1, lam) if gcd(u, lam) == 1]


class _Collector(cp_model.CpSolverSolutionCallback):
    def __init__(self, variables):
        super().__init__()
        self._variables = variables
        self.solutions: List[Tuple[int, ...]] = []

    def on_solution_callback(self):
        self.solutions.append(tuple(self.value(v) for v in self._variables))


def solve_theta_tuples(order: int, lambdas: Sequence[int], multiset: bool = True,
                       time_limit_sec: float = DEFAULT_TIME_LIMIT) -> List[Tuple[int, ...]]:
    """
    Enumerate θ-tuples for the isotropy orders ``lambdas`` of an action of ``order``.

    Each θ_i is a unit mod λ_i and Σ θ_i/λ_i is an integer, written over the
    common denominator as Σ θ_i·(order/λ_i) = order·q.

    With ``multiset=True`` the θ are non-decreasing inside each run of equal λ
    (``lambdas`` must then be sorted so equal values are adjacent), so every
    multiset is produced once. Otherwise every ordered tuple is produced.

    Returns the sorted list of tuples; raises EnumerationIncompleteError if the
    time limit stops the search before it is proven complete.
    """
    lambdas = list(lambdas)
    if not lambdas:
        return [()]

    m = cp_model.CpModel()

    # decision theta[i], restricted to units mod lambda_i
    theta = []
    for i, lam in enumerate(lambdas):
        var = m.new_int_var(1, lam - 1, f"theta_{i}")
        m.add_allowed_assignments([var], [(u,) for u in units(lam)])
        theta.append(var)

    # Nielsen integrality
    q = m.new_int_var(0, len(lambdas), "q")
    m.add(sum((order // lam) * var for lam, var in zip(lambdas, theta)) == order * q)

    # symmetry breaking inside equal isotropy
    if multiset:
        for i in range(1, len(lambdas)):
            if lambdas[i] == lambdas[i - 1]:
                m.add(theta[i - 1] <= theta[i])

    solver = cp_model.CpSolver()
    solver.parameters.enumerate_all_solutions = True
    solver.parameters.num_workers = 1
    solver.parameters.max_time_in_seconds = float(time_limit_sec)
    collector = _Collector(theta)
    status = solver.solve(m, collector)

    if status not in (cp_model.OPTIMAL, cp_model.INFEASIBLE):
        logger.warning(
            "theta enumeration for order %s indices %s stopped with status %s after %s solutions",
            order, lambdas, solver.status_name(status), len(collector.solutions),
        )
        raise EnumerationIncompleteError(
            f"theta enumeration for order {order}, indices {lambdas} did not finish within {time_limit_sec}s"
        )
    logger.debug("order=%s indices=%s status=%s solutions=%s",
                 order, lambdas, solver.status_name(status), len(collector.solutions))
    return sorted(set(collector.solutions))
