"""Transportation problem encoding and solution decoding.

The discrete transport problem between weighted point sets is the equality
linear program

    minimize    sum_ij cost[i, j] * flow[i, j]
    subject to  sum_j flow[i, j] = supply[i]     for every source i
                sum_i flow[i, j] = demand[j]     for every target j
                flow >= 0

The production solver consumes the structured (cost, supply, demand) triple
directly. ``materialize_constraints`` builds the dense 0/1 constraint matrix
(variables flattened row-major, x[k] = flow[i, j] with k = i*m + j); it exists
for tests and oracles only because the dense form wastes memory and the
structure is best exploited directly.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DualityGapError, MassMismatchError, MaterializationCapError

__all__ = [
    "TransportProblem",
    "TransportPlan",
    "TransportSolution",
    "build_problem",
    "materialize_constraints",
    "solution_distance",
    "MATERIALIZATION_CAP",
]

MATERIALIZATION_CAP = 10_000  # max n*m variables for the dense constraint form

MASS_BALANCE_TOL = 1e-10
DUALITY_GAP_TOL = 1e-8


@dataclass(frozen=True)
class TransportProblem:
    """Balanced transport instance: n x m costs, unit-mass marginals."""

    cost: np.ndarray
    supply: np.ndarray
    demand: np.ndarray

    @property
    def n_sources(self) -> int:
        return self.cost.shape[0]

    @property
    def n_targets(self) -> int:
        return self.cost.shape[1]

    def rhs(self) -> np.ndarray:
        """Stacked [supply; demand] right-hand side."""
        return np.concatenate([self.supply, self.demand])


@dataclass(frozen=True)
class TransportPlan:
    """Sparse transport plan: (source, target, mass) triples, masses > 0."""

    n_sources: int
    n_targets: int
    flows: tuple

    def source_marginals(self) -> np.ndarray:
        out = np.zeros(self.n_sources)
        for i, _, mass in self.flows:
            out[i] += mass
        return out

    def target_marginals(self) -> np.ndarray:
        out = np.zeros(self.n_targets)
        for _, j, mass in self.flows:
            out[j] += mass
        return out

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_sources, self.n_targets))
        for i, j, mass in self.flows:
            out[i, j] += mass
        return out

    def cost(self, cost_matrix: np.ndarray) -> float:
        return float(sum(mass * cost_matrix[i, j] for i, j, mass in self.flows))


@dataclass(frozen=True)
class TransportSolution:
    """Optimal plan with dual potentials and diagnostics."""

    problem: TransportProblem
    plan: TransportPlan
    dual: np.ndarray  # length n+m, rows first, gauge dual[0] = 0
    objective: float
    iterations: int
    status: str = "optimal"


def build_problem(cost: np.ndarray, supply, demand) -> TransportProblem:
    """Assemble a balanced instance; marginal totals must agree to 1e-10."""
    cost = np.asarray(cost, dtype=np.float64)
    supply = np.asarray(supply, dtype=np.float64)
    demand = np.asarray(demand, dtype=np.float64)
    if cost.shape != (supply.shape[0], demand.shape[0]):
        raise MassMismatchError(
            f"cost shape {cost.shape} does not match marginals "
            f"({supply.shape[0]}, {demand.shape[0]})"
        )
    gap = abs(float(supply.sum()) - float(demand.sum()))
    if not gap <= MASS_BALANCE_TOL:
        raise MassMismatchError(
            f"marginal totals differ by {gap:.3e} (limit {MASS_BALANCE_TOL:.0e})"
        )
    return TransportProblem(cost, supply, demand)


def materialize_constraints(problem: TransportProblem, cap: int = MATERIALIZATION_CAP):
    """Dense 0/1 equality constraints and right-hand side.

    Row i < n selects the contiguous block of m variables for source i; row
    n + j selects every m-th variable starting at j for target j. Each column
    holds exactly two ones.
    """
    n, m = problem.n_sources, problem.n_targets
    if n * m > cap:
        raise MaterializationCapError(
            f"{n}x{m} problem has {n * m} variables, above the cap of {cap}"
        )
    A = np.zeros((n + m, n * m))
    for i in range(n):
        A[i, i * m:(i + 1) * m] = 1.0
    for j in range(m):
        A[n + j, j::m] = 1.0
    return A, problem.rhs()


def solution_distance(solution: TransportSolution) -> float:
    """Distance read off the dual: rhs . dual, checked against the primal objective."""
    value = float(solution.problem.rhs() @ solution.dual)
    gap = abs(value - solution.objective)
    if not gap <= DUALITY_GAP_TOL:
        raise DualityGapError(
            f"dual value {value!r} and primal objective {solution.objective!r} "
            f"disagree by {gap:.3e}"
        )
    return value
