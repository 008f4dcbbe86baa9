"""Transportation simplex on the bipartite flow structure.

Bases are spanning trees of n + m - 1 cells over the (sources x targets)
grid, kept rooted at source 0 with parent and depth pointers. Each pivot
prices all cells against the tree potentials, brings in the most negative
reduced-cost cell (Dantzig rule), closes the unique cycle through the two
tree paths to the least common ancestor, and shifts flow by the cycle
minimum. Potentials are then updated in place: only the subtree cut off by
the leaving edge moves, by a constant equal to the entering reduced cost.

Ties are broken lexicographically; after a run of degenerate pivots the
entering rule drops to Bland's first-negative-index rule, which cannot
cycle, and reverts once a pivot makes progress. Degenerate zero flows stay
in the basis explicitly; the right-hand side is never perturbed, which keeps
small regression values bit-faithful.

Node encoding: sources are nodes 0..n-1, targets are nodes n..n+m-1.
"""

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import IterationLimitError
from .transport_lp import TransportPlan, TransportProblem, TransportSolution

__all__ = ["BasisState", "initial_basis", "solve"]

OPTIMALITY_TOL = 1e-9
BLAND_TRIGGER = 20  # consecutive degenerate pivots before switching pivot rules


@dataclass
class BasisState:
    """Mutable solver state: basic-cell flows plus the rooted spanning tree.

    ``flows`` maps basic cells (i, j) to their flow; degenerate zeros are
    kept. ``links[node]`` holds the basic neighbours of each node,
    ``parent``/``depth`` root the tree at source 0, and ``potential`` stores
    the dual value of every node under the gauge potential[0] = 0.
    """

    n_sources: int
    n_targets: int
    flows: dict
    links: list
    parent: np.ndarray = field(default=None, repr=False)
    depth: np.ndarray = field(default=None, repr=False)
    potential: np.ndarray = field(default=None, repr=False)

    @property
    def row_potentials(self) -> np.ndarray:
        return self.potential[: self.n_sources]

    @property
    def col_potentials(self) -> np.ndarray:
        return self.potential[self.n_sources:]

    def cells(self):
        return set(self.flows)


def initial_basis(problem: TransportProblem) -> BasisState:
    """Feasible starting tree via the northwest-corner walk.

    When a supply and a demand exhaust simultaneously the walk still moves
    one step at a time, inserting an explicit zero flow, so the basis always
    has exactly n + m - 1 cells.
    """
    n, m = problem.n_sources, problem.n_targets
    supply = problem.supply.copy()
    demand = problem.demand.copy()
    flows = {}
    links = [set() for _ in range(n + m)]
    i = j = 0
    while True:
        moved = min(supply[i], demand[j])
        flows[(i, j)] = float(moved)
        links[i].add(n + j)
        links[n + j].add(i)
        supply[i] -= moved
        demand[j] -= moved
        if i == n - 1 and j == m - 1:
            break
        if supply[i] == 0.0 and i < n - 1:
            i += 1
        elif demand[j] == 0.0 and j < m - 1:
            j += 1
        elif i < n - 1:
            i += 1
        else:
            j += 1
    state = BasisState(n, m, flows, links)
    _root_tree(state, problem.cost)
    return state


def _root_tree(state: BasisState, cost: np.ndarray):
    """Recompute parent, depth, and potentials by one sweep from source 0."""
    n = state.n_sources
    total = n + state.n_targets
    parent = np.full(total, -1, dtype=np.int64)
    depth = np.zeros(total, dtype=np.int64)
    potential = np.zeros(total)
    seen = np.zeros(total, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        node = queue.popleft()
        for nxt in state.links[node]:
            if not seen[nxt]:
                seen[nxt] = True
                parent[nxt] = node
                depth[nxt] = depth[node] + 1
                if node < n:  # node is a source, nxt a target
                    potential[nxt] = cost[node, nxt - n] - potential[node]
                else:
                    potential[nxt] = cost[nxt, node - n] - potential[node]
                queue.append(nxt)
    assert seen.all(), "basis lost the spanning-tree property"
    state.parent = parent
    state.depth = depth
    state.potential = potential


def _edge_cell(node: int, other: int, n: int):
    """Basic cell (i, j) for the tree edge between two nodes."""
    if node < n:
        return (node, other - n)
    return (other, node - n)


def _cycle_sides(state: BasisState, enter_i: int, enter_j: int):
    """Tree-path edges from both entering endpoints up to their common ancestor.

    Each list starts with the edge incident to its endpoint, so entries at
    even offsets share a line with the entering cell and take the minus sign.
    """
    n = state.n_sources
    parent = state.parent
    depth = state.depth
    a, b = enter_i, n + enter_j
    side_a, side_b = [], []
    while depth[a] > depth[b]:
        side_a.append(_edge_cell(a, parent[a], n))
        a = parent[a]
    while depth[b] > depth[a]:
        side_b.append(_edge_cell(b, parent[b], n))
        b = parent[b]
    while a != b:
        side_a.append(_edge_cell(a, parent[a], n))
        a = parent[a]
        side_b.append(_edge_cell(b, parent[b], n))
        b = parent[b]
    return side_a, side_b


def _reattach(state: BasisState, sub_root: int, new_parent: int, shift: float):
    """Hang the cut-off subtree at ``sub_root`` below ``new_parent``.

    Walks the subtree once, reversing parents toward its new root and adding
    ``shift`` to source potentials and ``-shift`` to target potentials (the
    sign is passed in by the caller). The entering edge must not be linked
    yet, so the walk cannot escape into the main tree.
    """
    n = state.n_sources
    parent = state.parent
    depth = state.depth
    potential = state.potential
    parent[sub_root] = new_parent
    depth[sub_root] = depth[new_parent] + 1
    queue = deque([sub_root])
    while queue:
        node = queue.popleft()
        potential[node] += shift if node < n else -shift
        for nxt in state.links[node]:
            if nxt != parent[node]:
                parent[nxt] = node
                depth[nxt] = depth[node] + 1
                queue.append(nxt)


def solve(problem: TransportProblem, callback=None, pivot_limit=None) -> TransportSolution:
    """Minimize total transport cost; returns plan, duals, and objective.

    ``callback(iteration, objective)`` is invoked after every pivot, which
    lets tests watch the objective decrease. Raises IterationLimitError if
    the pivot budget (by default 50 (n+m) log2(n+m) + 1000) is exceeded,
    which would indicate a cycling bug: these instances are always feasible
    and bounded.
    """
    n, m = problem.n_sources, problem.n_targets
    cost = problem.cost
    state = initial_basis(problem)
    if pivot_limit is None:
        pivot_limit = int(50 * (n + m) * math.log2(n + m) + 1000)
    reduced = np.empty_like(cost)

    iterations = 0
    degenerate_run = 0
    while True:
        np.subtract(cost, state.potential[:n, None], out=reduced)
        reduced -= state.potential[None, n:]

        entering = _select_entering(reduced, degenerate_run >= BLAND_TRIGGER)
        if entering is None:
            # re-certify against freshly derived potentials before stopping,
            # so incremental drift can never mask a profitable cell
            _root_tree(state, cost)
            np.subtract(cost, state.potential[:n, None], out=reduced)
            reduced -= state.potential[None, n:]
            entering = _select_entering(reduced, degenerate_run >= BLAND_TRIGGER)
            if entering is None:
                break
        enter_i, enter_j = entering

        iterations += 1
        if iterations > pivot_limit:
            raise IterationLimitError(
                f"exceeded {pivot_limit} pivots on a {n}x{m} instance"
            )

        side_a, side_b = _cycle_sides(state, enter_i, enter_j)
        minus = side_a[0::2] + side_b[0::2]
        theta = min(state.flows[cell] for cell in minus)
        leaving = min(cell for cell in minus if state.flows[cell] == theta)

        for cell in minus:
            state.flows[cell] -= theta
        for cell in side_a[1::2]:
            state.flows[cell] += theta
        for cell in side_b[1::2]:
            state.flows[cell] += theta
        del state.flows[leaving]
        state.flows[(enter_i, enter_j)] = theta

        # cut the leaving edge, reattach the freed subtree via the entering
        # edge, shifting its potentials by the entering reduced cost
        gain = float(reduced[enter_i, enter_j])
        leave_row, leave_col = leaving[0], n + leaving[1]
        state.links[leave_row].discard(leave_col)
        state.links[leave_col].discard(leave_row)
        if leaving in side_a:
            # entering row was below the cut
            _reattach(state, enter_i, n + enter_j, gain)
        else:
            # entering column was below the cut; source/target roles swap sign
            _reattach(state, n + enter_j, enter_i, -gain)
        state.links[enter_i].add(n + enter_j)
        state.links[n + enter_j].add(enter_i)

        degenerate_run = degenerate_run + 1 if theta == 0.0 else 0
        if callback is not None:
            objective_now = sum(f * cost[c] for c, f in state.flows.items())
            callback(iterations, float(objective_now))

    flows = tuple(
        (i, j, float(f)) for (i, j), f in sorted(state.flows.items()) if f > 0.0
    )
    plan = TransportPlan(n, m, flows)
    objective = float(sum(f * cost[c] for c, f in state.flows.items()))
    dual = state.potential.copy()
    return TransportSolution(problem, plan, dual, objective, iterations)


def _select_entering(reduced: np.ndarray, bland: bool):
    """Most negative reduced cost, or first negative index under Bland."""
    m = reduced.shape[1]
    if bland:
        negative = np.flatnonzero(reduced.ravel() < -OPTIMALITY_TOL)
        if negative.size == 0:
            return None
        return divmod(int(negative[0]), m)
    flat = int(np.argmin(reduced))
    cell = divmod(flat, m)
    if reduced[cell] >= -OPTIMALITY_TOL:
        return None
    return cell
