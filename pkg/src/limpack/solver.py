"""Exact solvers for packing and domination numbers, plus a brute-force oracle.

Both optimizers are branch-and-bound searches over a fixed vertex order
(descending degree, ties by index), exploring "include" before "exclude"
and keeping only strict improvements, which makes the returned witness
the lexicographically first optimal set in the branching order.  The
packing solver maintains per-constraint residual capacities; the
domination solver tracks coverage deficits and remaining potential.

``enumerate_oracle`` scans all 2^n subsets with no pruning and is the
independent yardstick the rest of the package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import GraphInputError, InfeasibleError, ResourceLimitError
from .graph import Graph, TypedMultigraph, degree_stats

DEFAULT_VERTEX_LIMIT = 64
ORACLE_VERTEX_LIMIT = 20


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: tuple[int, ...]
    nodes_explored: int

    def to_text(self) -> str:
        return (
            f"optimum: {self.optimum}\n"
            f"witness: {' '.join(str(v) for v in self.witness)}\n"
            f"nodes: {self.nodes_explored}\n"
        )


def max_k_limited(g: Graph, k: int, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> SolveResult:
    """Largest k-limited packing of g, with a verifying witness."""
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    _check_size(g.n, vertex_limit)
    constraints = [([v] + list(g.adj[v]), k) for v in range(g.n)]
    order = _branch_order(g)
    return _maximize(g.n, constraints, order)


def max_typed_two_limited(
    tm: TypedMultigraph, vertex_limit: int = DEFAULT_VERTEX_LIMIT
) -> SolveResult:
    """Largest 2-limited set of a typed multigraph.

    Same engine as max_k_limited: each c-edge is an at-most-1 constraint
    and each closed d-neighborhood an at-most-2 constraint.
    """
    _check_size(tm.n, vertex_limit)
    constraints: list[tuple[list[int], int]] = []
    for u in range(tm.n):
        for v in tm.c_adj[u]:
            if u < v:
                constraints.append(([u, v], 1))
    for v in range(tm.n):
        constraints.append(([v] + list(tm.d_adj[v]), 2))
    order = sorted(range(tm.n), key=lambda v: (-tm.degree(v), v))
    return _maximize(tm.n, constraints, order)


def min_tuple_dominating(g: Graph, l: int, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> SolveResult:
    """Smallest l-tuple dominating set of g.

    Feasible only when l <= min_degree + 1; solved directly (not through
    duality), so it also works on non-regular graphs.
    """
    if l < 1:
        raise GraphInputError(f"l must be positive, got {l}")
    _check_size(g.n, vertex_limit)
    if g.n > 0:
        stats = degree_stats(g)
        if l > stats.min_degree + 1:
            raise InfeasibleError(
                f"no {l}-tuple dominating set exists: some vertex has only"
                f" {stats.min_degree + 1} vertices in its closed neighborhood"
            )
    constraints = [([v] + list(g.adj[v]), l) for v in range(g.n)]
    order = _branch_order(g)
    return _minimize(g.n, constraints, order, l)


def enumerate_oracle(
    g: Graph,
    k: Optional[int] = None,
    mode: str = "packing",
    l: Optional[int] = None,
) -> int:
    """Exhaustive scan over all subsets; no pruning; test use only (n <= 20)."""
    if g.n > ORACLE_VERTEX_LIMIT:
        raise ResourceLimitError(
            f"enumerate_oracle is limited to {ORACLE_VERTEX_LIMIT} vertices, got {g.n}"
        )
    masks = [(1 << v) | sum(1 << u for u in g.adj[v]) for v in range(g.n)]
    if mode == "packing":
        if k is None or k < 1:
            raise GraphInputError("packing mode needs a positive k")
        best = 0
        for s in range(1 << g.n):
            if all((s & m).bit_count() <= k for m in masks):
                size = s.bit_count()
                if size > best:
                    best = size
        return best
    if mode == "domination":
        if l is None or l < 1:
            raise GraphInputError("domination mode needs a positive l")
        best = None
        for s in range(1 << g.n):
            if all((s & m).bit_count() >= l for m in masks):
                size = s.bit_count()
                if best is None or size < best:
                    best = size
        if best is None:
            raise InfeasibleError(f"no {l}-tuple dominating set exists")
        return best
    raise GraphInputError(f"unknown oracle mode {mode!r} (packing or domination)")


def _branch_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))


def _check_size(n: int, vertex_limit: int) -> None:
    if n > vertex_limit:
        raise ResourceLimitError(
            f"graph has {n} vertices (limit {vertex_limit}); use the randomized"
            " constructors (sample_and_repair, lll_resample) for large instances"
        )


def _maximize(
    n: int, constraints: list[tuple[list[int], int]], order: list[int]
) -> SolveResult:
    caps = [limit for _, limit in constraints]
    cons_of: list[list[int]] = [[] for _ in range(n)]
    for idx, (members, _) in enumerate(constraints):
        for v in members:
            cons_of[v].append(idx)

    best_size = -1
    best_set: list[int] = []
    chosen: list[int] = []
    nodes = 0

    def selectable(v: int) -> bool:
        return all(caps[c] >= 1 for c in cons_of[v])

    def rec(pos: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if pos == n:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best_set = sorted(chosen)
            return
        remaining = sum(1 for i in range(pos, n) if selectable(order[i]))
        if len(chosen) + remaining <= best_size:
            return
        v = order[pos]
        if selectable(v):
            chosen.append(v)
            for c in cons_of[v]:
                caps[c] -= 1
            rec(pos + 1)
            for c in cons_of[v]:
                caps[c] += 1
            chosen.pop()
        rec(pos + 1)

    rec(0)
    return SolveResult(best_size, tuple(best_set), nodes)


def _minimize(
    n: int, constraints: list[tuple[list[int], int]], order: list[int], l: int
) -> SolveResult:
    covered = [0] * len(constraints)
    undecided = [len(members) for members, _ in constraints]
    cons_of: list[list[int]] = [[] for _ in range(n)]
    for idx, (members, _) in enumerate(constraints):
        for v in members:
            cons_of[v].append(idx)

    # the full vertex set is feasible (l <= min_degree + 1 was checked)
    best_size = n
    best_set = list(range(n))
    chosen: list[int] = []
    nodes = 0

    def rec(pos: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        max_deficit = 0
        for idx in range(len(constraints)):
            deficit = l - covered[idx]
            if deficit > max_deficit:
                max_deficit = deficit
        if len(chosen) + max_deficit >= best_size:
            return
        if pos == n:
            if max_deficit == 0 and len(chosen) < best_size:
                best_size = len(chosen)
                best_set = sorted(chosen)
            return
        v = order[pos]
        for c in cons_of[v]:
            undecided[c] -= 1
        chosen.append(v)
        for c in cons_of[v]:
            covered[c] += 1
        rec(pos + 1)
        chosen.pop()
        for c in cons_of[v]:
            covered[c] -= 1
        # exclude v: feasible only if every constraint retains enough potential
        if all(covered[c] + undecided[c] >= l for c in cons_of[v]):
            rec(pos + 1)
        for c in cons_of[v]:
            undecided[c] += 1

    rec(0)
    return SolveResult(best_size, tuple(best_set), nodes)
