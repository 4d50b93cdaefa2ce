"""Greedy k-limited packing construction.

Repeatedly adds the lowest-index vertex whose addition keeps the set
k-limited; since feasibility only shrinks, a single ascending pass with
capacity tracking realizes that rule.  For k = 1 the result has at least
n/(max_degree^2 + 1) vertices.
"""

from __future__ import annotations

from .errors import GraphInputError
from .graph import Graph


def greedy_packing(g: Graph, k: int) -> frozenset[int]:
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    caps = [k] * g.n
    chosen: set[int] = set()
    for v in range(g.n):
        if caps[v] >= 1 and all(caps[u] >= 1 for u in g.adj[v]):
            chosen.add(v)
            caps[v] -= 1
            for u in g.adj[v]:
                caps[u] -= 1
    return frozenset(chosen)
