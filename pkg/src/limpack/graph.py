"""Immutable graph and typed-multigraph structures plus text I/O.

Vertices are dense 0-based indices.  ``Graph`` is a simple undirected
graph; ``TypedMultigraph`` carries two edge types, ``c`` (colour) and
``d`` (domination), and a pair of vertices may be joined by one edge of
each type at once.  Both structures are frozen after construction, so
they are safe to share across threads.

File format (UTF-8 text): optional ``#`` comment lines, then a header
``n m``, then exactly m edge lines ``u v``, ``u v c`` or ``u v d``.
A file with no type tokens parses to a ``Graph``; any typed line makes it
a ``TypedMultigraph`` whose untyped lines default to type d.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

from .errors import GraphInputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, deduplicating repeated edges.

        Raises GraphInputError for negative n, out-of-range endpoints, or
        self-loops.
        """
        if n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_endpoint(u, n)
            _check_endpoint(v, n)
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_endpoint(v, self.n)
        return self.adj[v]

    def degree(self, v: int) -> int:
        _check_endpoint(v, self.n)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        _check_endpoint(u, self.n)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2


@dataclass(frozen=True)
class TypedMultigraph:
    """Multigraph with c- and d-typed edges, at most one edge per type per pair.

    Duplicate edges of the same type are dropped on construction.  Both
    edge types count toward a vertex's degree, so a pair joined by a
    c-edge and a d-edge contributes 2 to each endpoint's degree.
    """

    n: int
    c_adj: tuple[tuple[int, ...], ...]
    d_adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int, str]]) -> "TypedMultigraph":
        if n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {n}")
        c_nbrs: list[set[int]] = [set() for _ in range(n)]
        d_nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v, t in edges:
            _check_endpoint(u, n)
            _check_endpoint(v, n)
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if t == "c":
                c_nbrs[u].add(v)
                c_nbrs[v].add(u)
            elif t == "d":
                d_nbrs[u].add(v)
                d_nbrs[v].add(u)
            else:
                raise GraphInputError(f"unknown edge type {t!r} (expected 'c' or 'd')")
        return TypedMultigraph(
            n,
            tuple(tuple(sorted(s)) for s in c_nbrs),
            tuple(tuple(sorted(s)) for s in d_nbrs),
        )

    @staticmethod
    def from_graph(g: Graph) -> "TypedMultigraph":
        """Promote a plain graph: every edge becomes a d-edge."""
        empty = tuple(() for _ in range(g.n))
        return TypedMultigraph(g.n, empty, g.adj)

    def degree(self, v: int) -> int:
        _check_endpoint(v, self.n)
        return len(self.c_adj[v]) + len(self.d_adj[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def closed_d_neighborhood(self, v: int) -> set[int]:
        """{v} plus v's d-neighbors; c-edges contribute nothing."""
        _check_endpoint(v, self.n)
        return {v} | set(self.d_adj[v])

    def edges(self) -> list[tuple[int, int, str]]:
        """All edges as (u, v, type) with u < v, sorted; c before d per pair."""
        out = [(u, v, "c") for u in range(self.n) for v in self.c_adj[u] if u < v]
        out += [(u, v, "d") for u in range(self.n) for v in self.d_adj[u] if u < v]
        out.sort()
        return out


class DegreeStats(NamedTuple):
    max_degree: int
    min_degree: int
    vertex_count: int
    edge_count: int


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    """{v} together with v's neighbors; size is deg(v) + 1."""
    return {v} | set(g.neighbors(v))


def degree_stats(g: Graph) -> DegreeStats:
    """(max degree, min degree, n, m); an empty graph reports 0, 0, 0, 0."""
    if g.n == 0:
        return DegreeStats(0, 0, 0, 0)
    degs = [len(a) for a in g.adj]
    return DegreeStats(max(degs), min(degs), g.n, sum(degs) // 2)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place g1 and g2 side by side; g2's vertices are shifted by g1.n."""
    shift = g1.n
    shifted = tuple(tuple(u + shift for u in nbrs) for nbrs in g2.adj)
    return Graph(g1.n + g2.n, g1.adj + shifted)


def pairwise_distance(g: Graph, u: int, v: int) -> Optional[int]:
    """BFS edge distance from u to v, or None if unreachable."""
    _check_endpoint(u, g.n)
    _check_endpoint(v, g.n)
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in g.adj[w]:
            if x not in seen:
                seen[x] = seen[w] + 1
                if x == v:
                    return seen[x]
                queue.append(x)
    return None


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen: set[int] = set()
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for x in g.adj[w]:
                if x not in seen:
                    seen.add(x)
                    comp.append(x)
                    queue.append(x)
        comps.append(sorted(comp))
    return comps


def parse_graph(text: str) -> Union[Graph, TypedMultigraph]:
    """Parse the edge-list format; see the module docstring.

    Returns a Graph when no line carries a type token, otherwise a
    TypedMultigraph (untyped lines default to d).  Errors report the
    offending 1-based line number.
    """
    header: Optional[tuple[int, int]] = None
    raw_edges: list[tuple[int, int, Optional[str]]] = []
    any_typed = False
    edges_seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphInputError(f"line {lineno}: expected header 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphInputError(f"line {lineno}: expected header 'n m'") from None
            if n < 0 or m < 0:
                raise GraphInputError(f"line {lineno}: header values must be nonnegative")
            header = (n, m)
            continue
        n, m = header
        if edges_seen >= m:
            raise GraphInputError(f"line {lineno}: more than {m} edge lines")
        if len(parts) not in (2, 3):
            raise GraphInputError(f"line {lineno}: expected 'u v' or 'u v c|d'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"line {lineno}: vertex index out of range (n={n})")
        if u == v:
            raise GraphInputError(f"line {lineno}: self-loop at vertex {u}")
        t: Optional[str] = None
        if len(parts) == 3:
            if parts[2] not in ("c", "d"):
                raise GraphInputError(f"line {lineno}: edge type must be 'c' or 'd'")
            t = parts[2]
            any_typed = True
        raw_edges.append((u, v, t))
        edges_seen += 1
    if header is None:
        raise GraphInputError("line 1: missing header 'n m'")
    n, m = header
    if edges_seen != m:
        raise GraphInputError(f"expected {m} edge lines, found {edges_seen}")
    if any_typed:
        return TypedMultigraph.from_edges(n, [(u, v, t or "d") for u, v, t in raw_edges])
    return Graph.from_edges(n, [(u, v) for u, v, _ in raw_edges])


def serialize_graph(g: Union[Graph, TypedMultigraph]) -> str:
    """Inverse of parse_graph, stable under round-trips up to edge order."""
    if isinstance(g, TypedMultigraph):
        edges = g.edges()
        lines = [f"{g.n} {len(edges)}"]
        lines += [f"{u} {v} {t}" for u, v, t in edges]
    else:
        edges = g.edges()
        lines = [f"{g.n} {len(edges)}"]
        lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_packing(text: str) -> list[int]:
    """Whitespace-separated vertex indices; ``#`` starts a comment."""
    out: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for tok in line.split():
            try:
                out.append(int(tok))
            except ValueError:
                raise GraphInputError(
                    f"line {lineno}: packing entries must be integers, got {tok!r}"
                ) from None
    return out


def serialize_packing(vertices: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(vertices)) + "\n"


def _check_endpoint(v: int, n: int) -> None:
    if not (0 <= v < n):
        raise GraphInputError(f"vertex {v} out of range for graph with {n} vertices")
