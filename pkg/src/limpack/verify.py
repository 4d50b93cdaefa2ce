"""Certificate verification for packings and dominating sets, plus duality.

A vertex set X is a k-limited packing when every closed neighborhood
contains at most k members of X; a set D is an l-tuple dominating set
when every closed neighborhood contains at least l members of D.  On a
typed multigraph the 2-limited condition splits in two: no c-edge has
both endpoints in X, and every closed d-neighborhood holds at most 2
members of X.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import GraphInputError, PreconditionError
from .graph import Graph, TypedMultigraph

Violation = Union["VertexViolation", "CEdgeViolation"]


@dataclass(frozen=True)
class Packing:
    """A candidate k-limited packing: the parameter and the vertex set."""

    k: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class VertexViolation:
    """Vertex whose neighborhood count violates its limit.

    For packing checks count > limit; for domination checks count < limit.
    """

    vertex: int
    count: int
    limit: int


@dataclass(frozen=True)
class CEdgeViolation:
    """c-edge with both endpoints selected (count 2 against limit 1)."""

    u: int
    v: int


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[Violation, ...]

    def to_text(self) -> str:
        lines = [f"valid: {'true' if self.valid else 'false'}"]
        for viol in self.violations:
            if isinstance(viol, CEdgeViolation):
                lines.append(f"violation: cedge {viol.u} {viol.v}")
            else:
                lines.append(
                    f"violation: vertex {viol.vertex} count {viol.count} limit {viol.limit}"
                )
        return "\n".join(lines) + "\n"


def _check_subset(vertices: Iterable[int], n: int) -> frozenset[int]:
    xs = frozenset(vertices)
    for v in xs:
        if not (0 <= v < n):
            raise GraphInputError(f"vertex {v} out of range for graph with {n} vertices")
    return xs


def verify_k_limited(g: Graph, vertices: Iterable[int], k: int) -> VerificationReport:
    """Check |N[v] ∩ X| <= k for every vertex, listing all offenders."""
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    xs = _check_subset(vertices, g.n)
    violations = []
    for v in range(g.n):
        count = (v in xs) + sum(1 for u in g.adj[v] if u in xs)
        if count > k:
            violations.append(VertexViolation(v, count, k))
    return VerificationReport(not violations, tuple(violations))


def verify_typed_two_limited(tm: TypedMultigraph, vertices: Iterable[int]) -> VerificationReport:
    """Check the typed 2-limited conditions; c-edge and d-neighborhood
    violations are reported separately (c-edges first)."""
    xs = _check_subset(vertices, tm.n)
    violations: list[Violation] = []
    for u in range(tm.n):
        for v in tm.c_adj[u]:
            if u < v and u in xs and v in xs:
                violations.append(CEdgeViolation(u, v))
    for v in range(tm.n):
        count = (v in xs) + sum(1 for u in tm.d_adj[v] if u in xs)
        if count > 2:
            violations.append(VertexViolation(v, count, 2))
    return VerificationReport(not violations, tuple(violations))


def verify_tuple_dominating(g: Graph, vertices: Iterable[int], l: int) -> VerificationReport:
    """Check |N[v] ∩ D| >= l for every vertex."""
    if l < 1:
        raise GraphInputError(f"l must be positive, got {l}")
    ds = _check_subset(vertices, g.n)
    violations = []
    for v in range(g.n):
        count = (v in ds) + sum(1 for u in g.adj[v] if u in ds)
        if count < l:
            violations.append(VertexViolation(v, count, l))
    return VerificationReport(not violations, tuple(violations))


def dual_complement(g: Graph, vertices: Iterable[int], k: int) -> frozenset[int]:
    """Complement map between packings and dominating sets on regular graphs.

    On an r-regular graph, X is a valid k-limited packing exactly when
    V \\ X is a valid (r+1-k)-tuple dominating set.  Requires 1 <= k <= r+1.
    """
    xs = _check_subset(vertices, g.n)
    if g.n == 0:
        raise PreconditionError("dual_complement needs a nonempty regular graph")
    degs = {len(a) for a in g.adj}
    if len(degs) != 1:
        raise PreconditionError(f"graph is not regular (degrees {sorted(degs)})")
    r = degs.pop()
    if not (1 <= k <= r + 1):
        raise GraphInputError(f"k must be in [1, {r + 1}] for a {r}-regular graph, got {k}")
    return frozenset(range(g.n)) - xs
