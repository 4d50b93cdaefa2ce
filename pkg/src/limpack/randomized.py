"""Randomized k-limited packing constructors.

``sample_and_repair`` picks each vertex independently with probability p
and then deletes excess vertices from overfull closed neighborhoods; its
auto rate p = (C(D,k)*(D+1))^(-1/k) maximizes the guaranteed expected
size p - C(D+1,k+1)*p^(k+1) per vertex, which works out to exactly the
random lower bound of the bound sheet.

``lll_resample`` is a resampling loop in the Moser-Tardos style: while
some closed neighborhood holds k+1 or more chosen vertices, the whole
neighborhood is resampled.  It is this package's algorithmic realization
of an existence argument via the local lemma, not a construction taken
from anywhere else; the parameter epsilon1 = sqrt(5/log log D) only
drops below 1 at astronomically large D, so desk-scale runs always carry
``clamped=True`` and are judged on validity, determinism, and size
statistics rather than the asymptotic constant.

All runs are deterministic for a fixed seed: one independent generator
per run, no global state.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Union

from .errors import GraphInputError
from .graph import Graph, degree_stats
from .verify import Packing


@dataclass(frozen=True)
class LLLParameters:
    """Resampler parameters; `clamped` marks any value forced into range.

    epsilon1 is sqrt(5 / log log D) when that lies in (0, 1) and the
    clamp value otherwise; epsilon2 is 3/sqrt(k*D) treated the same way;
    p is (1 - epsilon1)(k+1)/(D+1) forced into (0, 1].
    """

    epsilon1: float
    epsilon2: float
    p: float
    clamped: bool


@dataclass(frozen=True)
class RandomRunReport:
    """Outcome of one randomized construction run.

    `rounds` counts resampling rounds (0 for sample_and_repair);
    `repairs` counts vertices deleted by repair (0 for the resampler).
    On resampler failure `success` is False and `packing` holds the last,
    possibly invalid, vertex set for diagnosis only.  `size_target_met`
    records |X| >= (1 - epsilon2) * n * p for resampler successes.
    """

    packing: Packing
    rounds: int
    repairs: int
    seed: int
    success: bool = True
    size_target_met: Optional[bool] = None
    params: Optional[LLLParameters] = None


def lll_parameters(max_degree: int, k: int, clamp: float = 0.5) -> LLLParameters:
    """Evaluate the resampler parameters with natural logarithms.

    Values that fall outside their ranges (epsilon1 and epsilon2 outside
    (0,1), p above 1) are clamped and flagged; log log D is undefined for
    D <= e, which also clamps epsilon1.
    """
    if max_degree < 2:
        raise GraphInputError(f"max_degree must be at least 2, got {max_degree}")
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    if not (0.0 < clamp < 1.0):
        raise GraphInputError(f"clamp must lie in (0, 1), got {clamp}")
    clamped = False
    loglog = math.log(math.log(max_degree)) if max_degree > 1 else float("-inf")
    if loglog <= 0:
        epsilon1 = clamp
        clamped = True
    else:
        raw = math.sqrt(5.0 / loglog)
        if raw >= 1.0:
            epsilon1 = clamp
            clamped = True
        else:
            epsilon1 = raw
    raw2 = 3.0 / math.sqrt(k * max_degree)
    if raw2 >= 1.0:
        epsilon2 = clamp
        clamped = True
    else:
        epsilon2 = raw2
    p = (1.0 - epsilon1) * (k + 1) / (max_degree + 1)
    if p > 1.0:
        p = 1.0
        clamped = True
    return LLLParameters(epsilon1, epsilon2, p, clamped)


def auto_sample_rate(max_degree: int, k: int) -> float:
    """Sampling rate for sample_and_repair: (C(D,k)*(D+1))^(-1/k).

    This maximizes p - C(D+1,k+1)*p^(k+1), the guaranteed per-vertex
    expected yield of sampling followed by repair; for k > D the packing
    is all of V and the rate is 1.
    """
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    if k > max_degree:
        return 1.0
    base = math.comb(max_degree, k) * (max_degree + 1)
    return base ** (-1.0 / k)


def sample_and_repair(
    g: Graph, k: int, p: Union[float, str] = "auto", seed: int = 0
) -> RandomRunReport:
    """Independent sampling at rate p, then deterministic repair.

    While some closed neighborhood holds more than k chosen vertices, the
    excess members with the largest indices are deleted.  The result
    always verifies; identical inputs and seed give identical reports.
    """
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    if p == "auto":
        rate = auto_sample_rate(degree_stats(g).max_degree, k)
    else:
        rate = float(p)
        if not (0.0 <= rate <= 1.0):
            raise GraphInputError(f"p must lie in [0, 1], got {rate}")
    rng = random.Random(seed)
    chosen = {v for v in range(g.n) if rng.random() < rate}
    repairs = 0
    dirty = True
    while dirty:
        dirty = False
        for v in range(g.n):
            members = sorted(u for u in ({v} | set(g.adj[v])) if u in chosen)
            excess = len(members) - k
            if excess > 0:
                for u in members[-excess:]:
                    chosen.discard(u)
                repairs += excess
                dirty = True
    return RandomRunReport(
        packing=Packing(k, frozenset(chosen)),
        rounds=0,
        repairs=repairs,
        seed=seed,
    )


def resample_step(g: Graph, chosen: set[int], v: int, p: float, rng: random.Random) -> None:
    """Resample membership of every vertex of N[v] independently at rate p."""
    for u in sorted({v} | set(g.adj[v])):
        if rng.random() < p:
            chosen.add(u)
        else:
            chosen.discard(u)


def lll_resample(
    g: Graph,
    k: int,
    params: Optional[LLLParameters] = None,
    seed: int = 0,
    max_rounds: int = 100_000,
) -> RandomRunReport:
    """Resampling constructor: fix violated neighborhoods until none remain.

    Each round resamples the closed neighborhood of the lowest-index
    vertex v with |N[v] ∩ X| >= k+1.  Exhausting max_rounds returns a
    failure report carrying the last X; it is never presented as a valid
    packing.  Success reports record whether |X| >= (1-epsilon2)*n*p.
    """
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    if max_rounds < 1:
        raise GraphInputError(f"max_rounds must be at least 1, got {max_rounds}")
    stats = degree_stats(g)
    if params is None:
        if k > stats.max_degree:
            params = LLLParameters(0.0, 0.0, 1.0, False)
        else:
            params = lll_parameters(max(2, stats.max_degree), k)
    if not (0.0 < params.p <= 1.0):
        raise GraphInputError(f"p must lie in (0, 1], got {params.p}")
    rng = random.Random(seed)
    chosen = {v for v in range(g.n) if rng.random() < params.p}
    rounds = 0
    while rounds < max_rounds:
        violated = _lowest_violated(g, chosen, k)
        if violated is None:
            size_ok = len(chosen) >= (1.0 - params.epsilon2) * g.n * params.p
            return RandomRunReport(
                packing=Packing(k, frozenset(chosen)),
                rounds=rounds,
                repairs=0,
                seed=seed,
                success=True,
                size_target_met=size_ok,
                params=params,
            )
        rounds += 1
        resample_step(g, chosen, violated, params.p, rng)
    return RandomRunReport(
        packing=Packing(k, frozenset(chosen)),
        rounds=rounds,
        repairs=0,
        seed=seed,
        success=False,
        size_target_met=None,
        params=params,
    )


def _lowest_violated(g: Graph, chosen: set[int], k: int) -> Optional[int]:
    for v in range(g.n):
        count = (v in chosen) + sum(1 for u in g.adj[v] if u in chosen)
        if count >= k + 1:
            return v
    return None
