"""Closed-form bound sheet for packing and double-domination numbers.

Rational bounds are kept exact as fractions; bounds involving k-th roots
or logarithms are 64-bit floats (the root is evaluated in double
precision, relative error well under 1e-12 at desk scale).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import GraphInputError

Value = Union[Fraction, float]


@dataclass(frozen=True)
class BoundSheet:
    """Every closed-form bound that applies to (n, max_degree, min_degree, k).

    Lower bounds on the largest k-limited packing:
      * exact_value - n itself, reported exactly when k > max_degree;
      * greedy_lower - n/(max_degree^2 + 1), the greedy guarantee, k = 1 only;
      * random_lower - n*k / ((k+1) * (C(D,k)*(D+1))^(1/k)) from random
        sampling with repair, k <= max_degree;
      * random_lower_alt - the same bound factored through C(D+1,k+1);
      * random_lower_simple - the weaker closed form n*k / (e * D^(1+1/k)).

    Upper bounds:
      * packing_upper - k*n/(min_degree + 1) by double counting;
      * double_dom_upper_avg / double_dom_upper_min - upper bounds on the
        smallest double dominating set via the average and the minimum
        degree; `double_dom_upper_useful` is False in the cubic case
        min_degree = avg_degree = 3 where both exceed n.

    Cubic reference values (max_degree = 3 only):
      * cubic_quarter_lower - the n/4 reference lower bound for k = 2,
        superseded by the constructive n/3 guarantee; no construction
        attached;
      * cubic_l3_lower - 9n/14, the k = 3 guarantee dual to the 5n/14
        domination bound for connected cubic graphs.
    """

    n: int
    max_degree: int
    min_degree: int
    k: int
    avg_degree: float
    tuple_l: int
    exact_value: Optional[int]
    greedy_lower: Optional[Fraction]
    random_lower: Optional[float]
    random_lower_alt: Optional[float]
    random_lower_simple: Optional[float]
    packing_upper: Fraction
    double_dom_upper_avg: Optional[float]
    double_dom_upper_min: Optional[float]
    double_dom_upper_useful: bool
    cubic_quarter_lower: Optional[Fraction]
    cubic_l3_lower: Optional[Fraction]

    def lower_bounds(self) -> list[Value]:
        """All applicable lower bounds on the largest k-limited packing."""
        out: list[Value] = []
        if self.exact_value is not None:
            out.append(Fraction(self.exact_value))
        for v in (self.greedy_lower, self.random_lower, self.random_lower_alt,
                  self.random_lower_simple, self.cubic_quarter_lower,
                  self.cubic_l3_lower):
            if v is not None:
                out.append(v)
        return out

    def to_text(self) -> str:
        def fmt(v):
            if v is None:
                return "n/a"
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, Fraction):
                return str(v)
            return repr(v)

        fields = [
            ("n", self.n),
            ("max_degree", self.max_degree),
            ("min_degree", self.min_degree),
            ("k", self.k),
            ("avg_degree", self.avg_degree),
            ("tuple_l", self.tuple_l),
            ("exact_value", self.exact_value),
            ("greedy_lower", self.greedy_lower),
            ("random_lower", self.random_lower),
            ("random_lower_alt", self.random_lower_alt),
            ("random_lower_simple", self.random_lower_simple),
            ("packing_upper", self.packing_upper),
            ("double_dom_upper_avg", self.double_dom_upper_avg),
            ("double_dom_upper_min", self.double_dom_upper_min),
            ("double_dom_upper_useful", self.double_dom_upper_useful),
            ("cubic_quarter_lower", self.cubic_quarter_lower),
            ("cubic_l3_lower", self.cubic_l3_lower),
        ]
        return "\n".join(f"{name}: {fmt(value)}" for name, value in fields) + "\n"


def bound_sheet(
    n: int,
    max_degree: int,
    min_degree: int,
    k: int,
    avg_degree: Optional[float] = None,
) -> BoundSheet:
    """Evaluate every closed-form bound for the given degree data.

    Binomial coefficients are computed exactly before any floating-point
    conversion.  avg_degree defaults to min_degree (exact for regular
    graphs); pass the true average when it is known.
    """
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    if n < 0:
        raise GraphInputError(f"n must be nonnegative, got {n}")
    if max_degree < min_degree or min_degree < 0:
        raise GraphInputError(
            f"need max_degree >= min_degree >= 0, got {max_degree}, {min_degree}"
        )
    d = float(min_degree) if avg_degree is None else float(avg_degree)

    exact_value = n if k > max_degree else None
    greedy_lower = Fraction(n, max_degree**2 + 1) if k == 1 else None

    random_lower = random_lower_alt = random_lower_simple = None
    if k <= max_degree:
        base = math.comb(max_degree, k) * (max_degree + 1)
        random_lower = n * k / ((k + 1) * base ** (1.0 / k))
        alt_base = (k + 1) * math.comb(max_degree + 1, k + 1)
        random_lower_alt = n * k / (k + 1) * (1.0 / alt_base) ** (1.0 / k)
        random_lower_simple = n * k / (math.e * max_degree ** (1.0 + 1.0 / k))

    packing_upper = Fraction(k * n, min_degree + 1)

    double_dom_upper_avg = double_dom_upper_min = None
    if min_degree >= 1:
        double_dom_upper_avg = (math.log(1.0 + d) + math.log(min_degree) + 1.0) * n / min_degree
        double_dom_upper_min = (
            (math.log(1.0 + min_degree) + math.log(min_degree) + 1.0) * n / min_degree
        )
    double_dom_upper_useful = not (min_degree == 3 and d == 3.0)

    # n/4 is implied by the constructive n/3 guarantee for any max-degree-3
    # graph; 9n/14 is dual to a domination bound proved for 3-regular graphs
    # only, so it additionally requires min_degree == 3.
    cubic_quarter_lower = Fraction(n, 4) if (max_degree == 3 and k == 2) else None
    cubic_l3_lower = (
        Fraction(9 * n, 14) if (max_degree == 3 and min_degree == 3 and k == 3) else None
    )

    return BoundSheet(
        n=n,
        max_degree=max_degree,
        min_degree=min_degree,
        k=k,
        avg_degree=d,
        tuple_l=2,
        exact_value=exact_value,
        greedy_lower=greedy_lower,
        random_lower=random_lower,
        random_lower_alt=random_lower_alt,
        random_lower_simple=random_lower_simple,
        packing_upper=packing_upper,
        double_dom_upper_avg=double_dom_upper_avg,
        double_dom_upper_min=double_dom_upper_min,
        double_dom_upper_useful=double_dom_upper_useful,
        cubic_quarter_lower=cubic_quarter_lower,
        cubic_l3_lower=cubic_l3_lower,
    )
