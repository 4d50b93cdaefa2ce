"""Generators for the graph families used as examples and extremal witnesses.

Cycles, the chorded 6-cycle H6 (isomorphic to K_{3,3}), the Petersen
graph, K4, seeded random regular graphs via the pairing model, and the
projective orthogonality graphs over GF(q): vertices are the points of a
(k+1)-dimensional projective space over GF(q), joined when their inner
product vanishes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import GraphInputError, ResourceLimitError
from .graph import Graph

# q -> (characteristic p, extension degree, irreducible polynomial coeffs
# low-to-high).  x^2+x+1 over GF(2), x^3+x+1 over GF(2), x^2+1 over GF(3).
_PRIME_POWER_FIELDS = {
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (1, 0, 1)),
}


class GaloisField:
    """GF(q) for prime q (modular arithmetic) or q in {4, 8, 9} (tables).

    Elements are the integers 0..q-1; for prime powers the base-p digits
    of an element are the coefficients of its polynomial representative.
    """

    def __init__(self, q: int):
        if q >= 2 and _is_prime(q):
            self.q = q
            self._prime = True
        elif q in _PRIME_POWER_FIELDS:
            self.q = q
            self._prime = False
            p, deg, poly = _PRIME_POWER_FIELDS[q]
            self._p = p
            self._mul = _build_mul_table(p, deg, poly)
            self._inv = {}
            for a in range(1, q):
                for b in range(1, q):
                    if self._mul[a][b] == 1:
                        self._inv[a] = b
                        break
        else:
            raise GraphInputError(
                f"unsupported field order {q}: q must be prime or one of"
                f" {sorted(_PRIME_POWER_FIELDS)}"
            )

    def add(self, a: int, b: int) -> int:
        if self._prime:
            return (a + b) % self.q
        p = self._p
        total, shift = 0, 1
        while a or b:
            total += ((a % p + b % p) % p) * shift
            a //= p
            b //= p
            shift *= p
        return total

    def mul(self, a: int, b: int) -> int:
        if self._prime:
            return (a * b) % self.q
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise GraphInputError("zero has no multiplicative inverse")
        if self._prime:
            return pow(a, self.q - 2, self.q)
        return self._inv[a]

    def dot(self, u: tuple[int, ...], w: tuple[int, ...]) -> int:
        total = 0
        for a, b in zip(u, w):
            total = self.add(total, self.mul(a, b))
        return total


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical representative of a projective equivalence class.

    Normalized so the first nonzero coordinate is 1; two vectors represent
    the same point exactly when their normalizations are equal.
    """

    coords: tuple[int, ...]


def normalize_point(field: GaloisField, vec: tuple[int, ...]) -> ProjectivePoint:
    """Scale vec so its first nonzero coordinate is 1."""
    for c in vec:
        if c != 0:
            scale = field.inv(c)
            return ProjectivePoint(tuple(field.mul(scale, x) for x in vec))
    raise GraphInputError("the zero vector is not a projective point")


def projective_points(q: int, k: int) -> list[ProjectivePoint]:
    """All points of the (k+1)-dimensional projective space over GF(q).

    Count is (q^(k+2)-1)/(q-1); points are ordered lexicographically on
    their canonical coordinate vectors, which fixes the vertex numbering
    of gen_projective.
    """
    if k < 1:
        raise GraphInputError(f"k must be at least 1, got {k}")
    GaloisField(q)  # validates q
    pts = []
    for vec in product(range(q), repeat=k + 2):
        for c in vec:
            if c != 0:
                if c == 1:
                    pts.append(ProjectivePoint(vec))
                break
    return pts


def gen_projective(q: int, k: int) -> Graph:
    """Orthogonality graph on projective points over GF(q).

    Distinct points are adjacent when their inner product is 0 in GF(q);
    self-orthogonal points do not get self-loops, so degrees are H or H-1
    with H = (q^(k+1)-1)/(q-1).
    """
    field = GaloisField(q)
    pts = projective_points(q, k)
    n = len(pts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if field.dot(pts[i].coords, pts[j].coords) == 0:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def gen_cycle(n: int) -> Graph:
    """The cycle C_n, n >= 3."""
    if n < 3:
        raise GraphInputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_named(family: str) -> Graph:
    """Fixed small graphs: 'h6', 'petersen', or 'k4'.

    h6 is the 6-cycle with its three length-3 chords (isomorphic to
    K_{3,3}); petersen is the standard outer-C5 / inner-pentagram drawing.
    """
    if family == "h6":
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4), (2, 5)]
        return Graph.from_edges(6, edges)
    if family == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, edges)
    if family == "k4":
        return Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    raise GraphInputError(f"unknown graph family {family!r} (h6, petersen, k4)")


def gen_random_regular(n: int, r: int, seed: int, max_attempts: int = 1000) -> Graph:
    """Seeded simple r-regular graph via the pairing model.

    Stubs are matched one at a time against a uniformly chosen compatible
    stub (no self-loops, no repeated edges); a dead end discards the whole
    attempt.  Deterministic for a fixed seed.
    """
    if n < 0 or r < 0:
        raise GraphInputError(f"n and r must be nonnegative, got n={n}, r={r}")
    if n * r % 2 != 0:
        raise GraphInputError(f"n*r must be even, got n={n}, r={r}")
    if r > 0 and r >= n:
        raise GraphInputError(f"need r < n, got n={n}, r={r}")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        edges = _pairing_attempt(n, r, rng)
        if edges is not None:
            return Graph.from_edges(n, edges)
    raise ResourceLimitError(
        f"no simple {r}-regular graph found on {n} vertices in {max_attempts} attempts"
    )


def _pairing_attempt(n: int, r: int, rng: random.Random) -> list[tuple[int, int]] | None:
    stubs = [v for v in range(n) for _ in range(r)]
    taken: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    while stubs:
        u = stubs[0]
        candidates = [
            i
            for i in range(1, len(stubs))
            if stubs[i] != u and (min(u, stubs[i]), max(u, stubs[i])) not in taken
        ]
        if not candidates:
            return None
        i = candidates[rng.randrange(len(candidates))]
        v = stubs[i]
        taken.add((min(u, v), max(u, v)))
        edges.append((u, v))
        del stubs[i]
        del stubs[0]
    return edges


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def _build_mul_table(p: int, deg: int, poly: tuple[int, ...]) -> list[list[int]]:
    """Multiplication table for GF(p^deg) with the given irreducible polynomial."""
    q = p**deg

    def digits(a: int) -> list[int]:
        out = []
        for _ in range(deg):
            out.append(a % p)
            a //= p
        return out

    def undigits(ds: list[int]) -> int:
        total = 0
        for c in reversed(ds):
            total = total * p + c
        return total

    table = [[0] * q for _ in range(q)]
    for a in range(q):
        for b in range(q):
            da, db = digits(a), digits(b)
            prod = [0] * (2 * deg - 1)
            for i, ca in enumerate(da):
                if ca:
                    for j, cb in enumerate(db):
                        prod[i + j] = (prod[i + j] + ca * cb) % p
            # reduce modulo the irreducible polynomial (monic, degree deg)
            for i in range(len(prod) - 1, deg - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j in range(deg):
                        prod[i - deg + j] = (prod[i - deg + j] - c * poly[j]) % p
            table[a][b] = undigits(prod[:deg])
    return table
