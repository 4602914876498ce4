"""Instance generators: triangle representations and reduction graphs.

Representations use exact rational coordinates (no floating point), so
boundary contact is classified deterministically; touching triangles
count as intersecting.  The seeded generator keeps all interval
endpoints distinct, which makes the open/closed choice immaterial for
generated instances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .graph import Graph
from .prng import XorShift64Star

_GRID = 20  # generator coordinates live on the 1/20 grid of [0, 2n]


@dataclass(frozen=True)
class TriangleRepresentation:
    """Per vertex: an apex point on one line, a base interval on another."""

    apexes: tuple[Fraction, ...]
    bases: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.apexes) != len(self.bases):
            raise ValueError("apex and base counts differ")
        for l, r in self.bases:
            if l > r:
                raise ValueError(f"base interval [{l}, {r}] is inverted")

    @property
    def n(self) -> int:
        return len(self.apexes)


def representation_to_graph(rep: TriangleRepresentation) -> Graph:
    """Intersection graph of the triangles.

    Two triangles are disjoint iff one lies entirely left of the other:
    its base ends strictly before the other's begins and its apex comes
    strictly first.  Shared boundary points count as intersection.
    """
    n = rep.n
    if n == 0:
        return Graph(0, [])
    den = 1
    for x in rep.apexes:
        den = den * x.denominator // gcd(den, x.denominator)
    for l, r in rep.bases:
        den = den * l.denominator // gcd(den, l.denominator)
        den = den * r.denominator // gcd(den, r.denominator)
    p = [int(x * den) for x in rep.apexes]
    lo = [int(l * den) for l, _ in rep.bases]
    hi = [int(r * den) for _, r in rep.bases]
    bound = 1 << 62
    if all(abs(x) < bound for x in (*p, *lo, *hi)):
        return _intersection_graph_np(p, lo, hi)
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            disjoint = (hi[u] < lo[v] and p[u] < p[v]) or (hi[v] < lo[u] and p[v] < p[u])
            if not disjoint:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return Graph(n, masks, _validate=False)


def _intersection_graph_np(p, lo, hi) -> Graph:
    n = len(p)
    pa = np.asarray(p, dtype=np.int64)
    la = np.asarray(lo, dtype=np.int64)
    ha = np.asarray(hi, dtype=np.int64)
    left_of = (ha[:, None] < la[None, :]) & (pa[:, None] < pa[None, :])
    adj = ~(left_of | left_of.T)
    np.fill_diagonal(adj, False)
    packed = np.packbits(adj, axis=1, bitorder="little")
    masks = [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]
    return Graph(n, masks, _validate=False)


def random_representation(
    n: int, seed: int, window: int | None = None
) -> TriangleRepresentation:
    """Seeded representation on n triangles; identical per (n, seed, window).

    Default: apexes are a random permutation of 1..n and bases are
    random sub-intervals of [0, 2n] with globally distinct endpoints
    (drawn on the 1/20 grid).  With ``window`` = w, apex ranks and base
    positions are only shuffled locally within distance ~w, which keeps
    the intersection graph sparse: the expected degree depends on w,
    not on n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return TriangleRepresentation((), ())
    rng = XorShift64Star(seed)
    used: set[int] = set()

    def fresh(draw) -> int:
        while True:
            x = draw()
            if x not in used:
                used.add(x)
                return x

    if window is None:
        apex_values = list(range(1, n + 1))
        rng.shuffle(apex_values)
        apexes = tuple(Fraction(a) for a in apex_values)
        bases = []
        top = 2 * n * _GRID
        for _ in range(n):
            a = fresh(lambda: rng.randrange(top + 1))
            b = fresh(lambda: rng.randrange(top + 1))
            l, r = (a, b) if a < b else (b, a)
            bases.append((Fraction(l, _GRID), Fraction(r, _GRID)))
        return TriangleRepresentation(apexes, tuple(bases))

    if window < 1:
        raise ValueError("window must be >= 1")
    w = window
    top = 2 * n * _GRID
    keys = [i * _GRID + rng.randrange(2 * w * _GRID) for i in range(n)]
    order = sorted(range(n), key=lambda i: (keys[i], i))
    apex_values = [0] * n
    for rank, i in enumerate(order):
        apex_values[i] = rank + 1
    apexes = tuple(Fraction(a) for a in apex_values)
    bases = []
    for i in range(n):
        center = 2 * i * _GRID
        lo_min = max(0, center - w * _GRID)
        lo_max = min(top - 1, center + w * _GRID)
        l = fresh(lambda: lo_min + rng.randrange(lo_max - lo_min + 1))
        span = min(w * _GRID, top - l)
        r = fresh(lambda: l + 1 + rng.randrange(span))
        bases.append((Fraction(l, _GRID), Fraction(r, _GRID)))
    return TriangleRepresentation(apexes, tuple(bases))


@dataclass(frozen=True)
class NonBetweennessInstance:
    """Ground set 0..size-1 and ordered triples (i, j, k), j the middle."""

    size: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for t in self.triples:
            i, j, k = t
            if len({i, j, k}) != 3:
                raise ValueError(f"triple {t} has repeated elements")
            if not all(0 <= x < self.size for x in t):
                raise ValueError(f"triple {t} out of range for |A|={self.size}")


def nonbetweenness_to_graph(inst: NonBetweennessInstance) -> Graph:
    """Reduction graph: a clique on the ground set plus one 2-vertex
    gadget per triple wired to i, j, k.

    Elements are vertices 0..|A|-1; triple h contributes u_h = |A| + 2h
    and w_h = |A| + 2h + 1, with edges u_h w_h, u_h j, w_h i, w_h k.
    |V| = |A| + 2|C| and |E| = |A|(|A|-1)/2 + 4|C|.
    """
    a = inst.size
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    for h, (i, j, k) in enumerate(inst.triples):
        u = a + 2 * h
        w = u + 1
        edges += [(u, w), (u, j), (w, i), (w, k)]
    g = Graph.from_edges(a + 2 * len(inst.triples), edges)
    assert g.m == a * (a - 1) // 2 + 4 * len(inst.triples)
    return g


def random_nonbetweenness(size: int, count: int, seed: int) -> NonBetweennessInstance:
    """Seeded instance with ``count`` distinct normalized triples (i < k)."""
    if size < 3 and count > 0:
        raise ValueError("triples need |A| >= 3")
    limit = size * (size - 1) * (size - 2) // 2
    if count > limit:
        raise ValueError(f"at most {limit} distinct triples exist for |A|={size}")
    rng = XorShift64Star(seed)
    triples: list[tuple[int, int, int]] = []
    seen = set()
    while len(triples) < count:
        j = rng.randrange(size)
        i = rng.randrange(size)
        k = rng.randrange(size)
        if len({i, j, k}) != 3:
            continue
        if i > k:
            i, k = k, i
        if (i, j, k) in seen:
            continue
        seen.add((i, j, k))
        triples.append((i, j, k))
    return NonBetweennessInstance(size, tuple(triples))
