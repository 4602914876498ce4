"""Core graph and orientation types.

Vertices are dense integers 0..n-1.  Adjacency is kept both as sorted
tuples (for ordered iteration) and as per-vertex bitmasks stored in
Python ints (for O(1) membership tests and fast set algebra on whole
neighborhoods).  External vertex labels, if any, are mapped at the CLI
boundary.

All types here are immutable after construction; every operation builds
a new value, so instances can be shared freely across threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transpose_masks(masks: Sequence[int], n: int) -> list[int]:
    """Transpose an n x n bit matrix given as per-row bitmask ints."""
    if n == 0:
        return []
    if n <= 128:
        out = [0] * n
        for u in range(n):
            m = masks[u]
            while m:
                low = m & -m
                out[low.bit_length() - 1] |= 1 << u
                m ^= low
        return out
    # Bulk path: unpack to a uint8 matrix, transpose, pack back.
    nbytes = (n + 7) // 8
    buf = np.frombuffer(
        b"".join(x.to_bytes(nbytes, "little") for x in masks), dtype=np.uint8
    )
    bits = np.unpackbits(buf.reshape(n, nbytes), axis=1, bitorder="little")[:, :n]
    packed = np.packbits(np.ascontiguousarray(bits.T), axis=1, bitorder="little")
    return [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    ``adj_bits[v]`` is the neighborhood of v as a bitmask.  The sorted
    neighbor tuples and the canonical edge list (pairs (u, v) with u < v,
    lexicographically sorted) are derived lazily so that very dense
    graphs (e.g. complements of sparse ones) stay cheap to create.
    """

    __slots__ = ("n", "adj_bits", "_adj", "_edges", "_m")

    def __init__(self, n: int, adj_bits: Sequence[int], *, _validate: bool = True):
        if len(adj_bits) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj_bits)}")
        self.n = n
        self.adj_bits = tuple(adj_bits)
        self._adj: tuple[tuple[int, ...], ...] | None = None
        self._edges: tuple[tuple[int, int], ...] | None = None
        self._m: int | None = None
        if _validate:
            self._check_invariants()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, rejecting loops and duplicates."""
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if masks[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks, _validate=False)

    def _check_invariants(self) -> None:
        n = self.n
        limit = 1 << n
        for v, mask in enumerate(self.adj_bits):
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if mask < 0 or mask >= limit:
                raise ValueError(f"adjacency mask of {v} out of range")
        for v, mask in zip(range(n), transpose_masks(self.adj_bits, n)):
            if mask != self.adj_bits[v]:
                raise ValueError("adjacency is not symmetric")

    @property
    def m(self) -> int:
        if self._m is None:
            self._m = sum(mask.bit_count() for mask in self.adj_bits) // 2
        return self._m

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            self._adj = tuple(tuple(iter_bits(mask)) for mask in self.adj_bits)
        return self._adj

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            self._edges = tuple(
                (u, v)
                for u in range(self.n)
                for v in iter_bits(self.adj_bits[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj_bits[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj_bits == other.adj_bits

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complement(g: Graph) -> Graph:
    """Graph with an edge {u, v} exactly where g has none (u != v)."""
    full = (1 << g.n) - 1
    masks = [full & ~mask & ~(1 << v) for v, mask in enumerate(g.adj_bits)]
    return Graph(g.n, masks, _validate=False)


def three_paths(g: Graph) -> Iterator[tuple[int, int, int]]:
    """Yield every ordered path (u, v, w) of three vertices of g.

    Both directions of each path appear, matching the ordered-pair usage
    downstream; the total count is sum(deg(v) * (deg(v) - 1)) <= 2nm.
    """
    adj = g.adj
    for v in range(g.n):
        nbrs = adj[v]
        for u in nbrs:
            for w in nbrs:
                if w != u:
                    yield (u, v, w)


def reversal(arcs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    """Reverse every directed edge in ``arcs``; an involution."""
    return {(v, u) for (u, v) in arcs}


class CycleFound(Exception):
    """Raised when a directed cycle prevents a topological sort.

    ``cycle`` holds a vertex sequence (v0, ..., vk) with arcs between
    consecutive entries and from vk back to v0.
    """

    def __init__(self, cycle: Sequence[int]):
        self.cycle = tuple(cycle)
        super().__init__(f"directed cycle: {self.cycle}")


def toposort_masks(n: int, out_bits: Sequence[int]) -> list[int]:
    """Topological sort of arcs given as out-neighbor masks.

    Among ready vertices the smallest index is taken first, so the
    result is deterministic.  Raises CycleFound with a witness cycle.
    """
    indeg = [mask.bit_count() for mask in transpose_masks(out_bits, n)]
    ready_heap = [v for v in range(n) if indeg[v] == 0]  # already sorted
    order = []
    while ready_heap:
        v = heappop(ready_heap)
        order.append(v)
        for w in iter_bits(out_bits[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                heappush(ready_heap, w)
    if len(order) < n:
        raise CycleFound(_extract_cycle(n, out_bits, indeg))
    return order


def _extract_cycle(n: int, out_bits: Sequence[int], indeg: Sequence[int]) -> list[int]:
    # Each vertex left with indeg > 0 after Kahn's algorithm still has an
    # incoming arc from another leftover vertex, so a backward walk inside
    # the leftover set must revisit a vertex; that closes a cycle.
    alive = 0
    for v in range(n):
        if indeg[v] > 0:
            alive |= 1 << v
    in_bits = transpose_masks(out_bits, n)
    start = next(iter_bits(alive))
    seen_at: dict[int, int] = {}
    walk = []
    v = start
    while v not in seen_at:
        seen_at[v] = len(walk)
        walk.append(v)
        v = next(iter_bits(in_bits[v] & alive))
    return list(reversed(walk[seen_at[v]:]))


def topological_sort(n: int, arcs: Iterable[tuple[int, int]]) -> list[int]:
    """Linear extension of a set of directed edges on vertices 0..n-1.

    Ties are broken toward the smallest vertex index.  Raises CycleFound
    if the arcs are not acyclic, ValueError on out-of-range arcs.
    """
    out = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad arc ({u}, {v}) for n={n}")
        out[u] |= 1 << v
    return toposort_masks(n, out)


class PartialOrientation:
    """A set of directed edges over (a subset of) a host graph's edges.

    Each underlying edge is directed at most once: holding both (u, v)
    and (v, u) is rejected at construction, as is any pair that is not
    an edge of the host.
    """

    __slots__ = ("host", "out_bits", "_in_bits", "_arc_count")

    def __init__(self, host: Graph, out_bits: Sequence[int], *, _validate: bool = True):
        if len(out_bits) != host.n:
            raise ValueError("orientation size does not match host graph")
        self.host = host
        self.out_bits = tuple(out_bits)
        self._arc_count: int | None = None
        self._in_bits: tuple[int, ...] | None = None
        if _validate:
            self._check_invariants()

    @classmethod
    def from_arcs(cls, host: Graph, arcs: Iterable[tuple[int, int]]) -> "PartialOrientation":
        out = [0] * host.n
        for u, v in arcs:
            if not (0 <= u < host.n and 0 <= v < host.n):
                raise ValueError(f"arc ({u}, {v}) out of range")
            out[u] |= 1 << v
        return cls(host, out)

    def _check_invariants(self) -> None:
        adj = self.host.adj_bits
        for u, mask in enumerate(self.out_bits):
            if mask & ~adj[u]:
                v = next(iter_bits(mask & ~adj[u]))
                raise ValueError(f"arc ({u}, {v}) is not an edge of the host graph")
        in_bits = tuple(transpose_masks(self.out_bits, self.host.n))
        for u in range(self.host.n):
            both = self.out_bits[u] & in_bits[u]
            if both:
                v = next(iter_bits(both))
                raise ValueError(f"edge {{{u}, {v}}} is oriented both ways")
        self._in_bits = in_bits

    @property
    def in_bits(self) -> tuple[int, ...]:
        if self._in_bits is None:
            self._in_bits = tuple(transpose_masks(self.out_bits, self.host.n))
        return self._in_bits

    @property
    def arc_count(self) -> int:
        if self._arc_count is None:
            self._arc_count = sum(mask.bit_count() for mask in self.out_bits)
        return self._arc_count

    def __contains__(self, arc: tuple[int, int]) -> bool:
        u, v = arc
        return bool(self.out_bits[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.host.n):
            for v in iter_bits(self.out_bits[u]):
                yield (u, v)

    def to_set(self) -> set[tuple[int, int]]:
        return set(self.arcs())

    def underlying_edges(self) -> set[tuple[int, int]]:
        """The unordered edges this orientation directs, as (u, v), u < v."""
        return {(u, v) if u < v else (v, u) for (u, v) in self.arcs()}

    def is_total(self) -> bool:
        return self.arc_count == self.host.m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialOrientation):
            return NotImplemented
        return self.host == other.host and self.out_bits == other.out_bits

    def __repr__(self) -> str:
        return f"PartialOrientation(arcs={self.arc_count}, host={self.host!r})"


@dataclass(frozen=True)
class ChordlessC4:
    """A chordless 4-cycle a-b-c-d-a: ab, bc, cd, da edges; ac, bd non-edges."""

    a: int
    b: int
    c: int
    d: int

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def cycle_edges(self) -> tuple[tuple[int, int], ...]:
        return ((self.a, self.b), (self.b, self.c), (self.c, self.d), (self.d, self.a))

    def holds_in(self, g: Graph) -> bool:
        a, b, c, d = self.vertices()
        if len({a, b, c, d}) != 4:
            return False
        return (
            g.has_edge(a, b)
            and g.has_edge(b, c)
            and g.has_edge(c, d)
            and g.has_edge(d, a)
            and not g.has_edge(a, c)
            and not g.has_edge(b, d)
        )

    @classmethod
    def canonical(cls, a: int, b: int, c: int, d: int) -> "ChordlessC4":
        """Normalize under rotation and reflection of the cycle."""
        best = min(
            (a, b, c, d), (b, c, d, a), (c, d, a, b), (d, a, b, c),
            (a, d, c, b), (d, c, b, a), (c, b, a, d), (b, a, d, c),
        )
        return cls(*best)


def chordless_c4s(g: Graph) -> list[ChordlessC4]:
    """All chordless 4-cycles of g, canonicalized and sorted.

    Plain 4-subset enumeration; meant for test-scale graphs and for the
    detectors, not for the recognition pipeline.
    """
    found = set()
    for quad in combinations(range(g.n), 4):
        for a, b, c, d in _cycle_orders(quad):
            if (
                g.has_edge(a, b)
                and g.has_edge(b, c)
                and g.has_edge(c, d)
                and g.has_edge(d, a)
                and not g.has_edge(a, c)
                and not g.has_edge(b, d)
            ):
                found.add(ChordlessC4.canonical(a, b, c, d))
    return sorted(found, key=ChordlessC4.vertices)


def _cycle_orders(quad: tuple[int, int, int, int]):
    a, b, c, d = quad
    return ((a, b, c, d), (a, b, d, c), (a, c, b, d))
