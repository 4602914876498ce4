"""Independent oracles and obstruction detectors.

Everything here answers by search or exhaustive scanning, never by the
recognition pipeline, so pipeline and oracles can check each other.
The searches carry explicit input-size guards: they are test-bed tools,
not part of the O(nm) path.
"""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .generate import NonBetweennessInstance
from .graph import Graph, PartialOrientation, chordless_c4s, iter_bits


class InputTooLarge(ValueError):
    """The requested exhaustive search is beyond the size guard."""


def is_apex_ordering_brute(g: Graph, sigma: Sequence[int]) -> bool:
    """Direct check of the vertex-ordering characterization.

    Umbrella-freeness by a triple loop, alternation against a 4-subset
    scan for the chordless 4-cycles.  Deliberately shares nothing with
    the pipeline's verifier.
    """
    n = g.n
    pos = [0] * n
    for i, v in enumerate(sigma):
        pos[v] = i
    order = list(sigma)
    for i in range(n):
        for k in range(i + 1, n):
            if not g.has_edge(order[i], order[k]):
                continue
            for j in range(i + 1, k):
                if not g.has_edge(order[i], order[j]) and not g.has_edge(order[j], order[k]):
                    return False
    for c4 in chordless_c4s(g):
        ring = c4.vertices()
        for i in range(4):
            p, q, r = ring[i], ring[(i + 1) % 4], ring[(i + 2) % 4]
            if (pos[p] < pos[q]) == (pos[q] < pos[r]):
                return False
    return True


def brute_force_recognize(g: Graph) -> tuple[int, ...] | None:
    """First vertex ordering (lexicographically) passing the apex check.

    Explores the n! orderings as a prefix tree: a prefix dies as soon as
    it pins an umbrella triple or runs a 4-cycle path through, which
    never discards a completable ordering, so the verdict and the
    returned ordering match the plain full scan.  None means the graph
    is not a simple-triangle graph.  Guarded at n <= 9.
    """
    if g.n > 9:
        raise InputTooLarge(f"brute_force_recognize is limited to n <= 9, got {g.n}")
    n = g.n
    if n == 0:
        return ()
    adj = g.adj_bits
    # guards[x]: pairs (a, b) with (a, b, x) a 3-path on a chordless C4;
    # once a and b are placed, placing x last requires pos[b] < pos[a].
    guards: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for c4 in chordless_c4s(g):
        ring = c4.vertices()
        for i in range(4):
            a, b, x = ring[i], ring[(i + 1) % 4], ring[(i + 2) % 4]
            guards[x].append((a, b))
            guards[a].append((x, b))
    pos = [-1] * n
    prefix: list[int] = []
    nonadj_after = [0] * n  # per placed u: later-placed vertices non-adjacent to u

    def feasible(x: int) -> bool:
        not_adj_x = ~adj[x]
        for u in prefix:
            if adj[u] >> x & 1:
                if nonadj_after[u] & not_adj_x:
                    return False
        for a, b in guards[x]:
            if 0 <= pos[a] < pos[b]:
                return False
        return True

    def dfs() -> tuple[int, ...] | None:
        if len(prefix) == n:
            return tuple(prefix)
        for x in range(n):
            if pos[x] >= 0 or not feasible(x):
                continue
            pos[x] = len(prefix)
            prefix.append(x)
            bit = 1 << x
            for u in prefix[:-1]:
                if not (adj[u] >> x & 1):
                    nonadj_after[u] |= bit
            found = dfs()
            if found is not None:
                return found
            for u in prefix[:-1]:
                nonadj_after[u] &= ~bit
            prefix.pop()
            pos[x] = -1
        return None

    return dfs()


def induced_cycles(g: Graph, min_len: int = 4) -> list[tuple[int, ...]]:
    """All chordless cycles of length >= min_len, one tuple per cycle.

    Each cycle starts at its smallest vertex with the smaller of its two
    neighbors second.  Exponential in the worst case; test scale only.
    """
    n = g.n
    adj = g.adj_bits
    out: list[tuple[int, ...]] = []
    for s in range(n):
        high = ~((1 << (s + 1)) - 1)

        def extend(path: list[int], mask: int) -> None:
            u = path[-1]
            first = len(path) == 1
            internal = mask & ~(1 << u) & ~(1 << s)
            for w in iter_bits(adj[u] & high & ~mask):
                if adj[w] & internal:
                    continue  # chord into the middle of the path
                if not first and adj[w] >> s & 1:
                    if len(path) + 1 >= min_len and path[1] < w:
                        out.append(tuple(path) + (w,))
                    continue  # extending past w would leave the chord ws
                extend(path + [w], mask | (1 << w))

        extend([s], 1 << s)
    return sorted(out)


def _require_hosts(g: Graph, f: PartialOrientation, fbar: PartialOrientation) -> None:
    if f.host is not g and f.host != g:
        raise ValueError("F is not an orientation of g")
    full = (1 << g.n) - 1
    for v in range(g.n):
        if fbar.host.adj_bits[v] != full & ~g.adj_bits[v] & ~(1 << v):
            raise ValueError("Fbar is not an orientation of the complement of g")


def find_delta_obstructions(
    g: Graph, f: PartialOrientation, fbar: PartialOrientation
) -> list[tuple[int, int, int]]:
    """All ordered triples (a, b, c) with (a,b),(b,c) in F and (c,a) in Fbar."""
    _require_hosts(g, f, fbar)
    out = []
    for a in range(g.n):
        for b in iter_bits(f.out_bits[a]):
            for c in iter_bits(f.out_bits[b]):
                if fbar.out_bits[c] >> a & 1:
                    out.append((a, b, c))
    return out


def find_alternating_cycles(
    g: Graph, f: PartialOrientation, fbar: PartialOrientation, k: int
) -> list[tuple[int, ...]]:
    """All alternating 2k-cycles of F union Fbar, k in {2, 3}.

    A 2k-cycle visits distinct vertices x0..x_{2k-1} with F arcs at even
    steps and Fbar arcs at odd steps.  Enumerated by walking the arc
    pattern exhaustively; cycles are deduplicated up to rotation by a
    full F/Fbar step.
    """
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    _require_hosts(g, f, fbar)
    length = 2 * k
    found: set[tuple[int, ...]] = set()

    def walk(seq: list[int], mask: int) -> None:
        last = seq[-1]
        if len(seq) == length:
            if fbar.out_bits[last] >> seq[0] & 1:
                rots = [tuple(seq[i:] + seq[:i]) for i in range(0, length, 2)]
                found.add(min(rots))
            return
        nxt = f.out_bits[last] if len(seq) % 2 == 1 else fbar.out_bits[last]
        for w in iter_bits(nxt & ~mask):
            walk(seq + [w], mask | (1 << w))

    for a0 in range(g.n):
        walk([a0], 1 << a0)
    return sorted(found)


def find_4_anticycles(
    g: Graph, f: PartialOrientation, fbar: PartialOrientation
) -> list[tuple[int, int, int, int]]:
    """All (a0, b0, a1, b1): (a0,b0),(a1,b1) in F, (a0,b1),(a1,b0) in Fbar."""
    _require_hosts(g, f, fbar)
    arcs = sorted(f.arcs())
    out = []
    for i, (a0, b0) in enumerate(arcs):
        for a1, b1 in arcs[i + 1:]:
            if len({a0, b0, a1, b1}) != 4:
                continue
            if fbar.out_bits[a0] >> b1 & 1 and fbar.out_bits[a1] >> b0 & 1:
                out.append((a0, b0, a1, b1))
    return out


def brute_force_acyclic_alternating(g: Graph) -> PartialOrientation | None:
    """Search the orientations of g for one alternating and acyclic.

    Equivalent to exhausting all 2^m total orientations: edges are
    decided one at a time, and each decision propagates the alternation
    constraints of every chordless cycle (>= 4) plus an acyclicity
    check, both of which only ever discard orientations that violate
    the definition.  Guarded at m <= 24.
    """
    if g.m > 24:
        raise InputTooLarge(f"brute_force_acyclic_alternating needs m <= 24, got {g.m}")
    n = g.n
    edges = list(g.edges)
    eid = {e: i for i, e in enumerate(edges)}

    def arc_eid(arc: tuple[int, int]) -> tuple[int, int]:
        u, v = arc
        return (eid[(u, v)], 1) if u < v else (eid[(v, u)], -1)

    # For every 3-path (a, b, c) along a chordless cycle, (a,b) and (b,c)
    # cannot both be chosen; in a total orientation that forces arcs.
    implications: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for cyc in induced_cycles(g, 4):
        klen = len(cyc)
        for i in range(klen):
            a, b, c = cyc[i], cyc[(i + 1) % klen], cyc[(i + 2) % klen]
            for src, dst in (((a, b), (c, b)), ((b, c), (b, a)),
                             ((c, b), (a, b)), ((b, a), (b, c))):
                implications.setdefault(arc_eid(src), []).append(arc_eid(dst))

    assign = [0] * len(edges)  # 0 undecided, +1 canonical (u, v), -1 reversed
    succ = [0] * n  # adjacency masks of the assigned arcs

    def arc_of(e: int, d: int) -> tuple[int, int]:
        u, v = edges[e]
        return (u, v) if d > 0 else (v, u)

    def reaches(src: int, dst: int) -> bool:
        seen = 1 << src
        frontier = [src]
        while frontier:
            x = frontier.pop()
            if succ[x] >> dst & 1:
                return True
            fresh = succ[x] & ~seen
            seen |= fresh
            frontier.extend(iter_bits(fresh))
        return False

    def propagate(e: int, d: int) -> list[int] | None:
        trail: list[int] = []
        stack = [(e, d)]
        while stack:
            e2, d2 = stack.pop()
            if assign[e2]:
                if assign[e2] != d2:
                    _undo(trail)
                    return None
                continue
            x, y = arc_of(e2, d2)
            if reaches(y, x):
                _undo(trail)
                return None
            assign[e2] = d2
            succ[x] |= 1 << y
            trail.append(e2)
            stack.extend(implications.get((e2, d2), ()))
        return trail

    def _undo(trail: list[int]) -> None:
        for e2 in reversed(trail):
            x, y = arc_of(e2, assign[e2])
            succ[x] &= ~(1 << y)
            assign[e2] = 0

    def search(start: int) -> bool:
        e = start
        while e < len(edges) and assign[e]:
            e += 1
        if e == len(edges):
            return True
        for d in (1, -1):
            trail = propagate(e, d)
            if trail is not None:
                if search(e + 1):
                    return True
                _undo(trail)
        return False

    if not search(0):
        return None
    out = [0] * n
    for e, d in enumerate(assign):
        x, y = arc_of(e, d)
        out[x] |= 1 << y
    return PartialOrientation(g, out)


def brute_force_nonbetweenness(inst: "NonBetweennessInstance"):
    """First bijection f : 0..|A|-1 -> 1..|A| keeping every middle outside.

    For each triple (i, j, k) the value f(j) must not lie strictly
    between f(i) and f(k).  Exhausts the |A|! bijections; guarded at
    |A| <= 8.  Returns the value tuple or None.
    """
    size = inst.size
    if size > 8:
        raise InputTooLarge(f"brute_force_nonbetweenness needs |A| <= 8, got {size}")
    for f in permutations(range(1, size + 1)):
        ok = True
        for i, j, k in inst.triples:
            lo, hi = (f[i], f[k]) if f[i] < f[k] else (f[k], f[i])
            if lo < f[j] < hi:
                ok = False
                break
        if ok:
            return f
    return None
