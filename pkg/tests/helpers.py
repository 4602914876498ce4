"""Shared test helpers: tiny named graphs, random graphs, naive oracles."""
from __future__ import annotations

import random
from itertools import combinations, permutations

from pigraph.graph import Graph


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, list(combinations(range(k), 2)))


def edgeless_graph(k: int) -> Graph:
    return Graph.from_edges(k, [])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph number ``mask`` in the enumeration of all labeled graphs on n vertices."""
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def brute_complement_edges(g: Graph) -> set[tuple[int, int]]:
    return {
        (u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)
    }


def brute_three_paths(g: Graph) -> set[tuple[int, int, int]]:
    out = set()
    for u in range(g.n):
        for v in range(g.n):
            for w in range(g.n):
                if u != v and v != w and u != w and g.has_edge(u, v) and g.has_edge(v, w):
                    out.add((u, v, w))
    return out


def digraph_has_cycle(n: int, arcs: set[tuple[int, int]]) -> bool:
    succ = {v: [] for v in range(n)}
    for u, v in arcs:
        succ[u].append(v)
    color = [0] * n  # 0 white, 1 gray, 2 black
    for start in range(n):
        if color[start]:
            continue
        stack = [(start, iter(succ[start]))]
        color[start] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 1:
                    return True
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(succ[w])))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                stack.pop()
    return False


def is_transitive(arcs: set[tuple[int, int]]) -> bool:
    for u, v in arcs:
        for x, w in arcs:
            if x == v and (u, w) not in arcs and u != w:
                return False
    return True


def all_orientations(edges: list[tuple[int, int]]):
    """Yield every orientation of the given edge list as a set of arcs."""
    m = len(edges)
    for bits in range(1 << m):
        yield {
            (u, v) if bits >> i & 1 else (v, u)
            for i, (u, v) in enumerate(edges)
        }


def naive_induced_cycles(g: Graph, min_len: int = 4) -> set[tuple[int, ...]]:
    """Induced cycles by scanning vertex permutations; fine up to n ~ 7."""
    found = set()
    for k in range(min_len, g.n + 1):
        for verts in permutations(range(g.n), k):
            if verts[0] != min(verts) or verts[1] > verts[-1]:
                continue
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    adjacent = g.has_edge(verts[i], verts[j])
                    consecutive = j - i == 1 or (i == 0 and j == k - 1)
                    if adjacent != consecutive:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.add(verts)
    return found


def brute_chordless_c4_quads(g: Graph) -> set[tuple[int, int, int, int]]:
    """Chordless 4-cycles by testing every vertex permutation of every 4-subset."""
    out = set()
    for quad in combinations(range(g.n), 4):
        for perm in permutations(quad):
            a, b, c, d = perm
            if (
                g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                and g.has_edge(d, a) and not g.has_edge(a, c) and not g.has_edge(b, d)
            ):
                rots = [perm[i:] + perm[:i] for i in range(4)]
                rev = tuple(reversed(perm))
                rots += [rev[i:] + rev[:i] for i in range(4)]
                out.add(min(rots))
    return out
