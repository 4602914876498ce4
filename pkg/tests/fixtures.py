"""Frozen instances found by offline search, plus pipeline-state helpers.

ODD_AUX_FIXTURES: cocomparability graphs whose auxiliary pair graph is
not bipartite (so recognition must reject at the bipartition stage).
The 6-vertex one is the triangular prism, i.e. the complement of C6;
the others came out of seeded random search at n = 7, 8.

TRIANGLE_F_GRAPHS: graphs where some satisfying assignment of the
Step-2 2CNF yields a partial orientation containing a directed
triangle, which is what gives the per-vertex fixup real work.
"""
from itertools import product

from pigraph.alternating import (
    OddCycle,
    Unsatisfiable,
    _clause_satisfied,
    bipartition,
    build_auxiliary_graph,
    build_phi,
    extract_F,
    solve_2sat,
)
from pigraph.graph import Graph
from pigraph.transitive import NotCocomparability, cocomparability_orient

PRISM_EDGES = ((0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4))

ODD_AUX_FIXTURES = (
    (6, PRISM_EDGES),
    (7, ((0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5), (1, 6), (2, 4), (2, 5),
         (2, 6), (3, 4))),
    (8, ((0, 2), (0, 3), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
         (1, 7), (2, 5), (2, 6), (2, 7), (3, 5), (3, 7), (4, 5), (4, 6), (4, 7),
         (6, 7))),
    (8, ((0, 2), (0, 3), (0, 4), (0, 7), (1, 4), (1, 5), (1, 6), (1, 7), (2, 3),
         (2, 4), (2, 6), (3, 4), (3, 5), (3, 6), (3, 7), (4, 5), (5, 6), (5, 7),
         (6, 7))),
)

TRIANGLE_F_GRAPHS = (
    (8, ((0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 4), (1, 7), (2, 5), (2, 6),
         (2, 7), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7), (6, 7))),
    (7, ((0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5), (1, 6), (2, 4),
         (2, 6), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6))),
    (8, ((0, 1), (0, 4), (0, 7), (1, 2), (1, 3), (1, 4), (1, 7), (2, 3), (2, 5),
         (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (4, 7), (5, 7),
         (6, 7))),
)

# (n, seed) pairs whose default random representation admits a Step-2
# orientation with a directed triangle under some satisfying assignment.
TRIANGLE_F_REPRESENTATIONS = ((9, 208), (10, 12), (11, 11), (12, 142))


def step2_state(g: Graph):
    """Run Steps 1-2 up to the solved 2CNF; the graph must be accepted."""
    res = cocomparability_orient(g)
    assert not isinstance(res, NotCocomparability)
    fbar, sigma = res
    aux = build_auxiliary_graph(g, fbar)
    colored = bipartition(aux)
    assert not isinstance(colored, OddCycle)
    phi = build_phi(g, fbar, colored)
    tau = solve_2sat(phi)
    assert not isinstance(tau, Unsatisfiable)
    return fbar, sigma, colored, phi, tau


def satisfying_assignments(phi):
    for bits in product((False, True), repeat=phi.var_count):
        if all(_clause_satisfied(c, bits) for c in phi.clauses):
            yield tuple(bits)


def has_directed_triangle(f):
    n = f.host.n
    for a in range(n):
        for b in range(n):
            if f.out_bits[a] >> b & 1:
                for c in range(n):
                    if f.out_bits[b] >> c & 1 and f.out_bits[c] >> a & 1:
                        return (a, b, c)
    return None


def step2_orientations_with_triangle(g: Graph, limit: int = 4):
    """Valid Step-2 orientations of g containing a directed triangle."""
    fbar, _sigma, colored, phi, _tau = step2_state(g)
    out = []
    for tau in satisfying_assignments(phi):
        f = extract_F(g, colored, phi.with_assignment(tau))
        if has_directed_triangle(f):
            out.append((fbar, f))
            if len(out) >= limit:
                break
    return out
