import random
from itertools import permutations

import pytest

from pigraph.apex import (
    AUX_NOT_BIPARTITE,
    NOT_COCOMPARABILITY,
    C4AlternationViolation,
    Rejection,
    recognize,
    step3_fixup,
    verify_apex_ordering,
)
from pigraph.alternating import extract_F
from pigraph.graph import Graph, PartialOrientation, toposort_masks
from pigraph.oracle import (
    brute_force_recognize,
    find_4_anticycles,
    find_alternating_cycles,
    find_delta_obstructions,
    is_apex_ordering_brute,
)
from pigraph.prng import XorShift64Star
from pigraph.transitive import UmbrellaViolation

from fixtures import (
    ODD_AUX_FIXTURES,
    TRIANGLE_F_GRAPHS,
    has_directed_triangle,
    step2_orientations_with_triangle,
    step2_state,
)
from helpers import (
    complete_graph,
    cycle_graph,
    digraph_has_cycle,
    edgeless_graph,
    graph_from_edge_mask,
    path_graph,
    random_graph,
)


class TestStep3Fixup:
    def test_already_acyclic_is_fixed_point(self):
        g = cycle_graph(4)
        _fbar, _sigma, colored, phi, tau = step2_state(g)
        f = extract_F(g, colored, phi.with_assignment(tau))
        calls = []
        f2 = step3_fixup(g, f, observer=lambda v, fv, cur: calls.append((v, fv)))
        assert f2 == f
        assert [v for v, _ in calls] == list(range(4))
        assert all(fv == () for _, fv in calls)

    def test_empty_orientation(self):
        g = path_graph(4)
        f = PartialOrientation.from_arcs(g, [])
        assert step3_fixup(g, f).arc_count == 0

    def test_wrong_host_rejected(self):
        g, h = cycle_graph(4), cycle_graph(5)
        with pytest.raises(ValueError):
            step3_fixup(h, PartialOrientation.from_arcs(g, [(0, 1)]))

    def test_triangle_instances_get_repaired(self):
        # Step-2 orientations that do contain a directed triangle: after
        # the fixup the orientation must be acyclic, still alternating on
        # the same edges, and still clean of obstructions.
        exercised = 0
        for n, edges in TRIANGLE_F_GRAPHS:
            g = Graph.from_edges(n, edges)
            for fbar, f in step2_orientations_with_triangle(g):
                exercised += 1
                assert has_directed_triangle(f)
                f2 = step3_fixup(g, f)
                assert f2.underlying_edges() == f.underlying_edges()
                assert not digraph_has_cycle(g.n, f2.to_set())
                assert find_delta_obstructions(g, f2, fbar) == []
                assert find_alternating_cycles(g, f2, fbar, 3) == []
                assert find_4_anticycles(g, f2, fbar) == []
                # the union with the complement orientation is acyclic
                union = [f2.out_bits[v] | fbar.out_bits[v] for v in range(g.n)]
                toposort_masks(g.n, union)
        assert exercised >= len(TRIANGLE_F_GRAPHS)

    def test_idempotent(self):
        for n, edges in TRIANGLE_F_GRAPHS:
            g = Graph.from_edges(n, edges)
            for _fbar, f in step2_orientations_with_triangle(g, limit=2):
                f2 = step3_fixup(g, f)
                assert step3_fixup(g, f2) == f2

    def test_evolving_orientation_semantics(self):
        # Reversals at v must be visible to the pass at v+1: wire a
        # directed triangle through 0 whose reversal creates one at 1.
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])
        f = PartialOrientation.from_arcs(g, [(1, 0), (0, 2), (2, 1), (3, 1), (2, 3)])
        seen = []
        step3_fixup(g, f, observer=lambda v, fv, cur: seen.append((v, fv)))
        assert seen[0] == (0, ((2, 1),))
        # reversing (2,1) creates the cycle 3->1->2->3, caught at vertex 1
        # by reversing its opposite edge (2,3)
        assert seen[1] == (1, ((2, 3),))


class TestRecognize:
    def test_trivial_accepts(self):
        assert recognize(Graph.from_edges(0, [])) == ()
        assert recognize(Graph.from_edges(1, [])) == (0,)
        assert recognize(edgeless_graph(4)) == (0, 1, 2, 3)
        for n in (2, 3, 5, 8):
            sigma = recognize(complete_graph(n))
            assert verify_apex_ordering(complete_graph(n), sigma) is None

    def test_c4_accepted_and_verified(self):
        g = cycle_graph(4)
        # Independent oracle: some ordering of C4 passes the brute check.
        assert any(
            is_apex_ordering_brute(g, p) for p in permutations(range(4))
        )
        sigma = recognize(g)
        assert verify_apex_ordering(g, sigma) is None

    def test_c5_rejected_at_step1(self):
        res = recognize(cycle_graph(5))
        assert isinstance(res, Rejection)
        assert res.stage == NOT_COCOMPARABILITY
        assert res.witness.verify_against(cycle_graph(5))

    def test_odd_aux_fixtures_rejected_at_step2(self):
        from pigraph.alternating import build_auxiliary_graph
        from pigraph.transitive import cocomparability_orient

        for n, edges in ODD_AUX_FIXTURES:
            g = Graph.from_edges(n, edges)
            res = recognize(g)
            assert isinstance(res, Rejection)
            assert res.stage == AUX_NOT_BIPARTITE
            fbar, _sigma = cocomparability_orient(g)
            aux = build_auxiliary_graph(g, fbar)
            assert res.witness.verify_in(aux)

    def test_matches_oracle_on_all_small_graphs(self):
        for n in range(6):
            for mask in range(1 << (n * (n - 1) // 2)):
                g = graph_from_edge_mask(n, mask)
                got = recognize(g)
                want = brute_force_recognize(g)
                if isinstance(got, Rejection):
                    assert want is None, (n, mask)
                else:
                    assert want is not None, (n, mask)
                    assert verify_apex_ordering(g, got) is None, (n, mask)

    def test_soundness_random(self):
        rng = random.Random(41)
        for _ in range(150):
            g = random_graph(rng, rng.choice([6, 7, 8]), rng.random())
            res = recognize(g)
            if not isinstance(res, Rejection):
                assert verify_apex_ordering(g, res) is None

    def test_disconnected_blocks(self):
        g = Graph.from_edges(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (7, 8)])
        sigma = recognize(g)
        assert verify_apex_ordering(g, sigma) is None
        blocks = [(0, 1, 2), (3, 4, 5, 6), (7, 8)]
        at = 0
        for block in blocks:
            assert sorted(sigma[at:at + len(block)]) == list(block)
            at += len(block)

    def test_rejection_inside_component_is_relabeled(self):
        # K2 block, then a C5 on vertices 2..6.
        g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)])
        res = recognize(g)
        assert isinstance(res, Rejection)
        assert res.stage == NOT_COCOMPARABILITY
        assert res.witness.verify_against(g)

    def test_randomized_step1_choices_still_accept(self):
        # The characterization promises any complement orientation works.
        rng = random.Random(42)
        checked = 0
        while checked < 30:
            g = random_graph(rng, rng.choice([6, 7]), rng.random())
            base = recognize(g)
            if isinstance(base, Rejection):
                continue
            checked += 1
            for seed in (1, 2, 3):
                res = recognize(g, rng=XorShift64Star(seed))
                assert not isinstance(res, Rejection)
                assert verify_apex_ordering(g, res) is None

    def test_deterministic(self):
        rng = random.Random(43)
        for _ in range(20):
            g = random_graph(rng, 7, 0.5)
            assert recognize(g) == recognize(g)


class TestVerifyApexOrdering:
    def test_c4_good(self):
        assert verify_apex_ordering(cycle_graph(4), [0, 2, 1, 3]) is None

    def test_c4_bad_is_c4_violation(self):
        viol = verify_apex_ordering(cycle_graph(4), [0, 1, 2, 3])
        assert isinstance(viol, C4AlternationViolation)
        assert viol.holds_in(cycle_graph(4), [0, 1, 2, 3])

    def test_k3_everything_passes(self):
        for p in permutations(range(3)):
            assert verify_apex_ordering(complete_graph(3), list(p)) is None

    def test_malformed(self):
        with pytest.raises(ValueError):
            verify_apex_ordering(cycle_graph(4), [0, 1, 2])
        with pytest.raises(ValueError):
            verify_apex_ordering(cycle_graph(4), [0, 1, 2, 2])

    def test_umbrella_comes_first(self):
        viol = verify_apex_ordering(cycle_graph(5), [0, 1, 2, 3, 4])
        assert isinstance(viol, UmbrellaViolation)

    def test_agrees_with_brute_check(self):
        rng = random.Random(44)
        for _ in range(400):
            n = rng.randrange(1, 8)
            g = random_graph(rng, n, rng.random())
            sigma = list(range(n))
            rng.shuffle(sigma)
            assert (verify_apex_ordering(g, sigma) is None) == is_apex_ordering_brute(g, sigma)
            viol = verify_apex_ordering(g, sigma)
            if viol is not None:
                assert viol.holds_in(g, sigma)
