from cliquekit.engine import EnumConfig, run_full
from cliquekit.forbidden import IgnoreIndex, prune_forbidden, update_certificates
from cliquekit.graphs import compact, degeneracy_order, from_edges
from cliquekit.ingest import gen_random
from cliquekit.oracle import brute_force_mce
from helpers import complete_graph, triangle_tail


def driver_trace(g):
    """Replay the outer loop, returning per-step (v, X, X_pruned) plus the
    ignore indices after every step."""
    cg = compact(g)
    order = degeneracy_order(cg)
    rank = order.rank
    nplus = [[w for w in cg.adj[v] if rank[w] > rank[v]] for v in range(cg.n)]
    npset = [frozenset(l) for l in nplus]
    index = IgnoreIndex(cg.n)
    steps = []
    snapshots = []
    for i, v in enumerate(order.order):
        P = [w for w in cg.adj[v] if rank[w] > i]
        X = [w for w in cg.adj[v] if rank[w] < i]
        X2 = prune_forbidden(X, i, index)
        update_certificates(v, i, P, rank, nplus, npset, index)
        steps.append((v, X, X2))
        snapshots.append(list(index.ignore_id))
    return order, steps, snapshots


class TestIgnoreIndex:
    def test_lower_keeps_minimum(self):
        idx = IgnoreIndex(3)
        assert idx.ignore_id == [3, 3, 3]
        idx.lower(1, 2)
        idx.lower(1, 5)
        assert idx.ignore_id[1] == 2

    def test_prune(self):
        idx = IgnoreIndex(5)
        idx.ignore_id = [5, 0, 3, 2, 5]
        assert prune_forbidden([0, 1, 2, 3, 4], 3, idx) == [0, 2, 4]
        assert prune_forbidden([1], 0, idx) == [1]


class TestTriangleTailTrace:
    def test_step_by_step(self):
        order, steps, snaps = driver_trace(triangle_tail())
        assert order.order == [3, 0, 1, 2]
        # step 0: v=3 certifies vertex 2 (its later neighborhood is empty)
        assert snaps[0] == [4, 4, 0, 4]
        # step 1: v=0 certifies vertex 1 as dominated from position 1
        assert snaps[1] == [4, 1, 0, 4]
        assert snaps[3] == [4, 1, 0, 4]
        # step 3: v=2 sees X={0,1,3}; 1 is pruned (ignore id 1 < 3)
        v, X, X2 = steps[3]
        assert (v, X, X2) == (2, [0, 1, 3], [0, 3])
        # earlier steps prune nothing
        assert all(x == x2 for _, x, x2 in steps[:3])

    def test_run_metrics(self):
        cfg = EnumConfig(algorithm="degen", global_reduction=False,
                        dynamic_reduction=False, xreduce=True, metrics=True)
        sink, rep = run_full(triangle_tail(), cfg)
        assert sink.as_frozensets() == {frozenset({0, 1, 2}), frozenset({2, 3})}
        assert (rep.sum_x, rep.sum_xp) == (4, 3)
        assert rep.r_vertex == 0.75
        assert rep.r_subproblem == 0.25
        assert rep.top_subproblems == 4 and rep.shrunk_subproblems == 1


class TestCompleteGraphTrace:
    def test_k5_all_certified_in_first_step(self):
        order, steps, snaps = driver_trace(complete_graph(5))
        assert order.order == [0, 1, 2, 3, 4]
        # every later vertex has its later neighborhood inside P: all drop to 0
        assert snaps[0] == [5, 0, 0, 0, 0]
        # from position 2 on, only vertex 0 survives in X
        for i in (2, 3, 4):
            _, X, X2 = steps[i]
            assert X == list(range(i)) and X2 == [0]

    def test_k5_only_clique_survives(self):
        cfg = EnumConfig(algorithm="degen", global_reduction=False,
                        dynamic_reduction=False, xreduce=True, metrics=True)
        sink, rep = run_full(complete_graph(5), cfg)
        assert sink.as_frozensets() == {frozenset(range(5))}
        assert (rep.sum_x, rep.sum_xp) == (10, 4)
        assert rep.shrunk_subproblems == 3


class TestProperSupersetCertificate:
    def test_diamond_fires_branch_one(self):
        # K4 minus (2,3): vertex 0's later neighborhood strictly covers
        # the first subproblem's candidates, certifying the outer vertex
        g = from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        order, steps, snaps = driver_trace(g)
        assert order.order == [2, 0, 1, 3]
        assert snaps[0] == [4, 4, 1, 4]  # ignore id of 2 = rank of dominator 0
        # the certificate takes effect at position 2 (v=1, X={0,2})
        v, X, X2 = steps[2]
        assert (v, X, X2) == (1, [0, 2], [0])

    def test_exact_equality_goes_to_second_branch(self):
        # in K5 step 0, u=1 has N+(u) == P minus u (equal sets, du < |P|):
        # branch one must not fire, or the clique itself would be lost
        order, steps, snaps = driver_trace(complete_graph(5))
        assert snaps[0][1] == 0  # certified as dominated, not dominator


class TestSafetyAcrossRandoms:
    def test_xreduce_transparent(self):
        for n, p, seed in [(20, 0.25, 11), (28, 0.35, 12), (35, 0.15, 13), (16, 0.6, 14)]:
            g = gen_random(n, p, seed)
            want = brute_force_mce(g)
            for alg in ("degen", "rcd"):
                base = EnumConfig(algorithm=alg, global_reduction=False,
                                 dynamic_reduction=False, xreduce=False)
                xr = EnumConfig(algorithm=alg, global_reduction=False,
                               dynamic_reduction=False, xreduce=True, metrics=True)
                s0, _ = run_full(g.copy(), base)
                s1, rep = run_full(g.copy(), xr)
                assert s0.as_frozensets() == want
                assert s1.as_frozensets() == want
                assert 0.0 <= rep.r_vertex <= 1.0
                assert 0.0 <= rep.r_subproblem <= 1.0
