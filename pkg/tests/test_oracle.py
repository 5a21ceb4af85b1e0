import pytest

from cliquekit.graphs import EditableGraph, from_edges
from cliquekit.ingest import gen_random
from cliquekit.oracle import (
    OracleLimitError,
    brute_force_mce,
    subset_mce,
    verify_cliques,
)
from helpers import (
    complete_graph,
    crafted_graphs,
    cycle_graph,
    moon_moser,
    path_graph,
    star_graph,
)


class TestBruteForce:
    def test_known_counts(self):
        assert len(brute_force_mce(path_graph(10))) == 9
        assert len(brute_force_mce(cycle_graph(12))) == 12
        assert len(brute_force_mce(star_graph(7))) == 6
        assert len(brute_force_mce(complete_graph(6))) == 1
        assert len(brute_force_mce(moon_moser(2))) == 9
        assert len(brute_force_mce(moon_moser(3))) == 27

    def test_exact_sets(self):
        g = from_edges([(0, 1), (1, 2), (0, 2), (2, 3)])
        assert brute_force_mce(g) == {frozenset({0, 1, 2}), frozenset({2, 3})}

    def test_min_size_two(self):
        assert brute_force_mce(EditableGraph(0)) == frozenset()
        assert brute_force_mce(EditableGraph(3)) == frozenset()
        # isolated vertex next to an edge contributes nothing
        g = EditableGraph(3)
        g.add_edge(0, 1)
        assert brute_force_mce(g) == {frozenset({0, 1})}

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            brute_force_mce(EditableGraph(65))
        brute_force_mce(EditableGraph(64))  # boundary accepted


class TestSubsetOracle:
    def test_matches_brute_on_crafted(self):
        for name, g in crafted_graphs():
            if g.n > 20:
                continue
            assert subset_mce(g) == brute_force_mce(g), name

    def test_matches_brute_on_random(self):
        for n in (1, 4, 8, 12, 16, 20):
            for p in (0.0, 0.1, 0.4, 0.8, 1.0):
                g = gen_random(n, p, n * 31 + int(p * 10))
                assert subset_mce(g) == brute_force_mce(g), (n, p)

    def test_limit(self):
        with pytest.raises(OracleLimitError) as ei:
            subset_mce(EditableGraph(21))
        assert ei.value.n == 21 and ei.value.limit == 20

    def test_empty(self):
        assert subset_mce(EditableGraph(0)) == frozenset()


class TestVerifyCliques:
    def test_accepts_oracle_output(self):
        g = moon_moser(2)
        v = verify_cliques(g, brute_force_mce(g))
        assert v.ok and v.completeness_checked
        assert v.explain() == "ok (sound and complete)"

    def test_detects_non_clique(self):
        g = path_graph(4)
        v = verify_cliques(g, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert not v.ok
        assert [tuple(sorted(c)) for c in v.non_clique] == [(0, 3)]

    def test_detects_non_maximal(self):
        g = complete_graph(4)
        v = verify_cliques(g, [(0, 1, 2)])
        assert not v.ok and v.non_maximal

    def test_detects_missing(self):
        g = path_graph(4)
        v = verify_cliques(g, [(0, 1), (1, 2)])
        assert not v.ok
        assert frozenset({2, 3}) in v.missing

    def test_rejects_singletons_and_bad_ids(self):
        g = path_graph(3)
        v = verify_cliques(g, [(0,), (0, 1), (1, 2)])
        assert not v.ok and len(v.non_clique) == 1
        v = verify_cliques(g, [(0, 9)])
        assert not v.ok and v.non_clique

    def test_soundness_only_beyond_limit(self):
        g = path_graph(5)
        v = verify_cliques(g, [(0, 1), (1, 2), (2, 3), (3, 4)], limit=3)
        assert v.ok and not v.completeness_checked
        assert v.explain() == "ok (sound)"
