import json

from cliquekit.engine import EnumConfig, run_full
from cliquekit.metrics import RunCounters, build_report, render_table
from cliquekit.reduction import ReductionLedger
from helpers import empty_graph, triangle_tail


def make_report(**overrides):
    base = dict(
        config={"algorithm": "degen"},
        n_input=10,
        m_input=20,
        n_after=8,
        m_after=15,
        cliques_total=5,
        counters=RunCounters(),
        ledger=ReductionLedger(),
        timings={"reduce": 0.5, "enumerate": 1.0, "total": 1.5},
    )
    base.update(overrides)
    return build_report(**base)


class TestCounters:
    def test_visit_accumulates(self):
        c = RunCounters()
        c.visit(3)
        c.visit(3, 2)
        c.visit(1)
        assert c.visit_hist == {3: 3, 1: 1}


class TestBuildReport:
    def test_ratios(self):
        rep = make_report()
        assert rep.deleted_vertex_ratio == 0.2
        assert rep.deleted_edge_ratio == 0.25

    def test_zero_denominators(self):
        rep = make_report(n_input=0, m_input=0, n_after=0, m_after=0, cliques_total=0)
        assert rep.deleted_vertex_ratio == 0.0
        assert rep.deleted_edge_ratio == 0.0
        assert rep.r_vertex == 0.0
        assert rep.r_subproblem == 0.0

    def test_xreduce_ratios(self):
        c = RunCounters(sum_x=4, sum_xp=3, top_subproblems=4, shrunk_subproblems=1)
        rep = make_report(counters=c)
        assert rep.r_vertex == 0.75
        assert rep.r_subproblem == 0.25

    def test_no_ledger(self):
        rep = make_report(ledger=None)
        assert rep.reduction_rule_counts == {}
        assert rep.reduction_rounds == 0


class TestSerialization:
    def test_json_is_deterministic_and_complete(self):
        rep = make_report()
        a = rep.to_json()
        b = rep.to_json()
        assert a == b
        d = json.loads(a)
        assert set(d) == {
            "config",
            "graph",
            "counts",
            "global_reduction",
            "forbidden_set",
            "visits_by_original_degree",
            "timings_sec",
        }
        assert d["graph"]["n_input"] == 10
        assert d["counts"]["cliques_total"] == 5
        assert d["timings_sec"]["total"] == 1.5

    def test_histogram_keys_sorted_numerically(self):
        c = RunCounters()
        c.visit(10)
        c.visit(2)
        d = make_report(counters=c).to_dict()
        assert list(d["visits_by_original_degree"]) == ["2", "10"]

    def test_runfull_report_serializes(self):
        cfg = EnumConfig(algorithm="degen", metrics=True)
        _, rep = run_full(triangle_tail(), cfg)
        d = json.loads(rep.to_json())
        assert d["config"]["algorithm"] == "degen"
        _, rep = run_full(empty_graph(), cfg)
        json.loads(rep.to_json())


class TestRenderTable:
    def test_alignment_and_content(self):
        rows = [
            {"name": "alpha", "count": 3, "ratio": 0.5},
            {"name": "b", "count": 12345, "ratio": 0.0},
        ]
        text = render_table(rows, [("name", "name"), ("count", "count"), ("ratio", "ratio")])
        lines = text.splitlines()
        assert len(lines) == 4
        assert lines[0].startswith("name")
        assert set(lines[1]) <= {"-", " "}
        assert "12345" in lines[3]
        assert "0.5000" in lines[2]
        # numeric columns right-aligned: the small count ends where the big one does
        assert lines[2].index("3 ") >= lines[3].index("12345")

    def test_empty_rows(self):
        text = render_table([], [("a", "a"), ("b", "b")])
        assert text.splitlines()[0].startswith("a")
