"""Run instrumentation: counters, derived report, serialization.

Counters are cheap mutable tallies the engine bumps while running. A
report is the frozen, derived view: ratios, histograms, timings, and
the configuration echo, ready for JSON or a text table. Ratios with a
zero denominator report 0.0 so empty inputs stay representable.
"""

import json
from dataclasses import dataclass, field


@dataclass
class RunCounters:
    """Mutable tallies collected during one enumeration run."""

    recursive_calls: int = 0
    cliques_from_reductions: int = 0
    sum_x: int = 0
    sum_xp: int = 0
    top_subproblems: int = 0
    shrunk_subproblems: int = 0
    visit_hist: dict = field(default_factory=dict)

    def visit(self, degree: int, times: int = 1) -> None:
        h = self.visit_hist
        h[degree] = h.get(degree, 0) + times


def _ratio(num, den) -> float:
    return num / den if den else 0.0


@dataclass
class RunReport:
    """Derived, serializable summary of one run."""

    config: dict
    n_input: int
    m_input: int
    n_after_reduction: int
    m_after_reduction: int
    cliques_total: int
    cliques_from_reductions: int
    recursive_calls: int
    reduction_rule_counts: dict
    reduction_rounds: int
    deleted_vertex_ratio: float
    deleted_edge_ratio: float
    sum_x: int
    sum_xp: int
    r_vertex: float
    r_subproblem: float
    top_subproblems: int
    shrunk_subproblems: int
    visit_hist: dict
    timings: dict

    def to_dict(self) -> dict:
        d = {
            "config": self.config,
            "graph": {
                "n_input": self.n_input,
                "m_input": self.m_input,
                "n_after_reduction": self.n_after_reduction,
                "m_after_reduction": self.m_after_reduction,
                "deleted_vertex_ratio": self.deleted_vertex_ratio,
                "deleted_edge_ratio": self.deleted_edge_ratio,
            },
            "counts": {
                "cliques_total": self.cliques_total,
                "cliques_from_reductions": self.cliques_from_reductions,
                "recursive_calls": self.recursive_calls,
            },
            "global_reduction": {
                "rule_counts": dict(sorted(self.reduction_rule_counts.items())),
                "rounds": self.reduction_rounds,
            },
            "forbidden_set": {
                "sum_x": self.sum_x,
                "sum_xp": self.sum_xp,
                "r_vertex": self.r_vertex,
                "r_subproblem": self.r_subproblem,
                "top_subproblems": self.top_subproblems,
                "shrunk_subproblems": self.shrunk_subproblems,
            },
            "visits_by_original_degree": {
                str(k): v for k, v in sorted(self.visit_hist.items())
            },
            "timings_sec": {k: round(v, 6) for k, v in sorted(self.timings.items())},
        }
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def build_report(
    *,
    config: dict,
    n_input: int,
    m_input: int,
    n_after: int,
    m_after: int,
    cliques_total: int,
    counters: RunCounters,
    ledger=None,
    timings=None,
) -> RunReport:
    rule_counts = dict(ledger.per_rule_counts) if ledger is not None else {}
    rounds = ledger.rounds if ledger is not None else 0
    return RunReport(
        config=dict(config),
        n_input=n_input,
        m_input=m_input,
        n_after_reduction=n_after,
        m_after_reduction=m_after,
        cliques_total=cliques_total,
        cliques_from_reductions=counters.cliques_from_reductions,
        recursive_calls=counters.recursive_calls,
        reduction_rule_counts=rule_counts,
        reduction_rounds=rounds,
        deleted_vertex_ratio=_ratio(n_input - n_after, n_input),
        deleted_edge_ratio=_ratio(m_input - m_after, m_input),
        sum_x=counters.sum_x,
        sum_xp=counters.sum_xp,
        r_vertex=_ratio(counters.sum_xp, counters.sum_x),
        r_subproblem=_ratio(counters.shrunk_subproblems, counters.top_subproblems),
        top_subproblems=counters.top_subproblems,
        shrunk_subproblems=counters.shrunk_subproblems,
        visit_hist=dict(counters.visit_hist),
        timings=dict(timings or {}),
    )


def render_table(rows, columns) -> str:
    """Plain text table: rows are dicts, columns a list of (key, header)
    pairs. Numbers are right-aligned, everything else left-aligned."""
    headers = [h for _, h in columns]
    cells = []
    for row in rows:
        line = []
        for key, _ in columns:
            val = row.get(key, "")
            if isinstance(val, float):
                line.append(f"{val:.4f}")
            else:
                line.append(str(val))
        cells.append(line)
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in cells)) if cells else len(headers[i])
        for i in range(len(headers))
    ]

    def fmt(line):
        out = []
        for i, cell in enumerate(line):
            num = cell and (cell[0].isdigit() or cell[0] == "-" and len(cell) > 1)
            out.append(cell.rjust(widths[i]) if num else cell.ljust(widths[i]))
        return "  ".join(out).rstrip()

    lines = [fmt(headers), "  ".join("-" * w for w in widths)]
    lines.extend(fmt(line) for line in cells)
    return "\n".join(lines)
