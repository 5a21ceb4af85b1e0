"""Enumeration engine: recursion kernels, ordered driver, run orchestration.

Three algorithm selectors:

* ``bk``: pivoted recursion started once from the whole vertex set.
  A classical baseline; in-recursion and forbidden-set reductions are
  forced off so it stays the plain reference shape.
* ``degen``: vertices processed along a smallest-degree-first
  elimination order; each gets a pivoted subproblem over its later
  neighbors, with earlier neighbors as the maximality check set.
* ``rcd``: same ordered driver, but the kernel peels minimum-candidate-
  degree vertices until the remaining candidates form one clique, then
  reports it if no check vertex extends it.

All kernels emit through a CliqueSink and count work in RunCounters.
Every emission has size >= 2; isolated vertices never reach a kernel.

The outer driver is strictly sequential: forbidden-set state and the
emission guarantees assume subproblems run one after another in order,
so there is no parallel driver.
"""

import sys
import time
from bisect import insort
from dataclasses import dataclass, field, replace

from .dynamic import DynamicScratch, apply_dynamic
from .forbidden import IgnoreIndex, prune_forbidden, update_certificates
from .graphs import compact, degeneracy_order
from .metrics import RunCounters, build_report
from .reduction import ReductionLedger, global_reduce

ALGORITHMS = ("bk", "degen", "rcd")

# Subproblems must be dispatched in elimination order, one at a time.
SUPPORTS_PARALLEL_DRIVER = False


@dataclass
class Subproblem:
    """One recursion state: growing clique R, candidates P, check set X."""

    R: list = field(default_factory=list)
    P: list = field(default_factory=list)
    X: list = field(default_factory=list)

    def validate(self, g) -> None:
        """Assert the standard invariants; used in debug mode and tests."""
        rset = set(self.R)
        for i, u in enumerate(self.R):
            for v in self.R[i + 1 :]:
                assert v in g.adjset[u], f"R not a clique: ({u}, {v})"
        for name, seq in (("P", self.P), ("X", self.X)):
            assert sorted(seq) == list(seq), f"{name} not sorted"
            assert len(set(seq)) == len(seq), f"{name} has duplicates"
            for v in seq:
                assert v not in rset, f"{name} overlaps R at {v}"
                for u in self.R:
                    assert v in g.adjset[u], f"{name} member {v} misses R member {u}"
        assert not set(self.P) & set(self.X), "P and X overlap"


@dataclass
class EnumConfig:
    """Run configuration. ``normalized`` applies the bk coercions."""

    algorithm: str = "degen"
    global_reduction: bool = True
    dynamic_reduction: bool = True
    xreduce: bool = True
    strict_degree_one: bool = False
    metrics: bool = False
    debug: bool = False

    def normalized(self) -> "EnumConfig":
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm: {self.algorithm!r}")
        if self.algorithm == "bk" and (self.dynamic_reduction or self.xreduce):
            # the baseline runs bare: no in-recursion or check-set pruning
            return replace(self, dynamic_reduction=False, xreduce=False)
        return self

    def describe(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "global_reduction": self.global_reduction,
            "dynamic_reduction": self.dynamic_reduction,
            "xreduce": self.xreduce,
            "strict_degree_one": self.strict_degree_one,
        }


class CliqueSink:
    """Receives emitted cliques. Modes: collect (keep tuples), count
    (tally only), stream (write one line per clique to a file object).
    Ids pass through ``id_map`` when given, for renumbered graphs."""

    __slots__ = ("mode", "count", "cliques", "stream", "id_map", "largest")

    def __init__(self, mode: str = "collect", stream=None, id_map=None):
        if mode not in ("collect", "count", "stream"):
            raise ValueError(f"unknown sink mode: {mode!r}")
        if mode == "stream" and stream is None:
            raise ValueError("stream mode needs a stream")
        self.mode = mode
        self.count = 0
        self.cliques = [] if mode == "collect" else None
        self.stream = stream
        self.id_map = id_map
        self.largest = 0

    def emit(self, members) -> None:
        t = tuple(sorted(members))
        self.count += 1
        if len(t) > self.largest:
            self.largest = len(t)
        if self.mode == "collect":
            self.cliques.append(t)
        elif self.mode == "stream":
            if self.id_map is not None:
                ids = sorted(self.id_map[v] for v in t)
            else:
                ids = t
            self.stream.write(" ".join(map(str, ids)) + "\n")

    def as_frozensets(self) -> frozenset:
        if self.cliques is None:
            raise ValueError("sink did not collect")
        return frozenset(frozenset(c) for c in self.cliques)


def pivot_select(g, P, X):
    """Vertex of P or X covering the most candidates; ties to smallest id.

    Scans P and X merged ascending so the first strict improvement wins,
    skipping vertices whose full degree cannot beat the current best and
    stopping early on total coverage.
    """
    pset = frozenset(P)
    lp = len(P)
    deg = g.deg
    adjset = g.adjset
    best = -1
    best_u = -1
    i = j = 0
    li = len(P)
    lj = len(X)
    while i < li or j < lj:
        if j >= lj or (i < li and P[i] < X[j]):
            u = P[i]
            i += 1
        else:
            u = X[j]
            j += 1
        if deg[u] <= best:
            continue
        c = len(adjset[u] & pset)
        if c > best:
            best = c
            best_u = u
            if c == lp:
                break
    return best_u


def _kernel_pivot(g, sink, cfg, counters, scratch, degree_map):
    """Build the pivoted recursion closure for this run."""
    adjset = g.adjset
    dyn = cfg.dynamic_reduction
    strict = cfg.strict_degree_one
    track = cfg.metrics
    debug = cfg.debug
    emit = sink.emit
    vh = counters.visit_hist

    def rec(R, P, X):
        counters.recursive_calls += 1
        if track:
            for t in P:
                d = degree_map[t]
                vh[d] = vh.get(d, 0) + 1
            for t in X:
                d = degree_map[t]
                vh[d] = vh.get(d, 0) + 1
        if debug:
            Subproblem(R=list(R), P=list(P), X=list(X)).validate(g)
        added = 0
        if dyn:
            P, X, added = apply_dynamic(
                g, R, P, X, sink, scratch, strict=strict, counters=counters
            )
        if P:
            u = pivot_select(g, P, X)
            au = adjset[u]
            branch = [w for w in P if w not in au]
            for w in branch:
                nw = adjset[w]
                R.append(w)
                rec(R, [x for x in P if x in nw], [x for x in X if x in nw])
                R.pop()
                P.remove(w)
                insort(X, w)
        elif not X:
            emit(R)
        for _ in range(added):
            R.pop()

    return rec


def _kernel_removal(g, sink, cfg, counters, scratch, degree_map):
    """Build the removal-based recursion closure for this run."""
    adjset = g.adjset
    dyn = cfg.dynamic_reduction
    strict = cfg.strict_degree_one
    track = cfg.metrics
    debug = cfg.debug
    emit = sink.emit
    vh = counters.visit_hist

    def rec(R, P, X):
        counters.recursive_calls += 1
        if track:
            for t in P:
                d = degree_map[t]
                vh[d] = vh.get(d, 0) + 1
            for t in X:
                d = degree_map[t]
                vh[d] = vh.get(d, 0) + 1
        if debug:
            Subproblem(R=list(R), P=list(P), X=list(X)).validate(g)
        added = 0
        if dyn:
            P, X, added = apply_dynamic(
                g, R, P, X, sink, scratch, strict=strict, counters=counters
            )
        if not P:
            if not X:
                emit(R)
            for _ in range(added):
                R.pop()
            return
        # peel lowest-candidate-degree vertices until P is one clique
        while True:
            lp = len(P)
            best_d = lp
            best_v = -1
            for v in P:
                sv = adjset[v]
                c = 0
                for u in P:
                    if u in sv:
                        c += 1
                if c < best_d:
                    best_d = c
                    best_v = v
                    if c == 0:
                        break
            if best_d == lp - 1:
                break
            v = best_v
            sv = adjset[v]
            R.append(v)
            rec(R, [x for x in P if x in sv], [x for x in X if x in sv])
            R.pop()
            P.remove(v)
            insort(X, v)
        acc = X
        for v in P:
            sv = adjset[v]
            acc = [x for x in acc if x in sv]
            if not acc:
                break
        if not acc:
            emit(R + P)
        for _ in range(added):
            R.pop()

    return rec


def enumerate_cliques(g, cfg, sink, counters=None, degree_map=None) -> RunCounters:
    """Run the configured enumeration over a CompactGraph.

    ``degree_map`` supplies the degrees used for the visit histogram;
    callers that reduced the graph first pass the pre-reduction degrees.
    """
    cfg = cfg.normalized()
    if counters is None:
        counters = RunCounters()
    if degree_map is None:
        degree_map = g.deg
    if g.n == 0:
        return counters

    order = degeneracy_order(g)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 16 * (order.degeneracy + 4) + 2000))
    scratch = DynamicScratch(g.n) if cfg.dynamic_reduction else None
    if cfg.algorithm == "bk":
        rec = _kernel_pivot(g, sink, cfg, counters, scratch, degree_map)
        P0 = [v for v in range(g.n) if g.deg[v] > 0]
        if P0:
            rec([], P0, [])
        return counters

    kernel = _kernel_pivot if cfg.algorithm == "degen" else _kernel_removal
    rec = kernel(g, sink, cfg, counters, scratch, degree_map)
    rank = order.rank
    adj = g.adj
    use_x = cfg.xreduce
    if use_x:
        nplus = [[w for w in adj[v] if rank[w] > rank[v]] for v in range(g.n)]
        npset = [frozenset(l) for l in nplus]
        index = IgnoreIndex(g.n)
    for i, v in enumerate(order.order):
        if g.deg[v] == 0:
            continue
        av = adj[v]
        P = [w for w in av if rank[w] > i]
        X = [w for w in av if rank[w] < i]
        counters.top_subproblems += 1
        if use_x:
            counters.sum_x += len(X)
            X2 = prune_forbidden(X, i, index)
            counters.sum_xp += len(X2)
            if len(X2) < len(X):
                counters.shrunk_subproblems += 1
            update_certificates(v, i, P, rank, nplus, npset, index)
            X = X2
        rec([v], P, X)
    return counters


def run_full(g, cfg, sink=None):
    """Full pipeline over an EditableGraph: optional global reduction,
    then enumeration of the remainder. Mutates g; copy first to keep it.

    Returns (sink, report).
    """
    cfg = cfg.normalized()
    if sink is None:
        sink = CliqueSink("collect")
    n_input = sum(g.alive)
    m_input = g.m_live
    degree_map = [len(g.adj[v]) for v in range(g.n)]
    counters = RunCounters()
    ledger = ReductionLedger()
    t0 = time.perf_counter()
    if cfg.global_reduction:
        global_reduce(g, sink, ledger)
        counters.cliques_from_reductions += ledger.cliques_emitted
    t1 = time.perf_counter()
    n_after = sum(g.alive)
    m_after = g.m_live
    cg = compact(g)
    enumerate_cliques(cg, cfg, sink, counters, degree_map)
    t2 = time.perf_counter()
    report = build_report(
        config=cfg.describe(),
        n_input=n_input,
        m_input=m_input,
        n_after=n_after,
        m_after=m_after,
        cliques_total=sink.count,
        counters=counters,
        ledger=ledger,
        timings={"reduce": t1 - t0, "enumerate": t2 - t1, "total": t2 - t0},
    )
    return sink, report


def config_matrix(algorithms=ALGORITHMS, *, strict_degree_one=False, metrics=False):
    """Every algorithm x reduction-toggle combination, in a fixed order."""
    out = []
    for algorithm in algorithms:
        for glob in (False, True):
            for dyn in (False, True):
                for xr in (False, True):
                    out.append(
                        EnumConfig(
                            algorithm=algorithm,
                            global_reduction=glob,
                            dynamic_reduction=dyn,
                            xreduce=xr,
                            strict_degree_one=strict_degree_one,
                            metrics=metrics,
                        )
                    )
    return out
