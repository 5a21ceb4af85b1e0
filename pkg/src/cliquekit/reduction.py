"""Global preprocessing reductions.

Two rule families shrink the graph before enumeration starts, emitting
every maximal clique they make undiscoverable:

* vertex rules peel degree <= 2 vertices. A degree-1 vertex forms a
  maximal edge with its neighbor. A degree-2 vertex forms either two
  maximal edges (endpoints non-adjacent) or a maximal triangle; in the
  triangle case the leftover edge dies too when it has no other common
  neighbor, since the only clique through it was just reported.
* the edge rule deletes any edge whose endpoints have no common
  neighbor, reporting it as a maximal 2-clique.

``global_reduce`` alternates the two families until neither changes the
graph. All emissions are maximal in the graph as given to the current
call, and every clique destroyed by a deletion is emitted exactly once.
"""

from collections import deque
from dataclasses import dataclass, field

from .graphs import common_neighbor_exists

RULES = (
    "degree0",
    "degree1",
    "degree2_case1",
    "degree2_case2",
    "degree2_case3",
    "non_triangle_edge",
)


@dataclass
class ReductionLedger:
    """Firing counts for each reduction rule plus round bookkeeping."""

    per_rule_counts: dict = field(default_factory=lambda: {k: 0 for k in RULES})
    cliques_emitted: int = 0
    rounds: int = 0

    def bump(self, rule: str) -> None:
        self.per_rule_counts[rule] += 1

    def total_firings(self) -> int:
        return sum(self.per_rule_counts.values())


def _apply_vertex_rule(g, v, sink, ledger):
    """Apply the low-degree rule to one vertex, dispatching on its
    current degree. Returns the rule tag, or None when degree > 2."""
    d = g.degree(v)
    if d > 2:
        return None
    if d == 0:
        g.delete_vertex(v)
        ledger.bump("degree0")
        return "degree0"
    if d == 1:
        u = g.adj[v][0]
        sink.emit((v, u))
        ledger.cliques_emitted += 1
        g.delete_vertex(v)
        ledger.bump("degree1")
        return "degree1"
    u, w = g.adj[v]
    if not g.has_edge(u, w):
        sink.emit((v, u))
        sink.emit((v, w))
        ledger.cliques_emitted += 2
        g.delete_vertex(v)
        ledger.bump("degree2_case1")
        return "degree2_case1"
    sink.emit((v, u, w))
    ledger.cliques_emitted += 1
    g.delete_vertex(v)
    if common_neighbor_exists(g, u, w) is None:
        # the only clique through (u, w) was the triangle just reported
        g.delete_edge(u, w)
        ledger.bump("degree2_case2")
        return "degree2_case2"
    ledger.bump("degree2_case3")
    return "degree2_case3"


def vertex_reduction(g, sink, ledger) -> bool:
    """Exhaustively peel degree <= 2 vertices, FIFO from smallest id.

    Neighbors whose degree drops to <= 2 join the queue; entries are
    re-checked against current degree when popped, so stale ones are
    harmless. Returns whether anything changed.
    """
    queue = deque(v for v in range(g.n) if g.alive[v] and g.degree(v) <= 2)
    queued = [False] * g.n
    for v in queue:
        queued[v] = True
    changed = False
    while queue:
        v = queue.popleft()
        queued[v] = False
        if not g.alive[v]:
            continue
        nbrs = list(g.adj[v])
        tag = _apply_vertex_rule(g, v, sink, ledger)
        if tag is None:
            continue
        changed = True
        for u in nbrs:
            if g.alive[u] and g.degree(u) <= 2 and not queued[u]:
                queue.append(u)
                queued[u] = True
    return changed


def edge_reduction(g, sink, ledger) -> bool:
    """Delete every edge with no common neighbor, emitting it as a
    maximal 2-clique. One pass reaches the fixpoint: an edge that has a
    common neighbor keeps it, because each triangle side is itself
    protected by the opposite corner.

    Edges found inside some triangle are marked visited along with the
    two other sides, so each triangle is certified once per call.
    """
    visited = set()
    changed = False
    for u, v in list(g.edges()):
        if (u, v) in visited:
            continue
        x = common_neighbor_exists(g, u, v)
        if x is None:
            sink.emit((u, v))
            ledger.cliques_emitted += 1
            g.delete_edge(u, v)
            ledger.bump("non_triangle_edge")
            changed = True
        else:
            visited.add((u, v))
            visited.add((min(u, x), max(u, x)))
            visited.add((min(v, x), max(v, x)))
    return changed


def global_reduce(g, sink, ledger=None, *, vertex: bool = True, edge: bool = True) -> "ReductionLedger":
    """Alternate vertex and edge reductions until a full round is quiet."""
    if ledger is None:
        ledger = ReductionLedger()
    while True:
        changed = False
        if vertex:
            changed |= vertex_reduction(g, sink, ledger)
        if edge:
            changed |= edge_reduction(g, sink, ledger)
        ledger.rounds += 1
        if not changed:
            return ledger
