"""Candidate-set reduction applied at every recursion entry.

Given a subproblem (R, P, X), three cheap moves shrink P before any
branching happens:

* a candidate with no P-neighbors can only yield the clique R + {v};
  it is emitted when no X vertex extends it, and v leaves P either way.
* a candidate with exactly one P-neighbor u can only yield R + {v, u}.
  If v or u has no X witness that clique is maximal: emit it and drop v
  (and u too when v was u's last P-neighbor). When both have witnesses,
  strict mode settles maximality by probing X for a vertex adjacent to
  both; relaxed mode leaves v for the ordinary recursion.
* every candidate adjacent to all other remaining candidates is hoisted
  into R: each maximal clique of the subproblem contains it.

Vertices removed from P are accounted for, which is exactly the X
invariant, so they are folded into the returned forbidden set (filtered
by adjacency to each hoisted vertex, as all of X is). Dropping this fold
would let the caller report non-maximal cliques.
"""


class DynamicScratch:
    """Reusable epoch-stamped work arrays so per-call reduction does no
    allocation proportional to graph size."""

    __slots__ = ("epoch", "in_p", "mark", "drop", "cur", "orig")

    def __init__(self, n: int):
        self.epoch = 0
        self.in_p = [0] * n
        self.mark = [0] * n
        self.drop = [0] * n
        self.cur = [0] * n
        self.orig = [0] * n

    def begin(self) -> int:
        self.epoch += 1
        return self.epoch


def apply_dynamic(g, R, P, X, sink, scratch, *, strict=False, counters=None):
    """Reduce (R, P, X) in place of the caller's sets.

    Returns (P2, X2, hoist_count). Hoisted vertices are appended to R;
    the caller pops hoist_count entries after finishing the subproblem.
    P and X are treated as immutable inputs; fresh lists come back unless
    nothing changed.
    """
    if not P:
        return P, X, 0
    adj = g.adj
    adjset = g.adjset
    epoch = scratch.begin()
    in_p = scratch.in_p
    mark = scratch.mark
    dropf = scratch.drop
    cur = scratch.cur
    orig = scratch.orig
    lp = len(P)

    for v in P:
        in_p[v] = epoch
    if X:
        for v in P:
            sv = adjset[v]
            for x in X:
                if x in sv:
                    mark[v] = epoch
                    break
    for v in P:
        av = adj[v]
        if len(av) <= lp:
            c = 0
            for u in av:
                if in_p[u] == epoch:
                    c += 1
        else:
            sv = adjset[v]
            c = 0
            for u in P:
                if u in sv:
                    c += 1
        cur[v] = c
        orig[v] = c

    dropped = []
    for v in P:
        if dropf[v] == epoch:
            continue
        d0 = orig[v]
        if d0 == 0:
            if mark[v] != epoch:
                sink.emit(R + [v])
                if counters is not None:
                    counters.cliques_from_reductions += 1
            dropf[v] = epoch
            dropped.append(v)
        elif d0 == 1:
            av = adj[v]
            u = -1
            if len(av) <= lp:
                for t in av:
                    if in_p[t] == epoch:
                        u = t
                        break
            else:
                sv = adjset[v]
                for t in P:
                    if t in sv:
                        u = t
                        break
            both_marked = mark[v] == epoch and mark[u] == epoch
            if not both_marked:
                emit = True
            elif strict:
                emit = True
                for x in X:
                    sx = adjset[x]
                    if v in sx and u in sx:
                        emit = False
                        break
            else:
                continue  # relaxed mode defers the ambiguous case
            if emit:
                sink.emit(R + [v, u])
                if counters is not None:
                    counters.cliques_from_reductions += 1
            dropf[v] = epoch
            dropped.append(v)
            takes_partner = cur[u] == 1  # v was u's last P-neighbor
            cur[u] -= 1
            if takes_partner:
                dropf[u] = epoch
                dropped.append(u)

    if dropped:
        P2 = [v for v in P if dropf[v] != epoch]
        dropped.sort()
    else:
        P2 = P

    lp2 = len(P2)
    hoisted = [v for v in P2 if cur[v] == lp2 - 1] if lp2 else []

    if not hoisted:
        if not dropped:
            return P, X, 0
        X2 = sorted(X + dropped) if X else dropped
        return P2, X2, 0

    R.extend(hoisted)
    hsets = [adjset[h] for h in hoisted]
    P3 = [v for v in P2 if cur[v] != lp2 - 1]
    merged = sorted(X + dropped) if dropped else X
    X2 = [x for x in merged if all(x in hs for hs in hsets)]
    return P3, X2, len(hoisted)


def dynamic_reduce(g, sub, sink, scratch=None, *, strict=False, counters=None):
    """Functional wrapper over apply_dynamic for a Subproblem-like value
    with R, P, X attributes. Returns a new value of the same type."""
    if scratch is None:
        scratch = DynamicScratch(g.n)
    R = list(sub.R)
    P2, X2, _ = apply_dynamic(
        g, R, list(sub.P), list(sub.X), sink, scratch, strict=strict, counters=counters
    )
    return type(sub)(R=R, P=list(P2), X=list(X2))
