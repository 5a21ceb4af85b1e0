"""Independent reference enumerators and result verification.

Two oracles that share no code with the production engine:

* ``brute_force_mce``: textbook pivotless recursive enumeration over
  Python frozensets. Exponential; capped at 64 vertices.
* ``subset_mce``: bitmask dynamic program over all 2^n subsets using
  numpy, so its only shared assumption with the recursive routines is
  the input adjacency itself. Capped at 20 vertices.

Both return the maximal cliques of size >= 2 as a frozenset of
frozensets, the package-wide output convention (isolated vertices are
never reported as cliques).
"""

import numpy as np

MAX_BRUTE_N = 64
MAX_SUBSET_N = 20

CliqueSet = frozenset


class OracleLimitError(RuntimeError):
    """Input exceeds what an oracle can enumerate exhaustively."""

    def __init__(self, n, limit, name):
        super().__init__(f"{name} oracle supports at most {limit} vertices, got {n}")
        self.n = n
        self.limit = limit
        self.name = name


def _adj_sets(g):
    return [frozenset(g.adj[v]) for v in range(g.n)]


def brute_force_mce(g, *, limit: int = MAX_BRUTE_N) -> frozenset:
    """All maximal cliques of size >= 2, by pivotless recursion on sets."""
    if g.n > limit:
        raise OracleLimitError(g.n, limit, "brute-force")
    adj = _adj_sets(g)
    out = []

    def rec(r, p, x):
        if not p and not x:
            if len(r) >= 2:
                out.append(frozenset(r))
            return
        for v in sorted(p):
            rec(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    verts = {v for v in range(g.n) if adj[v]}
    rec(frozenset(), verts, frozenset())
    return frozenset(out)


def subset_mce(g, *, limit: int = MAX_SUBSET_N) -> frozenset:
    """All maximal cliques of size >= 2 by subset dynamic programming.

    is_clique[S] for every bitmask S, built by peeling the lowest set bit:
    S is a clique iff S minus its low bit is one and the rest lies inside
    the low bit's neighborhood. A clique S is maximal iff no outside
    vertex is adjacent to all of S.
    """
    n = g.n
    if n > limit:
        raise OracleLimitError(n, limit, "subset-DP")
    if n == 0:
        return frozenset()
    nbr = np.zeros(n, dtype=np.int64)
    for v in range(n):
        for u in g.adj[v]:
            nbr[v] |= 1 << u

    size = 1 << n
    is_clique = np.zeros(size, dtype=bool)
    is_clique[0] = True
    # peel lowest set bit v: rest has only higher bits, so go high to low
    for v in range(n - 1, -1, -1):
        bit = 1 << v
        high = np.arange(0, size >> (v + 1), dtype=np.int64) << (v + 1)
        masks = high | bit
        rest = masks ^ bit
        is_clique[masks] = is_clique[rest] & ((rest & ~nbr[v]) == 0)

    # maximal iff no vertex outside S extends it
    extendable = np.zeros(size, dtype=bool)
    all_masks = np.arange(size, dtype=np.int64)
    for v in range(n):
        bit = 1 << v
        outside = (all_masks & bit) == 0
        fits = (all_masks & ~nbr[v]) == 0
        extendable |= outside & fits & is_clique  # S+v would still be a clique

    popcount = np.zeros(size, dtype=np.int64)
    for v in range(n):
        popcount[(all_masks >> v) & 1 == 1] += 1

    winners = np.nonzero(is_clique & ~extendable & (popcount >= 2))[0]
    out = []
    for mask in winners.tolist():
        members = frozenset(v for v in range(n) if mask >> v & 1)
        out.append(members)
    return frozenset(out)


class Verdict:
    """Outcome of checking a claimed clique collection against a graph."""

    __slots__ = ("non_clique", "non_maximal", "missing", "completeness_checked")

    def __init__(self, non_clique, non_maximal, missing, completeness_checked):
        self.non_clique = non_clique
        self.non_maximal = non_maximal
        self.missing = missing
        self.completeness_checked = completeness_checked

    @property
    def ok(self) -> bool:
        return not self.non_clique and not self.non_maximal and not self.missing

    def explain(self) -> str:
        if self.ok:
            scope = "sound and complete" if self.completeness_checked else "sound"
            return f"ok ({scope})"
        parts = []
        if self.non_clique:
            parts.append(f"{len(self.non_clique)} claimed sets are not cliques")
        if self.non_maximal:
            parts.append(f"{len(self.non_maximal)} claimed cliques are not maximal")
        if self.missing:
            parts.append(f"{len(self.missing)} maximal cliques missing")
        return "; ".join(parts)


def verify_cliques(g, claimed, *, limit: int = MAX_BRUTE_N) -> Verdict:
    """Check soundness of claimed cliques directly and, for graphs within
    the brute-force cap, completeness against the oracle."""
    adj = _adj_sets(g)
    claimed = [frozenset(c) for c in claimed]
    non_clique = []
    non_maximal = []
    for c in claimed:
        members = sorted(c)
        bad = False
        for i, u in enumerate(members):
            if u < 0 or u >= g.n:
                bad = True
                break
            for v in members[i + 1 :]:
                if v not in adj[u]:
                    bad = True
                    break
            if bad:
                break
        if bad or len(c) < 2:
            non_clique.append(c)
            continue
        ext = adj[members[0]]
        for u in members[1:]:
            ext = ext & adj[u]
            if not ext:
                break
        if ext - c:
            non_maximal.append(c)

    missing = []
    complete = g.n <= limit
    if complete and not non_clique and not non_maximal:
        want = brute_force_mce(g, limit=limit)
        got = frozenset(claimed)
        missing = sorted(want - got, key=sorted)
        extra = got - want
        # anything extra but sound+maximal is impossible; guard regardless
        non_maximal.extend(sorted(extra, key=sorted))
    return Verdict(non_clique, non_maximal, missing, complete)
