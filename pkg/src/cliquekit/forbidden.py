"""Forbidden-set pruning for the ordered outer enumeration loop.

When vertices are processed along a fixed elimination order, the outer
subproblem for vertex v at position i carries X = earlier neighbors of
v, used only to reject non-maximal results. Much of X is routinely
redundant: if one vertex's remaining candidates are covered by
another's, the covered one can stop serving as a witness from some
position onward.

``IgnoreIndex`` stores, per vertex, the first position from which it
may be dropped from any outer X (its ignore id; n means never). Two
certificates discovered while scanning P = later neighbors of v update
it, writing the minimum seen so far:

* if some u in P sees every other member of P among its own later
  neighbors and has strictly more later neighbors than |P| - 1, then u
  dominates v from position rank(u) on: ignore id of v drops to
  rank(u).
* otherwise, if the later neighbors of u all lie inside P, v dominates
  u from the current position: ignore id of u drops to i.

Ties (later neighborhood of u exactly P minus u) take the second
branch, which keeps the certificate graph acyclic.
"""


class IgnoreIndex:
    """Per-vertex first position from which outer maximality checks may
    skip the vertex. Starts at n, meaning never skippable."""

    __slots__ = ("ignore_id",)

    def __init__(self, n: int):
        self.ignore_id = [n] * n

    def lower(self, v: int, value: int) -> None:
        if value < self.ignore_id[v]:
            self.ignore_id[v] = value


def prune_forbidden(X, i: int, index: IgnoreIndex) -> list:
    """Members of X still required as witnesses at position i."""
    ig = index.ignore_id
    return [u for u in X if ig[u] >= i]


def update_certificates(v, i, P, rank, nplus, npset, index: IgnoreIndex) -> None:
    """Scan P for dominance certificates and lower ignore ids."""
    lp = len(P)
    if lp == 0:
        return
    pset = frozenset(P)
    for u in P:
        du = len(nplus[u])
        c = len(npset[u] & pset)
        if c == lp - 1 and du >= lp:
            index.lower(v, rank[u])
        elif c == du:
            index.lower(u, i)
