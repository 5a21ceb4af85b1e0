"""Graph representations, degeneracy ordering, and sorted-set primitives.

Two graph forms are used throughout the package:

* ``EditableGraph`` supports in-place vertex and edge deletion and is what
  the preprocessing reductions operate on.
* ``CompactGraph`` is a frozen snapshot with per-vertex sorted neighbor
  tuples (plus set views for fast membership tests) and is what the
  enumeration engine reads.

All vertex ids are dense non-negative integers.  Adjacency lists are kept
sorted ascending at all times, which lets every set operation here run as
a linear merge.
"""

from bisect import bisect_left, insort
from dataclasses import dataclass
from heapq import heappush, heappop

# Size ratio beyond which intersect_sorted switches from a linear merge to
# scanning the smaller list with binary searches into the larger one.
DEFAULT_GALLOP_RATIO = 32


class GraphFormatError(ValueError):
    """Malformed graph input. Carries the offending line or pair index."""

    def __init__(self, message, *, line=None, index=None):
        super().__init__(message)
        self.line = line
        self.index = index


def intersect_sorted(a, b, *, gallop_ratio: int = DEFAULT_GALLOP_RATIO) -> list:
    """Intersection of two strictly ascending sequences, ascending output.

    Runs a linear merge; when one side is at least ``gallop_ratio`` times
    longer than the other, the short side is walked and looked up in the
    long side by binary search instead.
    """
    if not a or not b:
        return []
    if len(a) > len(b):
        a, b = b, a
    la, lb = len(a), len(b)
    if lb >= gallop_ratio * la:
        out = []
        lo = 0
        for x in a:
            i = bisect_left(b, x, lo)
            if i == lb:
                break
            if b[i] == x:
                out.append(x)
                lo = i + 1
            else:
                lo = i
        return out
    out = []
    i = j = 0
    while i < la and j < lb:
        x = a[i]
        y = b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def common_neighbor_exists(g, u, v):
    """Smallest-id common neighbor of u and v, or None.

    Short-circuits at the first hit of the ascending merge, which is also
    the smallest common id. Works on both graph forms.
    """
    n = g.n
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertex out of range: {u}, {v}")
    if u == v:
        raise ValueError("common_neighbor_exists needs two distinct vertices")
    a = g.adj[u]
    b = g.adj[v]
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x = a[i]
        y = b[j]
        if x == y:
            return x
        if x < y:
            i += 1
        else:
            j += 1
    return None


class EditableGraph:
    """Mutable undirected graph with sorted neighbor lists.

    Deletion removes entries in place, so ``len(adj[v])`` is always the
    live degree. ``alive[v]`` distinguishes deleted vertices from isolated
    ones. ``m_live`` tracks the live edge count.
    """

    __slots__ = ("n", "adj", "alive", "m_live", "original_id")

    def __init__(self, n: int):
        self.n = n
        self.adj = [[] for _ in range(n)]
        self.alive = [True] * n
        self.m_live = 0
        self.original_id = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def add_edge(self, u: int, v: int) -> bool:
        if u == v:
            raise ValueError("self loop")
        if self.has_edge(u, v):
            return False
        insort(self.adj[u], v)
        insort(self.adj[v], u)
        self.m_live += 1
        return True

    def delete_edge(self, u: int, v: int) -> None:
        for a, b in ((u, v), (v, u)):
            lst = self.adj[a]
            i = bisect_left(lst, b)
            if i >= len(lst) or lst[i] != b:
                raise ValueError(f"edge ({u}, {v}) not present")
            del lst[i]
        self.m_live -= 1

    def delete_vertex(self, v: int) -> int:
        """Remove v and its incident edges; returns how many edges died."""
        nbrs = self.adj[v]
        for u in nbrs:
            lst = self.adj[u]
            i = bisect_left(lst, v)
            del lst[i]
        k = len(nbrs)
        self.adj[v] = []
        self.alive[v] = False
        self.m_live -= k
        return k

    def vertices_alive(self):
        return [v for v in range(self.n) if self.alive[v]]

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def copy(self) -> "EditableGraph":
        g = EditableGraph(self.n)
        g.adj = [list(a) for a in self.adj]
        g.alive = list(self.alive)
        g.m_live = self.m_live
        g.original_id = None if self.original_id is None else list(self.original_id)
        return g

    def check(self) -> None:
        """Validate structural invariants; used by tests."""
        m2 = 0
        for u in range(self.n):
            a = self.adj[u]
            assert all(a[i] < a[i + 1] for i in range(len(a) - 1)), "unsorted adjacency"
            assert u not in a, "self loop"
            if a:
                assert self.alive[u], f"dead vertex {u} has neighbors"
            for v in a:
                assert self.has_edge(v, u), f"asymmetric edge ({u}, {v})"
            m2 += len(a)
        assert m2 == 2 * self.m_live, "m_live out of sync"


def from_edges(pairs, *, renumber: bool = False) -> EditableGraph:
    """Build an EditableGraph from (u, v) pairs.

    Duplicates, self-loops, and both orientations collapse to one
    undirected edge. Ids must be non-negative ints; n is max id + 1 unless
    ``renumber`` maps the ids seen onto a dense 0..k-1 range (ascending),
    recording the originals in ``original_id``.
    """
    edges = set()
    max_id = -1
    for idx, pair in enumerate(pairs):
        try:
            u, v = pair[0], pair[1]
        except (TypeError, IndexError):
            raise GraphFormatError(f"pair #{idx} has fewer than two ids", index=idx)
        if not isinstance(u, int) or not isinstance(v, int) or u < 0 or v < 0:
            raise GraphFormatError(f"pair #{idx} has a non-natural id: {pair!r}", index=idx)
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
        if u == v:
            continue
        edges.add((u, v) if u < v else (v, u))

    if renumber:
        seen = sorted({x for e in edges for x in e})
        remap = {old: new for new, old in enumerate(seen)}
        g = EditableGraph(len(seen))
        g.original_id = seen
        for u, v in edges:
            g.adj[remap[u]].append(remap[v])
            g.adj[remap[v]].append(remap[u])
    else:
        g = EditableGraph(max_id + 1)
        for u, v in edges:
            g.adj[u].append(v)
            g.adj[v].append(u)
    for a in g.adj:
        a.sort()
    g.m_live = len(edges)
    return g


class CompactGraph:
    """Frozen graph snapshot for the enumeration engine.

    ``adj`` holds per-vertex sorted neighbor tuples, ``adjset`` the same
    neighborhoods as frozensets for O(1) membership probes. ``original_id``
    maps dense ids back to the caller's id space when renumbering happened.
    """

    __slots__ = ("n", "m", "adj", "adjset", "deg", "max_degree", "original_id")

    def __init__(self, adj, original_id=None):
        self.n = len(adj)
        self.adj = [tuple(a) for a in adj]
        self.adjset = [frozenset(a) for a in adj]
        self.deg = [len(a) for a in adj]
        self.m = sum(self.deg) // 2
        self.max_degree = max(self.deg, default=0)
        self.original_id = original_id

    def degree(self, v: int) -> int:
        return self.deg[v]

    def neighbors(self, v: int):
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjset[u]

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)


def compact(g: EditableGraph, *, drop_dead: bool = False) -> CompactGraph:
    """Freeze an EditableGraph.

    By default dead vertices keep their ids and just look isolated, so
    emissions before and after compaction share one id space. With
    ``drop_dead`` the live vertices are renumbered densely and
    ``original_id`` records where each one came from.
    """
    if not drop_dead:
        return CompactGraph(g.adj, original_id=None if g.original_id is None else list(g.original_id))
    live = [v for v in range(g.n) if g.alive[v]]
    remap = {old: new for new, old in enumerate(live)}
    adj = [[remap[u] for u in g.adj[v]] for v in live]
    if g.original_id is not None:
        orig = [g.original_id[v] for v in live]
    else:
        orig = list(live)
    return CompactGraph(adj, original_id=orig)


@dataclass
class DegeneracyOrder:
    """Removal order by repeated minimum degree, plus rank and the max
    removal degree (the degeneracy)."""

    order: list
    rank: list
    degeneracy: int


def degeneracy_order(g) -> DegeneracyOrder:
    """Smallest-degree-first elimination order with smallest-id tie-break.

    Lazy min-heap keyed on (degree, id); stale entries are skipped. The
    id tie-break keeps runs reproducible across platforms.
    """
    n = g.n
    deg = [len(g.adj[v]) for v in range(n)]
    removed = [False] * n
    heap = [(deg[v], v) for v in range(n)]
    heap.sort()
    order = []
    rank = [0] * n
    k = 0
    while heap:
        d, v = heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        rank[v] = len(order)
        order.append(v)
        if d > k:
            k = d
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heappush(heap, (deg[u], u))
    return DegeneracyOrder(order=order, rank=rank, degeneracy=k)
