"""Shared graph builders and corpus schedule for the test suite."""

import os
from pathlib import Path

from cliquekit.graphs import EditableGraph, from_edges


def path_graph(n):
    return from_edges([(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return from_edges([(i, (i + 1) % n) for i in range(n)])


def star_graph(n):
    """Center 0 plus n-1 leaves."""
    return from_edges([(0, i) for i in range(1, n)])


def complete_graph(n):
    if n == 1:
        g = EditableGraph(1)
        return g
    return from_edges([(i, j) for i in range(n) for j in range(i + 1, n)])


def moon_moser(k):
    """Complete k-partite graph with parts of size 3: 3^k maximal cliques."""
    edges = []
    for a in range(3 * k):
        for b in range(a + 1, 3 * k):
            if a // 3 != b // 3:
                edges.append((a, b))
    return from_edges(edges)


def diamond_tail():
    """K4 minus one edge, plus a pendant on a degree-3 corner."""
    return from_edges([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)])


def bridge_triangles():
    """Two triangles joined by one bridge edge."""
    return from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def two_k4_matching():
    """Two K4s plus a 3-edge matching between them."""
    e = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    e += [(i + 4, j + 4) for i, j in e[:6]]
    e += [(0, 4), (1, 5), (2, 6)]
    return from_edges(e)


def k5_plus_isolated():
    g = from_edges([(i, j) for i in range(5) for j in range(i + 1, 5)])
    h = EditableGraph(6)
    h.adj[:5] = [list(a) for a in g.adj]
    h.m_live = g.m_live
    return h


def triangle_tail():
    """Triangle {0,1,2} with a pendant edge (2,3)."""
    return from_edges([(0, 1), (1, 2), (0, 2), (2, 3)])


def single_edge():
    return from_edges([(0, 1)])


def single_vertex():
    return EditableGraph(1)


def empty_graph():
    return EditableGraph(0)


def crafted_graphs():
    """Name -> graph pairs covering the structural corner cases."""
    out = [
        ("empty", empty_graph()),
        ("single-vertex", single_vertex()),
        ("single-edge", single_edge()),
        ("path-7", path_graph(7)),
        ("cycle-9", cycle_graph(9)),
        ("star-8", star_graph(8)),
        ("triangle-tail", triangle_tail()),
        ("diamond-tail", diamond_tail()),
        ("bridge-triangles", bridge_triangles()),
        ("two-k4-matching", two_k4_matching()),
        ("k5-plus-isolated", k5_plus_isolated()),
        ("moon-moser-3", moon_moser(3)),
        ("moon-moser-4", moon_moser(4)),
    ]
    out.extend((f"K{k}", complete_graph(k)) for k in range(2, 9))
    return out


CORPUS_PS = (0.05, 0.1, 0.3, 0.6)
CORPUS_REPS = 5


def corpus_schedule(reps: int = CORPUS_REPS):
    """Seeded G(n,p) parameters: all n in [1,60] x all four p, repeated."""
    i = 0
    for _rep in range(reps):
        for n in range(1, 61):
            for p in CORPUS_PS:
                yield n, p, 10000 + i
                i += 1


def dataset_path(name: str):
    """Locate an optional dataset under $CLIQUEKIT_DATASETS or datasets/."""
    roots = []
    env = os.environ.get("CLIQUEKIT_DATASETS")
    if env:
        roots.append(Path(env))
    roots.append(Path(__file__).resolve().parent.parent / "datasets")
    for root in roots:
        for suffix in ("", ".txt", ".txt.gz"):
            cand = root / (name + suffix)
            if cand.exists():
                return cand
    return None
