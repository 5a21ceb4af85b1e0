"""Edge-list parsing, random graph generation, and clique output.

The accepted input is the common whitespace-separated edge list: one
"u v" pair per line, '#' comments, blank lines ignored, gzip handled by
file extension. External ids may be arbitrary non-negative integers;
they are renumbered to a dense 0..n-1 range by ascending external id,
with the mapping kept on the graph for output translation.
"""

import gzip
import sys
from dataclasses import dataclass
from pathlib import Path
from random import Random

from .graphs import EditableGraph, GraphFormatError


@dataclass
class ParseStats:
    lines_total: int = 0
    comment_lines: int = 0
    blank_lines: int = 0
    malformed_skipped: int = 0
    self_loops: int = 0
    duplicate_edges: int = 0
    edges_kept: int = 0


def _open_text(source):
    if hasattr(source, "read"):
        return source, False
    path = str(source)
    if path == "-":
        return sys.stdin, False
    if path.endswith(".gz"):
        return gzip.open(path, "rt"), True
    return open(path, "r"), True


def parse_edge_list(source, *, comment: str = "#", renumber: bool = True, lenient: bool = False):
    """Parse an edge list into (EditableGraph, ParseStats).

    Strict mode raises GraphFormatError (with the line number) on any
    line that is not two non-negative integers; lenient mode skips bad
    lines and takes the first two fields of wider ones.
    """
    fh, owned = _open_text(source)
    stats = ParseStats()
    edges = set()
    seen_ids = set()
    try:
        for lineno, raw in enumerate(fh, start=1):
            stats.lines_total += 1
            line = raw.strip()
            if not line:
                stats.blank_lines += 1
                continue
            if line.startswith(comment):
                stats.comment_lines += 1
                continue
            fields = line.split()
            if len(fields) != 2 and not lenient:
                raise GraphFormatError(
                    f"line {lineno}: expected two ids, got {len(fields)} fields",
                    line=lineno,
                )
            try:
                u = int(fields[0])
                v = int(fields[1])
            except (ValueError, IndexError):
                if lenient:
                    stats.malformed_skipped += 1
                    continue
                raise GraphFormatError(f"line {lineno}: not an integer pair: {line!r}", line=lineno)
            if u < 0 or v < 0:
                if lenient:
                    stats.malformed_skipped += 1
                    continue
                raise GraphFormatError(f"line {lineno}: negative id: {line!r}", line=lineno)
            seen_ids.add(u)
            seen_ids.add(v)
            if u == v:
                stats.self_loops += 1
                continue
            e = (u, v) if u < v else (v, u)
            if e in edges:
                stats.duplicate_edges += 1
            else:
                edges.add(e)
    finally:
        if owned:
            fh.close()
    stats.edges_kept = len(edges)

    if renumber:
        ids = sorted(seen_ids)
        remap = {old: new for new, old in enumerate(ids)}
        g = EditableGraph(len(ids))
        g.original_id = ids
        for u, v in edges:
            g.adj[remap[u]].append(remap[v])
            g.adj[remap[v]].append(remap[u])
    else:
        n = max(seen_ids) + 1 if seen_ids else 0
        g = EditableGraph(n)
        for u, v in edges:
            g.adj[u].append(v)
            g.adj[v].append(u)
    for a in g.adj:
        a.sort()
    g.m_live = len(edges)
    return g, stats


def gen_random(n: int, p: float, seed: int) -> EditableGraph:
    """Uniform random graph: each pair (i, j), i < j in ascending
    lexicographic order, becomes an edge with probability p. The draw
    sequence is fixed by the seed, so results are platform-stable."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = Random(seed)
    g = EditableGraph(n)
    m = 0
    rand = rng.random
    for i in range(n):
        ai = g.adj[i]
        for j in range(i + 1, n):
            if rand() < p:
                ai.append(j)
                g.adj[j].append(i)
                m += 1
    g.m_live = m
    # column appends to adj[j] arrive in ascending i order already
    return g


def write_edge_list(stream, g, *, header: str = "") -> int:
    """Write the live edges of g, one per line, in original ids."""
    idmap = g.original_id
    if header:
        for line in header.splitlines():
            stream.write(f"# {line}\n")
    count = 0
    for u, v in g.edges():
        if idmap is not None:
            a, b = idmap[u], idmap[v]
            if a > b:
                a, b = b, a
        else:
            a, b = u, v
        stream.write(f"{a} {b}\n")
        count += 1
    return count


def write_cliques(stream, cliques, *, id_map=None, canonical: bool = True) -> int:
    """Write cliques one per line, members space-separated ascending.

    Canonical mode sorts the lines as integer tuples so equal clique
    sets always serialize identically.
    """
    rows = []
    for c in cliques:
        if id_map is not None:
            rows.append(tuple(sorted(id_map[v] for v in c)))
        else:
            rows.append(tuple(sorted(c)))
    if canonical:
        rows.sort()
    for row in rows:
        stream.write(" ".join(map(str, row)) + "\n")
    return len(rows)


def write_id_map(stream, original_id) -> int:
    """Sidecar mapping: one 'dense original' pair per line."""
    for dense, orig in enumerate(original_id):
        stream.write(f"{dense} {orig}\n")
    return len(original_id)


def read_text_maybe(path):
    """Open a path or pass through '-' as stdin; returns a file object
    the caller owns (stdin excepted)."""
    if str(path) == "-":
        return sys.stdin
    return open(path, "r")
