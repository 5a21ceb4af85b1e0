"""Command line interface.

Subcommands: enumerate (list maximal cliques), reduce (run only the
global reduction), verify (cross-check against the reference
enumerators), gen (random edge list), bench (config sweep table).

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 input/output error, 4 graph too large for the requested oracle.
"""

import argparse
import sys
import time

from .engine import (
    ALGORITHMS,
    CliqueSink,
    EnumConfig,
    config_matrix,
    run_full,
)
from .graphs import GraphFormatError
from .ingest import (
    gen_random,
    parse_edge_list,
    write_cliques,
    write_edge_list,
    write_id_map,
)
from .metrics import render_table
from .oracle import MAX_BRUTE_N, OracleLimitError, brute_force_mce, verify_cliques
from .reduction import ReductionLedger, global_reduce


class UsageError(ValueError):
    pass


REDUCTION_TOKENS = ("none", "all", "global", "dynamic", "xreduce")


def parse_reductions(text: str):
    """csv of reduction names -> (global, dynamic, xreduce) flags."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise UsageError("--reductions needs at least one token")
    for t in tokens:
        if t not in REDUCTION_TOKENS:
            raise UsageError(f"unknown reduction {t!r} (choose from {', '.join(REDUCTION_TOKENS)})")
    if "none" in tokens and len(tokens) > 1:
        raise UsageError("'none' cannot be combined with other reductions")
    if "none" in tokens:
        return False, False, False
    if "all" in tokens:
        return True, True, True
    return "global" in tokens, "dynamic" in tokens, "xreduce" in tokens


def config_from_args(args) -> EnumConfig:
    glob, dyn, xr = parse_reductions(args.reductions)
    return EnumConfig(
        algorithm=args.algorithm,
        global_reduction=glob,
        dynamic_reduction=dyn,
        xreduce=xr,
        strict_degree_one=args.strict_degree_one,
        metrics=getattr(args, "metrics", None) is not None,
    )


def _open_out(path):
    if path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def _write_metrics(args, report):
    if getattr(args, "metrics", None) is None:
        return
    out, owned = _open_out(args.metrics)
    try:
        out.write(report.to_json() + "\n")
    finally:
        if owned:
            out.close()


def reductions_label(cfg: EnumConfig) -> str:
    parts = []
    if cfg.global_reduction:
        parts.append("global")
    if cfg.dynamic_reduction:
        parts.append("dynamic")
    if cfg.xreduce:
        parts.append("xreduce")
    return "+".join(parts) if parts else "none"


def cmd_enumerate(args) -> int:
    g, _ = parse_edge_list(args.input, lenient=args.lenient)
    cfg = config_from_args(args)
    idmap = g.original_id
    out, owned = _open_out(args.output)
    try:
        if args.count_only:
            sink = CliqueSink("count")
        elif args.stream:
            sink = CliqueSink("stream", stream=out, id_map=idmap)
        else:
            sink = CliqueSink("collect")
        sink, report = run_full(g, cfg, sink)
        if sink.mode == "collect":
            write_cliques(out, sink.cliques, id_map=idmap)
        elif sink.mode == "count":
            out.write(f"{sink.count}\n")
    finally:
        if owned:
            out.close()
    _write_metrics(args, report)
    if args.idmap and idmap is not None:
        side, owned = _open_out(args.idmap)
        try:
            write_id_map(side, idmap)
        finally:
            if owned:
                side.close()
    return 0


def cmd_reduce(args) -> int:
    g, _ = parse_edge_list(args.input, lenient=args.lenient)
    idmap = g.original_id
    n0 = sum(g.alive)
    m0 = g.m_live
    sink = CliqueSink("collect")
    ledger = global_reduce(g, sink)
    out, owned = _open_out(args.output)
    try:
        write_edge_list(out, g)
    finally:
        if owned:
            out.close()
    if args.cliques_out:
        cout, owned = _open_out(args.cliques_out)
        try:
            write_cliques(cout, sink.cliques, id_map=idmap)
        finally:
            if owned:
                cout.close()
    n1 = sum(g.alive)
    m1 = g.m_live

    def pct(before, after):
        return 100.0 * (before - after) / before if before else 0.0

    rules = " ".join(f"{k}={v}" for k, v in sorted(ledger.per_rule_counts.items()))
    sys.stderr.write(
        f"vertices {n0} -> {n1} (deleted {pct(n0, n1):.1f}%), "
        f"edges {m0} -> {m1} (deleted {pct(m0, m1):.1f}%), "
        f"cliques out {sink.count}, rounds {ledger.rounds}\n{rules}\n"
    )
    return 0


def _verify_graph(g, configs, limit):
    """Run every config on g and compare to the reference enumerator.

    Returns (error message or None, reference clique count).
    """
    if g.n > limit:
        raise OracleLimitError(g.n, limit, "brute-force")
    expected = brute_force_mce(g, limit=limit)
    for cfg in configs:
        sink, _ = run_full(g.copy(), cfg)
        got = sink.as_frozensets()
        if got != expected:
            missing = len(expected - got)
            extra = len(got - expected)
            return (
                f"algorithm={cfg.algorithm} reductions={reductions_label(cfg)}: "
                f"{missing} missing, {extra} unexpected (reference has {len(expected)})",
                len(expected),
            )
        verdict = verify_cliques(g, sink.cliques, limit=limit)
        if not verdict.ok:
            return (
                f"algorithm={cfg.algorithm} reductions={reductions_label(cfg)}: "
                f"{verdict.explain()}",
                len(expected),
            )
    return None, len(expected)


def cmd_verify(args) -> int:
    if args.all_configs:
        configs = config_matrix(strict_degree_one=args.strict_degree_one)
    else:
        configs = [config_from_args(args)]
    if args.trials is not None:
        if args.input is not None:
            raise UsageError("give an input path or --trials, not both")
        if args.n is None:
            raise UsageError("--trials needs --n (vertex count for the random graphs)")
        for t in range(args.trials):
            seed = args.seed + t
            g = gen_random(args.n, args.p, seed)
            problem, _ = _verify_graph(g, configs, args.limit_oracle)
            if problem:
                sys.stderr.write(
                    f"MISMATCH trial {t} (n={args.n} p={args.p} seed={seed}) {problem}\n"
                )
                return 1
        print(
            f"ok: {args.trials}/{args.trials} trials, "
            f"{len(configs)} configuration(s) each agree"
        )
        return 0
    if args.input is None:
        raise UsageError("verify needs an input path or --trials")
    g, _ = parse_edge_list(args.input, lenient=args.lenient)
    problem, count = _verify_graph(g, configs, args.limit_oracle)
    if problem:
        sys.stderr.write(f"MISMATCH {problem}\n")
        return 1
    print(f"ok: {count} maximal cliques, {len(configs)} configuration(s) agree")
    return 0


def cmd_gen(args) -> int:
    g = gen_random(args.n, args.p, args.seed)
    out, owned = _open_out(args.output)
    try:
        write_edge_list(out, g, header=f"random graph n={args.n} p={args.p} seed={args.seed}")
    finally:
        if owned:
            out.close()
    return 0


def cmd_bench(args) -> int:
    algorithms = tuple(t.strip() for t in args.algorithms.split(",") if t.strip())
    for a in algorithms:
        if a not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}")
    rows = []
    for path in args.inputs:
        g, _ = parse_edge_list(path, lenient=args.lenient)
        for cfg in config_matrix(algorithms, strict_degree_one=args.strict_degree_one):
            work = g.copy()
            sink = CliqueSink("count")
            t0 = time.perf_counter()
            sink, report = run_full(work, cfg, sink)
            dt = time.perf_counter() - t0
            rows.append(
                {
                    "graph": path,
                    "algorithm": cfg.algorithm,
                    "reductions": reductions_label(cfg.normalized()),
                    "cliques": sink.count,
                    "from_reduction": report.cliques_from_reductions,
                    "calls": report.recursive_calls,
                    "v_deleted": report.deleted_vertex_ratio,
                    "e_deleted": report.deleted_edge_ratio,
                    "seconds": dt,
                }
            )
    columns = [
        ("graph", "graph"),
        ("algorithm", "algorithm"),
        ("reductions", "reductions"),
        ("cliques", "cliques"),
        ("from_reduction", "from-reduction"),
        ("calls", "calls"),
        ("v_deleted", "v-deleted"),
        ("e_deleted", "e-deleted"),
        ("seconds", "seconds"),
    ]
    print(render_table(rows, columns))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cliquekit",
        description="Maximal clique enumeration with pluggable graph reductions.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("input", help="edge list path (.gz ok, '-' for stdin)")
        sp.add_argument("--lenient", action="store_true", help="skip malformed lines")

    def add_config(sp):
        sp.add_argument("--algorithm", choices=ALGORITHMS, default="degen")
        sp.add_argument(
            "--reductions",
            default="all",
            help="csv from none,all,global,dynamic,xreduce (default all; "
            "bk ignores dynamic and xreduce)",
        )
        sp.add_argument(
            "--strict-degree-one",
            action="store_true",
            help="resolve ambiguous single-candidate-neighbor cases by probing the check set",
        )

    e = sub.add_parser("enumerate", help="list maximal cliques of size >= 2")
    add_input(e)
    add_config(e)
    e.add_argument("-o", "--output", default="-", help="clique output path (default stdout)")
    e.add_argument("--count-only", action="store_true", help="print only the clique count")
    e.add_argument("--stream", action="store_true", help="write cliques as found, unsorted")
    e.add_argument(
        "--stats", metavar="PATH", dest="metrics",
        help="write a JSON run report ('-' = stdout)",
    )
    e.add_argument("--idmap", metavar="PATH", help="write 'dense original' id pairs sidecar")

    r = sub.add_parser("reduce", help="run only the global reduction")
    add_input(r)
    r.add_argument("-o", "--output", default="-", help="reduced edge list path (default stdout)")
    r.add_argument(
        "--cliques-out", metavar="PATH",
        help="also write the cliques the reduction rules emitted",
    )

    v = sub.add_parser("verify", help="cross-check configuration(s) against the reference")
    v.add_argument("input", nargs="?", default=None, help="edge list path (.gz ok, '-' for stdin)")
    v.add_argument("--lenient", action="store_true", help="skip malformed lines")
    add_config(v)
    v.add_argument("--all-configs", action="store_true", help="check every algorithm/reduction combination")
    v.add_argument(
        "--limit-oracle", type=int, default=MAX_BRUTE_N, metavar="N",
        help=f"vertex cap for the reference enumerator (default {MAX_BRUTE_N})",
    )
    v.add_argument(
        "--trials", type=int, metavar="N",
        help="check N seeded random graphs instead of reading a file",
    )
    v.add_argument("--n", type=int, metavar="N", help="vertex count for --trials graphs")
    v.add_argument(
        "--p", type=float, default=0.3, metavar="P",
        help="edge probability for --trials graphs (default 0.3)",
    )
    v.add_argument("--seed", type=int, default=0, help="base seed for --trials graphs")

    gn = sub.add_parser("gen", help="generate a random graph edge list")
    gn.add_argument("n", type=int)
    gn.add_argument("p", type=float)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("-o", "--output", default="-")

    b = sub.add_parser("bench", help="run the configuration sweep and print a table")
    b.add_argument("inputs", nargs="+", help="edge list path(s) (.gz ok, '-' for stdin)")
    b.add_argument("--lenient", action="store_true", help="skip malformed lines")
    b.add_argument("--algorithms", default="bk,degen,rcd", help="csv subset of bk,degen,rcd")
    b.add_argument("--strict-degree-one", action="store_true")
    return p


DISPATCH = {
    "enumerate": cmd_enumerate,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return DISPATCH[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except GraphFormatError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return 3
    except OracleLimitError as exc:
        sys.stderr.write(f"oracle limit: {exc}\n")
        return 4


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
