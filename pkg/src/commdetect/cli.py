"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 degenerate graph, 4 replay mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import files
from .benchmark import benchmark_spec, generate
from .betweenness import node_game_betweenness, sp_edge_betweenness
from .criteria import DEFAULT_EPS, combined_compare, criterion_report
from .divisive import ReplayError, run_divisive
from .graph import Graph, ParseError
from .power import GameParams, power_vector
from .quality import metrics_vector, modularity, nmi

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_REPLAY = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT)
    try:
        return Graph.from_edge_list(text)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT)


def _require_edges(g: Graph, path: str) -> None:
    if g.m == 0:
        raise CliError(f"{path}: degenerate graph (no edges)", EXIT_DEGENERATE)


def cmd_cluster(args) -> int:
    g = _load_graph(args.input)
    _require_edges(g, args.input)
    params = GameParams(alpha=args.alpha)
    d = run_divisive(g, args.algorithm.upper(), params=params, seed=args.seed)
    stem = Path(args.input).stem
    dend_path = Path(args.output_dendrogram or f"{stem}.dendrogram")
    metrics_path = Path(args.output_metrics or f"{stem}.metrics.csv")
    dend_path.write_text(files.dendrogram_text(d, g), encoding="utf-8")
    metrics_path.write_text(files.metrics_csv_text(g, d), encoding="utf-8")
    mv = metrics_vector(g, d)
    rep = criterion_report(mv)
    print(f"algorithm: {d.algorithm}")
    print(f"partitions: {len(d.partitions)}")
    print(f"max modularity: {rep.cr1:.4f} at k={rep.k_at_t_max}")
    print(f"Cr1={rep.cr1:.4f} CrAvg={rep.cr_avg:.4f} Cr3={rep.cr3:.4f}")
    print(f"SCr1={rep.scr1:.4f} SCr3={rep.scr3:.4f}")
    print(f"dendrogram: {dend_path}")
    print(f"metrics: {metrics_path}")
    return EXIT_OK


def cmd_compare(args) -> int:
    g = _load_graph(args.graph)
    _require_edges(g, args.graph)
    try:
        da = files.replay_dendrogram(g, Path(args.dendrogram_a).read_text("utf-8"))
        db = files.replay_dendrogram(g, Path(args.dendrogram_b).read_text("utf-8"))
    except OSError as exc:
        raise CliError(str(exc), EXIT_INPUT)
    except (ReplayError, ValueError) as exc:
        raise CliError(f"replay mismatch: {exc}", EXIT_REPLAY)
    mva = metrics_vector(g, da)
    mvb = metrics_vector(g, db)
    if len(mva) != len(mvb):
        raise CliError("dendrograms have different lengths", EXIT_REPLAY)
    print("criteria,verdict")
    for level, name in ((1, "Cr1/SCr1"), (2, "Cr2/SCr2"), (3, "Cr3/SCr3")):
        verdict = combined_compare(mva, mvb, eps=args.eps, level=level)
        print(f"{name},{verdict.value}")
    return EXIT_OK


def cmd_benchmark(args) -> int:
    try:
        base = benchmark_spec(args.z_out)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT)
    if args.runs < 1:
        raise CliError("runs must be >= 1", EXIT_INPUT)
    params = GameParams(alpha=args.alpha)
    nmis = []
    qs = []
    q_ref = []
    for i in range(args.runs):
        spec = benchmark_spec(args.z_out, seed=args.seed + i)
        g, planted = generate(spec)
        q_ref.append(modularity(g, planted, "inout"))
        d = run_divisive(
            g,
            args.algorithm.upper(),
            params=params,
            seed=args.seed + i,
            stop_at_k=spec.blocks,
        )
        p4 = d.partition_with_k(spec.blocks)
        if p4 is None:
            continue
        nmis.append(nmi(p4, planted))
        qs.append(modularity(g, p4, "inout"))
    header = "z_out,mu,algorithm,runs,mean_nmi,mean_modularity,mean_reference_modularity"
    row = (
        f"{base.z_out:.4f},{base.mu:.4f},{args.algorithm.upper()},{args.runs},"
        f"{sum(nmis) / len(nmis):.6f},{sum(qs) / len(qs):.6f},"
        f"{sum(q_ref) / len(q_ref):.6f}"
    )
    text = header + "\n" + row + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    print(text, end="")
    return EXIT_OK


def cmd_betweenness(args) -> int:
    g = _load_graph(args.input)
    _require_edges(g, args.input)
    if args.weighted:
        phi = power_vector(g, GameParams(alpha=args.alpha))
        scores = node_game_betweenness(g, phi)
    else:
        scores = sp_edge_betweenness(g)
    print("u,v,score")
    for (u, v), s in sorted(scores.items()):
        print(f"{g.labels[u]},{g.labels[v]},{s:.10f}")
    return EXIT_OK


def cmd_power(args) -> int:
    g = _load_graph(args.input)
    _require_edges(g, args.input)
    pv = power_vector(g, GameParams(alpha=args.alpha))
    print("node,power")
    for v in range(g.n):
        print(f"{g.labels[v]},{pv.phi[v]:.10f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commdetect",
        description="Divisive hierarchical community detection toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cluster", help="run a divisive clustering")
    p.add_argument("--input", required=True)
    p.add_argument("--algorithm", choices=["gn", "gice", "gicef"], default="gice")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output-dendrogram")
    p.add_argument("--output-metrics")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("compare", help="compare two dendrograms on one graph")
    p.add_argument("dendrogram_a")
    p.add_argument("dendrogram_b")
    p.add_argument("--graph", required=True)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("benchmark", help="synthetic benchmark sweep")
    p.add_argument("--z-out", type=float, required=True)
    p.add_argument("--runs", type=int, default=20)
    p.add_argument("--algorithm", choices=["gn", "gice", "gicef"], default="gice")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("betweenness", help="dump edge betweenness scores")
    p.add_argument("--input", required=True)
    p.add_argument("--weighted", action="store_true", help="node-game weights")
    p.add_argument("--alpha", type=float, default=1.0)
    p.set_defaults(func=cmd_betweenness)

    p = sub.add_parser("power", help="dump node power values")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.set_defaults(func=cmd_power)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
