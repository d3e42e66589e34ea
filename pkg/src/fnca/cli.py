"""Command-line front end: ``fnca generate|cluster|eval|bench|sweep``.

Machine-readable output goes to stdout (TSV for bench/sweep), diagnostics to
stderr. Exit status is 0 only when every requested output was written.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .engine import EngineConfig, OrderPolicy, run, run_many
from .generator import GeneratorError, RnSpec, generate_rn
from .io import (
    FormatError,
    ResultRecord,
    labels_to_array,
    read_edge_list,
    read_labels,
    write_edge_list,
    write_labels,
    write_records,
)
from .metrics import accuracy, summarize_runs

log = logging.getLogger("fnca")


class CliError(Exception):
    pass


def _engine_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=float, default=0.95, help="greedy-selection probability (default 0.95)")
    p.add_argument("--max-iters", type=int, default=50, help="sweep limit (default 50)")
    p.add_argument("--seed", type=int, default=0, help="base seed; run r uses seed + r (default 0)")
    p.add_argument("--runs", type=int, default=1, help="independent runs (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fnca", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="sample an RN(C, s, d, z_out) benchmark graph")
    g.add_argument("--C", type=int, default=4, help="number of communities (default 4)")
    g.add_argument("--s", type=int, default=32, help="nodes per community (default 32)")
    g.add_argument("--d", type=int, default=16, help="degree of every node (default 16)")
    g.add_argument("--zout", type=int, default=5, help="inter-community edges per node (default 5)")
    g.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    g.add_argument("--out", required=True, help="edge-list output path")
    g.add_argument("--labels-out", help="planted-labels output path (optional)")

    c = sub.add_parser("cluster", help="cluster an edge list")
    c.add_argument("--in", dest="input", required=True, help="edge-list input path")
    _engine_args(c)
    c.add_argument("--target-q", type=float, default=None, help="stop once Q reaches this value (default off)")
    c.add_argument("--no-sleep", action="store_true", help="disable sleeping agents")
    c.add_argument(
        "--order",
        choices=[o.value for o in OrderPolicy],
        default=OrderPolicy.SHUFFLED.value,
        help="agent visit order (default shuffled-per-sweep)",
    )
    c.add_argument("--out-labels", help="write the best-Q labeling here (optional)")
    c.add_argument("--out-result", help="write per-run records plus summary here (optional)")
    c.add_argument("--planted", help="planted-labels file; adds accuracy to records (optional)")
    c.add_argument("--dataset", default=None, help="dataset name for records (default: input path)")
    c.add_argument("--jobs", type=int, default=1, help="worker processes for --runs (default 1)")

    e = sub.add_parser("eval", help="score a labeling against planted communities")
    e.add_argument("--labels", required=True, help="found labels file")
    e.add_argument("--planted", required=True, help="planted labels file")

    b = sub.add_parser("bench", help="runtime vs. size on RN(C, 100, d, z_out)")
    b.add_argument("--scales", default="10,50,100", help="comma-separated C values (default 10,50,100)")
    b.add_argument("--s", type=int, default=100, help="nodes per community (default 100)")
    b.add_argument("--d", type=int, default=16, help="node degree (default 16)")
    b.add_argument("--zout", type=int, default=5, help="inter-community degree (default 5)")
    b.add_argument("--seed", type=int, default=0, help="seed (default 0)")
    b.add_argument("--repeats", type=int, default=3, help="runs per scale and mode (default 3)")
    b.add_argument("--p", type=float, default=0.95, help="greedy-selection probability (default 0.95)")
    b.add_argument("--max-iters", type=int, default=50, help="sweep limit (default 50)")

    s = sub.add_parser("sweep", help="mean/std of Q across a parameter range")
    s.add_argument("--in", dest="input", required=True, help="edge-list input path")
    s.add_argument("--param", choices=["p", "iters"], required=True, help="parameter to vary")
    s.add_argument("--from", dest="start", type=float, required=True, help="first value")
    s.add_argument("--to", dest="stop", type=float, required=True, help="last value (inclusive)")
    s.add_argument("--step", type=float, default=None, help="increment (default 0.01 for p, 1 for iters)")
    _engine_args(s)
    s.set_defaults(runs=10)
    return parser


def param_values(start: float, stop: float, step: float) -> list[float]:
    if step <= 0:
        raise CliError(f"step must be positive, got {step}")
    if start > stop:
        raise CliError(f"empty range: from {start} > to {stop}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(count)]


def cmd_generate(args) -> int:
    spec = RnSpec(args.C, args.s, args.d, args.zout, seed=args.seed)
    pg = generate_rn(spec)
    write_edge_list(pg.graph, args.out)
    if args.labels_out:
        write_labels(pg.planted, None, args.labels_out)
    print(f"n\t{pg.graph.n}")
    print(f"m\t{pg.graph.m}")
    return 0


def cmd_cluster(args) -> int:
    g, ids = read_edge_list(args.input)
    cfg = EngineConfig(
        p=args.p,
        max_iters=args.max_iters,
        target_q=args.target_q,
        sleeping_enabled=not args.no_sleep,
        seed=args.seed,
        order_policy=OrderPolicy(args.order),
    )
    planted = labels_to_array(read_labels(args.planted), ids) if args.planted else None
    results = run_many(g, cfg, args.runs, jobs=args.jobs)
    dataset = args.dataset or str(args.input)

    records = []
    for r in results:
        acc = accuracy(r.labels, planted).accuracy if planted is not None else None
        records.append(ResultRecord.from_result(dataset, g, r, accuracy=acc))
        log.info("seed %d: q=%.6f iterations=%d %s", r.config.seed, r.q, r.iterations, r.stop_reason.value)

    summary = summarize_runs(results, planted)
    summary_dict = {"dataset": dataset, **asdict(summary)}
    if summary_dict["accuracy"] is None:
        del summary_dict["accuracy"]

    if args.out_labels:
        best = max(results, key=lambda r: r.q)
        write_labels(best.labels, ids, args.out_labels)
    if args.out_result:
        write_records(records, args.out_result, summary_dict)
    print(json.dumps(summary_dict, sort_keys=True))
    return 0


def cmd_eval(args) -> int:
    found = read_labels(args.labels)
    planted = read_labels(args.planted)
    if set(found) != set(planted):
        diff = sorted(set(found) ^ set(planted))
        raise CliError(f"node sets differ (e.g. node {diff[0]})")
    ids = sorted(planted)
    rep = accuracy(labels_to_array(found, ids), labels_to_array(planted, ids))
    print(f"accuracy\t{rep.accuracy:.12g}")
    print(f"n_found_clusters\t{rep.n_found_clusters}")
    print(f"perfect\t{str(rep.perfect).lower()}")
    print("matched_pairs\t" + ",".join(f"{a}:{b}" for a, b in rep.matched_pairs))
    return 0


def bench_rows(
    scales: Sequence[int],
    s: int = 100,
    d: int = 16,
    zout: int = 5,
    seed: int = 0,
    repeats: int = 3,
    p: float = 0.95,
    max_iters: int = 50,
) -> list[tuple[int, int, float, float]]:
    """``(C, n + m, mean ms sleeping on, mean ms sleeping off)`` per scale."""
    rows = []
    for C in scales:
        pg = generate_rn(RnSpec(C, s, d, zout, seed=seed))
        g = pg.graph
        times = {True: [], False: []}
        for rep in range(repeats):
            for sleeping in (True, False):
                cfg = EngineConfig(p=p, max_iters=max_iters, sleeping_enabled=sleeping, seed=seed + rep)
                times[sleeping].append(run(g, cfg).wall_ms)
        rows.append((C, g.n + g.m, float(np.mean(times[True])), float(np.mean(times[False]))))
    return rows


def cmd_bench(args) -> int:
    try:
        scales = [int(x) for x in args.scales.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"--scales must be comma-separated integers, got {args.scales!r}") from None
    if not scales:
        raise CliError("--scales is empty")
    print("C\tn_plus_m\twall_ms_sleep\twall_ms_nosleep")
    for row in bench_rows(scales, args.s, args.d, args.zout, args.seed, args.repeats, args.p, args.max_iters):
        C, size, on, off = row
        print(f"{C}\t{size}\t{on:.3f}\t{off:.3f}", flush=True)
    return 0


def cmd_sweep(args) -> int:
    step = args.step if args.step is not None else (0.01 if args.param == "p" else 1.0)
    values = param_values(args.start, args.stop, step)
    g, _ = read_edge_list(args.input)
    rows = []
    if args.param == "p":
        for v in values:
            cfg = EngineConfig(p=v, max_iters=args.max_iters, seed=args.seed)
            qs = [r.q for r in run_many(g, cfg, args.runs)]
            rows.append((v, float(np.mean(qs)), float(np.std(qs))))
    else:
        iters = [int(round(v)) for v in values]
        if iters[0] < 1:
            raise CliError("iteration counts must be >= 1")
        # a run capped at t sweeps replays the first t sweeps of a longer run exactly
        cfg = EngineConfig(p=args.p, max_iters=max(iters), seed=args.seed)
        traces = [r.trace for r in run_many(g, cfg, args.runs)]
        for t in iters:
            qs = [tr[min(t, len(tr)) - 1].q for tr in traces]
            rows.append((t, float(np.mean(qs)), float(np.std(qs))))
    print(f"{args.param}\tmean_q\tstd_q")
    for v, mean, std in rows:
        label = f"{v:g}" if args.param == "p" else str(v)
        print(f"{label}\t{mean:.12g}\t{std:.12g}")
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "cluster": cmd_cluster,
    "eval": cmd_eval,
    "bench": cmd_bench,
    "sweep": cmd_sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (CliError, GeneratorError, FormatError, ValueError, OSError) as exc:
        print(f"fnca {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
