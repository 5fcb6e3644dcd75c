"""Command-line interface: ``python -m lcif2 <command> ...``.

Exit status is 0 on success, 1 for usage errors and 2 when the input
data cannot be used.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .bench import load_sweep_spec, run_sweep, run_table1, sweep_csv, sweep_summary
from .centrality import centrality_report
from .detect import DetectionConfig, detect
from .evaluate import confusion_matrix, nmi
from .graph import Graph, ParseError, load_partition, read_graph, write_edgelist, write_partition
from .modularity import OBJECTIVES, score
from .synth import (LfrError, LfrParams, gen_complete, gen_er, gen_lfr, gen_pq_network,
                    gen_ring_cliques, gen_two_cliques_bridge, gen_well_connected)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _json(obj) -> str:
    def fix(x):
        # JSON has no infinity; M can produce one
        if isinstance(x, float) and math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if isinstance(x, dict):
            return {k: fix(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [fix(v) for v in x]
        if isinstance(x, np.generic):
            return fix(x.item())
        return x
    return json.dumps(fix(obj), indent=2, sort_keys=True) + "\n"


def _graph(args) -> Graph:
    return read_graph(args.input, args.format)


def _partition_labels(text: str) -> list[str]:
    labels = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            labels.append(line.split()[0])
    return labels


# --------------------------------------------------------------------------


def cmd_detect(args) -> None:
    graph = _graph(args)
    config = DetectionConfig(objective=args.modularity, restarts=args.restarts,
                             seed=args.seed, lci_threshold=args.threshold,
                             tie_break=args.tie_break, zero_gain=args.zero_gain,
                             select_on=args.select_on)
    result = detect(graph, config)
    _emit(write_partition(result.partition, graph.labels), args.output)
    if args.report:
        report = result.to_dict(graph.labels)
        report["self_loops_dropped"] = graph.self_loops
        report["duplicate_edges_dropped"] = graph.duplicates
        Path(args.report).write_text(_json(report), encoding="utf-8")


def cmd_score(args) -> None:
    graph = _graph(args)
    partition = load_partition(Path(args.partition).read_bytes(), graph)
    names = OBJECTIVES if args.modularity == "all" else (args.modularity,)
    out = {}
    for name in names:
        kw = {"alpha": args.alpha} if name == "f" else {}
        s = score(graph, partition, name, **kw)
        out[name] = {"value": s.value, "per_community": s.per_community}
    _emit(_json(out), args.output)


def cmd_centrality(args) -> None:
    graph = _graph(args)
    if args.indicator == "gmd" and args.k is None:
        raise UsageError("--indicator gmd needs --k")
    rep = centrality_report(graph, args.indicator, threshold=args.threshold, k=args.k)
    central = set(rep.central_set)
    lines = []
    for v, lab in enumerate(graph.labels):
        if rep.scores is not None:
            s = rep.scores[v]
            val = "isolated" if np.isnan(s) else repr(float(s))
        else:
            val = str(int(graph.degree[v]))
        lines.append(f"{lab}\t{val}\t{int(v in central)}\n")
    _emit("".join(lines), args.output)


def cmd_eval(args) -> None:
    ref_text = Path(args.reference).read_text(encoding="utf-8")
    labels = _partition_labels(ref_text)
    if len(set(labels)) != len(labels):
        raise ParseError("reference partition lists a node twice")
    # a graph without edges just carries the node labels
    carrier = Graph.from_edges(len(labels), [], labels)
    reference = load_partition(ref_text, carrier)
    found = load_partition(Path(args.detected).read_bytes(), carrier)
    cm = confusion_matrix(reference, found)
    _emit(_json({"nmi": nmi(reference, found), "c_r": int(cm.counts.shape[0]),
                 "c_f": int(cm.counts.shape[1]), "confusion": cm.counts.tolist()}),
          args.output)


def cmd_gen(args) -> None:
    family = args.family
    truth = None
    if family == "ring-cliques":
        graph, truth = gen_ring_cliques(args.l, args.p)
    elif family == "pq":
        graph, truth = gen_pq_network(args.p, args.q)
    elif family == "bridge":
        graph = gen_two_cliques_bridge(args.a, args.b)
    elif family == "well-connected":
        graph = gen_well_connected()
    elif family == "er":
        graph = gen_er(args.n, args.p, args.seed)
    elif family == "complete":
        graph = gen_complete(args.n)
    else:
        params = LfrParams(n=args.n, avg_k=args.avg_k, max_k=args.max_k, gamma=args.gamma,
                           beta=args.beta, mu=args.mu, s_min=args.s_min, s_max=args.s_max)
        graph, truth = gen_lfr(params, args.seed)
    _emit(write_edgelist(graph), args.out)
    if args.truth:
        if truth is None:
            raise UsageError(f"family {family!r} has no planted partition")
        Path(args.truth).write_text(write_partition(truth, graph.labels), encoding="utf-8")


def cmd_bench_sweep(args) -> None:
    spec = load_sweep_spec(Path(args.config).read_text(encoding="utf-8"))
    rows = run_sweep(spec, timing=not args.no_timing)
    _emit(sweep_csv(rows), args.output)
    if args.summary:
        Path(args.summary).write_text(_json(sweep_summary(rows)), encoding="utf-8")


def cmd_bench_table1(args) -> None:
    config = DetectionConfig(restarts=args.restarts, seed=args.seed)
    report = run_table1(args.datasets_dir, config)
    _emit(_json(report), args.report)


# --------------------------------------------------------------------------


def _graph_args(p) -> None:
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", choices=["edgelist", "gml"],
                   help="graph format (default: from the file extension)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lcif2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("detect", help="find communities")
    _graph_args(p)
    p.add_argument("--modularity", choices=OBJECTIVES, default="f2")
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threshold", type=float, default=0.0, help="LCI cutoff for central nodes")
    p.add_argument("--tie-break", choices=["random", "deterministic"], default="random")
    p.add_argument("--zero-gain", choices=["reject", "accept"], default="reject")
    p.add_argument("--select-on", choices=["final", "expansion"], default="final")
    p.add_argument("--output", help="partition TSV (default: stdout)")
    p.add_argument("--report", help="JSON report path")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("score", help="score a partition")
    _graph_args(p)
    p.add_argument("--partition", required=True)
    p.add_argument("--modularity", choices=(*OBJECTIVES, "all"), default="all")
    p.add_argument("--alpha", type=float, default=1.0, help="exponent of F")
    p.add_argument("--output")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("centrality", help="node centrality and central nodes")
    _graph_args(p)
    p.add_argument("--indicator", choices=["lci", "gmd", "lmd"], default="lci")
    p.add_argument("--k", type=int)
    p.add_argument("--threshold", type=float, default=0.0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("eval", help="NMI between two partitions")
    p.add_argument("--detected", required=True)
    p.add_argument("--reference", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gen", help="generate a synthetic network")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)

    def family(name, **kw):
        q = fam.add_parser(name, **kw)
        q.add_argument("--out", help="edge list (default: stdout)")
        q.add_argument("--truth", help="planted partition TSV")
        q.set_defaults(func=cmd_gen)
        return q

    q = family("ring-cliques")
    q.add_argument("--l", type=int, default=10)
    q.add_argument("--p", type=int, default=3)
    q = family("pq")
    q.add_argument("--p", type=int, default=6)
    q.add_argument("--q", type=int, default=3)
    q = family("bridge")
    q.add_argument("--a", type=int, default=6)
    q.add_argument("--b", type=int, default=5)
    family("well-connected")
    q = family("er")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q.add_argument("--seed", type=int, default=0)
    q = family("complete")
    q.add_argument("--n", type=int, required=True)
    q = family("lfr")
    d = LfrParams()
    q.add_argument("--n", type=int, default=d.n)
    q.add_argument("--avg-k", type=float, default=d.avg_k)
    q.add_argument("--max-k", type=int, default=d.max_k)
    q.add_argument("--gamma", type=float, default=d.gamma)
    q.add_argument("--beta", type=float, default=d.beta)
    q.add_argument("--mu", type=float, default=d.mu)
    q.add_argument("--s-min", type=int, default=d.s_min)
    q.add_argument("--s-max", type=int, default=d.s_max)
    q.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bench", help="benchmarks")
    bsub = p.add_subparsers(dest="bench", required=True, parser_class=_Parser)
    q = bsub.add_parser("sweep", help="LFR sweep over the mixing parameter")
    q.add_argument("--config", required=True, help="key = value sweep description")
    q.add_argument("--output", help="CSV (default: stdout)")
    q.add_argument("--summary", help="JSON summary per grid point")
    q.add_argument("--no-timing", action="store_true",
                   help="leave the seconds column blank so reruns are byte-identical")
    q.set_defaults(func=cmd_bench_sweep)
    q = bsub.add_parser("table1", help="structure and accuracy on the bundled networks")
    q.add_argument("--datasets-dir", help="directory with the dataset files")
    q.add_argument("--restarts", type=int, default=10)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--report", help="JSON report (default: stdout)")
    q.set_defaults(func=cmd_bench_table1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"lcif2: error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, LfrError, FileNotFoundError, IsADirectoryError, KeyError,
            ValueError, UnicodeDecodeError) as exc:
        print(f"lcif2: data error: {exc}", file=sys.stderr)
        return 2
    return 0
