"""Command-line interface.

Anywhere a graph is expected, either a file path (.mtx/.mm Matrix Market,
anything else edge list) or an inline generator spec like
``family=er n=100 p=0.3 seed=7`` is accepted.  Runs are deterministic given
the argument vector: the seed defaults to the constant 42 and is echoed in
the output header.

Exit codes: 0 success, 2 usage error, 3 input format error, 4 domain or
precondition error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bench import run_instance, run_robustness
from .errors import ContractViolationError, DomainError, FormatError
from .generate import parse_spec
from .graph import Graph, cbs
from .graphio import (
    LoadedGraph,
    load_graph_file,
    write_csv_stats,
    write_dot,
    write_edge_list,
    write_labeling,
)
from .merge import merge_paths
from .pathfind import find_paths
from .reference import ORACLE_MAX_N, brute_force_optimum

DEFAULT_SEED = 42

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_DOMAIN = 4


def _default_jobs() -> int:
    env = os.environ.get("CBSUM_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _resolve(inp: str, seed: int, weighted: bool = False):
    """Turn an input token into (LoadedGraph, instance name, spec or None)."""
    if inp.startswith("family="):
        spec = parse_spec(inp, default_seed=seed)
        graph = spec.build()
        ids = tuple(str(v) for v in range(graph.n))
        return LoadedGraph(graph=graph, ids=ids), spec.name(), spec
    loaded = load_graph_file(inp, weighted=weighted)
    name = os.path.splitext(os.path.basename(inp))[0]
    return loaded, name, None


def _warn_disconnected(graph: Graph) -> None:
    if not graph.is_connected():
        print("warning: input graph is disconnected", file=sys.stderr)


def _cmd_label(args) -> int:
    loaded, name, _ = _resolve(args.input, args.seed, args.weighted)
    graph = loaded.graph
    _warn_disconnected(graph)
    labeling = merge_paths(find_paths(graph), graph)
    value = cbs(graph, labeling)
    print(f"# seed={args.seed}")
    print(f"instance={name} n={graph.n} m={graph.m} cbs={value}")
    if args.output:
        write_labeling(args.output, labeling, loaded.ids)
    if args.dot:
        write_dot(args.dot, graph, labeling, loaded.ids)
    return EXIT_OK


def _cmd_bench(args) -> int:
    rows = []
    print(f"# seed={args.seed} reps={args.reps} jobs={args.jobs}")
    for inp in args.inputs:
        loaded, name, spec = _resolve(inp, args.seed, args.weighted)
        ref_kind = ref = None
        if spec is not None:
            known = spec.reference_value()
            if known is not None:
                ref_kind, ref = known
        stats = run_instance(
            loaded.graph,
            repetitions=args.reps,
            seed=args.seed,
            instance=name,
            ref=ref,
            ref_kind=ref_kind,
            jobs=args.jobs,
        )
        rows.append(stats)
        rd = "" if stats.rd is None else f" rd={stats.rd:.2f}"
        print(
            f"{name}: n={stats.n} m={stats.m} median={stats.median_cbs}"
            f" mad={stats.mad_cbs} min={stats.min_cbs}{rd}"
        )
    if args.csv:
        write_csv_stats(args.csv, rows)
    return EXIT_OK


def _cmd_robustness(args) -> int:
    k_values = [int(tok) for tok in args.k.split(",") if tok]
    print(f"# seed={args.seed} reps={args.reps} k={k_values} jobs={args.jobs}")
    lines = []
    for inp in args.inputs:
        loaded, name, _ = _resolve(inp, args.seed, args.weighted)
        stats = run_robustness(
            loaded.graph,
            k_values=k_values,
            repetitions=args.reps,
            seed=args.seed,
            instance=name,
            jobs=args.jobs,
        )
        cells = " ".join(
            f"k={k}:median={stats.medians[k]}:mad={stats.mads[k]}:rd={stats.rds[k]:.2f}"
            for k in stats.k_values
        )
        line = f"{name}: n={stats.n} m={stats.m} {cells} min={stats.overall_min}"
        print(line)
        lines.append(line)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_generate(args) -> int:
    spec = parse_spec(args.spec, default_seed=args.seed)
    graph = spec.build()
    print(f"# seed={args.seed}")
    print(f"instance={spec.name()} n={graph.n} m={graph.m}")
    if args.out:
        write_edge_list(args.out, graph)
    return EXIT_OK


def _cmd_reference(args) -> int:
    spec = parse_spec(args.spec, default_seed=args.seed)
    known = spec.reference_value()
    if known is None:
        raise DomainError(f"no closed-form reference for family '{spec.family}'")
    kind, value = known
    print(f"{kind} {value}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    loaded, name, _ = _resolve(args.input, args.seed)
    graph = loaded.graph
    if graph.n > ORACLE_MAX_N:
        raise DomainError(
            f"oracle enumerates at most {ORACLE_MAX_N} vertices, got {graph.n}"
        )
    value, witness = brute_force_optimum(graph)
    print(f"optimum {value}")
    for v, lbl in enumerate(witness.perm):
        print(f"{loaded.ids[v]} {lbl}")
    return EXIT_OK


def _cmd_convert(args) -> int:
    loaded, _, _ = _resolve(args.input, args.seed, args.weighted)
    out = args.output
    if out.lower().endswith(".dot"):
        write_dot(out, loaded.graph, None, loaded.ids)
    else:
        write_edge_list(out, loaded.graph, loaded.ids)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbsum",
        description="Cyclic-bandwidth-sum vertex labeling toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, multi_input=False):
        if multi_input:
            p.add_argument("inputs", nargs="+", help="graph files or family=... specs")
        else:
            p.add_argument("input", help="graph file or family=... spec")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--weighted", action="store_true",
                       help="read edge lists as weighted 'u v w' lines")

    p = sub.add_parser("label", help="run the heuristic once and report the objective")
    common(p)
    p.add_argument("--output", help="write 'id label' lines here")
    p.add_argument("--dot", help="write a DOT rendering here")
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("bench", help="randomized repetitions with summary statistics")
    common(p, multi_input=True)
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--csv", help="write per-instance rows to this CSV file")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("robustness", help="median of min-over-k repetitions per k")
    common(p, multi_input=True)
    p.add_argument("--k", default="10,20,50", help="comma-separated k values")
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--out", help="write the report lines here")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=_cmd_robustness)

    p = sub.add_parser("generate", help="materialize a generator spec as an edge list")
    p.add_argument("spec", help="family=... spec")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="edge-list output path")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("reference", help="closed-form optimum or bound for a family")
    p.add_argument("spec", help="family=... spec")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_reference)

    p = sub.add_parser("oracle", help="exact optimum by enumeration (n <= 9)")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("convert", help="convert between graph file formats")
    common(p)
    p.add_argument("output", help="output path (.dot for DOT, else edge list)")
    p.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (DomainError, ContractViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
