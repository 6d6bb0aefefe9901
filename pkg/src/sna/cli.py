"""``sna <subcommand> [flags] <input>``

Exit codes: 0 success, 1 usage error, 2 input error, 3 computation error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import _parallel
from .brokerage import ROLES, brokerage_census, brokerage_summary
from .centrality import (
    VARIANTS,
    betweenness_centrality,
    centralization,
    closeness_centrality,
    degree_centrality,
)
from .cohesion import EmptyCoreError, component_count, core_decomposition, extract_core
from .communities import louvain
from .graph import DIRECTIONS, Graph, build_graph, network_stats
from .ingest import IngestError, build_id_map, format_edge_list, parse_edge_list
from .neighborhoods import diameter, influence_domain, influence_domains, k_neighbors
from .ranking import ConvergenceError, pagerank
from .report import (
    DEFAULT_PRECISION,
    KNOW_HOW,
    PERSONAL,
    contacts_report,
    degree_distribution,
    to_csv,
    to_json,
    write_atomic,
)

EXIT_USAGE, EXIT_INPUT, EXIT_COMPUTE = 1, 2, 3

SUBCOMMANDS = (
    "stats", "degree", "closeness", "betweenness", "centralization", "kcore", "neighbors",
    "domain", "diameter", "communities", "pagerank", "brokerage", "contacts", "export",
    "distribution",
)
DEFAULT_MODE = {"degree": "in", "closeness": "out", "kcore": "all", "neighbors": "out",
                "distribution": "out", "centralization": None}
WITH_FIGURE = ("distribution", "neighbors", "communities", "pagerank", "kcore")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=DIRECTIONS)
    common.add_argument("--variant", choices=VARIANTS, default="reachable-corrected")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--resolution", type=float, default=1.0)
    common.add_argument("--damping", type=float, default=0.85)
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--max-iter", type=int, default=200)
    common.add_argument("--top", type=int, default=None, metavar="K")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--exclude-closed", type=_bool, default=True, metavar="{true|false}")
    common.add_argument("--lenient", action="store_true")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, metavar="P")
    common.add_argument("input")

    parser = _Parser(prog="sna", description="Directed social network analysis toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    cmds = {name: sub.add_parser(name, parents=[common]) for name in SUBCOMMANDS}
    for name in WITH_FIGURE:
        cmds[name].add_argument("--figure", metavar="PATH",
                                help="also render a matplotlib figure (format from extension)")
    for name in ("neighbors", "domain"):
        cmds[name].add_argument("--node", type=int, required=(name == "neighbors"),
                                metavar="ID", help="external node id")
    cmds["neighbors"].add_argument("--nodes", action="store_true",
                                   help="list the nodes of every layer")
    cmds["centralization"].add_argument("--measure",
                                        choices=("degree", "closeness", "betweenness"))
    cmds["kcore"].add_argument("--k", metavar="K",
                               help="write the edge list of the K-core ('max' for the top core)")
    cmds["diameter"].add_argument("--interpretation", choices=("directed", "undirected"),
                                  default="directed")
    cmds["brokerage"].add_argument("--partition", metavar="PATH",
                                   help="CSV external_id,community (default: Louvain)")
    cmds["distribution"].add_argument("--linear", action="store_true",
                                      help="linear axes in the figure")
    return parser


def _fmt(args, default: str) -> str:
    return args.format or default


def _top(rows, args):
    return rows if args.top is None else rows[: max(args.top, 0)]


def _ext(graph: Graph, nodes):
    return graph.id_map.internal_to_external[np.asarray(nodes, dtype=np.int64)]


def _node(graph: Graph, external_id: int) -> int:
    try:
        return graph.internal(external_id)
    except KeyError:
        raise IngestError(f"node {external_id} does not occur in the input") from None


def _centrality_rows(graph, vec):
    order = vec.ranking(graph)
    ext = _ext(graph, order)
    return [(int(e), vec.raw[v], vec.normalized_scores[v]) for e, v in zip(ext, order)]


def cmd_stats(graph, edges, args):
    s = network_stats(graph)
    zin = int(np.count_nonzero(graph.in_degree() == 0))
    zout = int(np.count_nonzero(graph.out_degree() == 0))
    data = s.as_dict()
    data.update({
        "dropped_lines": len(edges.warnings),
        "zero_in_degree": zin,
        "zero_out_degree": zout,
        "zero_in_degree_pct": 100.0 * zin / graph.n,
        "zero_out_degree_pct": 100.0 * zout / graph.n,
        "weak_components": component_count(graph, "weak"),
        "strong_components": component_count(graph, "strong"),
    })
    if _fmt(args, "json") == "json":
        return to_json(data, args.precision)
    return to_csv(["statistic", "value"], data.items(), args.precision)


def _vector_output(graph, vec, args):
    rows = _top(_centrality_rows(graph, vec), args)
    if _fmt(args, "csv") == "json":
        return to_json({"measure": vec.measure, "direction": vec.direction,
                        "variant": vec.variant,
                        "scores": [{"external_id": e, "score_raw": r, "score_normalized": s}
                                   for e, r, s in rows]}, args.precision)
    return to_csv(["external_id", "score_raw", "score_normalized"], rows, args.precision)


def cmd_degree(graph, edges, args):
    return _vector_output(graph, degree_centrality(graph, args.mode), args)


def cmd_closeness(graph, edges, args):
    return _vector_output(graph, closeness_centrality(graph, args.mode, args.variant), args)


def cmd_betweenness(graph, edges, args):
    return _vector_output(graph, betweenness_centrality(graph), args)


def cmd_centralization(graph, edges, args):
    combos = [("degree", d) for d in ("in", "out", "all")]
    combos += [("closeness", d) for d in ("in", "out", "all")]
    combos += [("betweenness", "out")]
    if args.measure:
        combos = [c for c in combos if c[0] == args.measure]
    if args.mode:
        combos = [c for c in combos if c[1] == args.mode]
        if not combos:
            raise ValueError(f"centralization not defined for {args.measure}/{args.mode}")
    rows = []
    cache = {}
    for measure, direction in combos:
        if measure == "degree":
            vec = degree_centrality(graph, direction)
        elif measure == "closeness":
            vec = closeness_centrality(graph, direction, args.variant)
        else:
            vec = cache.setdefault("b", betweenness_centrality(graph))
        rows.append((measure, direction, centralization(vec, graph)))
    if _fmt(args, "csv") == "json":
        return to_json([{"measure": m, "direction": d, "centralization": c}
                        for m, d, c in rows], args.precision)
    return to_csv(["measure", "direction", "centralization"], rows, args.precision)


def cmd_kcore(graph, edges, args):
    from . import figures

    cores = core_decomposition(graph, args.mode)
    if args.figure:
        figures.coreness_figure(cores.coreness, args.figure)
    if args.k is not None:
        k = cores.max_k if args.k == "max" else int(args.k)
        sub = extract_core(graph, cores, k)
        return format_edge_list(sub.external_arcs(),
                                f"{k}-core ({args.mode}): {sub.n} nodes, {sub.m} arcs")
    if _fmt(args, "csv") == "json":
        members = cores.max_core_members
        return to_json({
            "mode": cores.mode,
            "max_k": cores.max_k,
            "max_core_size": len(members),
            "max_core_members": _ext(graph, members).tolist(),
            "max_core_weak_components": component_count(graph.subgraph(members), "weak"),
            "max_core_min_degree": int(graph.subgraph(members).degree(cores.mode).min()),
        }, args.precision)
    return to_csv(["external_id", "coreness"],
                  zip(graph.id_map.internal_to_external, cores.coreness), args.precision)


def cmd_neighbors(graph, edges, args):
    from . import figures

    part = k_neighbors(graph, _node(graph, args.node), args.mode)
    counts = part.counts()
    if args.figure:
        figures.layers_figure(counts, f"node {args.node}", args.figure)
    if _fmt(args, "csv") == "json":
        data = {
            "source": args.node,
            "direction": args.mode,
            "reachable_count": part.reachable_count,
            "reachable_fraction": part.reachable_fraction,
            "max_finite_distance": part.max_finite_distance,
            "layers": counts,
        }
        if args.nodes:
            data["nodes"] = {d: _ext(graph, v).tolist() for d, v in part.layers.items()}
        return to_json(data, args.precision)
    if args.nodes:
        rows = [(d, len(v), " ".join(map(str, _ext(graph, v)))) for d, v in part.layers.items()]
        lines = ["distance,count,nodes"] + [f"{d},{c},{s}" for d, c, s in rows]
        return "\n".join(lines) + "\n"
    return to_csv(["distance", "count"], counts.items(), args.precision)


def cmd_domain(graph, edges, args):
    if args.node is not None:
        size, mean = influence_domain(graph, _node(graph, args.node))
        data = {"external_id": args.node, "domain_size": size, "mean_distance": mean}
        if _fmt(args, "json") == "json":
            return to_json(data, args.precision)
        return to_csv(list(data), [tuple(data.values())], args.precision)
    size, mean = influence_domains(graph)
    order = np.lexsort((graph.id_map.internal_to_external, -size))
    rows = [(int(e), int(size[v]), mean[v]) for e, v in zip(_ext(graph, order), order)]
    rows = _top(rows, args)
    if _fmt(args, "csv") == "json":
        return to_json([{"external_id": e, "domain_size": s, "mean_distance": m}
                        for e, s, m in rows], args.precision)
    return to_csv(["external_id", "domain_size", "mean_distance"], rows, args.precision)


def cmd_diameter(graph, edges, args):
    res = diameter(graph, args.interpretation)
    path = _ext(graph, res.path).tolist()
    data = {
        "interpretation": res.interpretation,
        "length": res.length,
        "source": path[0],
        "target": path[-1],
        "path": path,
        "mean_geodesic": res.mean_geodesic,
        "finite_pairs": res.finite_pairs,
    }
    if _fmt(args, "json") == "csv":
        return to_csv(["interpretation", "length", "source", "target", "path"],
                      [(res.interpretation, res.length, path[0], path[-1],
                        " ".join(map(str, path)))], args.precision)
    return to_json(data, args.precision)


def cmd_communities(graph, edges, args):
    from . import figures

    part = louvain(graph, args.seed, args.resolution)
    if args.figure:
        figures.community_sizes_figure(part.sizes, args.figure)
    if _fmt(args, "csv") == "json":
        return to_json(part.summary(), args.precision)
    return to_csv(["external_id", "community"],
                  zip(graph.id_map.internal_to_external, part.labels), args.precision)


def cmd_pagerank(graph, edges, args):
    from . import figures

    res = pagerank(graph, args.damping, args.tol, args.max_iter)
    if args.figure:
        figures.rank_vs_degree_figure(res.scores, graph.in_degree(), args.figure)
    order = np.lexsort((graph.id_map.internal_to_external, -res.scores))
    rows = _top([(int(e), res.scores[v]) for e, v in zip(_ext(graph, order), order)], args)
    if _fmt(args, "csv") == "json":
        return to_json({"damping": res.damping, "iterations_used": res.iterations_used,
                        "residual": res.residual,
                        "scores": [{"external_id": e, "pagerank": s} for e, s in rows]},
                       args.precision)
    return to_csv(["external_id", "pagerank"], rows, args.precision)


def _read_partition(path: str, graph: Graph) -> np.ndarray:
    labels = np.full(graph.n, -1, dtype=np.int64)
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#") or line.startswith("external_id"):
                    continue
                try:
                    ext, label = (int(x) for x in line.split(","))
                except ValueError:
                    raise IngestError(f"{path}: malformed partition line {line!r}", lineno) from None
                labels[_node(graph, ext)] = label
    except FileNotFoundError:
        raise IngestError(f"file not found: {path}") from None
    if (labels < 0).any():
        missing = int(graph.external(int(np.flatnonzero(labels < 0)[0])))
        raise IngestError(f"{path}: no community for node {missing}")
    return labels


def cmd_brokerage(graph, edges, args):
    if args.partition:
        labels, source = _read_partition(args.partition, graph), "file"
    else:
        labels, source = louvain(graph, args.seed, args.resolution).labels, "louvain"
    census = brokerage_census(graph, labels, args.exclude_closed)
    summary = brokerage_summary(census, graph)
    if _fmt(args, "csv") == "json":
        return to_json({
            "partition": source,
            "seed": args.seed if source == "louvain" else None,
            "exclude_closed": census.exclude_closed,
            "persons_without_roles": summary.persons_without_roles,
            "persons_with_roles": summary.persons_with_roles,
            "argmax_node": None if summary.argmax_node is None
            else graph.external(summary.argmax_node),
            "argmax_total": summary.argmax_total,
            "role_totals": dict(zip(ROLES, census.counts.sum(axis=0).tolist())),
        }, args.precision)
    total = census.total
    order = np.lexsort((graph.id_map.internal_to_external, -total))
    rows = [(int(e), *census.counts[v].tolist(), int(total[v]))
            for e, v in zip(_ext(graph, order), order)]
    return to_csv(["external_id", *ROLES, "total"], _top(rows, args), args.precision)


def cmd_contacts(graph, edges, args):
    rep = contacts_report(graph, 10 if args.top is None else args.top, args.seed,
                          resolution=args.resolution, damping=args.damping,
                          tolerance=args.tol, exclude_closed=args.exclude_closed,
                          direction=args.mode or "out", variant=args.variant)
    records = rep.records(graph)
    if _fmt(args, "csv") == "json":
        return to_json({"top_k": rep.top_k, "seed": rep.seed, "nodes": records},
                       args.precision)
    cols = list(PERSONAL + KNOW_HOW)
    header = ["external_id", *cols, *(f"rank_{c}" for c in cols)]
    rows = []
    for r in records:
        vals = {**r["personal"], **r["know_how"]}
        rows.append((r["external_id"], *(vals[c] for c in cols), *(r["ranks"][c] for c in cols)))
    return to_csv(header, rows, args.precision)


def cmd_export(graph, edges, args):
    return format_edge_list(graph.external_arcs(),
                            f"Directed graph: {graph.n} nodes, {graph.m} arcs\nFromNodeId\tToNodeId")


def cmd_distribution(graph, edges, args):
    from . import figures

    rows = degree_distribution(graph, args.mode)
    if args.figure:
        figures.degree_distribution_figure(rows, args.mode, args.figure, log=not args.linear)
    if _fmt(args, "csv") == "json":
        return to_json({"mode": args.mode, "rows": [{"degree": d, "count": c} for d, c in rows]},
                       args.precision)
    return to_csv(["degree", "count"], rows, args.precision)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.mode is None:
        args.mode = DEFAULT_MODE.get(args.command, "out")
    if args.threads < 1 or args.precision < 1:
        parser.error("--threads and --precision must be positive")
    _parallel.set_default_threads(args.threads)
    try:
        edges = parse_edge_list(args.input, lenient=args.lenient)
        graph = build_graph(edges, build_id_map(edges))
        text = globals()[f"cmd_{args.command}"](graph, edges, args)
    except IngestError as exc:
        print(f"sna: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConvergenceError, EmptyCoreError, ValueError) as exc:
        print(f"sna: {args.command}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    try:
        if args.out:
            write_atomic(args.out, text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"sna: cannot write output: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
