"""各子命令的实现与参数定义；入口见 core/cli.py

CLI 中的顶点与列按 1 编号；库内部按 0 编号。
"""
import argparse
import os
import sys
from typing import Optional

from core.config import settings
from core.errors import FormatError, NotBipartiteError
from core.formats import (encode_graph6, format_census_tsv, format_dot, format_edges,
                          format_labeled_dump, format_matrix, format_orbit_dump, format_repset,
                          parse_edges, parse_matrix, read_graph6_stream)
from core.graph import Coloring, Graph, bipartition, elc
from core.linear_code import (are_equivalent, code_summary, code_to_graph, dual, graph_to_code,
                              information_sets_oracle, information_sets_via_orbit, min_distance_bruteforce,
                              min_distance_via_orbit, standard_form)
from core.logger import logger
from core.models import ElcMethod, OrbitMode, Side
from core.orbit import elc_orbit_labeled, elc_orbit_unlabeled, lc_orbit_unlabeled
from core.rep_store import RepStore

GRAPH_FORMATS = ["graph6", "edges"]
OUTPUT_FORMATS = ["graph6", "edges", "dot", "matrix"]


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source, 'r', encoding='utf-8') as f:
            return f.read()
    return source  # 直接给出的 graph6 字符串


def _read_graph(source: str, fmt: str) -> Graph:
    text = _read_text(source)
    if fmt == "edges":
        return parse_edges(text)
    graphs = list(read_graph6_stream(text.splitlines()))
    if len(graphs) != 1:
        raise FormatError(f"expected exactly one graph in {source!r}, found {len(graphs)}")
    return graphs[0]


def _render(g: Graph, fmt: str, coloring: Optional[Coloring] = None) -> str:
    if fmt == "edges":
        return format_edges(g)
    if fmt == "dot":
        return format_dot(g, coloring if coloring is not None else bipartition(g))
    if fmt == "matrix":
        coloring = coloring if coloring is not None else bipartition(g)
        if coloring is None:
            raise NotBipartiteError("only bipartite graphs have a generator matrix")
        return format_matrix(graph_to_code(g, Side.LEFT, coloring))
    return encode_graph6(g) + "\n"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_pivot(args) -> int:
    g = _read_graph(args.graph, args.format)
    u, v = args.u - 1, args.v - 1
    h = elc(g, (u, v), ElcMethod(args.method))
    if args.no_swap:
        # ELC 后再交换 u、v，即只做翻转
        h = h.swap_labels(u, v)
    _emit(_render(h, args.to), args.output)
    return 0


def cmd_orbit(args) -> int:
    g = _read_graph(args.graph, args.format)
    if args.labeled:
        _, graphs = elc_orbit_labeled(g, args.cap)
        _emit(format_labeled_dump(g, graphs), args.output)
        return 0
    if args.stats:
        coloring = bipartition(g)
        if coloring is None:
            raise NotBipartiteError("--stats needs a bipartite graph")
        report = elc_orbit_unlabeled(g, coloring, args.cap)
        left = "-" if report.min_degree_left is None else report.min_degree_left
        right = "-" if report.min_degree_right is None else report.min_degree_right
        _emit(f"size={report.size_unlabeled} delta_left={left} delta_right={right}\n", args.output)
        return 0
    if args.lc:
        report = lc_orbit_unlabeled(g, args.cap)
        mode = OrbitMode.LC
    else:
        report = elc_orbit_unlabeled(g, bipartition(g) if args.colored else None, args.cap)
        mode = OrbitMode.ELC
    _emit(format_orbit_dump(mode, report.representative, report.members, report.size_unlabeled), args.output)
    return 0


def cmd_code(args) -> int:
    m = parse_matrix(_read_text(args.matrix))
    action = args.action
    if action == "mindist":
        d = min_distance_via_orbit(m) if args.via_orbit else min_distance_bruteforce(m)
        out = f"{d}\n"
    elif action == "infosets":
        count = information_sets_via_orbit(m) if args.via_orbit else information_sets_oracle(m)
        out = f"{count}\n"
    elif action == "equiv":
        if not args.other:
            raise FormatError("equiv needs a second matrix")
        other = parse_matrix(_read_text(args.other))
        out = ("equivalent" if are_equivalent(m, other) else "not equivalent") + "\n"
    elif action == "dual":
        out = format_matrix(dual(m))
    elif action == "standard":
        out = format_matrix(m, standard_form(m))
    elif action == "graph":
        g, coloring = code_to_graph(m)
        out = _render(g, args.to, coloring)
    else:
        out = code_summary(m).headline() + "\n"
    _emit(out, args.output)
    return 0


def cmd_census(args) -> int:
    # 延迟导入：普查模块带进程池
    from core.census import (build_table, classify_bipartite, classify_stream,
                             compare_with_reference, count_codes)
    threads = args.threads if args.threads is not None else settings.threads
    repsets = []
    if args.mode == "bipartite":
        if args.lc or args.refine:
            raise FormatError("--lc and --refine apply to census stream only")
        if len(args.target) != 1:
            raise FormatError("census bipartite takes exactly one n")
        try:
            n_max = int(args.target[0])
        except ValueError:
            raise FormatError(f"not a vertex count: {args.target[0]!r}")
        store = RepStore(args.db) if args.db else None
        repsets = classify_bipartite(n_max, threads, args.override, store)
        kind = "bipartite"
    else:
        if args.codes or args.db:
            raise FormatError("--codes and --db apply to census bipartite only")
        if args.refine and not args.lc:
            raise FormatError("--refine needs --lc")
        mode = OrbitMode.LC if args.lc else OrbitMode.ELC
        for path in args.target:
            with open(path, 'r', encoding='utf-8') as f:
                repsets.append(classify_stream(read_graph6_stream(f), mode, args.refine, threads, args.override))
        kind = mode.value
    counts = {rs.n: rs.count for rs in repsets}
    codes = {rs.n: count_codes(rs, threads) for rs in repsets} if args.codes else None
    table = build_table(kind, counts, codes)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for rs in repsets:
            with open(os.path.join(args.out_dir, f"{kind}-{rs.n}.txt"), 'w', encoding='utf-8') as f:
                f.write(format_repset(rs))
    for line in compare_with_reference(table):
        logger.warning(f"[CLI] reference mismatch: {line}")
    _emit(format_census_tsv(table), args.table)
    return 0


def cmd_convert(args) -> int:
    coloring = None
    if args.source_format == "matrix":
        g, coloring = code_to_graph(parse_matrix(_read_text(args.source)))
    else:
        g = _read_graph(args.source, args.source_format)
    _emit(_render(g, args.to, coloring), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elc", description="LC/ELC orbits of graphs and binary linear codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pivot", help="apply ELC (pivot) on an edge")
    p.add_argument("graph", help="graph file, '-' for stdin, or an inline graph6 string")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--def", dest="method", choices=[m.value for m in ElcMethod], default=ElcMethod.CLASSES.value)
    p.add_argument("--no-swap", action="store_true", help="undo the label swap (pure toggle)")
    p.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    p.add_argument("--to", choices=OUTPUT_FORMATS, default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_pivot)

    p = sub.add_parser("orbit", help="enumerate an orbit")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--labeled", action="store_true", help="labeled ELC orbit")
    group.add_argument("--lc", action="store_true", help="LC orbit instead of ELC")
    group.add_argument("--stats", action="store_true", help="orbit size and minimum degree per side")
    p.add_argument("--colored", action="store_true", help="keep the bipartition as vertex colors")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("code", help="binary linear code operations")
    p.add_argument("matrix", help="generator matrix file or '-'")
    p.add_argument("action", choices=["mindist", "infosets", "equiv", "dual", "graph", "summary", "standard"])
    p.add_argument("other", nargs="?", help="second matrix for equiv")
    p.add_argument("--via-orbit", action="store_true", help="use the ELC orbit instead of enumeration")
    p.add_argument("--to", choices=OUTPUT_FORMATS, default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("census", help="classify orbits")
    p.add_argument("mode", choices=["bipartite", "stream"])
    p.add_argument("target", nargs="+", help="n for bipartite, graph6 stream files for stream")
    p.add_argument("--lc", action="store_true", help="LC orbits (stream mode)")
    p.add_argument("--refine", action="store_true", help="count ELC orbits inside each LC orbit")
    p.add_argument("--codes", action="store_true", help="add code counts (bipartite mode)")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--override", action="store_true", help="lift the size guards")
    p.add_argument("--out-dir", help="write RepSet files here")
    p.add_argument("--db", help="SQLite store for resuming bipartite runs")
    p.add_argument("--table", help="write the TSV table here instead of stdout")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("convert", help="convert between graph6, edge list, DOT and matrix")
    p.add_argument("source")
    p.add_argument("--from", dest="source_format", choices=GRAPH_FORMATS + ["matrix"], default="graph6")
    p.add_argument("--to", choices=OUTPUT_FORMATS, default="edges")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)
    return parser
