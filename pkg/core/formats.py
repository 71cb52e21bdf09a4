"""文本格式：graph6、边表、DOT、生成矩阵、轨道转储、RepSet 文件、CensusTable TSV

文件里的顶点与列一律按 1 编号。
"""
import io
from typing import Iterable, Iterator, List, Optional, Sequence, TextIO

import networkx as nx
import pandas as pd

from core.errors import FormatError, GraphError
from core.graph import Coloring, Graph
from core.linear_code import GenMatrix, StandardForm
from core.models import CensusTable, OrbitMode, RepEntry, RepSet, Side

GRAPH6_MAX = 62
GRAPH6_HEADER = ">>graph6<<"


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise FormatError("empty graph6 string")
    try:
        G = nx.from_graph6_bytes(s.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as e:
        raise FormatError(f"bad graph6 string {s!r}: {e}") from e
    if G.number_of_nodes() > GRAPH6_MAX:
        raise FormatError(f"graph6 limited to {GRAPH6_MAX} vertices")
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX:
        raise FormatError(f"graph6 limited to {GRAPH6_MAX} vertices")
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.to_graph6_bytes(G, header=False).decode("ascii").strip()


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield decode_graph6(line)


def parse_edges(text: str) -> Graph:
    """每行 "u v"（1 起编号）；可选首行 "# n=<n>" 给出顶点数（用于孤立点）"""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                try:
                    n = int(body[2:])
                except ValueError:
                    raise FormatError(f"line {lineno}: bad vertex count {body!r}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]) - 1, int(parts[1]) - 1
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {line!r}")
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: vertices are numbered from 1")
        edges.append((u, v))
    if n is None:
        n = max((max(e) for e in edges), default=0) + 1
    try:
        return Graph.from_edges(n, edges)
    except GraphError as e:
        raise FormatError(str(e)) from e


def format_edges(g: Graph) -> str:
    lines = [f"# n={g.n}"] + [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def format_dot(g: Graph, coloring: Optional[Coloring] = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = ""
        if coloring is not None:
            attrs = ' [shape=box]' if coloring.side(v) is Side.RIGHT else ' [shape=circle]'
        lines.append(f"  {v + 1}{attrs};")
    for u, v in g.edges():
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> GenMatrix:
    """每行一行矩阵，字符 0/1，可有空白；# 开头为注释"""
    lines = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    bad = [line for line in lines if set(line) - set("01 \t\r")]
    if bad:
        raise FormatError(f"unexpected characters in matrix row {bad[0].strip()!r}")
    return GenMatrix.from_strings(lines)


def format_matrix(m: GenMatrix, sf: Optional[StandardForm] = None) -> str:
    """写出矩阵；给了标准形时写 (I|P) 并在注释里记录列置换"""
    out = []
    if sf is not None:
        out.append("# perm: " + " ".join(str(c + 1) for c in sf.perm))
        m = sf.generator()
    out.extend(m.to_strings())
    return "\n".join(out) + "\n"


def format_orbit_dump(mode: OrbitMode, representative: Graph, members: Sequence[Graph],
                      size: int, labeled: Optional[int] = None) -> str:
    header = f"# orbit={OrbitMode(mode).value.upper()} size={size}"
    if labeled is not None:
        header += f" labeled={labeled}"
    lines = [header, encode_graph6(representative)]
    lines.extend(encode_graph6(m) for m in members if m != representative)
    return "\n".join(lines) + "\n"


def format_labeled_dump(start: Graph, graphs: Iterable[Graph]) -> str:
    """带标号轨道：起点在首行，其余按邻接位排序"""
    rest = sorted((g for g in graphs if g != start), key=lambda g: g.adj)
    lines = [f"# orbit=ELC labeled={len(rest) + 1}", encode_graph6(start)]
    lines.extend(encode_graph6(g) for g in rest)
    return "\n".join(lines) + "\n"


def read_orbit_dump(text: str) -> List[Graph]:
    return list(read_graph6_stream(text.splitlines()))


def _cell(value) -> str:
    return "-" if value is None else str(value)


def _opt(value: str) -> Optional[int]:
    return None if value == "-" else int(value)


def write_repset(rs: RepSet, fh: TextIO) -> None:
    fh.write(f"# n={rs.n} orbits={rs.count}\n")
    for e in rs.entries:
        cols = [e.graph6, str(e.orbit_size), _cell(e.a), _cell(e.b), _cell(e.delta_left), _cell(e.delta_right)]
        if e.elc_orbits is not None:
            cols.append(str(e.elc_orbits))
        fh.write("\t".join(cols) + "\n")


def format_repset(rs: RepSet) -> str:
    buf = io.StringIO()
    write_repset(rs, buf)
    return buf.getvalue()


def read_repset(text: str, mode: OrbitMode = OrbitMode.ELC) -> RepSet:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# n="):
        raise FormatError("RepSet file must start with '# n=<n> orbits=<count>'")
    try:
        fields = dict(part.split("=", 1) for part in lines[0][1:].split())
        n, declared = int(fields["n"]), int(fields["orbits"])
    except (KeyError, ValueError) as e:
        raise FormatError(f"bad RepSet header {lines[0]!r}") from e
    entries = []
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split()
        if len(cols) not in (6, 7):
            raise FormatError(f"line {lineno}: expected 6 or 7 columns, got {len(cols)}")
        try:
            entries.append(RepEntry(graph6=cols[0], orbit_size=int(cols[1]),
                                    a=_opt(cols[2]), b=_opt(cols[3]),
                                    delta_left=_opt(cols[4]), delta_right=_opt(cols[5]),
                                    elc_orbits=int(cols[6]) if len(cols) == 7 else None))
        except ValueError as e:
            raise FormatError(f"line {lineno}: {e}") from e
    bipartite = bool(entries) and all(e.a is not None for e in entries)
    return RepSet(n=n, mode=mode, bipartite=bipartite, entries=entries, complete=len(entries) == declared)


def census_frame(table: CensusTable) -> pd.DataFrame:
    df = pd.DataFrame([r.model_dump() for r in table.rows])
    if df.empty:
        return pd.DataFrame(columns=["n", "i", "t"])
    return df.dropna(axis=1, how="all").astype("Int64")


def format_census_tsv(table: CensusTable) -> str:
    return census_frame(table).to_csv(sep="\t", index=False)
