"""分类驱动：二部图扩展法、图流普查、Euler 变换与码计数

并行约定（map/reduce）：
  1. 候选图在各进程里求规范形，主进程按规范形去重并排序；
  2. 按轮展开：每轮取前 workers 个尚未覆盖的候选，各进程展开一个轨道，
     主进程把返回的轨道成员并入已覆盖集合，再筛掉已覆盖的候选；
  3. 主进程按轨道规范形合并、排序。结果与进程数无关。
"""
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.canon import CanonicalForm, canonical_form
from core.config import settings
from core.errors import (DisconnectedGraphError, EulerTransformError, FormatError, GraphError,
                         GuardExceededError, IncompleteRepSetError)
from core.formats import decode_graph6, encode_graph6
from core.graph import MAX_VERTICES, Coloring, Graph, bipartition, components, iter_bits, require_coloring
from core.linear_code import graph_to_code, is_isodual
from core.logger import logger
from core.models import CensusRow, CensusTable, CodeCounts, OrbitMode, RepEntry, RepSet, Side
from core.orbit import elc_orbit_unlabeled, lc_orbit_unlabeled, split_into_elc_orbits
from core.rep_store import RepStore

REFERENCE_PATH = Path(__file__).resolve().parent.parent / "data" / "reference_tables.json"
CHUNK = 256


def extend_bipartite(g: Graph, coloring: Coloring) -> List[Tuple[Graph, Coloring]]:
    """对一侧的每个非空子集，在另一侧加一个新顶点与之相连：共 2^a + 2^b - 2 个扩展"""
    if g.n >= MAX_VERTICES:
        raise GraphError(f"cannot extend a graph that already has {MAX_VERTICES} vertices")
    require_coloring(g, coloring)
    new = g.n
    out = []
    for side in (Side.LEFT, Side.RIGHT):
        verts = coloring.vertices(side)
        right = coloring.right | ((1 << new) if side is Side.LEFT else 0)
        for subset in range(1, 1 << len(verts)):
            mask = 0
            for i in iter_bits(subset):
                mask |= 1 << verts[i]
            rows = list(g.adj) + [mask]
            for x in iter_bits(mask):
                rows[x] |= 1 << new
            out.append((Graph._trusted(new + 1, rows), Coloring(new + 1, right)))
    return out


# ---- map 阶段的任务（顶层函数，便于进程间序列化） ----

def _canonize_chunk(graphs: List[Graph]) -> List[Tuple[CanonicalForm, Graph]]:
    out = []
    for g in graphs:
        form, labeling = canonical_form(g)
        out.append((form, g.relabel(labeling)))
    return out


def _expand_bipartite(h: Graph) -> Tuple[CanonicalForm, RepEntry, frozenset]:
    report = elc_orbit_unlabeled(h, bipartition(h))
    # 着色轨道投影到无着色同构类
    classes = {}
    for m, mc in zip(report.members, report.member_colorings):
        form, labeling = canonical_form(m)
        if form not in classes:
            classes[form] = (m, mc, labeling)
    key = min(classes)
    m, mc, labeling = classes[key]
    rep, rep_col = m.relabel(labeling), mc.relabel(labeling)
    x = rep_col.side(0)
    entry = RepEntry(graph6=encode_graph6(rep), orbit_size=len(classes),
                     a=rep_col.count(x), b=rep_col.count(x.other),
                     delta_left=report.min_degree(x), delta_right=report.min_degree(x.other))
    return key, entry, frozenset(classes)


def _expand_general(h: Graph, mode: OrbitMode, refine: bool) -> Tuple[CanonicalForm, RepEntry, frozenset]:
    report = elc_orbit_unlabeled(h) if mode is OrbitMode.ELC else lc_orbit_unlabeled(h)
    forms = frozenset(canonical_form(m)[0] for m in report.members)
    elc_orbits = len(split_into_elc_orbits(report.members)) if refine and mode is OrbitMode.LC else None
    entry = RepEntry(graph6=encode_graph6(report.representative), orbit_size=report.size_unlabeled,
                     elc_orbits=elc_orbits)
    return report.canonical, entry, forms


def _expand_one(job) -> Tuple[CanonicalForm, RepEntry, frozenset]:
    h, task = job
    if task[0] == "bipartite":
        return _expand_bipartite(h)
    return _expand_general(h, OrbitMode(task[0]), task[1])


def _isodual_entry(graph6: str) -> bool:
    g = decode_graph6(graph6)
    return is_isodual(graph_to_code(g, Side.LEFT, bipartition(g)))


@contextmanager
def _mapper(workers: int):
    if workers <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield pool.map


def _chunks(seq: Sequence, size: int) -> List[Sequence]:
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _collect_orbits(candidates: Sequence[Graph], task: tuple, workers: int) -> List[RepEntry]:
    workers = max(workers, 1)
    with _mapper(workers) as pmap:
        unique: Dict[CanonicalForm, Graph] = {}
        for chunk in pmap(_canonize_chunk, _chunks(candidates, CHUNK)):
            for form, g in chunk:
                unique.setdefault(form, g)
        pending = sorted(unique)
        covered = set()
        merged: Dict[CanonicalForm, RepEntry] = {}
        expansions = 0
        while pending:
            batch = pending[:workers]
            for key, entry, forms in pmap(_expand_one, [(unique[f], task) for f in batch]):
                covered |= forms
                merged.setdefault(key, entry)
                expansions += 1
            pending = [f for f in pending[workers:] if f not in covered]
    logger.debug(f"[Census] {len(candidates)} candidates, {len(unique)} unique, "
                 f"{expansions} expansions, {len(merged)} orbits")
    return [merged[k] for k in sorted(merged)]


def _workers(workers: Optional[int]) -> int:
    return settings.threads if workers is None else max(1, workers)


def classify_bipartite(n_max: int, workers: Optional[int] = None, override: bool = False,
                       store: Optional[RepStore] = None) -> List[RepSet]:
    """P_1 = {K1}；P_n 由 P_{n-1} 全部扩展去重后得到"""
    if n_max < 1:
        raise GuardExceededError("n_max must be at least 1")
    if n_max > settings.bipartite_guard and not override:
        raise GuardExceededError(
            f"bipartite census n={n_max} exceeds guard {settings.bipartite_guard}; pass override")
    workers = _workers(workers)
    levels = store.load_levels("bipartite", n_max) if store is not None else {}
    if 1 not in levels:
        _, entry, _ = _expand_bipartite(Graph.empty(1))
        levels[1] = RepSet(n=1, bipartite=True, entries=[entry])
        if store is not None:
            store.save("bipartite", levels[1])
    for n in range(2, n_max + 1):
        if n in levels:
            continue
        started = time.time()
        candidates = []
        for e in levels[n - 1].entries:
            g = decode_graph6(e.graph6)
            candidates.extend(h for h, _ in extend_bipartite(g, bipartition(g)))
        entries = _collect_orbits(candidates, ("bipartite",), workers)
        levels[n] = RepSet(n=n, bipartite=True, entries=entries)
        if store is not None:
            store.save("bipartite", levels[n])
        logger.info(f"[Census] bipartite n={n}: {len(candidates)} extensions -> {len(entries)} orbits "
                    f"({time.time() - started:.1f}s, {workers} workers)")
    return [levels[n] for n in range(1, n_max + 1)]


def classify_stream(graphs: Iterable[Graph], mode: OrbitMode = OrbitMode.ELC, refine: bool = False,
                    workers: Optional[int] = None, override: bool = False) -> RepSet:
    mode = OrbitMode(mode)
    graphs = list(graphs)
    if not graphs:
        raise FormatError("graph stream is empty")
    n = graphs[0].n
    if n > settings.general_guard and not override:
        raise GuardExceededError(f"stream census n={n} exceeds guard {settings.general_guard}; pass override")
    for idx, g in enumerate(graphs, 1):
        if g.n != n:
            raise FormatError(f"graph {idx} has {g.n} vertices, stream started with {n}")
        comps = components(g)
        if len(comps) > 1:
            raise DisconnectedGraphError(comps)
    started = time.time()
    entries = _collect_orbits(graphs, (mode.value, refine), _workers(workers))
    logger.info(f"[Census] {mode.value} stream n={n}: {len(graphs)} graphs -> {len(entries)} orbits "
                f"({time.time() - started:.1f}s)")
    return RepSet(n=n, mode=mode, entries=entries)


def euler_transform(i: Sequence[int]) -> List[int]:
    """c_n = Σ_{d|n} d·i_d；t_n = (c_n + Σ_{k<n} c_k·t_{n-k}) / n，整数精确运算"""
    size = len(i)
    c = [0] * (size + 1)
    for n in range(1, size + 1):
        c[n] = sum(d * i[d - 1] for d in range(1, n + 1) if n % d == 0)
    t = [0] * (size + 1)
    for n in range(1, size + 1):
        total = c[n] + sum(c[k] * t[n - k] for k in range(1, n))
        q, r = divmod(total, n)
        if r:
            raise EulerTransformError(f"t_{n} = {total}/{n} is not an integer; input counts are corrupted")
        t[n] = q
    return t[1:]


def count_codes(rs: RepSet, workers: Optional[int] = None) -> CodeCounts:
    """a≠b 的轨道对应 [n,a] 与 [n,b] 各一个码；a=b 的轨道对应 2 个码，自等价（isodual）时为 1 个"""
    if not rs.complete:
        raise IncompleteRepSetError(f"RepSet for n={rs.n} is incomplete")
    if not rs.bipartite or any(e.a is None or e.b is None for e in rs.entries):
        raise IncompleteRepSetError(f"RepSet for n={rs.n} carries no side sizes")
    by_dim = Counter()
    balanced = []
    for e in rs.entries:
        if e.b == 0 or e.a == 0:
            by_dim[max(e.a, e.b)] += 1  # K1：长度 1 的唯一不可分解码
        elif e.a != e.b:
            by_dim[e.a] += 1
            by_dim[e.b] += 1
        else:
            balanced.append(e.graph6)
    with _mapper(_workers(workers)) as pmap:
        flags = list(pmap(_isodual_entry, balanced))
    isodual = sum(flags)
    if balanced:
        by_dim[rs.n // 2] += 2 * len(balanced) - isodual
    return CodeCounts(n=rs.n, indecomposable=sum(by_dim.values()), isodual=isodual,
                      by_dimension=dict(sorted(by_dim.items())))


def build_table(kind: str, counts: Dict[int, int], codes: Optional[Dict[int, CodeCounts]] = None) -> CensusTable:
    """t 列只在 1..n 的 i 都已知时给出"""
    ns = sorted(counts)
    prefix = []
    for n in range(1, (max(ns) if ns else 0) + 1):
        if n not in counts:
            break
        prefix.append(counts[n])
    t = euler_transform(prefix)
    code_prefix = []
    if codes:
        for n in range(1, len(prefix) + 1):
            if n not in codes:
                break
            code_prefix.append(codes[n].indecomposable)
    t_codes = euler_transform(code_prefix)
    rows = []
    for n in ns:
        row = CensusRow(n=n, i=counts[n], t=t[n - 1] if n <= len(t) else None)
        if codes and n in codes:
            row.i_codes = codes[n].indecomposable
            row.i_isodual = codes[n].isodual
            row.t_codes = t_codes[n - 1] if n <= len(t_codes) else None
        rows.append(row)
    return CensusTable(kind=kind, rows=rows)


def load_reference(path: Path = REFERENCE_PATH) -> dict:
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def compare_with_reference(table: CensusTable, reference: Optional[dict] = None) -> List[str]:
    reference = load_reference() if reference is None else reference
    ref = reference.get(table.kind, {})
    mismatches = []
    for row in table.rows:
        for column in ("i", "t", "i_codes", "i_isodual"):
            ours = getattr(row, column)
            values = ref.get(column, [])
            if ours is None or row.n > len(values):
                continue
            if ours != values[row.n - 1]:
                mismatches.append(f"{table.kind} {column}_{row.n}: got {ours}, expected {values[row.n - 1]}")
    return mismatches
