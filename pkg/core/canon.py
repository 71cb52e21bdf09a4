"""规范标号与同构判定（可带二着色）

做法：初始划分按颜色分格，反复按“到各格的邻居数”细分到稳定；未离散时取第一个最小的非单点格，
依次个体化其中的顶点（编号小的先），递归搜索。所有叶子中重标号后邻接矩阵最小者即规范形。
找到的自同构用于剪枝（可关闭，结果不变）。
"""
import threading
from typing import List, NamedTuple, Optional, Sequence, Tuple

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from core.config import settings
from core.errors import InvalidColoringError
from core.graph import Coloring, Graph, iter_bits
from core.models import Side


class CanonicalForm(NamedTuple):
    """头部 (n, 是否着色, a, b) + 规范邻接矩阵上三角按 graph6 顺序打包的字节"""
    key: bytes

    @property
    def n(self) -> int:
        return self.key[0]

    @property
    def colored(self) -> bool:
        return bool(self.key[1])

    @property
    def sizes(self) -> Tuple[int, int]:
        return self.key[2], self.key[3]

    def hex(self) -> str:
        return self.key.hex()


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    while True:
        masks = [_mask(c) for c in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            split = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not split:
            return cells


class _Search:
    def __init__(self, g: Graph, prune: bool):
        self.adj = g.adj
        self.n = g.n
        self.prune = prune
        self.best_rows = None
        self.best_order = None
        self.generators: List[Tuple[int, ...]] = []

    def run(self, cells: List[List[int]], prefix: Tuple[int, ...]) -> None:
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf([c[0] for c in cells])
            return
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        cell = cells[target]
        explored: List[int] = []
        for w in cell:
            if self.prune and explored and self._equivalent(w, explored, prefix):
                continue
            rest = [x for x in cell if x != w]
            self.run(cells[:target] + [[w], rest] + cells[target + 1:], prefix + (w,))
            explored.append(w)

    def _leaf(self, order: List[int]) -> None:
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        rows = []
        for v in order:
            row = 0
            for x in iter_bits(self.adj[v]):
                row |= 1 << position[x]
            rows.append(row)
        rows = tuple(rows)
        if self.best_rows is None or rows < self.best_rows:
            self.best_rows, self.best_order = rows, order
        elif rows == self.best_rows and self.prune:
            gamma = [0] * self.n
            for a, b in zip(self.best_order, order):
                gamma[a] = b
            gamma = tuple(gamma)
            if any(gamma[v] != v for v in range(self.n)):
                self.generators.append(gamma)

    def _equivalent(self, w: int, explored: List[int], prefix: Tuple[int, ...]) -> bool:
        # 只用逐点固定前缀的自同构生成元
        gens = [gm for gm in self.generators if all(gm[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gm in gens:
            for v in range(self.n):
                a, b = find(v), find(gm[v])
                if a != b:
                    parent[a] = b
        root = find(w)
        return any(find(e) == root for e in explored)


def _encode(n: int, colored: bool, sizes: Tuple[int, int], rows: Sequence[int]) -> bytes:
    bits = 0
    length = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | ((rows[i] >> j) & 1)
            length += 1
    body = bits.to_bytes((length + 7) // 8, "big") if length else b""
    return bytes([n, int(colored), sizes[0], sizes[1]]) + body


@cached(LRUCache(maxsize=max(settings.canon_cache_size, 1)),
        key=lambda g, coloring, prune: hashkey(g, coloring, prune),
        lock=threading.RLock())
def _canonical(g: Graph, coloring: Optional[Coloring], prune: bool):
    if coloring is None:
        cells = [list(range(g.n))]
        sizes = (g.n, 0)
    else:
        cells = [c for c in (coloring.vertices(Side.LEFT), coloring.vertices(Side.RIGHT)) if c]
        sizes = coloring.sizes()
    search = _Search(g, prune)
    search.run(cells, ())
    labeling = [0] * g.n
    for i, v in enumerate(search.best_order):
        labeling[v] = i
    form = CanonicalForm(_encode(g.n, coloring is not None, sizes, search.best_rows))
    return form, tuple(labeling)


def canonical_form(g: Graph, coloring: Optional[Coloring] = None,
                   prune: Optional[bool] = None) -> Tuple[CanonicalForm, Tuple[int, ...]]:
    """返回 (规范形, labeling)，labeling[v] = v 在规范图中的编号；g.relabel(labeling) 即规范图"""
    if coloring is not None and len(coloring) != g.n:
        raise InvalidColoringError(f"coloring has {len(coloring)} entries for {g.n} vertices")
    if prune is None:
        prune = settings.automorphism_pruning
    return _canonical(g, coloring, bool(prune))


def canonical_graph(g: Graph, coloring: Optional[Coloring] = None) -> Tuple[Graph, Optional[Coloring]]:
    _, labeling = canonical_form(g, coloring)
    return g.relabel(labeling), (coloring.relabel(labeling) if coloring is not None else None)


def is_isomorphic(g: Graph, h: Graph, cg: Optional[Coloring] = None,
                  ch: Optional[Coloring] = None) -> bool:
    if g.n != h.n or (cg is None) != (ch is None):
        return False
    if g.edge_count != h.edge_count:
        return False
    return canonical_form(g, cg)[0] == canonical_form(h, ch)[0]
