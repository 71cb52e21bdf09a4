"""GF(2) 上的二元线性码：标准形、对偶、码 <-> 二部图，以及基于 ELC 轨道的等价、最小距离、信息集

约定：生成矩阵每行是一个 int 位集，第 j 位对应第 j 列（从 0 开始）。
"""
from itertools import combinations
from math import comb
from typing import Iterator, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.config import settings
from core.errors import (CodeError, DecomposableCodeError, DualCodeError, GraphBridgeError,
                         GuardExceededError, RankDeficientError)
from core.graph import Coloring, Graph, components, is_connected, iter_bits, require_coloring
from core.models import CodeSummary, Side
from core.orbit import elc_orbit_labeled, orbit_min_degree, orbit_signature


def rref(rows: Sequence[int], n: int) -> Tuple[List[int], List[int]]:
    """行最简形（去掉零行）与主元列"""
    work = list(rows)
    pivots = []
    r = 0
    for col in range(n):
        if r == len(work):
            break
        piv = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return work[:r], pivots


def rank(rows: Sequence[int], n: int) -> int:
    return len(rref(rows, n)[1])


def _move_columns(rows: Sequence[int], perm: Sequence[int]) -> List[int]:
    """标准坐标第 s 列 -> 原始坐标第 perm[s] 列"""
    out = []
    for row in rows:
        new = 0
        for s in iter_bits(row):
            new |= 1 << perm[s]
        out.append(new)
    return out


class GenMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    rows: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_width(self):
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i + 1} wider than {self.n} columns")
        return self

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "GenMatrix":
        lines = ["".join(ch for ch in line if ch in "01") for line in lines]
        lines = [line for line in lines if line]
        if not lines:
            raise CodeError("generator matrix has no rows")
        widths = sorted({len(line) for line in lines})
        if len(widths) != 1:
            raise CodeError(f"generator matrix rows differ in length: {widths}")
        return cls.from_array(np.array([[int(ch) for ch in line] for line in lines], dtype=np.uint8))

    @classmethod
    def from_array(cls, array) -> "GenMatrix":
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise CodeError("generator matrix must be two-dimensional")
        if arr.shape[1] == 0:
            raise CodeError("generator matrix has no columns")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise CodeError("generator matrix entries must be 0 or 1")
        rows = tuple(sum(1 << int(j) for j in np.flatnonzero(row)) for row in arr)
        return cls(n=arr.shape[1], rows=rows)

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.k, self.n), dtype=np.uint8)
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                arr[i, j] = 1
        return arr

    def to_strings(self) -> List[str]:
        return ["".join(str(b) for b in r) for r in self.to_array()]

    @property
    def rank(self) -> int:
        return rank(self.rows, self.n)

    def require_full_rank(self) -> None:
        r = self.rank
        if r != self.k:
            raise RankDeficientError(f"generator matrix has rank {r} < k = {self.k}")


class StandardForm(BaseModel):
    """(I|P) 与列置换：标准形第 s 列取自原矩阵第 perm[s] 列；p_rows 第 j 位对应标准形第 k+j 列"""
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    p_rows: Tuple[int, ...]
    perm: Tuple[int, ...]

    def generator(self) -> GenMatrix:
        return GenMatrix(n=self.n, rows=tuple((1 << i) | (p << self.k) for i, p in enumerate(self.p_rows)))

    def parity_check(self) -> GenMatrix:
        """H' = (P^T | I)，标准坐标"""
        rows = []
        for j in range(self.n - self.k):
            row = 1 << (self.k + j)
            for i, p in enumerate(self.p_rows):
                if (p >> j) & 1:
                    row |= 1 << i
            rows.append(row)
        return GenMatrix(n=self.n, rows=tuple(rows))

    def to_original(self, m: GenMatrix) -> GenMatrix:
        """把标准坐标下的矩阵 m 的列放回原始坐标"""
        return GenMatrix(n=self.n, rows=tuple(_move_columns(m.rows, self.perm)))

    @property
    def is_identity_perm(self) -> bool:
        return all(s == c for s, c in enumerate(self.perm))


def standard_form(m: GenMatrix) -> StandardForm:
    m.require_full_rank()
    reduced, pivots = rref(m.rows, m.n)
    pivot_set = set(pivots)
    others = [c for c in range(m.n) if c not in pivot_set]
    p_rows = []
    for row in reduced:
        p = 0
        for j, col in enumerate(others):
            if (row >> col) & 1:
                p |= 1 << j
        p_rows.append(p)
    return StandardForm(n=m.n, k=m.k, p_rows=tuple(p_rows), perm=tuple(pivots + others))


def row_space_equal(m1: GenMatrix, m2: GenMatrix) -> bool:
    return m1.n == m2.n and rref(m1.rows, m1.n)[0] == rref(m2.rows, m2.n)[0]


def code_to_graph(m: GenMatrix) -> Tuple[Graph, Coloring]:
    """(k, n-k) 二部图：顶点 0..k-1 为信息侧（Left），边 {i, k+j} 当且仅当 P_ij = 1"""
    if m.k == 0 or m.k == m.n:
        raise GraphBridgeError(f"[{m.n},{m.k}] code has an empty side; no graph bridge")
    sf = standard_form(m)
    edges = [(i, sf.k + j) for i, p in enumerate(sf.p_rows) for j in iter_bits(p)]
    return Graph.from_edges(m.n, edges), Coloring(m.n, ((1 << m.n) - 1) & ~((1 << m.k) - 1))


def graph_to_code(g: Graph, side: Side, coloring: Coloring) -> GenMatrix:
    require_coloring(g, coloring)
    info = coloring.vertices(Side(side))
    other = coloring.vertices(Side(side).other)
    k = len(info)
    rows = []
    for i, x in enumerate(info):
        row = 1 << i
        for j, y in enumerate(other):
            if g.has_edge(x, y):
                row |= 1 << (k + j)
        rows.append(row)
    return GenMatrix(n=g.n, rows=tuple(rows))


def dual(m: GenMatrix) -> GenMatrix:
    if m.k == m.n:
        raise DualCodeError(f"dual of the full [{m.n},{m.n}] code is the zero code")
    sf = standard_form(m)
    return sf.to_original(sf.parity_check())


def min_distance_bruteforce(m: GenMatrix) -> int:
    m.require_full_rank()
    if m.k == 0:
        raise CodeError("zero code has no nonzero codeword")
    if m.k > settings.mindist_guard:
        raise GuardExceededError(f"k = {m.k} exceeds brute-force guard {settings.mindist_guard}")
    best = m.n
    word = 0
    for i in range(1, 1 << m.k):
        # Gray 码：每步只加一行
        word ^= m.rows[(i & -i).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
    return best


def _connected_graph(m: GenMatrix) -> Tuple[Graph, Coloring]:
    g, c = code_to_graph(m)
    if not is_connected(g):
        raise DecomposableCodeError(
            f"code is a direct sum of {len(components(g))} codes; decompose it first")
    return g, c


def min_distance_via_orbit(m: GenMatrix) -> int:
    """d = δ + 1，δ 为轨道上信息侧顶点的最小度"""
    m.require_full_rank()
    g, c = _connected_graph(m)
    return orbit_min_degree(g, c, Side.LEFT) + 1


def iter_information_sets(m: GenMatrix) -> Iterator[Tuple[int, ...]]:
    m.require_full_rank()
    total = comb(m.n, m.k)
    if total > settings.infoset_guard:
        raise GuardExceededError(f"C({m.n},{m.k}) = {total} exceeds guard {settings.infoset_guard}")
    for cols in combinations(range(m.n), m.k):
        mask = 0
        for c in cols:
            mask |= 1 << c
        if rank([row & mask for row in m.rows], m.n) == m.k:
            yield cols


def information_sets_oracle(m: GenMatrix) -> int:
    return sum(1 for _ in iter_information_sets(m))


def information_sets_via_orbit(m: GenMatrix) -> int:
    m.require_full_rank()
    g, _ = _connected_graph(m)
    count, _ = elc_orbit_labeled(g)
    return 2 * count if is_self_dual(m) else count


def are_equivalent(m1: GenMatrix, m2: GenMatrix) -> bool:
    m1.require_full_rank()
    m2.require_full_rank()
    if (m1.n, m1.k) != (m2.n, m2.k):
        return False
    if m1.k in (0, m1.n):
        return True
    g1, c1 = code_to_graph(m1)
    g2, c2 = code_to_graph(m2)
    return orbit_signature(g1, c1) == orbit_signature(g2, c2)


def _half_rate(m: GenMatrix) -> bool:
    return m.n % 2 == 0 and m.k == m.n // 2


def is_self_dual(m: GenMatrix) -> bool:
    m.require_full_rank()
    return _half_rate(m) and row_space_equal(m, dual(m))


def is_isodual(m: GenMatrix) -> bool:
    m.require_full_rank()
    return _half_rate(m) and are_equivalent(m, dual(m))


def is_indecomposable(m: GenMatrix) -> bool:
    m.require_full_rank()
    if m.k in (0, m.n):
        return m.n == 1
    return is_connected(code_to_graph(m)[0])


def decompose(m: GenMatrix) -> List[GenMatrix]:
    """按二部图连通分量拆成直和项（标准坐标，仅保证等价）"""
    m.require_full_rank()
    if m.n == 1:
        return [m]
    if m.k == 0:
        return [GenMatrix(n=1) for _ in range(m.n)]
    if m.k == m.n:
        return [GenMatrix(n=1, rows=(1,)) for _ in range(m.n)]
    g, c = code_to_graph(m)
    return [graph_to_code(g.induced_subgraph(comp), Side.LEFT, c.restrict(comp)) for comp in components(g)]


def code_summary(m: GenMatrix) -> CodeSummary:
    m.require_full_rank()
    d = None
    if 0 < m.k <= settings.mindist_guard:
        d = min_distance_bruteforce(m)
    info = information_sets_oracle(m) if comb(m.n, m.k) <= settings.infoset_guard else None
    return CodeSummary(n=m.n, k=m.k, d=d,
                       indecomposable=is_indecomposable(m),
                       self_dual=is_self_dual(m),
                       isodual=is_isodual(m),
                       info_set_count=info)
