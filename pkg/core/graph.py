"""简单无向图：GF(2) 上的对称位矩阵，每行一个 int 位集（第 j 位 = 与 j 相邻）

图是不可变值，所有操作返回新图。顶点内部从 0 编号；CLI 与文档按 1 编号显示。
"""
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from core.errors import (GraphError, InvalidColoringError, NotAnEdgeError,
                         NotBipartiteError, VertexRangeError)
from core.models import ElcMethod, Side

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _swap_bits(row: int, u: int, v: int) -> int:
    if ((row >> u) ^ (row >> v)) & 1:
        row ^= (1 << u) | (1 << v)
    return row


class Edge(NamedTuple):
    u: int
    v: int


class Graph:
    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {i + 1} has bits beyond vertex {n}")
            if (row >> i) & 1:
                raise GraphError(f"self-loop at vertex {i + 1}")
            for j in iter_bits(row):
                if not (rows[j] >> i) & 1:
                    raise GraphError(f"adjacency not symmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, rows) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        object.__setattr__(g, "_hash", None)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u + 1},{v + 1}) outside 1..{n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u + 1}")
            if (rows[u] >> v) & 1:
                raise GraphError(f"multi-edge ({u + 1},{v + 1})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "Graph":
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self):
        edges = " ".join(f"{u + 1}-{v + 1}" for u, v in self.edges())
        return f"Graph(n={self.n}, edges=[{edges}])"

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v + 1} outside 1..{self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> List[Edge]:
        return [Edge(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def relabel(self, labeling: Sequence[int]) -> "Graph":
        """labeling[v] = v 的新编号"""
        if sorted(labeling) != list(range(self.n)):
            raise GraphError("labeling is not a permutation of the vertices")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for x in iter_bits(row):
                new |= 1 << labeling[x]
            rows[labeling[v]] = new
        return Graph._trusted(self.n, rows)

    def swap_labels(self, u: int, v: int) -> "Graph":
        rows = [_swap_bits(r, u, v) for r in self.adj]
        rows[u], rows[v] = rows[v], rows[u]
        return Graph._trusted(self.n, rows)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            row = 0
            for x in iter_bits(self.adj[v]):
                if x in index:
                    row |= 1 << index[x]
            rows.append(row)
        return Graph._trusted(len(order), rows)


class Coloring:
    """二着色：right 位集中的顶点为 Right，其余为 Left"""
    __slots__ = ("n", "right")

    def __init__(self, n: int, right: int = 0):
        if right >> n:
            raise InvalidColoringError(f"coloring mask exceeds {n} vertices")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "right", right)

    @classmethod
    def from_sides(cls, sides: Sequence[Side]) -> "Coloring":
        right = 0
        for v, s in enumerate(sides):
            if Side(s) is Side.RIGHT:
                right |= 1 << v
        return cls(len(sides), right)

    @classmethod
    def all_left(cls, n: int) -> "Coloring":
        return cls(n, 0)

    def __setattr__(self, name, value):
        raise AttributeError("Coloring is immutable")

    def __reduce__(self):
        return (Coloring, (self.n, self.right))

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.n == other.n and self.right == other.right

    def __hash__(self):
        return hash((self.n, self.right))

    def __len__(self):
        return self.n

    def __iter__(self):
        return (self.side(v) for v in range(self.n))

    def __repr__(self):
        return "Coloring(" + "".join("R" if (self.right >> v) & 1 else "L" for v in range(self.n)) + ")"

    def side(self, v: int) -> Side:
        return Side.RIGHT if (self.right >> v) & 1 else Side.LEFT

    def mask(self, side: Side) -> int:
        return self.right if side is Side.RIGHT else ((1 << self.n) - 1) & ~self.right

    def vertices(self, side: Side) -> List[int]:
        return list(iter_bits(self.mask(side)))

    def count(self, side: Side) -> int:
        return self.mask(side).bit_count()

    def sizes(self) -> Tuple[int, int]:
        return self.count(Side.LEFT), self.count(Side.RIGHT)

    def swapped(self) -> "Coloring":
        return Coloring(self.n, self.mask(Side.LEFT))

    def swap(self, u: int, v: int) -> "Coloring":
        return Coloring(self.n, _swap_bits(self.right, u, v))

    def relabel(self, labeling: Sequence[int]) -> "Coloring":
        right = 0
        for v in iter_bits(self.right):
            right |= 1 << labeling[v]
        return Coloring(self.n, right)

    def restrict(self, vertices: Iterable[int]) -> "Coloring":
        order = sorted(set(vertices))
        return Coloring.from_sides([self.side(v) for v in order])

    def is_proper_for(self, g: Graph) -> bool:
        if self.n != g.n:
            return False
        left = self.mask(Side.LEFT)
        return all(not (g.adj[v] & (self.right if (self.right >> v) & 1 else left)) for v in range(g.n))


def _check_edge(g: Graph, e) -> Tuple[int, int]:
    u, v = e
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v or not g.has_edge(u, v):
        raise NotAnEdgeError(u, v)
    return u, v


def local_complement(g: Graph, v: int) -> Graph:
    """G*v：把 v 的邻域诱导子图取补"""
    g.check_vertex(v)
    nb = g.adj[v]
    if nb & (nb - 1) == 0:
        return g
    rows = list(g.adj)
    for x in iter_bits(nb):
        rows[x] ^= nb & ~(1 << x)
    return Graph._trusted(g.n, rows)


def elc_via_lc(g: Graph, e) -> Graph:
    u, v = _check_edge(g, e)
    return local_complement(local_complement(local_complement(g, u), v), u)


def toggle_pivot(g: Graph, e) -> Graph:
    """翻转 A/B/C 三类之间的所有顶点对，不交换 u、v 的标签"""
    u, v = _check_edge(g, e)
    nu = g.adj[u] & ~(1 << v)
    nv = g.adj[v] & ~(1 << u)
    a, b, c = nu & ~nv, nv & ~nu, nu & nv
    rows = list(g.adj)
    for x in iter_bits(a):
        rows[x] ^= b | c
    for x in iter_bits(b):
        rows[x] ^= a | c
    for x in iter_bits(c):
        rows[x] ^= a | b
    return Graph._trusted(g.n, rows)


def elc_classes(g: Graph, e) -> Graph:
    u, v = e
    return toggle_pivot(g, e).swap_labels(u, v)


def pivot_bipartite(g: Graph, e, check: bool = True) -> Graph:
    """二部图上的快速 pivot：N_u\\{v} 与 N_v\\{u} 之间整体翻转，再交换 u、v"""
    u, v = _check_edge(g, e)
    if check and bipartition(g) is None:
        raise NotBipartiteError("pivot_bipartite requires a bipartite graph")
    nu = g.adj[u] & ~(1 << v)
    nv = g.adj[v] & ~(1 << u)
    if nu & nv:
        raise NotBipartiteError(f"vertices {u + 1},{v + 1} share a neighbour")
    rows = list(g.adj)
    for x in iter_bits(nu):
        rows[x] ^= nv
    for y in iter_bits(nv):
        rows[y] ^= nu
    rows = [_swap_bits(r, u, v) for r in rows]
    rows[u], rows[v] = rows[v], rows[u]
    return Graph._trusted(g.n, rows)


def elc(g: Graph, e, method: ElcMethod = ElcMethod.CLASSES) -> Graph:
    method = ElcMethod(method)
    if method is ElcMethod.LC_COMPOSE:
        return elc_via_lc(g, e)
    if method is ElcMethod.BIPARTITE:
        return pivot_bipartite(g, e)
    return elc_classes(g, e)


def _reach(g: Graph, start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= g.adj[x]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> List[List[int]]:
    rest = (1 << g.n) - 1
    out = []
    while rest:
        comp = _reach(g, (rest & -rest).bit_length() - 1)
        out.append(list(iter_bits(comp)))
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return _reach(g, 0) == (1 << g.n) - 1


def bipartition(g: Graph) -> Optional[Coloring]:
    """二部划分；各连通分量中编号最小的顶点着 Left。有奇圈时返回 None"""
    rest = (1 << g.n) - 1
    right = 0
    while rest:
        root = (rest & -rest).bit_length() - 1
        seen = layer = 1 << root
        odd = False
        while layer:
            if odd:
                right |= layer
            nxt = 0
            for x in iter_bits(layer):
                nxt |= g.adj[x]
            layer = nxt & ~seen
            seen |= layer
            odd = not odd
        rest &= ~seen
    coloring = Coloring(g.n, right)
    return coloring if coloring.is_proper_for(g) else None


def require_coloring(g: Graph, coloring: Coloring) -> None:
    if len(coloring) != g.n:
        raise InvalidColoringError(f"coloring has {len(coloring)} entries for {g.n} vertices")
    if not coloring.is_proper_for(g):
        raise InvalidColoringError("an edge joins two vertices of the same side")
