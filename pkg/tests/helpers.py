from itertools import combinations, permutations

import networkx as nx
import numpy as np

from core.graph import Graph, bipartition, is_connected
from core.linear_code import GenMatrix


def random_graph(rng, n, p=0.5):
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng, n, p=0.5):
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def random_connected_bipartite(rng, a, b, p=0.5):
    while True:
        edges = [(u, a + v) for u in range(a) for v in range(b) if rng.random() < p]
        g = Graph.from_edges(a + b, edges)
        if is_connected(g):
            return g, bipartition(g)


def random_permutation(rng, n):
    return [int(x) for x in rng.permutation(n)]


def all_labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def brute_isomorphic(g, h, cg=None, ch=None):
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    for perm in permutations(range(g.n)):
        if cg is not None and any(cg.side(v) != ch.side(perm[v]) for v in range(g.n)):
            continue
        if g.relabel(perm) == h:
            return True
    return False


def random_full_rank(rng, k, n):
    while True:
        m = GenMatrix.from_array(rng.integers(0, 2, size=(k, n)))
        if m.rank == k:
            return m


def scramble(rng, m):
    """随机列置换 + 随机可逆行变换，得到等价码的另一个生成矩阵"""
    perm = random_permutation(rng, m.n)
    arr = m.to_array()[:, perm].astype(np.int64)
    for _ in range(3 * m.k):
        i, j = rng.choice(m.k, size=2, replace=False) if m.k > 1 else (0, 0)
        if i != j:
            arr[i] ^= arr[j]
    return GenMatrix.from_array(arr[rng.permutation(m.k)])


def to_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G
