import argparse
import os
import sys

import networkx as nx

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.formats import encode_graph6
from core.graph import Graph
from core.logger import logger

ATLAS_MAX = 7  # networkx 图谱收录 7 个顶点以内的全部图


def all_graphs(n):
    """n 个顶点的全部无标号图（每个同构类一个），来自 networkx 图谱"""
    if not 1 <= n <= ATLAS_MAX:
        raise ValueError(f"graph atlas covers 1..{ATLAS_MAX} vertices, not {n}")
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() == n:
            yield Graph.from_edges(n, G.edges())


def connected_graphs(n):
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() == n and nx.is_connected(G):
            yield Graph.from_edges(n, G.edges())


def write_stream(n, output_path, bipartite_only=False):
    count = 0
    with open(output_path, 'w', encoding='utf-8') as f:
        for g in connected_graphs(n):
            G = nx.Graph(g.edges())
            if bipartite_only and not nx.is_bipartite(G):
                continue
            f.write(encode_graph6(g) + "\n")
            count += 1
    logger.info(f"[Atlas] Wrote {count} connected graphs on {n} vertices to {output_path}")
    return count


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="graph6 stream of all connected graphs on n <= 7 vertices")
    parser.add_argument("n", type=int)
    parser.add_argument("output")
    parser.add_argument("--bipartite", action="store_true")
    args = parser.parse_args()
    write_stream(args.n, args.output, args.bipartite)
