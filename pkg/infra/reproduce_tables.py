import argparse
import os
import sys
import time

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.census import (build_table, classify_bipartite, classify_stream,
                         compare_with_reference, count_codes)
from core.formats import format_census_tsv, format_repset, read_graph6_stream
from core.logger import logger
from core.models import OrbitMode
from core.rep_store import RepStore


def reproduce_bipartite(n_max, out_dir, workers=None, db_path=None):
    """二部图 ELC 轨道 + 码计数，写出 RepSet 与 TSV，返回与参考表不一致的条目"""
    started = time.time()
    store = RepStore(db_path) if db_path else None
    repsets = classify_bipartite(n_max, workers, override=True, store=store)
    codes = {rs.n: count_codes(rs, workers) for rs in repsets}
    table = build_table("bipartite", {rs.n: rs.count for rs in repsets}, codes)
    _write(out_dir, "bipartite", repsets, table)
    logger.info(f"[Reproduce] bipartite 1..{n_max} done in {time.time() - started:.1f}s")
    return compare_with_reference(table)


def reproduce_streams(paths, mode, out_dir, workers=None):
    started = time.time()
    repsets = []
    for path in paths:
        with open(path, 'r', encoding='utf-8') as f:
            repsets.append(classify_stream(read_graph6_stream(f), mode, workers=workers, override=True))
    table = build_table(mode.value, {rs.n: rs.count for rs in repsets})
    _write(out_dir, mode.value, repsets, table)
    logger.info(f"[Reproduce] {mode.value} streams done in {time.time() - started:.1f}s")
    return compare_with_reference(table)


def _write(out_dir, kind, repsets, table):
    os.makedirs(out_dir, exist_ok=True)
    for rs in repsets:
        with open(os.path.join(out_dir, f"{kind}-{rs.n}.txt"), 'w', encoding='utf-8') as f:
            f.write(format_repset(rs))
    with open(os.path.join(out_dir, f"{kind}.tsv"), 'w', encoding='utf-8') as f:
        f.write(format_census_tsv(table))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="reproduce the LC / ELC / code count tables")
    parser.add_argument("--bipartite", type=int, default=0, help="bipartite census up to this n")
    parser.add_argument("--elc", nargs="*", default=[], help="connected-graph graph6 streams for ELC")
    parser.add_argument("--lc", nargs="*", default=[], help="connected-graph graph6 streams for LC")
    parser.add_argument("--out-dir", default="data/reproduction")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--db", default=None)
    args = parser.parse_args()

    mismatches = []
    if args.bipartite:
        mismatches += reproduce_bipartite(args.bipartite, args.out_dir, args.threads, args.db)
    if args.elc:
        mismatches += reproduce_streams(args.elc, OrbitMode.ELC, args.out_dir, args.threads)
    if args.lc:
        mismatches += reproduce_streams(args.lc, OrbitMode.LC, args.out_dir, args.threads)
    for line in mismatches:
        logger.error(f"[Reproduce] {line}")
    sys.exit(1 if mismatches else 0)
