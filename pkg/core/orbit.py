"""LC / ELC 轨道枚举

无标号轨道：从 g 出发 BFS，对每个成员的每条边（ELC）或每个顶点（LC）做一步操作，
按（着色）规范形去重。队列里存的是规范重标号后的图，每个同构类只展开一次。
"""
from collections import deque
from typing import Callable, Iterable, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field

from core.canon import CanonicalForm, canonical_form
from core.config import settings
from core.errors import DisconnectedGraphError, NotBipartiteError, OrbitOverflowError
from core.graph import (Coloring, Graph, bipartition, components, elc_classes,
                        local_complement, pivot_bipartite, require_coloring)
from core.logger import logger
from core.models import Side

Member = Tuple[Graph, Optional[Coloring]]


class OrbitReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    representative: Graph
    coloring: Optional[Coloring] = None
    canonical: CanonicalForm
    size_unlabeled: int = Field(ge=1)
    size_labeled: Optional[int] = None
    min_degree_left: Optional[int] = None
    min_degree_right: Optional[int] = None
    members: List[Graph] = Field(default_factory=list, exclude=True)
    member_colorings: List[Optional[Coloring]] = Field(default_factory=list, exclude=True)

    def min_degree(self, side: Side) -> Optional[int]:
        return self.min_degree_left if Side(side) is Side.LEFT else self.min_degree_right


def _require_connected(g: Graph) -> None:
    comps = components(g)
    if len(comps) > 1:
        raise DisconnectedGraphError(comps)


def _elc_moves(bipartite: bool) -> Callable[[Graph, Optional[Coloring]], Iterable[Member]]:
    step = (lambda h, e: pivot_bipartite(h, e, check=False)) if bipartite else elc_classes

    def moves(h: Graph, c: Optional[Coloring]):
        for e in h.edges():
            yield step(h, e), (c.swap(e.u, e.v) if c is not None else None)
    return moves


def _lc_moves(h: Graph, c: Optional[Coloring]):
    for v in range(h.n):
        if h.degree(v) > 1:
            yield local_complement(h, v), None


def _explore(g: Graph, coloring: Optional[Coloring], moves, cap: Optional[int]) -> OrbitReport:
    cap = settings.orbit_cap if cap is None else cap
    form, labeling = canonical_form(g, coloring)
    start = (g.relabel(labeling), coloring.relabel(labeling) if coloring is not None else None)
    seen = {form: start}
    order = [form]
    queue = deque([start])
    while queue:
        h, c = queue.popleft()
        for h2, c2 in moves(h, c):
            f2, lab2 = canonical_form(h2, c2)
            if f2 in seen:
                continue
            member = (h2.relabel(lab2), c2.relabel(lab2) if c2 is not None else None)
            seen[f2] = member
            order.append(f2)
            if cap is not None and len(seen) > cap:
                raise OrbitOverflowError(cap)
            queue.append(member)

    best = min(order)
    rep, rep_col = seen[best]
    report = OrbitReport(
        representative=rep,
        coloring=rep_col,
        canonical=best,
        size_unlabeled=len(order),
        members=[seen[f][0] for f in order],
        member_colorings=[seen[f][1] for f in order],
    )
    if coloring is not None:
        mins = {Side.LEFT: None, Side.RIGHT: None}
        for h, c in zip(report.members, report.member_colorings):
            for v in range(h.n):
                s = c.side(v)
                d = h.degree(v)
                if mins[s] is None or d < mins[s]:
                    mins[s] = d
        report.min_degree_left, report.min_degree_right = mins[Side.LEFT], mins[Side.RIGHT]
    logger.debug(f"[Orbit] n={g.n} size={report.size_unlabeled} colored={coloring is not None}")
    return report


def elc_orbit_unlabeled(g: Graph, coloring: Optional[Coloring] = None,
                        cap: Optional[int] = None) -> OrbitReport:
    _require_connected(g)
    if coloring is not None:
        require_coloring(g, coloring)
    bipartite = coloring is not None or bipartition(g) is not None
    return _explore(g, coloring, _elc_moves(bipartite), cap)


def lc_orbit_unlabeled(g: Graph, cap: Optional[int] = None) -> OrbitReport:
    _require_connected(g)
    return _explore(g, None, _lc_moves, cap)


def elc_orbit_labeled(g: Graph, cap: Optional[int] = None) -> Tuple[int, Set[Graph]]:
    """带标号的 ELC 轨道（每步含 u、v 标签交换），按邻接位精确去重"""
    _require_connected(g)
    cap = settings.orbit_cap if cap is None else cap
    seen = {g}
    queue = deque([g])
    while queue:
        h = queue.popleft()
        for e in h.edges():
            h2 = elc_classes(h, e)
            if h2 in seen:
                continue
            seen.add(h2)
            if cap is not None and len(seen) > cap:
                raise OrbitOverflowError(cap)
            queue.append(h2)
    return len(seen), seen


def partition_lc_orbit(g: Graph, cap: Optional[int] = None) -> List[OrbitReport]:
    """把 LC 轨道划分成互不相交的 ELC 轨道"""
    lc = lc_orbit_unlabeled(g, cap)
    parts = split_into_elc_orbits(lc.members, cap)
    logger.debug(f"[Orbit] LC orbit of size {lc.size_unlabeled} splits into {len(parts)} ELC orbits")
    return parts


def split_into_elc_orbits(members: Iterable[Graph], cap: Optional[int] = None) -> List[OrbitReport]:
    covered: Set[CanonicalForm] = set()
    parts = []
    for h in members:
        if canonical_form(h)[0] in covered:
            continue
        part = elc_orbit_unlabeled(h, cap=cap)
        covered.update(canonical_form(m)[0] for m in part.members)
        parts.append(part)
    return parts


def orbit_canonical_rep(g: Graph, coloring: Optional[Coloring] = None,
                        cap: Optional[int] = None) -> CanonicalForm:
    return elc_orbit_unlabeled(g, coloring, cap).canonical


def orbit_signature(g: Graph, coloring: Optional[Coloring] = None,
                    cap: Optional[int] = None) -> Tuple[CanonicalForm, ...]:
    """各连通分量的轨道规范形排序后的元组；非连通图也适用"""
    sig = []
    for comp in components(g):
        sub = g.induced_subgraph(comp)
        sub_col = coloring.restrict(comp) if coloring is not None else None
        sig.append(orbit_canonical_rep(sub, sub_col, cap))
    return tuple(sorted(sig))


def orbit_min_degree(g: Graph, coloring: Optional[Coloring], side: Side,
                     cap: Optional[int] = None) -> Optional[int]:
    """轨道上 side 一侧顶点的最小度；coloring 为 None 时用 bipartition(g)（顶点 0 在 Left）"""
    own = bipartition(g)
    if own is None:
        raise NotBipartiteError("orbit_min_degree requires a bipartite graph")
    return elc_orbit_unlabeled(g, own if coloring is None else coloring, cap).min_degree(side)
