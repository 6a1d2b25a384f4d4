"""Bipartiteness, odd-cycle census, almost-bipartite classification and the
pendant decomposition around the unique odd cycle.

classify_parity is definitional (simple-cycle enumeration, early exit at the
second odd cycle).  fast_classify_parity uses the edge-removal
characterization -- a non-bipartite graph has exactly one odd cycle C iff
G - e is bipartite for every edge e of some odd cycle C -- and is
cross-checked against the census on exhaustive small graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .caps import Caps, DEFAULT_CAPS
from .errors import CapacityError, DomainError, InputError
from .graph import Graph, bits, mask_of, neighborhood_mask, set_of


class ParityClass(str, Enum):
    BIPARTITE = "bipartite"
    ALMOST_BIPARTITE = "almost_bipartite"
    MULTI_ODD = "multi_odd"


def canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate/reflect a vertex cycle so it starts at its minimum vertex and
    proceeds toward the smaller of the two neighbors."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    fwd = [cycle[(i + j) % k] for j in range(k)]
    bwd = [cycle[(i - j) % k] for j in range(k)]
    return tuple(fwd) if fwd[1] <= bwd[1] else tuple(bwd)


def is_bipartite(
    g: Graph,
) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | tuple[int, ...]]:
    """BFS 2-coloring.  Returns (True, (side0, side1)) or (False, odd_cycle)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in g.neighbors[v]:
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    parent[u] = v
                    q.append(u)
                elif color[u] == color[v]:
                    return False, _odd_cycle_from_conflict(parent, v, u)
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return True, (side0, side1)


def _odd_cycle_from_conflict(parent, v, u) -> tuple[int, ...]:
    """Simple odd cycle through the conflict edge uv of a BFS tree."""
    pv = {v}
    x = v
    while parent[x] != -1:
        x = parent[x]
        pv.add(x)
    x = u
    while x not in pv:
        x = parent[x]
    meet = x
    left = [v]
    while left[-1] != meet:
        left.append(parent[left[-1]])
    right = [u]
    while right[-1] != meet:
        right.append(parent[right[-1]])
    cycle = left + right[-2::-1]  # v .. meet .. u, then close by edge uv
    return canonical_cycle(cycle)


def odd_cycle_census(
    g: Graph, limit: int = 2, caps: Caps = DEFAULT_CAPS
) -> tuple[int, list[tuple[int, ...]]]:
    """Count odd simple cycles, saturating at `limit`, with witnesses.

    DFS path enumeration: every cycle is generated once, rooted at its
    smallest vertex with direction fixed by its second-smallest endpoint.
    """
    if limit < 2:
        raise InputError("census limit must be >= 2")
    budget = caps.cycle_work
    adj = g.adj_mask
    count = 0
    witnesses: list[tuple[int, ...]] = []
    path: list[int] = []

    def dfs(start: int, v: int, visited: int) -> bool:
        """Return True when the census saturated."""
        nonlocal count, budget
        budget -= 1
        if budget < 0:
            raise CapacityError("cycle_work", caps.cycle_work)
        for u in bits(adj[v] & ~((1 << start) - 1)):
            if u == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    if len(path) % 2 == 1:
                        count += 1
                        if len(witnesses) < limit:
                            witnesses.append(canonical_cycle(path))
                        if count >= limit:
                            return True
                continue
            if visited >> u & 1:
                continue
            path.append(u)
            if dfs(start, u, visited | (1 << u)):
                return True
            path.pop()
        return False

    for s in range(g.n):
        path = [s]
        if dfs(s, s, 1 << s):
            break
    return count, witnesses


@dataclass(frozen=True)
class ParityReport:
    parity: ParityClass
    odd_cycle: Optional[tuple[int, ...]]  # present iff almost bipartite


def classify_parity(g: Graph, caps: Caps = DEFAULT_CAPS) -> ParityReport:
    count, witnesses = odd_cycle_census(g, limit=2, caps=caps)
    if count == 0:
        return ParityReport(ParityClass.BIPARTITE, None)
    if count == 1:
        return ParityReport(ParityClass.ALMOST_BIPARTITE, witnesses[0])
    return ParityReport(ParityClass.MULTI_ODD, None)


def fast_classify_parity(g: Graph) -> ParityReport:
    """Edge-removal characterization; equivalent to the census classification."""
    ok, info = is_bipartite(g)
    if ok:
        return ParityReport(ParityClass.BIPARTITE, None)
    cycle = info
    k = len(cycle)
    for i in range(k):
        e = (cycle[i], cycle[(i + 1) % k])
        h = Graph(g.n, g.edges - {(min(e), max(e))})
        if not is_bipartite(h)[0]:
            return ParityReport(ParityClass.MULTI_ODD, None)
    return ParityReport(ParityClass.ALMOST_BIPARTITE, tuple(cycle))


@dataclass(frozen=True)
class PendantDecomposition:
    """Components of G - E(C), keyed by their cycle vertex."""

    components: dict[int, tuple[frozenset[int], frozenset[tuple[int, int]]]]
    n1: frozenset[int]  # vertices off C with a neighbor on C


def _check_cycle(g: Graph, cycle: tuple[int, ...]) -> None:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise InputError("not a simple cycle")
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if (min(u, v), max(u, v)) not in g.edges:
            raise InputError(f"cycle edge ({u},{v}) not in graph")


def pendant_decomposition(g: Graph, cycle: tuple[int, ...]) -> PendantDecomposition:
    _check_cycle(g, cycle)
    k = len(cycle)
    cycle_edges = {
        (min(cycle[i], cycle[(i + 1) % k]), max(cycle[i], cycle[(i + 1) % k]))
        for i in range(k)
    }
    stripped = Graph(g.n, g.edges - cycle_edges)
    comps: dict[int, tuple[frozenset[int], frozenset[tuple[int, int]]]] = {}
    for y in cycle:
        seen = 1 << y
        frontier = seen
        while frontier:
            nxt = neighborhood_mask(stripped, frontier) & ~seen
            seen |= nxt
            frontier = nxt
        verts = set_of(seen)
        comp_edges = frozenset(e for e in stripped.edges if e[0] in verts)
        comps[y] = (verts, comp_edges)
    cmask = mask_of(cycle)
    n1 = set_of(neighborhood_mask(g, cmask) & ~cmask)
    return PendantDecomposition(components=comps, n1=n1)


@dataclass(frozen=True)
class PartitionVerdict:
    applicable: bool
    disjoint: bool
    covering: bool
    cycle_block: frozenset[int]
    diadem_block: frozenset[int]

    @property
    def ok(self) -> bool:
        return self.applicable and self.disjoint and self.covering


def partition_check(g: Graph, cycle, landscape) -> PartitionVerdict:
    """Check {V(C), N[diadem]} partitions V for almost bipartite non-KE G."""
    from .graph import closed_neighborhood

    if cycle is None:
        return PartitionVerdict(False, False, False, frozenset(), frozenset())
    vc = frozenset(cycle)
    nd = closed_neighborhood(g, landscape.diadem)
    return PartitionVerdict(
        applicable=True,
        disjoint=not (vc & nd),
        covering=(vc | nd) == frozenset(range(g.n)),
        cycle_block=vc,
        diadem_block=nd,
    )
