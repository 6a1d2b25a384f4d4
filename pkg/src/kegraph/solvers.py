"""Exact independence and matching machinery.

alpha/Omega run a bitmask branch-and-bound (greedy clique-cover upper bound,
highest-degree branching).  mu runs repeated augmenting-path search with
blossom contraction, rebuilt from scratch per graph.  A subset-DP matching
oracle is kept alongside for cross-checking at small n.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

from .caps import Caps, DEFAULT_CAPS
from .errors import CapacityError, InputError
from .graph import Graph, bits, mask_of, set_of


class Matching:
    """A set of pairwise vertex-disjoint edges."""

    __slots__ = ("edges", "saturated")

    def __init__(self, edges: Iterable[tuple[int, int]]):
        norm = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        sat: set[int] = set()
        for u, v in norm:
            if u in sat or v in sat:
                raise InputError("matching edges share a vertex")
            sat.add(u)
            sat.add(v)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "saturated", frozenset(sat))

    def __setattr__(self, name, value):
        raise AttributeError("Matching is immutable")

    def __len__(self):
        return len(self.edges)

    def __eq__(self, other):
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def saturates(self, v: int) -> bool:
        return v in self.saturated

    def partner(self, v: int) -> Optional[int]:
        for u, w in self.edges:
            if u == v:
                return w
            if w == v:
                return u
        return None

    def __repr__(self):
        return f"Matching({sorted(self.edges)})"


# -- independence ------------------------------------------------------------


def _clique_cover_bound(adj: tuple[int, ...], mask: int) -> int:
    """Greedy clique cover of the vertices in mask; its size bounds alpha."""
    bound = 0
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique = 1 << v
        cand = adj[v] & rest
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= adj[u]
        rest &= ~clique
        bound += 1
    return bound


def alpha_of_mask(g: Graph, mask: int) -> int:
    """Exact independence number of G[mask]."""
    adj = g.adj_mask
    best = 0

    def solve(cur: int, mask: int) -> None:
        nonlocal best
        while True:
            if cur + mask.bit_count() <= best:
                return
            if not mask:
                if cur > best:
                    best = cur
                return
            # peel vertices of degree 0/1 inside mask: always safe to take
            simplified = False
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                if not (mask & low):
                    continue  # removed by an earlier peel in this pass
                dmask = adj[v] & mask
                dc = dmask.bit_count()
                if dc == 0:
                    cur += 1
                    mask &= ~low
                    simplified = True
                elif dc == 1:
                    cur += 1
                    mask &= ~(low | dmask)
                    simplified = True
            if simplified:
                continue
            if cur + _clique_cover_bound(adj, mask) <= best:
                return
            # branch on a max-degree vertex
            pick, pdeg = -1, -1
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                deg = (adj[v] & mask).bit_count()
                if deg > pdeg:
                    pick, pdeg = v, deg
            solve(cur + 1, mask & ~((1 << pick) | adj[pick]))
            mask &= ~(1 << pick)

    solve(0, mask)
    return best


def alpha_value(g: Graph, caps: Caps = DEFAULT_CAPS) -> int:
    if g.n > caps.solver_n:
        raise CapacityError("solver_n", caps.solver_n, g.n)
    return alpha_of_mask(g, g.full_mask)


def lex_min_mis_mask(g: Graph, target: int | None = None) -> int:
    """Lexicographically smallest maximum independent set (greedy by vertex id)."""
    if target is None:
        target = alpha_of_mask(g, g.full_mask)
    adj = g.adj_mask
    chosen = 0
    avail = g.full_mask
    size = 0
    for v in range(g.n):
        bit = 1 << v
        if not (avail & bit):
            continue
        rest = avail & ~(bit | adj[v])
        if size + 1 + alpha_of_mask(g, rest) == target:
            chosen |= bit
            size += 1
            avail = rest
        else:
            avail &= ~bit
    return chosen


def alpha(g: Graph, caps: Caps = DEFAULT_CAPS) -> tuple[int, frozenset[int]]:
    """Independence number with its lexicographically smallest witness."""
    a = alpha_value(g, caps)
    return a, set_of(lex_min_mis_mask(g, a))


def omega_family(g: Graph, caps: Caps = DEFAULT_CAPS) -> list[frozenset[int]]:
    """All maximum independent sets, sorted lexicographically."""
    if g.n > caps.enumeration_n:
        raise CapacityError("enumeration_n", caps.enumeration_n, g.n)
    a = alpha_value(g, caps.with_overrides(solver_n=max(caps.solver_n, g.n)))
    adj = g.adj_mask
    out: list[int] = []

    def walk(v: int, cur: int, size: int, avail: int) -> None:
        if size + avail.bit_count() < a:
            return
        if size == a:
            out.append(cur)
            return
        if v >= g.n:
            return
        bit = 1 << v
        if avail & bit:
            walk(v + 1, cur | bit, size + 1, avail & ~(bit | adj[v]))
        walk(v + 1, cur, size, avail & ~bit)

    walk(0, 0, 0, g.full_mask)
    sets = [set_of(m) for m in out]
    sets.sort(key=sorted)
    return sets


def core(g: Graph, caps: Caps = DEFAULT_CAPS) -> frozenset[int]:
    fam = omega_family(g, caps)
    out = set(fam[0]) if fam else set()
    for s in fam[1:]:
        out &= s
    return frozenset(out)


def corona(g: Graph, caps: Caps = DEFAULT_CAPS) -> frozenset[int]:
    out: set[int] = set()
    for s in omega_family(g, caps):
        out |= s
    return frozenset(out)


# -- maximum matching (blossom) ----------------------------------------------


def _blossom_augment(n, adjlist, match, root):
    """One phase: find an augmenting path from `root`, return True on success."""
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_blossom = [False] * n

    def lca(a, b):
        used = [False] * n
        x = a
        while True:
            x = base[x]
            used[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if used[y]:
                return y
            y = parent[match[y]]

    def mark_path(v, b, child):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    queue = deque([root])
    in_queue[root] = True
    while queue:
        v = queue.popleft()
        for u in adjlist[v]:
            if base[v] == base[u] or match[v] == u:
                continue
            if u == root or (match[u] != -1 and parent[match[u]] != -1):
                # odd cycle: contract blossom
                b = lca(v, u)
                for i in range(n):
                    in_blossom[i] = False
                mark_path(v, b, u)
                mark_path(u, b, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = b
                        if not in_queue[i]:
                            in_queue[i] = True
                            queue.append(i)
            elif parent[u] == -1:
                parent[u] = v
                if match[u] == -1:
                    # augment along the path ending at u
                    while u != -1:
                        v2 = parent[u]
                        nxt = match[v2]
                        match[v2] = u
                        match[u] = v2
                        u = nxt
                    return True
                else:
                    w = match[u]
                    if not in_queue[w]:
                        in_queue[w] = True
                        queue.append(w)
    return False


def mu(g: Graph) -> tuple[int, Matching]:
    """Maximum matching size and one maximum matching (blossom algorithm)."""
    n = g.n
    adjlist = g.neighbors
    match = [-1] * n
    # greedy warm start keeps the number of phases down
    for u, v in g.sorted_edges():
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u
    for v in range(n):
        if match[v] == -1:
            _blossom_augment(n, adjlist, match, v)
    edges = {(v, match[v]) for v in range(n) if match[v] > v}
    return len(edges), Matching(edges)


def mu_value(g: Graph) -> int:
    return mu(g)[0]


def brute_mu(g: Graph) -> int:
    """Subset-DP matching oracle; independent of the blossom code path."""
    if g.n > 20:
        raise CapacityError("brute_mu", 20, g.n)
    n = g.n
    adj = g.adj_mask
    size = 1 << n
    tab = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        best = tab[rest]
        cand = adj[v] & rest
        while cand:
            lu = cand & -cand
            u = lu.bit_length() - 1
            cand ^= lu
            t = 1 + tab[rest ^ lu]
            if t > best:
                best = t
        tab[s] = best
    return tab[size - 1]


def all_maximum_matchings(g: Graph, caps: Caps = DEFAULT_CAPS) -> list[Matching]:
    """Every matching of size mu(G), by backtracking over edge inclusion."""
    if g.n > caps.matchings_n:
        raise CapacityError("matchings_n", caps.matchings_n, g.n)
    target = mu_value(g)
    edge_list = g.sorted_edges()
    nedges = len(edge_list)
    out: list[frozenset] = []

    def walk(idx: int, used: int, chosen: list[tuple[int, int]]):
        if len(chosen) == target:
            out.append(frozenset(chosen))
            return
        if idx >= nedges:
            return
        # bound: even taking every remaining edge cannot reach target
        if len(chosen) + (nedges - idx) < target:
            return
        free = (~used) & g.full_mask
        if len(chosen) + (free.bit_count() // 2) < target:
            return
        u, v = edge_list[idx]
        if not (used >> u & 1) and not (used >> v & 1):
            chosen.append((u, v))
            walk(idx + 1, used | (1 << u) | (1 << v), chosen)
            chosen.pop()
        walk(idx + 1, used, chosen)

    walk(0, 0, [])
    return [Matching(e) for e in sorted(out, key=sorted)]


# -- critical elements ---------------------------------------------------------


def alpha_critical_vertices(g: Graph, caps: Caps = DEFAULT_CAPS) -> frozenset[int]:
    a = alpha_value(g, caps)
    adj = g.adj_mask
    full = g.full_mask
    out = set()
    for v in range(g.n):
        # alpha(G - v) computed on the vertex-deleted mask; ids unchanged
        if alpha_of_mask(g, full & ~(1 << v)) < a:
            out.add(v)
    return frozenset(out)


def alpha_critical_edges(g: Graph, caps: Caps = DEFAULT_CAPS) -> frozenset[tuple[int, int]]:
    a = alpha_value(g, caps)
    out = set()
    for e in g.edges:
        h = Graph(g.n, g.edges - {e})
        if alpha_of_mask(h, h.full_mask) > a:
            out.add(e)
    return frozenset(out)


def mu_critical_vertices(g: Graph) -> frozenset[int]:
    m = mu_value(g)
    out = set()
    for v in range(g.n):
        h, _ = _drop_vertex(g, v)
        if mu_value(h) < m:
            out.add(v)
    return frozenset(out)


def mu_critical_edges(g: Graph) -> frozenset[tuple[int, int]]:
    m = mu_value(g)
    out = set()
    for e in g.edges:
        if mu_value(Graph(g.n, g.edges - {e})) < m:
            out.add(e)
    return frozenset(out)


def _drop_vertex(g: Graph, v: int):
    from .graph import delete_vertex

    return delete_vertex(g, v)


# -- constrained bipartite matching -------------------------------------------


def matching_from_into(
    g: Graph, frm: Iterable[int], into: Iterable[int]
) -> Optional[Matching]:
    """A matching saturating all of `frm` using only (frm, into) edges, or None.

    Kuhn's augmenting-path search on the bipartite restriction.
    """
    fs = g.check_vertex_set(frm)
    ts = g.check_vertex_set(into)
    if fs & ts:
        raise InputError("matching_from_into requires disjoint vertex sets")
    into_mask = mask_of(ts)
    partners = {u: sorted(bits(g.adj_mask[u] & into_mask)) for u in sorted(fs)}
    match_to: dict[int, int] = {}

    def try_assign(u: int, seen: set[int]) -> bool:
        for w in partners[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_to or try_assign(match_to[w], seen):
                match_to[w] = u
                return True
        return False

    for u in sorted(fs):
        if not try_assign(u, set()):
            return None
    return Matching((u, w) for w, u in match_to.items())
