"""Critical independent set landscape.

Ground truth is exhaustive independent-set search with a |I| - |N(I)| + |rest|
pruning bound; the bipartite double cover identity d(G) = n - mu(cover) is an
accelerator/cross-check only, exposed separately.

The empty set is always independent with d(empty) = 0, so d(G) >= 0 and graphs
whose only critical set is empty get ker = diadem = nucleus = empty, alpha' = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .errors import CapacityError
from .graph import Graph, neighborhood_mask, set_of
from .solvers import mu_value


@dataclass(frozen=True)
class CriticalLandscape:
    d: int
    ker: frozenset[int]
    diadem: frozenset[int]
    nucleus: frozenset[int]
    alpha_prime: int
    max_crit_family: tuple[frozenset[int], ...]
    crit_count: int
    # full family retained for theorem replay at desk scale
    crit_family: tuple[frozenset[int], ...]

    @property
    def epsilon(self) -> int:
        return len(self.ker)

    @property
    def beta(self) -> int:
        return len(self.diadem)


def _enumerate_best_d(g: Graph) -> int:
    """max over independent I of |I| - |N(I)|, by pruned branch search."""
    adj = g.adj_mask
    n = g.n
    best = 0  # empty set

    def walk(v: int, size: int, nb: int, avail: int):
        nonlocal best
        d_now = size - nb.bit_count()
        if d_now > best:
            best = d_now
        if v >= n:
            return
        # taking every remaining available vertex can add at most |avail| to d
        if d_now + avail.bit_count() <= best:
            return
        bit = 1 << v
        if avail & bit:
            walk(v + 1, size + 1, nb | adj[v], avail & ~(bit | adj[v]))
            walk(v + 1, size, nb, avail & ~bit)
        else:
            walk(v + 1, size, nb, avail)

    walk(0, 0, 0, g.full_mask)
    return best


def critical_difference(g: Graph, caps: Caps = DEFAULT_CAPS) -> int:
    if g.n > caps.enumeration_n:
        raise CapacityError("enumeration_n", caps.enumeration_n, g.n)
    return _enumerate_best_d(g)


def critical_landscape(g: Graph, caps: Caps = DEFAULT_CAPS) -> CriticalLandscape:
    """Enumerate every critical independent set and aggregate the landscape."""
    if g.n > caps.enumeration_n:
        raise CapacityError("enumeration_n", caps.enumeration_n, g.n)
    d = _enumerate_best_d(g)
    adj = g.adj_mask
    n = g.n
    found: list[int] = []
    cap = caps.crit_sets

    def walk(v: int, cur: int, size: int, nb: int, avail: int):
        if v >= n:
            if size - nb.bit_count() == d:
                if len(found) >= cap:
                    raise CapacityError("crit_sets", cap)
                found.append(cur)
            return
        # no extension of cur can reach difference d
        if size - nb.bit_count() + avail.bit_count() < d:
            return
        bit = 1 << v
        if avail & bit:
            walk(v + 1, cur | bit, size + 1, nb | adj[v], avail & ~(bit | adj[v]))
            walk(v + 1, cur, size, nb, avail & ~bit)
        else:
            walk(v + 1, cur, size, nb, avail)

    walk(0, 0, 0, 0, g.full_mask)
    ker_mask = g.full_mask
    diadem_mask = 0
    for m in found:
        ker_mask &= m
        diadem_mask |= m
    alpha_prime = max(m.bit_count() for m in found)
    max_masks = [m for m in found if m.bit_count() == alpha_prime]
    nucleus_mask = g.full_mask
    for m in max_masks:
        nucleus_mask &= m
    fam = sorted((set_of(m) for m in found), key=sorted)
    max_fam = sorted((set_of(m) for m in max_masks), key=sorted)
    return CriticalLandscape(
        d=d,
        ker=set_of(ker_mask),
        diadem=set_of(diadem_mask),
        nucleus=set_of(nucleus_mask),
        alpha_prime=alpha_prime,
        max_crit_family=tuple(max_fam),
        crit_count=len(found),
        crit_family=tuple(fam),
    )


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover: parts V and V', edge u-v' for each uv in E."""
    n = g.n
    edges = []
    for u, v in g.edges:
        edges.append((u, v + n))
        edges.append((v, u + n))
    return Graph(2 * n, edges)


def double_cover_mu(g: Graph) -> int:
    """mu of the bipartite double cover; d(G) = n(G) - this value."""
    return mu_value(double_cover(g))
