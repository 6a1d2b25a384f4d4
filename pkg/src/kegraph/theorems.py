"""Executable registry of checkable statements about the KE landscape.

Each check evaluates one identity, inequality, or structural claim against a
single graph and returns a verdict. A fail verdict carries enough data to
replay the evaluation in isolation; not_applicable appears only when the
statement's hypothesis is unmet; capacity_skipped appears when an enumeration
cap was hit, never as a silent omission.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional

from .caps import Caps, DEFAULT_CAPS
from .critical import CriticalLandscape, critical_landscape
from .errors import CapacityError, InputError
from .graph import (
    Graph,
    closed_neighborhood,
    delete_vertex,
    induced,
    neighborhood,
    set_difference_value,
)
from .ke import RhoReport, deletable_by_criticality, rho
from .odd import (
    ParityClass,
    ParityReport,
    classify_parity,
    pendant_decomposition,
)
from .solvers import (
    Matching,
    all_maximum_matchings,
    alpha_value,
    core as core_of,
    corona as corona_of,
    matching_from_into,
    mu_critical_vertices,
    mu_value,
    omega_family,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"
CAPACITY_SKIPPED = "capacity_skipped"


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    status: str
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "status": self.status,
            "detail": self.detail,
        }


def _fmt(x):
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, tuple):
        return list(x)
    if isinstance(x, Matching):
        return sorted(x.edges)
    return x


def _detail(**kwargs) -> dict:
    return {k: _fmt(v) for k, v in kwargs.items()}


class SuiteContext:
    """Shared per-graph invariants; each is computed once and reused by every
    check so all verdicts for a graph derive from one source of truth."""

    def __init__(self, g: Graph, caps: Caps = DEFAULT_CAPS, seed: int = 0):
        self.g = g
        self.caps = caps
        self.seed = seed
        self._deleted: dict[int, tuple[int, tuple[frozenset[int], ...]]] = {}

    @cached_property
    def rng(self) -> random.Random:
        return random.Random(f"{self.seed}:{self.g.n}:{self.g.m}")

    @cached_property
    def alpha(self) -> int:
        return alpha_value(self.g, self.caps)

    @cached_property
    def mu(self) -> int:
        return mu_value(self.g)

    @property
    def kappa(self) -> int:
        return self.g.n - self.alpha - self.mu

    @property
    def is_ke(self) -> bool:
        return self.kappa == 0

    @cached_property
    def omega(self) -> list[frozenset[int]]:
        return omega_family(self.g, self.caps)

    @cached_property
    def core(self) -> frozenset[int]:
        return frozenset.intersection(*self.omega)

    @cached_property
    def corona(self) -> frozenset[int]:
        return frozenset.union(*self.omega)

    @cached_property
    def landscape(self) -> CriticalLandscape:
        return critical_landscape(self.g, self.caps)

    @cached_property
    def parity(self) -> ParityReport:
        return classify_parity(self.g, self.caps)

    @property
    def cycle(self) -> Optional[tuple[int, ...]]:
        return self.parity.odd_cycle

    @property
    def is_almost_bipartite(self) -> bool:
        return self.parity.parity is ParityClass.ALMOST_BIPARTITE

    @property
    def is_ab_non_ke(self) -> bool:
        return self.is_almost_bipartite and not self.is_ke

    @cached_property
    def rho(self) -> RhoReport:
        return rho(self.g, self.caps)

    @cached_property
    def max_matchings(self) -> list[Matching]:
        return all_maximum_matchings(self.g, self.caps)

    @cached_property
    def mu_critical(self) -> frozenset[int]:
        return mu_critical_vertices(self.g)

    def deleted_landscape(self, v: int) -> tuple[int, tuple[frozenset[int], ...]]:
        """(d(G-v), critical family of G-v) with vertices in G's labels."""
        if v not in self._deleted:
            h, relabel = delete_vertex(self.g, v)
            land = critical_landscape(h, self.caps)
            fam = tuple(
                frozenset(relabel[u] for u in s) for s in land.crit_family
            )
            self._deleted[v] = (land.d, fam)
        return self._deleted[v]

    def sample_subsets(self, count: int) -> list[frozenset[int]]:
        verts = list(range(self.g.n))
        out = [frozenset(), frozenset(verts)]
        for _ in range(count):
            out.append(frozenset(v for v in verts if self.rng.random() < 0.5))
        return out

    def d_of(self, s: Iterable[int]) -> int:
        return set_difference_value(self.g, s)


# -- generic helpers ------------------------------------------------------------


def _induced_mu(g: Graph, vs: Iterable[int]) -> int:
    h, _ = induced(g, vs)
    return mu_value(h)


def _extends_to_maximum(g: Graph, m: Matching, mu_g: int) -> bool:
    """m extends to a maximum matching iff the rest of the graph still admits
    mu(G) - |m| independent matching edges."""
    rest = [v for v in range(g.n) if v not in m.saturated]
    return len(m) + _induced_mu(g, rest) == mu_g


def _cycle_edge_set(cycle: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    k = len(cycle)
    return frozenset(
        (min(cycle[i], cycle[(i + 1) % k]), max(cycle[i], cycle[(i + 1) % k]))
        for i in range(k)
    )


def _matchings_from_into(
    g: Graph, frm: list[int], into: frozenset[int], budget: int
) -> tuple[list[list[tuple[int, int]]], bool]:
    """All matchings saturating `frm` inside (frm, into); truncated at budget."""
    out: list[list[tuple[int, int]]] = []
    used: set[int] = set()
    cur: list[tuple[int, int]] = []
    truncated = False

    def walk(i: int):
        nonlocal truncated
        if truncated:
            return
        if i == len(frm):
            out.append(list(cur))
            if len(out) >= budget:
                truncated = True
            return
        u = frm[i]
        for w in sorted(g.neighbors[u]):
            if w in into and w not in used:
                used.add(w)
                cur.append((u, w))
                walk(i + 1)
                cur.pop()
                used.remove(w)

    walk(0)
    return out, truncated


# -- registry checks ------------------------------------------------------------


def check_lem17(ctx: SuiteContext) -> TheoremVerdict:
    """Double counting: sum over A of |N(a) cap B| equals the symmetric sum."""
    g = ctx.g
    pairs = list(zip(ctx.sample_subsets(6), ctx.sample_subsets(6)))
    for a_set, b_set in pairs:
        lhs = sum(len(frozenset(g.neighbors[a]) & b_set) for a in a_set)
        rhs = sum(len(frozenset(g.neighbors[b]) & a_set) for b in b_set)
        if lhs != rhs:
            return TheoremVerdict(
                "lem17", FAIL, _detail(a=a_set, b=b_set, lhs=lhs, rhs=rhs)
            )
    return TheoremVerdict("lem17", PASS, _detail(pairs=len(pairs)))


def check_cor11(ctx: SuiteContext) -> TheoremVerdict:
    """N(A) cap B empty iff N(B) cap A empty."""
    g = ctx.g
    pairs = list(zip(ctx.sample_subsets(6), ctx.sample_subsets(6)))
    for a_set, b_set in pairs:
        lhs = not (neighborhood(g, a_set) & b_set)
        rhs = not (neighborhood(g, b_set) & a_set)
        if lhs != rhs:
            return TheoremVerdict(
                "cor11", FAIL, _detail(a=a_set, b=b_set, lhs=lhs, rhs=rhs)
            )
    return TheoremVerdict("cor11", PASS, _detail(pairs=len(pairs)))


def check_lem84(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite: n-1 <= alpha+mu <= n."""
    if not ctx.is_almost_bipartite:
        return TheoremVerdict("lem84", NOT_APPLICABLE)
    total = ctx.alpha + ctx.mu
    ok = ctx.g.n - 1 <= total <= ctx.g.n
    return TheoremVerdict(
        "lem84", PASS if ok else FAIL, _detail(n=ctx.g.n, alpha_plus_mu=total)
    )


def _core_identities(ctx: SuiteContext, offset: int) -> Optional[dict]:
    g = ctx.g
    n_core = neighborhood(g, ctx.core)
    cover_ok = (ctx.corona | n_core) == frozenset(range(g.n))
    d_ok = (
        ctx.landscape.d == ctx.alpha - ctx.mu == len(ctx.core) - len(n_core)
    )
    size_ok = len(ctx.core) + len(ctx.corona) == 2 * ctx.alpha + offset
    if cover_ok and d_ok and size_ok:
        return None
    return _detail(
        core=ctx.core,
        corona=ctx.corona,
        n_core=n_core,
        d=ctx.landscape.d,
        alpha=ctx.alpha,
        mu=ctx.mu,
        cover_ok=cover_ok,
        d_ok=d_ok,
        size_ok=size_ok,
    )


def check_th43(ctx: SuiteContext) -> TheoremVerdict:
    """KE: corona cup N(core) = V; d = alpha-mu = xi-|N(core)|; xi+|corona| = 2 alpha."""
    if not ctx.is_ke:
        return TheoremVerdict("th43", NOT_APPLICABLE)
    bad = _core_identities(ctx, offset=0)
    return TheoremVerdict("th43", PASS if bad is None else FAIL, bad or {})


def check_th44(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: same identities with xi+|corona| = 2 alpha + 1."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("th44", NOT_APPLICABLE)
    bad = _core_identities(ctx, offset=1)
    return TheoremVerdict("th44", PASS if bad is None else FAIL, bad or {})


def check_cor8(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE arithmetic: n+d = 2 alpha + 1 etc., no perfect matching."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("cor8", NOT_APPLICABLE)
    n, d, a, m = ctx.g.n, ctx.landscape.d, ctx.alpha, ctx.mu
    ok = (
        n + d == 2 * a + 1
        and 2 * a == n + d - 1
        and 2 * m == n - d - 1
        and 2 * m < n
    )
    return TheoremVerdict(
        "cor8", PASS if ok else FAIL, _detail(n=n, d=d, alpha=a, mu=m)
    )


def check_th2222(ctx: SuiteContext) -> TheoremVerdict:
    """ker = core for bipartite graphs and almost bipartite non-KE graphs."""
    if not (ctx.parity.parity is ParityClass.BIPARTITE or ctx.is_ab_non_ke):
        return TheoremVerdict("th2222", NOT_APPLICABLE)
    ok = ctx.landscape.ker == ctx.core
    return TheoremVerdict(
        "th2222", PASS if ok else FAIL, _detail(ker=ctx.landscape.ker, core=ctx.core)
    )


def check_th9(ctx: SuiteContext) -> TheoremVerdict:
    """KE: rho_v = n - xi + epsilon and rho_e >= m - xi + epsilon.

    At most xi - epsilon vertices are non-deletable (equality) and at most
    xi - epsilon edges are non-deletable (inequality).
    """
    if not ctx.is_ke:
        return TheoremVerdict("th9", NOT_APPLICABLE)
    xi, eps = len(ctx.core), ctx.landscape.epsilon
    ok = ctx.rho.rho_v == ctx.g.n - xi + eps and ctx.rho.rho_e >= ctx.g.m - xi + eps
    return TheoremVerdict(
        "th9",
        PASS if ok else FAIL,
        _detail(rho_v=ctx.rho.rho_v, rho_e=ctx.rho.rho_e, xi=xi, epsilon=eps),
    )


def check_th10(ctx: SuiteContext) -> TheoremVerdict:
    """1-KE: rho_v <= n + d - xi - beta."""
    if ctx.kappa != 1:
        return TheoremVerdict("th10", NOT_APPLICABLE)
    land = ctx.landscape
    xi = len(ctx.core)
    bound = ctx.g.n + land.d - xi - land.beta
    ok = ctx.rho.rho_v <= bound
    return TheoremVerdict(
        "th10",
        PASS if ok else FAIL,
        _detail(rho_v=ctx.rho.rho_v, bound=bound),
    )


def check_prop14(ctx: SuiteContext) -> TheoremVerdict:
    """|N[diadem]| = beta + |nucleus| - d, for every graph."""
    land = ctx.landscape
    lhs = len(closed_neighborhood(ctx.g, land.diadem))
    rhs = land.beta + len(land.nucleus) - land.d
    return TheoremVerdict(
        "prop14", PASS if lhs == rhs else FAIL, _detail(lhs=lhs, rhs=rhs)
    )


def check_prop13(ctx: SuiteContext) -> TheoremVerdict:
    """beta + |nucleus| <= 2 alpha', for every graph."""
    land = ctx.landscape
    lhs = land.beta + len(land.nucleus)
    rhs = 2 * land.alpha_prime
    return TheoremVerdict(
        "prop13", PASS if lhs <= rhs else FAIL, _detail(lhs=lhs, rhs=rhs)
    )


def check_prop17(ctx: SuiteContext) -> TheoremVerdict:
    """N(diadem) - diadem equals the intersection of N(A) over all A in MaxCritIndep."""
    land = ctx.landscape
    lhs = neighborhood(ctx.g, land.diadem) - land.diadem
    rhs = frozenset.intersection(
        *(neighborhood(ctx.g, a) for a in land.max_crit_family)
    )
    return TheoremVerdict(
        "prop17", PASS if lhs == rhs else FAIL, _detail(lhs=lhs, rhs=rhs)
    )


def check_prop11(ctx: SuiteContext) -> TheoremVerdict:
    """core cap N(A) is empty for every critical independent set A."""
    for a in ctx.landscape.crit_family:
        hit = ctx.core & neighborhood(ctx.g, a)
        if hit:
            return TheoremVerdict("prop11", FAIL, _detail(a=a, hit=hit))
    hit = ctx.core & neighborhood(ctx.g, ctx.landscape.diadem)
    if hit:
        return TheoremVerdict("prop11", FAIL, _detail(a=ctx.landscape.diadem, hit=hit))
    return TheoremVerdict("prop11", PASS)


def check_prop15(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: V(C) cap N[diadem] is empty."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("prop15", NOT_APPLICABLE)
    vc = frozenset(ctx.cycle)
    nd = closed_neighborhood(ctx.g, ctx.landscape.diadem)
    dual = closed_neighborhood(ctx.g, vc) & ctx.landscape.diadem
    ok = not (vc & nd) and not dual
    return TheoremVerdict(
        "prop15", PASS if ok else FAIL, _detail(cycle=vc, n_diadem_closed=nd)
    )


def check_conj1(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: V(C) cup N[diadem] = V."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("conj1", NOT_APPLICABLE)
    vc = frozenset(ctx.cycle)
    nd = closed_neighborhood(ctx.g, ctx.landscape.diadem)
    missing = frozenset(range(ctx.g.n)) - (vc | nd)
    return TheoremVerdict(
        "conj1",
        PASS if not missing else FAIL,
        _detail(cycle=vc, n_diadem_closed=nd, missing=missing),
    )


def check_cor3(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: V(C) cup N[diadem] = corona cup N(core)."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("cor3", NOT_APPLICABLE)
    lhs = frozenset(ctx.cycle) | closed_neighborhood(ctx.g, ctx.landscape.diadem)
    rhs = ctx.corona | neighborhood(ctx.g, ctx.core)
    return TheoremVerdict(
        "cor3", PASS if lhs == rhs else FAIL, _detail(lhs=lhs, rhs=rhs)
    )


def check_prop10(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: core cap N[V(C)] empty; hence V(C) inside corona."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("prop10", NOT_APPLICABLE)
    vc = frozenset(ctx.cycle)
    hit = ctx.core & closed_neighborhood(ctx.g, vc)
    in_corona = vc <= ctx.corona
    size_ok = len(vc) <= 2 * ctx.alpha + 1 - len(ctx.core)
    ok = not hit and in_corona and size_ok
    return TheoremVerdict(
        "prop10",
        PASS if ok else FAIL,
        _detail(hit=hit, in_corona=in_corona, size_ok=size_ok),
    )


def check_lem7(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: critical sets avoid V(C); core is critical."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("lem7", NOT_APPLICABLE)
    vc = frozenset(ctx.cycle)
    for a in ctx.landscape.crit_family:
        if a & vc:
            return TheoremVerdict("lem7", FAIL, _detail(a=a, hit=a & vc))
    core_d = ctx.d_of(ctx.core)
    if core_d != ctx.landscape.d:
        return TheoremVerdict(
            "lem7", FAIL, _detail(core=ctx.core, d_core=core_d, d=ctx.landscape.d)
        )
    return TheoremVerdict("lem7", PASS)


def check_lem10(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: N[V(D_y - y)] pairwise disjoint over cycle vertices."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("lem10", NOT_APPLICABLE)
    dec = pendant_decomposition(ctx.g, ctx.cycle)
    hoods = {}
    for y, (verts, _) in dec.components.items():
        hoods[y] = closed_neighborhood(ctx.g, verts - {y})
    ys = sorted(hoods)
    for i, x in enumerate(ys):
        for y in ys[i + 1 :]:
            hit = hoods[x] & hoods[y]
            if hit:
                return TheoremVerdict("lem10", FAIL, _detail(x=x, y=y, hit=hit))
    return TheoremVerdict("lem10", PASS)


def check_lem13(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: cycle vertices share no outside neighbor;
    N(V(C))-V(C) inside N(diadem)-diadem; degree-sum inequality."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("lem13", NOT_APPLICABLE)
    g = ctx.g
    vc = frozenset(ctx.cycle)
    cyc = sorted(vc)
    for i, x in enumerate(cyc):
        for y in cyc[i + 1 :]:
            shared = (frozenset(g.neighbors[x]) & frozenset(g.neighbors[y])) - vc
            if shared:
                return TheoremVerdict("lem13", FAIL, _detail(x=x, y=y, shared=shared))
    land = ctx.landscape
    outside = neighborhood(g, vc) - vc
    boundary = neighborhood(g, land.diadem) - land.diadem
    lhs = sum(g.degree(v) - 2 for v in vc)
    if not outside <= boundary or lhs > len(boundary):
        return TheoremVerdict(
            "lem13",
            FAIL,
            _detail(outside=outside, boundary=boundary, lhs=lhs, rhs=len(boundary)),
        )
    return TheoremVerdict("lem13", PASS, _detail(lhs=lhs, rhs=len(boundary)))


def check_th18(ctx: SuiteContext) -> TheoremVerdict:
    """Every maximum matching uses floor(|V(C)|/2) cycle edges; every maximum
    matching of G[V(C)] extends to one of G leaving one cycle vertex exposed."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("th18", NOT_APPLICABLE)
    g = ctx.g
    cyc_edges = _cycle_edge_set(ctx.cycle)
    want = len(ctx.cycle) // 2
    for m in ctx.max_matchings:
        got = len(m.edges & cyc_edges)
        if got != want:
            return TheoremVerdict(
                "th18", FAIL, _detail(matching=m, cycle_edges=got, expected=want)
            )
    sub, relabel = induced(g, ctx.cycle)
    for m_sub in all_maximum_matchings(sub, ctx.caps):
        lifted = Matching(
            (relabel[u], relabel[v]) for u, v in m_sub.edges
        )
        exposed = frozenset(ctx.cycle) - lifted.saturated
        # extension must keep the one exposed cycle vertex unsaturated
        (x,) = exposed
        rest = [v for v in range(g.n) if v not in lifted.saturated and v != x]
        if len(lifted) + _induced_mu(g, rest) != ctx.mu:
            return TheoremVerdict(
                "th18", FAIL, _detail(cycle_matching=lifted, exposed=x)
            )
    return TheoremVerdict("th18", PASS, _detail(matchings=len(ctx.max_matchings)))


def check_th18_structure(ctx: SuiteContext) -> TheoremVerdict:
    """Off-cycle part of every maximum matching is a maximum matching of
    G[N[diadem]], possibly after removing one edge from V(C) to N(diadem)."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("th18_structure", NOT_APPLICABLE)
    g = ctx.g
    land = ctx.landscape
    vc = frozenset(ctx.cycle)
    cyc_edges = _cycle_edge_set(ctx.cycle)
    block = closed_neighborhood(g, land.diadem)
    n_diadem = neighborhood(g, land.diadem)
    mu_block = _induced_mu(g, block)
    for m in ctx.max_matchings:
        rest = m.edges - cyc_edges
        inside = frozenset(e for e in rest if e[0] in block and e[1] in block)
        bridge = rest - inside
        if not bridge:
            if len(inside) != mu_block:
                return TheoremVerdict(
                    "th18_structure",
                    FAIL,
                    _detail(matching=m, inside=inside, mu_block=mu_block),
                )
            continue
        if len(bridge) != 1:
            return TheoremVerdict(
                "th18_structure", FAIL, _detail(matching=m, bridge=bridge)
            )
        (e,) = bridge
        xs = [v for v in e if v in vc]
        ys = [v for v in e if v in n_diadem]
        if len(xs) != 1 or len(ys) != 1:
            return TheoremVerdict(
                "th18_structure", FAIL, _detail(matching=m, bridge=bridge)
            )
        if len(inside) != _induced_mu(g, block - {ys[0]}):
            return TheoremVerdict(
                "th18_structure",
                FAIL,
                _detail(matching=m, bridge=bridge, inside=inside),
            )
    return TheoremVerdict(
        "th18_structure", PASS, _detail(matchings=len(ctx.max_matchings))
    )


def check_th5(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: rho_v = n + d - xi - beta = 2 alpha + 1 - xi - beta."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("th5", NOT_APPLICABLE)
    land = ctx.landscape
    xi = len(ctx.core)
    a = ctx.g.n + land.d - xi - land.beta
    b = 2 * ctx.alpha + 1 - xi - land.beta
    ok = ctx.rho.rho_v == a == b
    return TheoremVerdict(
        "th5", PASS if ok else FAIL, _detail(rho_v=ctx.rho.rho_v, via_n_d=a, via_alpha=b)
    )


def check_cor2(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: rho_v = |V(C)| + |nucleus| - xi."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("cor2", NOT_APPLICABLE)
    rhs = len(ctx.cycle) + len(ctx.landscape.nucleus) - len(ctx.core)
    ok = ctx.rho.rho_v == rhs
    return TheoremVerdict(
        "cor2", PASS if ok else FAIL, _detail(rho_v=ctx.rho.rho_v, rhs=rhs)
    )


def check_cor5(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: |V(C)| + |nucleus| + beta = 2 alpha + 1 = xi + |corona|."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("cor5", NOT_APPLICABLE)
    land = ctx.landscape
    lhs = len(ctx.cycle) + len(land.nucleus) + land.beta
    mid = 2 * ctx.alpha + 1
    rhs = len(ctx.core) + len(ctx.corona)
    ok = lhs == mid == rhs
    return TheoremVerdict(
        "cor5", PASS if ok else FAIL, _detail(lhs=lhs, mid=mid, rhs=rhs)
    )


def check_cor7(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: rho_v = |corona| - beta."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("cor7", NOT_APPLICABLE)
    rhs = len(ctx.corona) - ctx.landscape.beta
    ok = ctx.rho.rho_v == rhs
    return TheoremVerdict(
        "cor7", PASS if ok else FAIL, _detail(rho_v=ctx.rho.rho_v, rhs=rhs)
    )


def check_cor10(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite (KE or not): xi + |corona| = n + d."""
    if not ctx.is_almost_bipartite:
        return TheoremVerdict("cor10", NOT_APPLICABLE)
    lhs = len(ctx.core) + len(ctx.corona)
    rhs = ctx.g.n + ctx.landscape.d
    return TheoremVerdict(
        "cor10", PASS if lhs == rhs else FAIL, _detail(lhs=lhs, rhs=rhs)
    )


def check_alpha_prime_bound(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: |V(C)| <= rho_v <= 2 alpha - xi - alpha' + 1."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("alpha_prime_bound", NOT_APPLICABLE)
    upper = 2 * ctx.alpha - len(ctx.core) - ctx.landscape.alpha_prime + 1
    ok = len(ctx.cycle) <= ctx.rho.rho_v <= upper
    return TheoremVerdict(
        "alpha_prime_bound",
        PASS if ok else FAIL,
        _detail(lower=len(ctx.cycle), rho_v=ctx.rho.rho_v, upper=upper),
    )


def _is_odd_cycle_graph(g: Graph) -> bool:
    from .graph import is_connected

    return (
        g.n >= 3
        and g.n % 2 == 1
        and g.m == g.n
        and all(g.degree(v) == 2 for v in range(g.n))
        and is_connected(g)
    )


def check_prop18(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: rho_v = n iff G is an odd cycle."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("prop18", NOT_APPLICABLE)
    lhs = ctx.rho.rho_v == ctx.g.n
    rhs = _is_odd_cycle_graph(ctx.g)
    return TheoremVerdict(
        "prop18", PASS if lhs == rhs else FAIL, _detail(rho_v=ctx.rho.rho_v, odd_cycle=rhs)
    )


def check_degree_bound(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE:
    rho_v >= sum_{v in V(C)} deg(v) - |V(C)| - |N(V(C)) cap N(core)|."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("degree_bound", NOT_APPLICABLE)
    g = ctx.g
    vc = frozenset(ctx.cycle)
    overlap = neighborhood(g, vc) & neighborhood(g, ctx.core)
    rhs = sum(g.degree(v) for v in vc) - len(vc) - len(overlap)
    ok = ctx.rho.rho_v >= rhs
    return TheoremVerdict(
        "degree_bound",
        PASS if ok else FAIL,
        _detail(rho_v=ctx.rho.rho_v, rhs=rhs, overlap=overlap),
    )


def check_cor13(ctx: SuiteContext) -> TheoremVerdict:
    """Specialization of the degree bound when N(V(C)) cap N(core) is empty."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("cor13", NOT_APPLICABLE)
    g = ctx.g
    vc = frozenset(ctx.cycle)
    if neighborhood(g, vc) & neighborhood(g, ctx.core):
        return TheoremVerdict("cor13", NOT_APPLICABLE)
    rhs = sum(g.degree(v) for v in vc) - len(vc)
    ok = ctx.rho.rho_v >= rhs
    return TheoremVerdict(
        "cor13", PASS if ok else FAIL, _detail(rho_v=ctx.rho.rho_v, rhs=rhs)
    )


def check_cor_nucleus(ctx: SuiteContext) -> TheoremVerdict:
    """Almost bipartite non-KE: rho_v = |V(C)| iff core = nucleus."""
    if not ctx.is_ab_non_ke:
        return TheoremVerdict("cor_nucleus", NOT_APPLICABLE)
    lhs = ctx.rho.rho_v == len(ctx.cycle)
    rhs = ctx.core == ctx.landscape.nucleus
    return TheoremVerdict(
        "cor_nucleus",
        PASS if lhs == rhs else FAIL,
        _detail(rho_v=ctx.rho.rho_v, cycle_len=len(ctx.cycle),
                core=ctx.core, nucleus=ctx.landscape.nucleus),
    )


def check_lem11(ctx: SuiteContext) -> TheoremVerdict:
    """1-KE: rho_v = n iff mu < n/2, xi = 0, and beta = 0."""
    if ctx.kappa != 1:
        return TheoremVerdict("lem11", NOT_APPLICABLE)
    lhs = ctx.rho.rho_v == ctx.g.n
    rhs = (
        2 * ctx.mu < ctx.g.n
        and len(ctx.core) == 0
        and ctx.landscape.beta == 0
    )
    return TheoremVerdict(
        "lem11",
        PASS if lhs == rhs else FAIL,
        _detail(rho_v=ctx.rho.rho_v, mu=ctx.mu, xi=len(ctx.core), beta=ctx.landscape.beta),
    )


def check_th17(ctx: SuiteContext) -> TheoremVerdict:
    """1-KE: G-v is KE iff v is neither alpha-critical nor mu-critical."""
    if ctx.kappa != 1:
        return TheoremVerdict("th17", NOT_APPLICABLE)
    expected = deletable_by_criticality(ctx.g, ctx.caps)
    got = ctx.rho.rho_v_witnesses
    return TheoremVerdict(
        "th17",
        PASS if expected == got else FAIL,
        _detail(by_criticality=expected, by_deletion=got),
    )


def check_d_mono_1(ctx: SuiteContext) -> TheoremVerdict:
    """If some critical set of G-v is not critical in G, then d(G) >= d(G-v)."""
    d = ctx.landscape.d
    applicable = False
    for v in range(ctx.g.n):
        dv, fam = ctx.deleted_landscape(v)
        if any(ctx.d_of(b) != d for b in fam):
            applicable = True
            if d < dv:
                return TheoremVerdict("d_mono_1", FAIL, _detail(v=v, d=d, d_minus_v=dv))
    if not applicable:
        return TheoremVerdict("d_mono_1", NOT_APPLICABLE)
    return TheoremVerdict("d_mono_1", PASS)


def check_d_mono_2(ctx: SuiteContext) -> TheoremVerdict:
    """If v is in the nucleus and some set is critical in both G and G-v,
    then d(G) = d(G-v)."""
    d = ctx.landscape.d
    applicable = False
    for v in sorted(ctx.landscape.nucleus):
        dv, fam = ctx.deleted_landscape(v)
        if any(ctx.d_of(b) == d for b in fam):
            applicable = True
            if d != dv:
                return TheoremVerdict("d_mono_2", FAIL, _detail(v=v, d=d, d_minus_v=dv))
    if not applicable:
        return TheoremVerdict("d_mono_2", NOT_APPLICABLE)
    return TheoremVerdict("d_mono_2", PASS)


def check_lem8(ctx: SuiteContext) -> TheoremVerdict:
    """If v is not in N(diadem), then d(G) >= d(G-v)."""
    d = ctx.landscape.d
    n_diadem = neighborhood(ctx.g, ctx.landscape.diadem)
    applicable = False
    for v in range(ctx.g.n):
        if v in n_diadem:
            continue
        applicable = True
        dv, _ = ctx.deleted_landscape(v)
        if d < dv:
            return TheoremVerdict("lem8", FAIL, _detail(v=v, d=d, d_minus_v=dv))
    if not applicable:
        return TheoremVerdict("lem8", NOT_APPLICABLE)
    return TheoremVerdict("lem8", PASS)


def check_th100(ctx: SuiteContext) -> TheoremVerdict:
    """N[A] is the same for every maximum critical set A and induces a KE graph."""
    land = ctx.landscape
    hoods = {closed_neighborhood(ctx.g, a) for a in land.max_crit_family}
    if len(hoods) != 1:
        return TheoremVerdict("th100", FAIL, _detail(hoods=[sorted(h) for h in hoods]))
    (x,) = hoods
    h, _ = induced(ctx.g, x)
    ke = h.n == alpha_value(h, ctx.caps) + mu_value(h)
    return TheoremVerdict(
        "th100", PASS if ke else FAIL, _detail(x=x, induced_ke=ke)
    )


def check_th333(ctx: SuiteContext) -> TheoremVerdict:
    """Each critical set sits inside some maximum independent set and some
    maximum critical set, and admits a matching from its neighborhood."""
    land = ctx.landscape
    for a in land.crit_family:
        if not any(a <= s for s in ctx.omega):
            return TheoremVerdict("th333", FAIL, _detail(a=a, part="omega"))
        if not any(a <= s for s in land.max_crit_family):
            return TheoremVerdict("th333", FAIL, _detail(a=a, part="max_crit"))
        if matching_from_into(ctx.g, neighborhood(ctx.g, a), a) is None:
            return TheoremVerdict("th333", FAIL, _detail(a=a, part="matching"))
    return TheoremVerdict("th333", PASS, _detail(sets=len(land.crit_family)))


def check_th11(ctx: SuiteContext) -> TheoremVerdict:
    """If N(A) has a matching into independent A, every such matching extends
    to a maximum matching, and every vertex of N(A) is mu-critical."""
    g = ctx.g
    budget = 64
    for a in ctx.landscape.crit_family:
        na = neighborhood(g, a)
        if matching_from_into(g, na, a) is None:
            continue
        if not na <= ctx.mu_critical:
            return TheoremVerdict(
                "th11", FAIL, _detail(a=a, n_a=na, mu_critical=ctx.mu_critical)
            )
        matchings, truncated = _matchings_from_into(g, sorted(na), a, budget)
        for edges in matchings:
            m = Matching(edges)
            if not _extends_to_maximum(g, m, ctx.mu):
                return TheoremVerdict("th11", FAIL, _detail(a=a, matching=m))
        if truncated:
            return TheoremVerdict("th11", CAPACITY_SKIPPED, _detail(a=a, budget=budget))
    return TheoremVerdict("th11", PASS)


def check_th715(ctx: SuiteContext) -> TheoremVerdict:
    """KE iff V splits as independent S and A = V - S with |S| >= |A| and a
    matching saturating A inside (S, A)."""
    g = ctx.g
    everything = frozenset(range(g.n))
    witness = None
    for s in ctx.omega:
        a = everything - s
        if len(s) >= len(a) and matching_from_into(g, a, s) is not None:
            witness = s
            break
    # any valid split forces S maximum independent and |A| = mu, so searching
    # the maximum independent sets decides existence
    has_witness = witness is not None
    ok = has_witness == ctx.is_ke
    return TheoremVerdict(
        "th715",
        PASS if ok else FAIL,
        _detail(is_ke=ctx.is_ke, witness=witness),
    )


REGISTRY: dict[str, Callable[[SuiteContext], TheoremVerdict]] = {
    "lem17": check_lem17,
    "cor11": check_cor11,
    "lem84": check_lem84,
    "th43": check_th43,
    "th44": check_th44,
    "cor8": check_cor8,
    "th2222": check_th2222,
    "th9": check_th9,
    "th10": check_th10,
    "prop14": check_prop14,
    "prop13": check_prop13,
    "prop17": check_prop17,
    "prop11": check_prop11,
    "prop15": check_prop15,
    "conj1": check_conj1,
    "cor3": check_cor3,
    "prop10": check_prop10,
    "lem7": check_lem7,
    "lem10": check_lem10,
    "lem13": check_lem13,
    "th18": check_th18,
    "th18_structure": check_th18_structure,
    "th5": check_th5,
    "cor2": check_cor2,
    "cor5": check_cor5,
    "cor7": check_cor7,
    "cor10": check_cor10,
    "alpha_prime_bound": check_alpha_prime_bound,
    "prop18": check_prop18,
    "degree_bound": check_degree_bound,
    "cor13": check_cor13,
    "cor_nucleus": check_cor_nucleus,
    "lem11": check_lem11,
    "th17": check_th17,
    "d_mono_1": check_d_mono_1,
    "d_mono_2": check_d_mono_2,
    "lem8": check_lem8,
    "th100": check_th100,
    "th333": check_th333,
    "th11": check_th11,
    "th715": check_th715,
}


def run_suite(
    g: Graph,
    selection: Iterable[str] | str = "all",
    caps: Caps = DEFAULT_CAPS,
    seed: int = 0,
) -> list[TheoremVerdict]:
    if selection == "all":
        ids = sorted(REGISTRY)
    else:
        ids = sorted(selection)
        unknown = [i for i in ids if i not in REGISTRY]
        if unknown:
            raise InputError(f"unknown theorem ids: {unknown}")
    ctx = SuiteContext(g, caps, seed)
    out = []
    for tid in ids:
        try:
            out.append(REGISTRY[tid](ctx))
        except CapacityError as exc:
            out.append(
                TheoremVerdict(
                    tid,
                    CAPACITY_SKIPPED,
                    _detail(cap=exc.cap_name, limit=exc.limit),
                )
            )
    return out
