"""Konig-Egervary classification, the deficiency kappa, and the rho statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .caps import Caps, DEFAULT_CAPS
from .errors import DomainError
from .graph import Graph, delete_edge, delete_vertex, set_of
from .solvers import (
    Matching,
    alpha_critical_vertices,
    alpha_value,
    lex_min_mis_mask,
    matching_from_into,
    mu_critical_vertices,
    mu_value,
)


@dataclass(frozen=True)
class KeClassification:
    kappa: int
    is_ke: bool
    is_one_ke: bool
    witness_s: Optional[frozenset[int]]
    witness_matching: Optional[Matching]


def kappa(g: Graph, caps: Caps = DEFAULT_CAPS) -> int:
    """Konig deficiency n - (alpha + mu); zero exactly for KE graphs."""
    return g.n - alpha_value(g, caps) - mu_value(g)


def classify_ke(g: Graph, caps: Caps = DEFAULT_CAPS, want_witness: bool = True) -> KeClassification:
    a = alpha_value(g, caps)
    m = mu_value(g)
    k = g.n - a - m
    witness_s = None
    witness_matching = None
    if k == 0 and want_witness and g.n > 0:
        s_mask = lex_min_mis_mask(g, a)
        witness_s = set_of(s_mask)
        rest = set_of(g.full_mask & ~s_mask)
        witness_matching = matching_from_into(g, rest, witness_s)
        if witness_matching is None:  # impossible for a KE graph
            raise AssertionError("KE graph without an (S,A) saturating matching")
    return KeClassification(
        kappa=k,
        is_ke=(k == 0),
        is_one_ke=(k == 1),
        witness_s=witness_s,
        witness_matching=witness_matching,
    )


@dataclass(frozen=True)
class RhoReport:
    rho_v: int
    rho_v_witnesses: frozenset[int]
    rho_e: int
    rho_e_witnesses: frozenset[tuple[int, int]]


def rho(g: Graph, caps: Caps = DEFAULT_CAPS) -> RhoReport:
    """rho_v / rho_e by literal deletion and re-classification."""
    v_wit = set()
    for v in range(g.n):
        h, _ = delete_vertex(g, v)
        if kappa(h, caps) == 0:
            v_wit.add(v)
    e_wit = set()
    for e in g.sorted_edges():
        if kappa(delete_edge(g, e), caps) == 0:
            e_wit.add(e)
    return RhoReport(
        rho_v=len(v_wit),
        rho_v_witnesses=frozenset(v_wit),
        rho_e=len(e_wit),
        rho_e_witnesses=frozenset(e_wit),
    )


def deletable_by_criticality(g: Graph, caps: Caps = DEFAULT_CAPS) -> frozenset[int]:
    """Vertices that are neither alpha- nor mu-critical; for 1-KE graphs these
    are exactly the deletions landing on a KE graph."""
    if kappa(g, caps) != 1:
        raise DomainError("deletable_by_criticality requires kappa(G) = 1")
    bad = alpha_critical_vertices(g, caps) | mu_critical_vertices(g)
    return frozenset(v for v in range(g.n) if v not in bad)
