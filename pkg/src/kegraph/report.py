"""Full invariant report for one graph, with deterministic JSON serialization.

Schema version 1. Key order is fixed and set-valued fields are sorted, so the
same graph under the same caps always serializes to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .caps import Caps, DEFAULT_CAPS
from .critical import critical_landscape
from .graph import Graph
from .ke import classify_ke, rho
from .odd import classify_parity
from .solvers import alpha, core, corona, mu

SCHEMA_VERSION = 1

# serialization order; append-only across schema revisions
_FIELDS = (
    "schema_version",
    "graph_id",
    "n",
    "m",
    "alpha",
    "mu",
    "kappa",
    "d",
    "xi",
    "epsilon",
    "beta",
    "alpha_prime",
    "nucleus_size",
    "rho_v",
    "rho_e",
    "is_ke",
    "is_one_ke",
    "parity_class",
    "core",
    "corona",
    "ker",
    "diadem",
    "nucleus",
    "odd_cycle",
    "rho_v_witnesses",
    "caps",
)


@dataclass(frozen=True)
class InvariantReport:
    graph_id: str
    n: int
    m: int
    alpha: int
    mu: int
    kappa: int
    d: int
    xi: int
    epsilon: int
    beta: int
    alpha_prime: int
    nucleus_size: int
    rho_v: int
    rho_e: int
    is_ke: bool
    is_one_ke: bool
    parity_class: str
    core: tuple[int, ...]
    corona: tuple[int, ...]
    ker: tuple[int, ...]
    diadem: tuple[int, ...]
    nucleus: tuple[int, ...]
    odd_cycle: Optional[tuple[int, ...]]
    rho_v_witnesses: tuple[int, ...]
    caps: dict[str, int]

    def to_dict(self) -> dict:
        out = {}
        for name in _FIELDS:
            if name == "schema_version":
                out[name] = SCHEMA_VERSION
                continue
            value = getattr(self, name)
            if isinstance(value, tuple):
                value = list(value)
            out[name] = value
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def build_report(g: Graph, caps: Caps = DEFAULT_CAPS, graph_id: str = "g") -> InvariantReport:
    a, _ = alpha(g, caps)
    m_val, _ = mu(g)
    ke = classify_ke(g, caps, want_witness=False)
    land = critical_landscape(g, caps)
    parity = classify_parity(g, caps)
    rr = rho(g, caps)
    core_set = core(g, caps)
    return InvariantReport(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        alpha=a,
        mu=m_val,
        kappa=ke.kappa,
        d=land.d,
        xi=len(core_set),
        epsilon=land.epsilon,
        beta=land.beta,
        alpha_prime=land.alpha_prime,
        nucleus_size=len(land.nucleus),
        rho_v=rr.rho_v,
        rho_e=rr.rho_e,
        is_ke=ke.is_ke,
        is_one_ke=ke.is_one_ke,
        parity_class=parity.parity.value,
        core=tuple(sorted(core_set)),
        corona=tuple(sorted(corona(g, caps))),
        ker=tuple(sorted(land.ker)),
        diadem=tuple(sorted(land.diadem)),
        nucleus=tuple(sorted(land.nucleus)),
        odd_cycle=parity.odd_cycle,
        rho_v_witnesses=tuple(sorted(rr.rho_v_witnesses)),
        caps=caps.to_dict(),
    )


def parse_report(text: str) -> InvariantReport:
    raw = json.loads(text)
    if raw.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {raw.get('schema_version')!r}")
    kwargs = {}
    for name in _FIELDS:
        if name == "schema_version":
            continue
        value = raw[name]
        if isinstance(value, list):
            value = tuple(value)
        kwargs[name] = value
    return InvariantReport(**kwargs)
