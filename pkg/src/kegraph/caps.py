"""Capacity limits for the exact solvers and enumerations.

Every cap is a plain integer so the whole bundle can be echoed into JSON
reports for provenance.  The environment variable ``KEF_CAPS_JSON`` may hold
a JSON object overriding individual fields.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace, asdict

ENV_VAR = "KEF_CAPS_JSON"


@dataclass(frozen=True)
class Caps:
    solver_n: int = 40        # exact alpha / mu on one graph
    enumeration_n: int = 24   # Omega(G) and critical-set enumeration
    matchings_n: int = 20     # all_maximum_matchings
    crit_sets: int = 1_000_000  # number of critical independent sets materialized
    cycle_work: int = 1_000_000  # DFS step budget for simple-cycle enumeration

    def to_dict(self) -> dict:
        return asdict(self)

    def with_overrides(self, **kwargs) -> "Caps":
        return replace(self, **kwargs)


def caps_from_env(base: Caps | None = None) -> Caps:
    """Return `base` (default Caps()) with KEF_CAPS_JSON overrides applied."""
    caps = base or Caps()
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return caps
    data = json.loads(raw)
    if not isinstance(data, dict):
        raise ValueError(f"{ENV_VAR} must hold a JSON object")
    unknown = set(data) - set(caps.to_dict())
    if unknown:
        raise ValueError(f"unknown cap names in {ENV_VAR}: {sorted(unknown)}")
    return caps.with_overrides(**{k: int(v) for k, v in data.items()})


DEFAULT_CAPS = Caps()
