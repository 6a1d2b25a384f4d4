"""Exact KE-landscape invariants for small graphs, plus a theorem checker."""

from .caps import Caps, DEFAULT_CAPS, caps_from_env
from .errors import CapacityError, DomainError, InputError
from .graph import (
    Graph,
    closed_neighborhood,
    delete_edge,
    delete_vertex,
    edges_between,
    format_edge_list,
    format_graph6,
    induced,
    is_independent,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    set_difference_value,
)
from .solvers import (
    Matching,
    all_maximum_matchings,
    alpha,
    alpha_value,
    core,
    corona,
    matching_from_into,
    mu,
    mu_value,
    omega_family,
)
from .critical import (
    CriticalLandscape,
    critical_difference,
    critical_landscape,
    double_cover,
    double_cover_mu,
)
from .ke import classify_ke, deletable_by_criticality, kappa, rho
from .odd import (
    ParityClass,
    classify_parity,
    fast_classify_parity,
    odd_cycle_census,
    pendant_decomposition,
)
from .report import InvariantReport, build_report, parse_report
from .theorems import REGISTRY, TheoremVerdict, run_suite
from .generators import GenSpec, fixture, fixture_names, generate, verify_fixture

__version__ = "0.1.0"
