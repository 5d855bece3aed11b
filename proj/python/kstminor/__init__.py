"""Spectral extremal problems for K_{s,t}-minor-free graphs (C++ core)."""

import json

from ._kstminor import (
    CapacityError,
    ContractError,
    Graph,
    ParseError,
    RangeError,
    complete,
    complete_bipartite,
    cycle,
    extremal_case,
    extremal_gstar,
    f_st,
    h_abc,
    h_st_complement,
    has_st_property,
    is_kst_minor_free,
    minor_witness,
    path,
    petersen,
    petersen_complement,
    q_index,
    rho_alpha,
)
from . import _kstminor


def verify_fst_sandwich(n, s, t, alpha):
    """Root sandwich report for F_{s,t}(n) as a dict."""
    return json.loads(_kstminor._fst_sandwich(n, s, t, alpha))


def verify_structure(g, s, t):
    return json.loads(_kstminor._structure(g, s, t))


def brute_force_extremal(n, s, t, alpha, mode="pruned", jobs=1):
    """Exhaustive maximiser of rho_alpha over K_{s,t}-minor-free graphs on n vertices."""
    return json.loads(_kstminor._brute_force(n, s, t, alpha, mode, jobs))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
