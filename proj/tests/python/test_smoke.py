import math

import networkx as nx
import numpy as np
import pytest

import kstminor as k


def test_graph6_matches_networkx():
    g = k.petersen()
    h = nx.from_graph6_bytes(g.to_graph6().encode())
    assert nx.is_isomorphic(h, nx.petersen_graph())
    assert k.Graph.from_graph6(g.to_graph6()) == g


def test_rho_against_numpy():
    g = k.extremal_gstar(12, 2, 3)
    a = nx.to_numpy_array(nx.from_graph6_bytes(g.to_graph6().encode()))
    for alpha in (0.0, 0.3, 0.5, 0.8):
        m = alpha * np.diag(a.sum(axis=1)) + (1 - alpha) * a
        assert math.isclose(k.rho_alpha(g, alpha), np.linalg.eigvalsh(m).max(), abs_tol=1e-9)
    assert math.isclose(k.q_index(g), 2 * k.rho_alpha(g, 0.5), abs_tol=1e-9)


def test_minor_queries():
    assert k.is_kst_minor_free(k.extremal_gstar(12, 2, 3), 2, 3)
    assert not k.is_kst_minor_free(k.complete(5), 2, 3)
    w = k.minor_witness(k.complete(5), k.complete_bipartite(2, 3))
    assert w is not None and len(w) == 5
    assert k.has_st_property(k.h_st_complement(2, 5), 2, 5)


def test_reports_are_dicts():
    r = k.verify_fst_sandwich(100, 2, 3, 0.5)
    assert r["ok"] and r["sandwich_ok"]
    assert k.verify_structure(k.extremal_gstar(22, 2, 5), 2, 5)["ok"]
    best = k.brute_force_extremal(5, 2, 2, 0.5)
    assert best["ok"] and best["matches_construction"]


def test_errors_map_to_value_error():
    with pytest.raises(k.ParseError):
        k.Graph.from_graph6("D~")
    with pytest.raises(ValueError):
        k.rho_alpha(k.complete(3), 1.0)
    with pytest.raises(k.CapacityError):
        k.brute_force_extremal(9, 2, 3, 0.3, mode="full")
