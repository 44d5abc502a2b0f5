"""Eccentricity-matrix spectra of graphs and join-type closed forms."""

import json as _json

from ._core import (
    ConnectivityError,
    Graph,
    HypothesisError,
    ParameterError,
    ParseError,
    StructureError,
    analyze,
    complement,
    disjoint_union,
    enumerate_cubic,
    eps_spectrum,
    epsilon_wiener,
    family,
    integral_family_scan,
    is_connected,
    is_epsilon_irreducible,
    is_epsilon_regular,
    is_self_centered,
    join,
    line_graph,
    noncospectral_cubic_pair,
    parse_edge_list,
    parse_graph6,
    predict_join_k1,
    predict_join_union,
    predict_se_join,
    predict_se_join_union,
    predict_self_join,
    predict_sv_join,
    predict_sv_join_union,
    regularity,
    serialize_edge_list,
    serialize_graph6,
    small_eigenvalues,
    subdivision,
    subdivision_edge_join,
    subdivision_vertex_join,
    sym_eigenvalues,
    wiener_se_join,
    wiener_sv_join,
)
from . import _core as _c


def construct_pair_12t(t):
    """Equienergetic pair on 12t vertices, as a report dict."""
    return _json.loads(_c.construct_pair_12t_json(t))


def construct_pair_6t1(t):
    """Equienergetic pair on 6t+1 vertices, as a report dict."""
    return _json.loads(_c.construct_pair_6t1_json(t))


def construct_join_family(g, t, variant):
    """Subdivision-join pair/triplet family, as a report dict.

    variant: sv_pair, se_pair, sv_triplet or se_triplet.
    """
    return _json.loads(_c.construct_join_family_json(g, t, variant))


__all__ = [
    "ConnectivityError",
    "Graph",
    "HypothesisError",
    "ParameterError",
    "ParseError",
    "StructureError",
    "analyze",
    "complement",
    "construct_pair_12t",
    "construct_pair_6t1",
    "construct_join_family",
    "disjoint_union",
    "enumerate_cubic",
    "eps_spectrum",
    "epsilon_wiener",
    "family",
    "integral_family_scan",
    "is_connected",
    "is_epsilon_irreducible",
    "is_epsilon_regular",
    "is_self_centered",
    "join",
    "line_graph",
    "noncospectral_cubic_pair",
    "parse_edge_list",
    "parse_graph6",
    "predict_join_k1",
    "predict_join_union",
    "predict_se_join",
    "predict_se_join_union",
    "predict_self_join",
    "predict_sv_join",
    "predict_sv_join_union",
    "regularity",
    "serialize_edge_list",
    "serialize_graph6",
    "small_eigenvalues",
    "subdivision",
    "subdivision_edge_join",
    "subdivision_vertex_join",
    "sym_eigenvalues",
    "wiener_se_join",
    "wiener_sv_join",
]
