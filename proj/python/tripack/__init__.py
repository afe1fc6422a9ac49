"""Exact fractional monochromatic triangle packings in 2-coloured complete graphs."""

from ._core import (
    ColoredGraph,
    InputError,
    ParseError,
    UsageError,
    are_isomorphic,
    bip_distance_at_most,
    bipartite_minus_matching,
    canonical_form,
    e_bip,
    flip_edge,
    frac_decomposition,
    nu_star,
    pack,
    parse_threshold,
    pentagon_blowup,
    pentagon_distance,
    run_search,
    table1,
    verify_certificate,
)

__all__ = [
    "ColoredGraph",
    "InputError",
    "ParseError",
    "UsageError",
    "are_isomorphic",
    "bip_distance_at_most",
    "bipartite_minus_matching",
    "canonical_form",
    "e_bip",
    "flip_edge",
    "frac_decomposition",
    "nu_star",
    "pack",
    "parse_threshold",
    "pentagon_blowup",
    "pentagon_distance",
    "run_search",
    "table1",
    "verify_certificate",
]
