"""Coloring for 3-colorable graphs without long induced paths."""

from ._core import (
    Graph,
    approx_color,
    bound,
    brute_three_color,
    clique_join,
    closure,
    find_induced_path,
    load_graph,
    multipartite,
    nae_reduction,
    nae_solve,
    parse_graph,
    random_3colorable,
    random_3colorable_ptfree,
    serialize_graph,
    verify_coloring,
    verify_path,
    verify_refutation,
)

__all__ = [
    "Graph",
    "approx_color",
    "bound",
    "brute_three_color",
    "clique_join",
    "closure",
    "find_induced_path",
    "load_graph",
    "multipartite",
    "nae_reduction",
    "nae_solve",
    "parse_graph",
    "random_3colorable",
    "random_3colorable_ptfree",
    "serialize_graph",
    "verify_coloring",
    "verify_path",
    "verify_refutation",
]
