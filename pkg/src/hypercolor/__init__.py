"""Proper hypergraph colorings from bounded-degree images, and dynamic graph colorings."""
from .core import (
    Coloring,
    Hypergraph,
    Image,
    Multigraph,
    Parameters,
    compute_k,
    hypergraph_stats,
    parameters,
    parse_coloring,
    parse_instance,
    write_instance,
)
from .dynamic import dynamic_color, neighborhood_hypergraph
from .image_builder import build_image
from .theorem_one import UseKPlusOne, color_k, color_k_plus_1
from .verify import verify_dynamic, verify_image, verify_proper_graph, verify_proper_hypergraph

__all__ = [
    "Coloring", "Hypergraph", "Image", "Multigraph", "Parameters",
    "compute_k", "hypergraph_stats", "parameters",
    "parse_coloring", "parse_instance", "write_instance",
    "build_image", "color_k", "color_k_plus_1", "UseKPlusOne",
    "dynamic_color", "neighborhood_hypergraph",
    "verify_dynamic", "verify_image", "verify_proper_graph", "verify_proper_hypergraph",
]
