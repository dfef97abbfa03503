"""Path-pairable graphs from blown-up paths: constructions, an edge-disjoint
sweep router, and exhaustive checkers for small instances."""

from .blob_routers import brute_force_route, inner_route, star_route
from .blowup import BlobSpec, BlownUpPath, check_eq1, expand, lemma_preconditions
from .constructions import (
    Thm1Params,
    Thm2Params,
    counterexample_p5,
    thm1_graph,
    thm2_graph,
    thm2_sequence,
)
from .graph import Graph, bfs_layers, cut_edges, degeneracy, diameter
from .oracle import diameter_bound_report, is_path_pairable
from .sweep import Pairing, Routing, route, validate_routing

__version__ = "0.1.0"
