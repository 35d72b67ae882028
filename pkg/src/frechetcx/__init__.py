"""Fréchet-type distances and lowest synchronized motions between simplicial complexes."""

try:
    from importlib.metadata import version as _version

    __version__ = _version("artifact")
except Exception:  # pragma: no cover - running from a source tree
    __version__ = "0.1.0"

from .bottleneck import WeightedGraph, bottleneck_path, lazy_bottleneck, prim_path
from .cellgraph import CellGraph
from .complex import Curve, DagComplex, SimplicialComplex, ValidationError
from .costs import (HullPerimeter, MEBRadius, PairwiseDistance, StarMax, WeightedSum,
                    make_cost)
from .cpacked import aprx_mean, approx_distances, decider, simplify
from .dagfrechet import comp_fr, dag_decide, extract, monotonicity_radius, sample_critical
from .frechet import (k_complex_paths, lowest_path, mean_curve, min_perimeter_motion,
                      walk_dogs, weak_frechet, weak_frechet_paths)
from .geometry import Simplex, min_enclosing_ball, simplex_distance
