"""Enclosing depth of a query point with respect to a finite point set."""
from .exact_geom import (
    DegeneracyError,
    Instance,
    OrientedHyperplane,
    orientation,
    point_in_simplex,
    side_of_hyperplane,
    validate_instance,
)
from .general import GeneralWitness, cone_is_trivial, count_sets, enclosing_depth_general
from .generate import generate_instance
from .planar import PlanarWitness, check_enclosing, enclosing_depth_planar
from .radial import Interval, RadialOrder, intervals_pairwise_disjoint, opposite_neighbors, radial_order
from .reference import GuardError, enclosing_depth_bruteforce, encloses, tukey_depth_planar
from .result import DepthResult, Stats

__version__ = "0.1.0"


def enclosing_depth(inst, algorithm="auto", **kwargs):
    """Dispatch to the planar, general or analytic driver (``auto`` picks by dimension)."""
    if algorithm == "auto":
        algorithm = "planar" if inst.dimension == 2 else "general"
    if algorithm == "planar":
        return enclosing_depth_planar(inst)
    if algorithm == "general":
        return enclosing_depth_general(inst, **kwargs)
    raise ValueError(f"unknown algorithm {algorithm!r}")
