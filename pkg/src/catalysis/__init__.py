"""Exact tools for entanglement catalysis of probabilistic pure-state conversions."""

from .catalyst2d import RatioRegion, exists_2d, is_useful_2d, pair_bounds, region2
from .catalystnd import ConstructionTrace, alpha_bounds, construct_catalyst, exists_catalyst
from .oracle import CatalystReport, catalyzed_prob, scan_region2, search_catalyst, verify_useful
from .probvec import ProbVec, common_dimension, make_probvec, majorized_by, parse_vector, tail_sums, tensor
from .vidal import TransformPair, catalysis_admissible, critical_set, make_pair, max_prob

__all__ = [
    "CatalystReport",
    "ConstructionTrace",
    "ProbVec",
    "RatioRegion",
    "TransformPair",
    "alpha_bounds",
    "catalysis_admissible",
    "catalyzed_prob",
    "common_dimension",
    "construct_catalyst",
    "critical_set",
    "exists_2d",
    "exists_catalyst",
    "is_useful_2d",
    "majorized_by",
    "make_pair",
    "make_probvec",
    "max_prob",
    "pair_bounds",
    "parse_vector",
    "region2",
    "scan_region2",
    "search_catalyst",
    "tail_sums",
    "tensor",
    "verify_useful",
]
