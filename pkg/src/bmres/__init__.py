"""Minimal generalized Barile-Macchia resolutions of monomial ideals."""

from .exceptions import (
    ArgumentError,
    CapacityError,
    DimensionError,
    DomainError,
    EmptyIdealError,
    InconsistencyError,
    MatchingError,
    ParseError,
    SchemaError,
    TheoremViolation,
)
from .io import parse_ideal, parse_inline
from .matching import (
    AcyclicMatching,
    OrderingFamily,
    SetType,
    TotalOrdering,
    barile_macchia,
    bridges,
    classify,
    gaps,
    generalized_bm,
    is_true_gap,
    sbridge,
    validate_matching,
)
from .monomials import LcmLattice, MonomialIdeal, artinian_reduction, build_lcm_lattice, lcm_of, minimalize
from .morse import GradientPath, build_morse, critical_cells, edge_weight, gradient_paths
from .search import SearchConfig, SearchOutcome, main_theorem_pipeline, proof_guided_ordering, search_family, sp_statistic
from .taylor import ChainComplex, SubsetGraph, build_graph, build_taylor, face_sign
from .verification import BettiTable, betti_oracle, check_resolution, find_bad_paths, is_minimal, minimality_certificate

__version__ = "0.1.0"
