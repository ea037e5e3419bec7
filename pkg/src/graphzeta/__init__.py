"""Jacobians, Tutte polynomials and two-variable zeta functions of finite graphs."""

from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    genus,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    to_graph6,
    wedge_sum,
)
from .canonical import canonical_form, canonical_key
from .enumerate import enumerate_connected_graphs, enumerate_graphs
from .linalg import determinant, smith_normal_form
from .jacobian import (
    AbelianGroup,
    duality_pairing,
    jacobian_group,
    jacobian_presentation,
    pairing_automorphism_count,
    spanning_tree_count,
)
from .divisors import RankCalculator, q_reduce, rank_h, rank_r
from .poly import BivariatePolynomial
from .zeta import RankCensus, ZetaFunction, rank_census, zeta_function
from .tutte import tutte_polynomial
from .rotor import Rotor, RotorGluing, rotor_pair
from .harness import ConsistencyError, InvariantReport, compute_invariants, search_pairs
from .experiment import random_graph_experiment

__version__ = "0.1.0"
