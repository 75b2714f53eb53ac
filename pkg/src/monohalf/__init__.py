"""Learning monophonic halfspaces on graphs."""

from .consistency import ConsistencyChecker, build_formula, candidate_sets, has_nontrivial_halfspace, mh_check
from .convexity import hull_set_greedy, is_mconvex, mhull
from .enumeration import all_halfspaces, count_bound, list_all_fpt, list_version_space
from .graph import Graph, GraphError, clique_number, load_graph, read_graph
from .shadows import edge_shadow, is_halfspace, shadow_reconstruct, sparse_shadow_cover

__version__ = "0.1.0"
