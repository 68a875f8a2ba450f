"""Prime graphs of finite simple groups and a checked replay of the recognition of E6(3) and 2E6(3)."""

from .arith import Factorization, factor, is_prime, largest_prime, valuation
from .catalog import GroupId, GroupSpecError, order, out_order, parse_group, pi
from .coclique import CocliqueResult, max_coclique, max_coclique_containing
from .gkgraph import GKGraph, encoded_graph, export, nonneighbors_of, parse_graph, rule_graph
from .ledger import CheckLedger, CheckResult, render, run_ledger
from .oracle import Spectrum, graph_from_spectrum, spectrum_alt, spectrum_l2
from .search import Constraint, SearchBounds, enumerate_groups, find

__version__ = "0.1.0"
