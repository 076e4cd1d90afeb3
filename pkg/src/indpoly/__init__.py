"""Exact independence polynomials, threshold graphs and antiregular graphs."""

from .antiregular import (AntiregularSpec, antiregular, antiregular_by_complement,
                          antiregular_complement, antiregular_poly_closed, antiregular_string,
                          lemma1_step, verify_antiregular_claims)
from .engine import (alpha, alternating_number, fibonacci_number, independence_poly,
                     independence_poly_bruteforce, independence_poly_of_join,
                     independence_poly_of_union, matching_poly)
from .graph import (CapacityError, Graph, GraphError, complement, complete_bipartite,
                    complete_graph, cycle_graph, degree_sequence, disjoint_union, empty_graph,
                    graph_from_edges, is_antiregular, is_konig_egervary, is_simplicial_graph,
                    line_graph, load_fixture, max_matching_size, path_graph, read_edge_list,
                    simplicial_vertices, zykov_sum)
from .polynomial import (Polynomial, RootReport, binomial_power, count_real_roots, evaluate,
                         is_log_concave, is_real_rooted, is_unimodal, real_roots, unimodal_mode)
from .threshold import (PatternSpec, SurveyRecord, build_threshold, enumerate_threshold,
                        is_threshold, pattern_survey, recognize_threshold, verify_uniqueness)

__version__ = "0.1.0"
