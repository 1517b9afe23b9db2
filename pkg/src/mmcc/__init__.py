"""Min max correlation clustering on complete signed graphs.

Positive edges are given as an ordinary graph; every other pair is a
negative edge. The package provides a combinatorial lower bound, a
4-approximation, greedy joining local search, a brute-force oracle for
small graphs, a planted-partition generator and a benchmark harness.
"""
from .approx import approx_4, approx_4_run, majority_cluster
from .bench import BenchConfig, BenchRecord, run_bench, sweep_synthetic
from .bound import ClbCertificate, check_feasibility, components_pi_d, compute_clb
from .estimators import CombinatorialLowerBound, MinMaxCorrelationClustering
from .exact import ExactResult, bell, brute_force_opt, verify_lemma1
from .graph import (CapacityError, Graph, IntersectionTable, ParseError, build_intersection_table,
                    closed_neighborhood, parse_edge_list, read_edge_list)
from .greedy import ALL_CHOICES, VARIANT_A, DesignChoices, greedy_join, run_A, run_A_star
from .partition import Partition, join_clusters, max_disagreement, node_disagreement, singletons
from .synth import SynthSpec, planted_partition_graph

__all__ = [
    "ALL_CHOICES", "BenchConfig", "BenchRecord", "CapacityError", "ClbCertificate",
    "CombinatorialLowerBound", "DesignChoices", "ExactResult", "Graph", "IntersectionTable",
    "MinMaxCorrelationClustering", "ParseError", "Partition", "SynthSpec", "VARIANT_A",
    "approx_4", "approx_4_run", "bell", "brute_force_opt", "build_intersection_table",
    "check_feasibility", "closed_neighborhood", "components_pi_d", "compute_clb", "greedy_join",
    "join_clusters", "majority_cluster", "max_disagreement", "node_disagreement",
    "parse_edge_list", "planted_partition_graph", "read_edge_list", "run_A", "run_A_star",
    "run_bench", "singletons", "sweep_synthetic", "verify_lemma1",
]
