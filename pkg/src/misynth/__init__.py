"""Synthesis of bipartite graphs with a prescribed number of maximal
independent sets, in near-optimal vertex count."""

__version__ = "1.0.0"

from .bipartite import (BipartiteGraph, GraphError, VertexSubset, add_biclique,
                        add_matching, complete_bipartite, complete_join, corona,
                        delete_vertices, disjoint_union, empty_graph, flip,
                        matching, path, single_vertex, star)
from .constructions import (ConstructionStep, add_matching_step, append_periodic,
                            attach_gadget, double_plus_one, mersenne_forest,
                            multiply_shift_add, plus_two, staircase_count,
                            staircase_graph, sum_graphs)
from .gadgets import (BaseTable, GadgetFamily, GadgetValidationError, MarkedGadget,
                      load_base_table, load_gamma_family, select_gadget)
from .oracle import (OracleCapError, count_is, count_mis, count_mis_hitting,
                     enumerate_mis, h_values)
from .serialize import (from_dimacs, from_json, parse_graph, to_dimacs, to_json,
                        to_json_dict)
from .synthesizer import (BinaryPattern, RealizationResult, VertexCertificate,
                          gadget_chain, realization_size, realize, realize_pattern,
                          sweep_vertex_counts, vertex_report)

__all__ = [
    "BipartiteGraph", "GraphError", "VertexSubset", "add_biclique", "add_matching",
    "complete_bipartite", "complete_join", "corona", "delete_vertices",
    "disjoint_union", "empty_graph", "flip", "matching", "path", "single_vertex",
    "star",
    "ConstructionStep", "add_matching_step", "append_periodic", "attach_gadget",
    "double_plus_one", "mersenne_forest", "multiply_shift_add", "plus_two",
    "staircase_count", "staircase_graph", "sum_graphs",
    "BaseTable", "GadgetFamily", "GadgetValidationError", "MarkedGadget",
    "load_base_table", "load_gamma_family", "select_gadget",
    "OracleCapError", "count_is", "count_mis", "count_mis_hitting",
    "enumerate_mis", "h_values",
    "from_dimacs", "from_json", "parse_graph", "to_dimacs", "to_json",
    "to_json_dict",
    "BinaryPattern", "RealizationResult", "VertexCertificate", "gadget_chain",
    "realization_size", "realize", "realize_pattern", "sweep_vertex_counts",
    "vertex_report",
]
