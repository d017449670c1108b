"""Combinatorial scheduling toolkit: hospital bed assignment solved exactly
via a max-flow reduction, and course timetabling solved approximately via
greedy graph coloring, with verification oracles and a benchmark harness.
"""

from .coloring import (
    Coloring,
    ScheduleInstance,
    coloring_instance_to_csp,
    dsatur,
    exact_chromatic_number,
    exact_coloring,
    is_schedulable,
    translate_certificate,
    validate_coloring,
    welsh_powell,
)
from .errors import ConfigError, GuardError
from .generators import GenConfig, gen_conflict_graph, gen_hospital
from .graphs import ConflictGraph, FlowNetwork, GraphError
from .hospital import (
    Assignment,
    HospitalInstance,
    brute_force_max_matching,
    build_flow_network,
    make_instance,
    solve,
    validate,
)
from .maxflow import FlowResult, ResidualState, bfs_augmenting_path, max_flow, saturated_edges
from .validation import ValidationReport

__all__ = [
    "Assignment",
    "Coloring",
    "ConfigError",
    "ConflictGraph",
    "FlowNetwork",
    "FlowResult",
    "GenConfig",
    "GraphError",
    "GuardError",
    "HospitalInstance",
    "ResidualState",
    "ScheduleInstance",
    "ValidationReport",
    "bfs_augmenting_path",
    "brute_force_max_matching",
    "build_flow_network",
    "coloring_instance_to_csp",
    "dsatur",
    "exact_chromatic_number",
    "exact_coloring",
    "gen_conflict_graph",
    "gen_hospital",
    "is_schedulable",
    "make_instance",
    "max_flow",
    "saturated_edges",
    "solve",
    "translate_certificate",
    "validate",
    "validate_coloring",
    "welsh_powell",
]
