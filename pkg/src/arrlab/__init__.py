"""Pak-Stanley labelings of multigraphical hyperplane arrangements."""

from .central import (
    ConditionTriple,
    DuplicateWitness,
    central_arrangement,
    common_point,
    duplicate_witness,
    find_condition_triples,
    is_injective,
    label_multiset,
    label_of_reorientation,
)
from .graph import (
    GraphError,
    MultiDigraph,
    Reorientation,
    SimpleAcyclicDigraph,
    acyclic_reorientations,
    is_acyclic,
    normalize_increasing,
)
from .parking import format_label, g_parking_set, is_g_parking

__version__ = "0.1.0"
