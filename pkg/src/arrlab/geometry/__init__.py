"""Exact rational geometry of multigraphical arrangements."""

from .arrangement import (
    Arrangement,
    ArrangementError,
    Hyperplane,
    Region,
    Side,
    arrangement_to_json,
    graph_of_arrangement,
)
from .harness import (
    conjecture_evidence,
    duplicate_closure_report,
    local_injectivity_scan,
    verify_parking_theorems,
)
from .linsys import Constraint, LinearSystem, constraint, feasible_point, is_feasible
from .regions import (
    Flat,
    closures_intersect,
    enumerate_flats,
    enumerate_regions,
    fundamental_region,
    is_central,
    region_label,
    reorientation_of_region,
)
