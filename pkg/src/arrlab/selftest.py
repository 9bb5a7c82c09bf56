"""Golden cases and desk-scale invariant checks, runnable as ``arrlab selftest``."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import central, graph, parking
from .geometry import arrangement as garr
from .geometry import harness, linsys, regions
from .graph import SimpleAcyclicDigraph
from . import sampling

FIG1 = SimpleAcyclicDigraph(3, ((1, 2), (1, 3), (2, 3)))
EXAMPLE = SimpleAcyclicDigraph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4)))

FIG1_LABELS = {(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0), (2, 1, 0)}
EXAMPLE_DUPLICATES = {(2, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (2, 1, 0, 0), (1, 2, 0, 0), (3, 1, 0, 0)}


@dataclass
class CaseResult:
    case_id: str
    ok: bool
    detail: str = ""


CASES: list[tuple[str, Callable[[], tuple[bool, str]]]] = []


def case(case_id):
    def deco(fn):
        CASES.append((case_id, fn))
        return fn

    return deco


@case("figure1-reorientations")
def _fig1_reorientations():
    n = len(graph.acyclic_reorientations(FIG1))
    return n == 6, f"{n} acyclic reorientations"


@case("figure1-labels")
def _fig1_labels():
    ms = central.label_multiset(FIG1)
    ok = set(ms) == FIG1_LABELS and all(c == 1 for c in ms.values())
    return ok, f"labels {sorted(ms.elements())}"


@case("figure1-switch-labels")
def _fig1_switch_labels():
    one = central.label_of_reorientation(graph.Reorientation(FIG1, frozenset({(1, 2)})))
    full = central.label_of_reorientation(graph.Reorientation(FIG1, frozenset(FIG1.edges)))
    return one == (1, 0, 0) and full == (2, 1, 0), f"{one}, {full}"


@case("figure1-regions")
def _fig1_regions():
    arr = central.central_arrangement(FIG1)
    rs = regions.enumerate_regions(arr)
    labels = [regions.region_label(r) for r in rs]
    fund = regions.fundamental_region(arr)
    fund_ok = regions.region_label(fund) == (0, 0, 0) and not regions.reorientation_of_region(fund).switched
    ok = len(rs) == 6 and set(labels) == FIG1_LABELS and len(set(labels)) == 6 and fund_ok
    return ok, f"{len(rs)} regions, labels {sorted(labels)}"


@case("figure1-parking-set")
def _fig1_parking():
    ps = parking.g_parking_set(FIG1)
    return set(ps) == FIG1_LABELS and len(ps) == 6, f"{ps}"


@case("figure1-injective")
def _fig1_injective():
    ok = central.is_injective(FIG1) and not central.find_condition_triples(FIG1)
    return ok, ""


@case("figure1-common-point")
def _fig1_point():
    c = central.common_point(3)
    arr = central.central_arrangement(FIG1)
    ok = c == (1, 0, -1) and all(h.value(c) == h.a for h in arr.hyperplanes)
    pt = linsys.feasible_point(
        linsys.LinearSystem(3, (arr.ambient(),) + tuple(linsys.Constraint(h.row(3), "==", h.a) for h in arr.hyperplanes))
    )
    return ok and pt == c, f"common point {c}, kernel {pt}"


@case("example-injective")
def _ex_injective():
    return not central.is_injective(EXAMPLE), ""


@case("example-triples")
def _ex_triples():
    ts = {(t.k, t.i, t.j) for t in central.find_condition_triples(EXAMPLE)}
    return {(1, 3, 4), (2, 3, 4)} <= ts, f"{sorted(ts)}"


@case("example-witness-134")
def _ex_w134():
    w = central.duplicate_witness(EXAMPLE, central.ConditionTriple(1, 3, 4))
    ok = (
        w.constructed
        and w.tau == (2, 0, 0, 0)
        and w.first.switched == {(1, 2), (1, 3)}
        and w.second.switched == {(1, 2), (1, 4)}
    )
    return ok, f"tau {w.tau}"


@case("example-witness-234")
def _ex_w234():
    w = central.duplicate_witness(EXAMPLE, central.ConditionTriple(2, 3, 4))
    ok = w.constructed and w.tau == (0, 1, 0, 0) and w.first.switched == {(2, 3)} and w.second.switched == {(2, 4)}
    return ok, f"tau {w.tau}"


@case("example-duplicates")
def _ex_dups():
    ms = central.label_multiset(EXAMPLE)
    dups = {lam for lam, c in ms.items() if c > 1}
    return sum(ms.values()) == 18 and dups == EXAMPLE_DUPLICATES, f"{sorted(dups)}"


@case("example-regions")
def _ex_regions():
    arr = central.central_arrangement(EXAMPLE)
    rs = regions.enumerate_regions(arr)
    ms = Counter(regions.region_label(r) for r in rs)
    return len(rs) == 18 and ms == central.label_multiset(EXAMPLE), f"{len(rs)} regions"


@case("example-parking-set")
def _ex_parking():
    ps = parking.g_parking_set(EXAMPLE)
    return set(ps) == set(central.label_multiset(EXAMPLE)) and len(ps) == 12, f"{len(ps)} parking functions"


@case("example-local-scan")
def _ex_scan():
    scan = harness.local_injectivity_scan(central.central_arrangement(EXAMPLE))
    point = [f for f in scan.flats if f.flat.dim == 0]
    ok = len(point) == 1 and not point[0].injective and point[0].flat.point == central.common_point(4)
    return ok, f"{len(scan.non_injective)} non-injective flats"


@case("multiplicity-formula")
def _mult():
    arr = garr.Arrangement(2, ((1, 2, 1), (1, 2, 2), (2, 1, 1)))
    g = garr.graph_of_arrangement(arr)
    return g.multiplicity(1, 2) == 2 and g.multiplicity(2, 1) == 1, f"{g}"


@case("invariant-theorem-main-n4")
def _inv_main():
    bad = []
    for n in range(1, 5):
        for g in sampling.all_normalized_digraphs(n):
            dup = any(c > 1 for c in central.label_multiset(g).values())
            if central.is_injective(g) == dup or central.is_injective_order_free(g) == dup:
                bad.append(g.edges)
    return not bad, f"{len(bad)} discrepancies"


@case("invariant-cross-oracle-n4")
def _inv_cross():
    bad = []
    for n in range(1, 5):
        for g in sampling.all_normalized_digraphs(n):
            rs = regions.enumerate_regions(central.central_arrangement(g))
            if Counter(regions.region_label(r) for r in rs) != central.label_multiset(g):
                bad.append(g.edges)
    return not bad, f"{len(bad)} discrepancies"


@case("invariant-witnesses-n4")
def _inv_witness():
    bad = 0
    for n in range(3, 5):
        for g in sampling.all_normalized_digraphs(n):
            for t in central.find_condition_triples(g):
                w = central.duplicate_witness(g, t)
                if not w.constructed or w.first == w.second:
                    bad += 1
                elif central.label_of_reorientation(w.first) != central.label_of_reorientation(w.second):
                    bad += 1
    return bad == 0, f"{bad} invalid witnesses"


@case("invariant-parking-theorems")
def _inv_parking():
    rng = random.Random(7)
    bad = 0
    for _ in range(25):
        arr = sampling.random_arrangement(rng.randint(2, 4), rng.randint(1, 5), rng)
        if not harness.verify_parking_theorems(arr).ok:
            bad += 1
    return bad == 0, f"{bad} failures in 25 random arrangements"


@case("invariant-feasibility-witnesses")
def _inv_feas():
    rng = random.Random(11)
    bad = 0
    for _ in range(100):
        s = sampling.random_linear_system(rng)
        pt = linsys.feasible_point(s)
        if pt is not None and not s.satisfied_by(pt):
            bad += 1
    known = linsys.LinearSystem(
        3,
        (
            linsys.constraint((1, 1, 1), "==", 0),
            linsys.constraint((1, -1, 0), ">", 1),
            linsys.constraint((0, 1, -1), ">", 1),
        ),
    )
    empty = linsys.LinearSystem(2, (linsys.constraint((1, -1), ">", 1), linsys.constraint((-1, 1), ">", 1)))
    ok = bad == 0 and linsys.is_feasible(known) and not linsys.is_feasible(empty)
    return ok, f"{bad} bad witnesses"


def run_selftest() -> list[CaseResult]:
    results = []
    for case_id, fn in CASES:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed case, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CaseResult(case_id, bool(ok), detail))
    return results
