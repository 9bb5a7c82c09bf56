"""Experimental checks on arrangements: parking theorems, duplicate-label classes, flats.

The two open conjectures about duplicate labels are only ever *recorded* here:
the reports say whether the evidence confirms them, and a failure is a
counterexample to report, not an error.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .. import central
from ..graph import SimpleAcyclicDigraph, normalize_increasing
from ..parking import Label, g_parking_set, is_g_parking
from .arrangement import Arrangement, graph_of_arrangement
from .regions import Flat, Region, closures_intersect, enumerate_flats, enumerate_regions, region_label


@dataclass
class LabelClass:
    label: Label
    regions: list  # indices into the region list
    touching_pairs: list  # index pairs whose closures meet
    connected: bool


@dataclass
class ClosureReport:
    regions: list
    classes: list = field(default_factory=list)

    @property
    def has_duplicates(self) -> bool:
        return bool(self.classes)

    @property
    def all_connected(self) -> bool:
        """Evidence for the connectivity conjecture; vacuously true without duplicates."""
        return all(c.connected for c in self.classes)

    @property
    def some_pair_touches(self) -> bool:
        return any(c.touching_pairs for c in self.classes)

    @property
    def local_duplicate_ok(self) -> bool:
        """Duplicates exist only if some equal-labelled pair shares a boundary point."""
        return not self.has_duplicates or self.some_pair_touches


@dataclass
class FlatVerdict:
    flat: Flat
    digraph: SimpleAcyclicDigraph  # of the subarrangement through the flat, original vertex names
    triples: list  # condition triples in normalized coordinates
    permutation: tuple

    @property
    def injective(self) -> bool:
        return not self.triples


@dataclass
class LocalScan:
    flats: list  # list[FlatVerdict]

    @property
    def non_injective(self) -> list:
        return [f for f in self.flats if not f.injective]

    @property
    def locally_injective(self) -> bool:
        return not self.non_injective


@dataclass
class ParkingReport:
    labels: list
    parking: list
    non_parking: list  # region labels failing the parking test
    unattained: list  # parking functions no region carries

    @property
    def ok(self) -> bool:
        return not self.non_parking and not self.unattained


def _label_classes(regions: list[Region]) -> dict:
    by_label = defaultdict(list)
    for idx, r in enumerate(regions):
        by_label[region_label(r)].append(idx)
    return by_label


def duplicate_closure_report(arr: Arrangement, regions: list[Region] | None = None) -> ClosureReport:
    """Closure-intersection graph of every label class with two or more regions.

    The closure of a finite union of closed convex sets is connected iff their
    intersection graph is, so that graph decides connectivity. Union-find skips
    pairs that are already known to be in one component; the touching pairs
    recorded are therefore a spanning subset, plus at least one pair whenever
    any pair touches.
    """
    if regions is None:
        regions = enumerate_regions(arr)
    report = ClosureReport(regions)
    for lam, members in sorted(_label_classes(regions).items()):
        if len(members) < 2:
            continue
        parent = {m: m for m in members}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        touching = []
        for a_pos, a in enumerate(members):
            for b in members[a_pos + 1:]:
                ra, rb = find(a), find(b)
                if ra == rb:
                    continue
                if closures_intersect(regions[a], regions[b]):
                    parent[ra] = rb
                    touching.append((a, b))
        roots = {find(m) for m in members}
        report.classes.append(LabelClass(lam, members, touching, len(roots) == 1))
    return report


def local_injectivity_scan(arr: Arrangement) -> LocalScan:
    """Decide injectivity of the subarrangement through every flat.

    The hyperplanes through a flat all share a point, so their digraph is simple
    and acyclic and the condition-triple test applies after normalization.
    """
    verdicts = []
    for flat in enumerate_flats(arr):
        sub = arr.subarrangement(flat.hyperplanes)
        g = SimpleAcyclicDigraph.from_multidigraph(graph_of_arrangement(sub))
        h, perm = normalize_increasing(g)
        verdicts.append(FlatVerdict(flat, g, central.find_condition_triples(h), perm))
    return LocalScan(verdicts)


def verify_parking_theorems(arr: Arrangement, regions: list[Region] | None = None) -> ParkingReport:
    """Region labels must all be G-parking and must cover every G-parking function."""
    if regions is None:
        regions = enumerate_regions(arr)
    g = graph_of_arrangement(arr)
    labels = sorted({region_label(r) for r in regions})
    parking = g_parking_set(g)
    non_parking = [lam for lam in labels if not is_g_parking(g, lam)]
    attained = set(labels)
    unattained = [lam for lam in parking if lam not in attained]
    return ParkingReport(labels, parking, non_parking, unattained)


@dataclass
class ConjectureEvidence:
    """Both conjecture verdicts for one arrangement."""

    arrangement: Arrangement
    closure: ClosureReport
    scan: LocalScan

    @property
    def has_duplicates(self) -> bool:
        return self.closure.has_duplicates

    @property
    def local_global_ok(self) -> bool:
        # duplicates somewhere must show up at some flat
        return not self.has_duplicates or not self.scan.locally_injective

    @property
    def connected_ok(self) -> bool:
        return self.closure.all_connected

    @property
    def formulations_agree(self) -> bool:
        """Touching equal-labelled regions exist iff some flat is non-injective."""
        return self.closure.some_pair_touches == (not self.scan.locally_injective)

    @property
    def counterexample(self) -> bool:
        return not (self.local_global_ok and self.connected_ok)


def conjecture_evidence(arr: Arrangement, regions: list[Region] | None = None) -> ConjectureEvidence:
    if regions is None:
        regions = enumerate_regions(arr)
    return ConjectureEvidence(arr, duplicate_closure_report(arr, regions), local_injectivity_scan(arr))
