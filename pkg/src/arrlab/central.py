"""Central multigraphical arrangements of simple acyclic digraphs.

Regions of a central arrangement correspond to acyclic reorientations of its
digraph, and the Pak-Stanley label of a region counts, per vertex, the edges
leaving that vertex which the reorientation flips. Duplicate labels occur
exactly when some vertex k has out-neighbours i < j with no edge i -> j
(vertices in increasing order).
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .geometry.arrangement import Arrangement, Hyperplane
from .graph import (
    GraphError,
    Reorientation,
    SimpleAcyclicDigraph,
    acyclic_reorientations,
    normalize_increasing,
)
from .parking import Label

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class ConditionTriple:
    k: int
    i: int
    j: int

    def as_list(self) -> list[int]:
        return [self.k, self.i, self.j]


@dataclass(frozen=True)
class DuplicateWitness:
    triple: Optional[ConditionTriple]
    first: Reorientation
    second: Reorientation
    tau: Label
    constructed: bool

    def to_json(self) -> dict:
        return {
            "triple": self.triple.as_list() if self.triple else None,
            "first_switched": [list(e) for e in self.first.sorted_switched()],
            "second_switched": [list(e) for e in self.second.sorted_switched()],
            "tau": list(self.tau),
            "constructed": self.constructed,
        }


def _require_increasing(g: SimpleAcyclicDigraph) -> None:
    if not g.is_increasing():
        raise GraphError("graph must be normalized (every edge i -> j with i < j)")


def common_point(n: int) -> tuple[Fraction, ...]:
    """Point lying on x_i - x_j = j - i for every i < j; its coordinates sum to 0.

    Coordinates are (n+1)/2 - i, i.e. (k, ..., 0, ..., -k) for n = 2k + 1 and
    (k - 1/2, ..., 1/2, -1/2, ..., -(k - 1/2)) for n = 2k.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    half = Fraction(n + 1, 2)
    return tuple(half - i for i in range(1, n + 1))


def central_arrangement(g: SimpleAcyclicDigraph) -> Arrangement:
    """One hyperplane x_i - x_j = j - i per edge i -> j of a normalized graph."""
    _require_increasing(g)
    return Arrangement(g.n, tuple(Hyperplane(i, j, Fraction(j - i)) for i, j in g.edges))


def label_of_reorientation(r: Reorientation) -> Label:
    lam = [0] * r.base.n
    for i, _ in r.switched:
        lam[i - 1] += 1
    return tuple(lam)


def label_multiset(g: SimpleAcyclicDigraph) -> Counter:
    """Counter of labels over all acyclic reorientations of ``g``."""
    return Counter(label_of_reorientation(r) for r in acyclic_reorientations(g))


def labels_with_reorientations(g: SimpleAcyclicDigraph) -> list[tuple[Reorientation, Label]]:
    return [(r, label_of_reorientation(r)) for r in acyclic_reorientations(g)]


def duplicated_labels(g: SimpleAcyclicDigraph) -> list[Label]:
    return sorted(lam for lam, c in label_multiset(g).items() if c > 1)


def find_condition_triples(g: SimpleAcyclicDigraph) -> list[ConditionTriple]:
    _require_increasing(g)
    eset = set(g.edges)
    out = []
    for k in range(1, g.n + 1):
        nbrs = sorted(j for a, j in g.edges if a == k)
        for i, j in combinations(nbrs, 2):
            if (i, j) not in eset:
                out.append(ConditionTriple(k, i, j))
    return out


def is_injective(g: SimpleAcyclicDigraph) -> bool:
    h, _ = normalize_increasing(g)
    return not find_condition_triples(h)


def is_injective_order_free(g: SimpleAcyclicDigraph) -> bool:
    """Same criterion without relabeling: every out-neighbourhood is pairwise adjacent."""
    eset = set(g.edges)
    for k in range(1, g.n + 1):
        for u, v in combinations(g.out_neighbors(k), 2):
            if (u, v) not in eset and (v, u) not in eset:
                return False
    return True


def construction_edges(g: SimpleAcyclicDigraph, t: ConditionTriple) -> list[tuple[int, int]]:
    """Edges the explicit witness flips in both reorientations.

    These are k -> v for v strictly between k and j other than i, and i -> w for w
    strictly between i and j; pairs that are not edges of ``g`` are skipped.
    """
    k, i, j = t.k, t.i, t.j
    wanted = [(k, v) for v in range(k + 1, j) if v != i] + [(i, w) for w in range(i + 1, j)]
    eset = set(g.edges)
    return [e for e in wanted if e in eset]


def all_construction_edges_present(g: SimpleAcyclicDigraph, t: ConditionTriple) -> bool:
    k, i, j = t.k, t.i, t.j
    wanted = [(k, v) for v in range(k + 1, j) if v != i] + [(i, w) for w in range(i + 1, j)]
    eset = set(g.edges)
    return all(e in eset for e in wanted)


def tau_formula(n: int, t: ConditionTriple) -> Label:
    """Label predicted for the witness when every construction edge exists."""
    lam = [0] * n
    lam[t.k - 1] = t.j - t.k - 1
    lam[t.i - 1] = t.j - t.i - 1
    return tuple(lam)


def _check_triple(g: SimpleAcyclicDigraph, t: ConditionTriple) -> None:
    eset = set(g.edges)
    if not (t.k < t.i < t.j) or (t.k, t.i) not in eset or (t.k, t.j) not in eset or (t.i, t.j) in eset:
        raise GraphError(f"({t.k}, {t.i}, {t.j}) is not a condition triple of this graph")


def duplicate_witness(g: SimpleAcyclicDigraph, t: ConditionTriple) -> DuplicateWitness:
    """Two distinct acyclic reorientations of ``g`` sharing a label, built from ``t``.

    Falls back to exhaustive search (``constructed=False``) if the explicit pair
    fails validation.
    """
    _require_increasing(g)
    _check_triple(g, t)
    base = construction_edges(g, t)
    try:
        first = Reorientation(g, frozenset(base + [(t.k, t.i)]))
        second = Reorientation(g, frozenset(base + [(t.k, t.j)]))
    except GraphError as exc:
        log.warning("constructed witness for %s is cyclic (%s); searching exhaustively", t, exc)
    else:
        tau = label_of_reorientation(first)
        if tau == label_of_reorientation(second):
            return DuplicateWitness(t, first, second, tau, True)
        log.warning("constructed witness for %s has unequal labels; searching exhaustively", t)
    return _brute_force_witness(g, t)


def _brute_force_witness(g: SimpleAcyclicDigraph, t: Optional[ConditionTriple]) -> DuplicateWitness:
    seen: dict = {}
    for r, lam in labels_with_reorientations(g):
        if lam in seen:
            return DuplicateWitness(t, seen[lam], r, lam, False)
        seen[lam] = r
    raise GraphError("labeling is injective; no duplicate witness exists")
