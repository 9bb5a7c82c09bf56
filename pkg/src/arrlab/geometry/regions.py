"""Region enumeration, labels, closures and flats of a multigraphical arrangement."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..graph import Reorientation, SimpleAcyclicDigraph
from ..parking import Label
from .arrangement import (
    Arrangement,
    ArrangementError,
    Region,
    Side,
    graph_of_arrangement,
    side_constraint,
    side_system,
)
from .linsys import Constraint, LinearSystem, feasible_point


def enumerate_regions(arr: Arrangement) -> list[Region]:
    """All regions, built by inserting the hyperplanes one at a time.

    Every kept region carries an interior point. When a hyperplane is inserted,
    the side holding that point survives for free. For the other side we first
    shoot a ray from the point along the hyperplane's normal; if the ray gets
    across before leaving the region, the region is split. Only when the ray is
    blocked is the exact feasibility kernel asked. Children are listed Near
    before Far.
    """
    n = arr.n
    origin = tuple(Fraction(0) for _ in range(n))
    current: list[tuple[tuple, tuple]] = [((), origin)]
    for k, h in enumerate(arr.hyperplanes):
        done = arr.hyperplanes[:k]
        sub = Arrangement(n, arr.hyperplanes[: k + 1])
        nxt = []
        for signs, pt in current:
            near_pt, far_pt = _split(sub, done, signs, h, pt)
            if near_pt is not None:
                nxt.append((signs + (Side.NEAR,), near_pt))
            if far_pt is not None:
                nxt.append((signs + (Side.FAR,), far_pt))
        current = nxt
    return [Region(arr, signs, pt) for signs, pt in current]


def _split(sub, done, signs, h, pt):
    v = h.value(pt)
    lo, hi = _ray_window(done, signs, h, pt)
    # moving by t along e_i - e_j changes x_i - x_j by 2t
    cross = (h.a - v) / 2
    if v == h.a:
        t = min(-lo, hi, Fraction(1)) / 2
        return _shift(pt, h, -t), _shift(pt, h, t)
    if v < h.a:
        if hi > cross:
            return pt, _shift(pt, h, _between(cross, hi))
        return pt, _point(sub, signs + (Side.FAR,))
    if lo < cross:
        return _shift(pt, h, -_between(-cross, -lo)), pt
    return _point(sub, signs + (Side.NEAR,)), pt


def _between(a, b):
    return a + 1 if b is None or b == _INF else (a + b) / 2


_INF = float("inf")


def _ray_window(done, signs, h, pt):
    """Open interval (lo, hi) of t keeping pt + t(e_i - e_j) inside the region."""
    lo, hi = -_INF, _INF
    for g, s in zip(done, signs):
        rate = (g.i == h.i) - (g.i == h.j) - (g.j == h.i) + (g.j == h.j)
        if not rate:
            continue
        # value along the ray: g(pt) + rate * t, must stay on side s of g.a
        t0 = (g.a - g.value(pt)) / rate
        if (s is Side.NEAR) == (rate > 0):
            hi = min(hi, t0)
        else:
            lo = max(lo, t0)
    return lo, hi


def _shift(pt, h, t):
    x = list(pt)
    x[h.i - 1] += t
    x[h.j - 1] -= t
    return tuple(x)


def _point(arr: Arrangement, signs) -> Optional[tuple]:
    return feasible_point(side_system(arr, signs))


def region_label(region: Region) -> Label:
    """Count, for each i, the hyperplanes (i, j, a) separating the region from the origin."""
    lam = [0] * region.arrangement.n
    for h, s in zip(region.arrangement.hyperplanes, region.signs):
        if s is Side.FAR:
            lam[h.i - 1] += 1
    return tuple(lam)


def fundamental_region(arr: Arrangement) -> Region:
    return Region(arr, tuple(Side.NEAR for _ in arr.hyperplanes), tuple(Fraction(0) for _ in range(arr.n)))


def is_central(arr: Arrangement) -> bool:
    eqs = [arr.ambient()] + [Constraint(h.row(arr.n), "==", h.a) for h in arr.hyperplanes]
    return feasible_point(LinearSystem(arr.n, tuple(eqs))) is not None


def central_digraph(arr: Arrangement) -> SimpleAcyclicDigraph:
    """Digraph of a central arrangement; raises if the arrangement is not central."""
    if not is_central(arr):
        raise ArrangementError("arrangement is not central")
    return SimpleAcyclicDigraph.from_multidigraph(graph_of_arrangement(arr))


def reorientation_of_region(region: Region) -> Reorientation:
    """Flip exactly the edges whose hyperplane separates the region from the origin."""
    base = central_digraph(region.arrangement)
    hs = region.arrangement.hyperplanes
    switched = frozenset((hs[k].i, hs[k].j) for k in region.far_indices())
    return Reorientation(base, switched)


def closures_intersect(r1: Region, r2: Region) -> bool:
    if r1.arrangement != r2.arrangement:
        raise ArrangementError("regions belong to different arrangements")
    arr = r1.arrangement
    cons = [arr.ambient()]
    for h, s1, s2 in zip(arr.hyperplanes, r1.signs, r2.signs):
        if s1 is s2:
            cons.append(side_constraint(h, arr.n, s1, closed=True))
        else:
            cons.append(Constraint(h.row(arr.n), "==", h.a))
    return feasible_point(LinearSystem(arr.n, tuple(cons))) is not None


@dataclass(frozen=True)
class Flat:
    """Nonempty intersection of hyperplanes inside V.

    ``hyperplanes`` lists every hyperplane containing the flat (indices into the
    arrangement), so two flats are equal iff these index sets are equal.
    """

    hyperplanes: tuple
    dim: int
    point: tuple


def _potentials(n: int, eqs) -> Optional[tuple]:
    """Solve difference equations x_i - x_j = a up to a shift per connected block.

    Returns (block, offset) per vertex, where x_v = x_block + offset and block is
    the smallest vertex of v's block, or None if the equations are inconsistent.
    """
    adj: dict = {v: [] for v in range(1, n + 1)}
    for h in eqs:
        adj[h.i].append((h.j, -h.a))
        adj[h.j].append((h.i, h.a))
    block = [0] * (n + 1)
    off: list = [None] * (n + 1)
    for root in range(1, n + 1):
        if off[root] is not None:
            continue
        block[root], off[root] = root, Fraction(0)
        stack = [root]
        while stack:
            u = stack.pop()
            for w, d in adj[u]:
                want = off[u] + d
                if off[w] is None:
                    block[w], off[w] = root, want
                    stack.append(w)
                elif off[w] != want:
                    return None
    return tuple(zip(block[1:], off[1:]))


def _contains(pot, h) -> bool:
    (bi, oi), (bj, oj) = pot[h.i - 1], pot[h.j - 1]
    return bi == bj and oi - oj == h.a


def enumerate_flats(arr: Arrangement) -> list[Flat]:
    """Every nonempty flat cut out by at least one hyperplane.

    All equations are differences x_i - x_j = a, so a flat is a partition of the
    vertices into blocks with fixed offsets inside each block; its dimension in V
    is the number of blocks minus one. Flats are grown breadth-first by adding
    one cutting hyperplane at a time, and each is keyed by the full set of
    hyperplanes containing it. Output is ordered by decreasing dimension, then
    by that index set.
    """
    n, hs = arr.n, arr.hyperplanes

    def closure(pot):
        return tuple(k for k, h in enumerate(hs) if _contains(pot, h))

    found: dict = {}
    frontier = []
    for h in hs:
        pot = _potentials(n, [h])
        key = closure(pot)
        if key not in found:
            found[key] = pot
            frontier.append(key)
    while frontier:
        nxt = []
        for key in frontier:
            covered = set(key)
            for k, h in enumerate(hs):
                if k in covered:
                    continue
                pot = _potentials(n, [hs[c] for c in key] + [h])
                if pot is None:
                    continue
                ckey = closure(pot)
                covered.update(ckey)
                if ckey not in found:
                    found[ckey] = pot
                    nxt.append(ckey)
        frontier = nxt
    flats = []
    for key, pot in found.items():
        dim = len({b for b, _ in pot}) - 1
        flats.append(Flat(key, dim, _flat_point(arr, key)))
    flats.sort(key=lambda f: (-f.dim, f.hyperplanes))
    return flats


def _flat_point(arr: Arrangement, indices) -> tuple:
    hs = [arr.hyperplanes[k] for k in indices]
    eqs = [arr.ambient()] + [Constraint(h.row(arr.n), "==", h.a) for h in hs]
    return feasible_point(LinearSystem(arr.n, tuple(eqs)))
