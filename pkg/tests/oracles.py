"""Independent reference computations used only by the tests.

Nothing here imports the code paths it is used to check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

import numpy as np


def has_cycle_dfs(n, arcs):
    """Three-colour depth-first search for a directed cycle."""
    succ = {v: [] for v in range(1, n + 1)}
    for i, j in arcs:
        succ[i].append(j)
    colour = {v: 0 for v in succ}

    def visit(u):
        colour[u] = 1
        for w in succ[u]:
            if colour[w] == 1:
                return True
            if colour[w] == 0 and visit(w):
                return True
        colour[u] = 2
        return False

    return any(colour[v] == 0 and visit(v) for v in succ)


def brute_reorientations(n, edges):
    """All flip subsets (as frozensets) of ``edges`` giving an acyclic digraph, over all 2^m subsets."""
    edges = sorted(edges)
    out = []
    for bits in product((0, 1), repeat=len(edges)):
        arcs = [(j, i) if b else (i, j) for (i, j), b in zip(edges, bits)]
        if not has_cycle_dfs(n, arcs):
            out.append(frozenset(e for e, b in zip(edges, bits) if b))
    return out


def brute_labels(n, edges):
    labels = []
    for sw in brute_reorientations(n, edges):
        lam = [0] * n
        for i, _ in sw:
            lam[i - 1] += 1
        labels.append(tuple(lam))
    return sorted(labels)


def chromatic_at(n, edges, k):
    """Chromatic polynomial of the underlying simple graph at ``k`` by deletion-contraction."""
    und = frozenset(frozenset(e) for e in edges)
    return _chrom(frozenset(range(1, n + 1)), und, k)


def _chrom(verts, und, k):
    if not und:
        return k ** len(verts)
    e = next(iter(und))
    u, v = sorted(e)
    deleted = und - {e}
    contracted = set()
    for f in deleted:
        a, b = tuple(f)
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            contracted.add(frozenset((a, b)))
    return _chrom(verts, deleted, k) - _chrom(verts - {v}, frozenset(contracted), k)


def parking_by_definition(n, mult, lam):
    """Literal subset definition with Python sets; ``mult`` maps (i, j) to m_ij."""
    verts = range(1, n + 1)
    for size in range(1, n + 1):
        for subset in combinations(verts, size):
            inside = set(subset)
            if not any(
                sum(m for (a, b), m in mult.items() if a == i and b not in inside) >= lam[i - 1] for i in inside
            ):
                return False
    return True


def parking_set_by_definition(n, mult):
    out_deg = [sum(m for (a, _), m in mult.items() if a == i) for i in range(1, n + 1)]
    return sorted(lam for lam in product(*(range(d + 1) for d in out_deg)) if parking_by_definition(n, mult, lam))


def grid_hit(system, half_span=3, step_den=2):
    """First point of the grid {-half_span, ..., half_span} with spacing 1/step_den satisfying
    ``system``, checked in exact integer arithmetic, or None."""
    n = system.n
    ticks = np.arange(-half_span * step_den, half_span * step_den + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([ticks] * n), indexing="ij"), axis=-1).reshape(-1, n)
    ok = np.ones(len(grid), dtype=bool)
    for c in system.constraints:
        den = 1
        for v in (*c.coeffs, c.rhs):
            den = np.lcm(den, Fraction(v).denominator)
        a = np.array([int(Fraction(v) * den) for v in c.coeffs], dtype=np.int64)
        lhs = grid @ a  # equals den * step_den * (coeffs . x)
        rhs = int(Fraction(c.rhs) * den) * step_den
        ok &= {
            "==": lhs == rhs,
            "<=": lhs <= rhs,
            "<": lhs < rhs,
            ">=": lhs >= rhs,
            ">": lhs > rhs,
        }[c.op]
    idx = np.flatnonzero(ok)
    if not len(idx):
        return None
    return tuple(Fraction(int(v), step_den) for v in grid[idx[0]])


def _rref(rows):
    """Reduced row echelon form of a list of Fraction rows (last column is the rhs)."""
    m = [list(r) for r in rows]
    out, col, width = [], 0, len(m[0]) if m else 0
    while m and col < width:
        piv = next((r for r in m if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        m.remove(piv)
        piv = [v / piv[col] for v in piv]
        m = [[a - r[col] * b for a, b in zip(r, piv)] for r in m]
        out = [[a - r[col] * b for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        col += 1
    return tuple(tuple(r) for r in sorted(out, key=lambda r: [v != 0 for v in r], reverse=True))


def _affine_form(n, hyperplanes):
    """RREF of {sum x = 0} plus the given hyperplanes (i, j, a), or None if inconsistent."""
    rows = [[Fraction(1)] * n + [Fraction(0)]]
    for i, j, a in hyperplanes:
        r = [Fraction(0)] * (n + 1)
        r[i - 1], r[j - 1], r[n] = Fraction(1), Fraction(-1), Fraction(a)
        rows.append(r)
    red = _rref(rows)
    if any(all(v == 0 for v in r[:-1]) and r[-1] != 0 for r in red):
        return None
    return red


def zaslavsky_region_count(n, hyperplanes):
    """Regions of an affine arrangement in V: sum over subsets S with nonempty
    intersection of (-1)^(|S| - rank S)."""
    total = 0
    for size in range(len(hyperplanes) + 1):
        for sub in combinations(hyperplanes, size):
            form = _affine_form(n, sub)
            if form is None:
                continue
            rank = len(form) - 1  # minus the sum-zero row
            total += (-1) ** (size - rank)
    return total


def distinct_flats(n, hyperplanes):
    """Map canonical affine form -> dimension for every nonempty flat of >= 1 hyperplane."""
    found = {}
    for size in range(1, len(hyperplanes) + 1):
        for sub in combinations(hyperplanes, size):
            form = _affine_form(n, sub)
            if form is not None:
                found[form] = n - len(form)
    return found
