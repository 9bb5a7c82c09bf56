"""G-parking functions of a directed multigraph."""

from __future__ import annotations

from itertools import product
from typing import Sequence, Tuple

from .graph import MultiDigraph, SimpleAcyclicDigraph

Label = Tuple[int, ...]


def format_label(lam: Sequence[int]) -> str:
    return "⟨" + ",".join(str(v) for v in lam) + "⟩"


def _as_multi(g) -> MultiDigraph:
    if isinstance(g, SimpleAcyclicDigraph):
        return g.to_multidigraph()
    return g


def _out_rows(g: MultiDigraph) -> list[list[tuple[int, int]]]:
    # rows[i]: (bit of head j, multiplicity) for every edge i -> j, index 0 unused
    rows: list[list[tuple[int, int]]] = [[] for _ in range(g.n + 1)]
    for (i, j), m in g.edges.items():
        rows[i].append((1 << (j - 1), m))
    return rows


def _is_parking(n: int, rows, lam: Sequence[int]) -> bool:
    for subset in range(1, 1 << n):
        for i in range(1, n + 1):
            if not subset >> (i - 1) & 1:
                continue
            leaving = sum(m for bit, m in rows[i] if not subset & bit)
            if leaving >= lam[i - 1]:
                break
        else:
            return False
    return True


def is_g_parking(g, lam: Sequence[int]) -> bool:
    """Check the subset condition over every non-empty ``I`` in ``1..n``.

    ``lam`` is parking iff each such ``I`` contains a vertex ``i`` whose number of
    edges leaving ``I`` (with multiplicity) is at least ``lam[i - 1]``.
    """
    g = _as_multi(g)
    if len(lam) != g.n:
        raise ValueError(f"label has length {len(lam)}, graph has {g.n} vertices")
    if any(v < 0 for v in lam):
        return False
    return _is_parking(g.n, _out_rows(g), lam)


def g_parking_set(g) -> list[Label]:
    """Every G-parking function of ``g``, in lexicographic order.

    The singleton ``I = {i}`` bounds ``lam[i - 1]`` by the out-degree of ``i``, so the
    search box is the product of ``range(outdeg + 1)``.
    """
    g = _as_multi(g)
    rows = _out_rows(g)
    box = [range(g.out_degree(i) + 1) for i in range(1, g.n + 1)]
    return [lam for lam in product(*box) if _is_parking(g.n, rows, lam)]
