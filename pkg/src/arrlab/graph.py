"""Directed multigraphs, simple acyclic digraphs and their acyclic reorientations.

Vertices are the integers ``1..n`` throughout.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed or unsupported digraph input."""


def _check_edge(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise GraphError(f"edge ({i}, {j}) has an endpoint outside 1..{n}")
    if i == j:
        raise GraphError(f"loop at vertex {i} is not allowed")


class MultiDigraph:
    """Directed multigraph on ``1..n`` with positive edge multiplicities."""

    __slots__ = ("n", "_mult")

    def __init__(self, n: int, edges: Mapping[Edge, int] | Iterable[Edge] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if isinstance(edges, Mapping):
            items = list(edges.items())
        else:
            items = []
            for e in edges:
                items.append((tuple(e), 1))
        mult: dict[Edge, int] = {}
        for (i, j), m in items:
            _check_edge(n, i, j)
            if m < 1:
                raise GraphError(f"multiplicity of ({i}, {j}) must be positive, got {m}")
            mult[(i, j)] = mult.get((i, j), 0) + m
        self.n = n
        self._mult = dict(sorted(mult.items()))

    def multiplicity(self, i: int, j: int) -> int:
        return self._mult.get((i, j), 0)

    @property
    def edges(self) -> dict[Edge, int]:
        return dict(self._mult)

    def pairs(self) -> list[Edge]:
        return list(self._mult)

    def out_degree(self, i: int) -> int:
        """Out-degree of ``i`` counted with multiplicity."""
        return sum(m for (a, _), m in self._mult.items() if a == i)

    def is_simple(self) -> bool:
        return all(
            m == 1 and (j, i) not in self._mult for (i, j), m in self._mult.items()
        )

    def __eq__(self, other):
        if not isinstance(other, MultiDigraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self):
        return hash((self.n, tuple(self._mult.items())))

    def __repr__(self):
        return f"MultiDigraph(n={self.n}, edges={self._mult})"


@dataclass(frozen=True)
class SimpleAcyclicDigraph:
    """Simple digraph without directed cycles; ``edges`` is kept sorted."""

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple(sorted({(int(i), int(j)) for i, j in self.edges}))
        if len(edges) != len(self.edges):
            raise GraphError("repeated edge in a simple digraph")
        for i, j in edges:
            _check_edge(self.n, i, j)
        eset = set(edges)
        for i, j in edges:
            if (j, i) in eset:
                raise GraphError(f"both ({i}, {j}) and ({j}, {i}) present; graph is not simple")
        object.__setattr__(self, "edges", edges)
        if not _acyclic(self.n, edges):
            raise GraphError("digraph has a directed cycle")

    @classmethod
    def from_multidigraph(cls, g: MultiDigraph) -> "SimpleAcyclicDigraph":
        if not g.is_simple():
            raise GraphError("multidigraph is not simple")
        return cls(g.n, tuple(g.pairs()))

    def to_multidigraph(self) -> MultiDigraph:
        return MultiDigraph(self.n, self.edges)

    def is_increasing(self) -> bool:
        return all(i < j for i, j in self.edges)

    def out_neighbors(self, i: int) -> list[int]:
        return [b for a, b in self.edges if a == i]

    def __contains__(self, e) -> bool:
        return tuple(e) in set(self.edges)


@dataclass(frozen=True)
class Reorientation:
    """A subset of ``base.edges`` whose directions are flipped.

    Construction validates that the flipped digraph is acyclic.
    """

    base: SimpleAcyclicDigraph
    switched: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        sw = frozenset(tuple(e) for e in self.switched)
        object.__setattr__(self, "switched", sw)
        bset = set(self.base.edges)
        extra = sw - bset
        if extra:
            raise GraphError(f"switched edges {sorted(extra)} are not edges of the base graph")
        if not _acyclic(self.base.n, self.oriented_edges()):
            raise GraphError("reorientation has a directed cycle")

    @classmethod
    def _trusted(cls, base: SimpleAcyclicDigraph, switched: frozenset) -> "Reorientation":
        # Skips validation; only for callers that already proved acyclicity.
        obj = object.__new__(cls)
        object.__setattr__(obj, "base", base)
        object.__setattr__(obj, "switched", switched)
        return obj

    def oriented_edges(self) -> list[Edge]:
        return [(j, i) if (i, j) in self.switched else (i, j) for i, j in self.base.edges]

    def sorted_switched(self) -> list[Edge]:
        return sorted(self.switched)


def _edge_pairs(g) -> Sequence[Edge]:
    if isinstance(g, MultiDigraph):
        return g.pairs()
    return g.edges


def _acyclic(n: int, edges: Iterable[Edge]) -> bool:
    # Kahn's algorithm on bitmasks: repeatedly strip vertices with no remaining predecessor.
    pred = [0] * (n + 1)
    for i, j in edges:
        pred[j] |= 1 << i
    remaining = 0
    for v in range(1, n + 1):
        remaining |= 1 << v
    while remaining:
        sources = 0
        r = remaining
        while r:
            low = r & -r
            v = low.bit_length() - 1
            if not pred[v] & remaining:
                sources |= low
            r ^= low
        if not sources:
            return False
        remaining &= ~sources
    return True


def is_acyclic(g) -> bool:
    """True iff ``g`` (a MultiDigraph or SimpleAcyclicDigraph) has no directed cycle."""
    return _acyclic(g.n, _edge_pairs(g))


def topological_order(n: int, edges: Iterable[Edge]) -> list[int]:
    """Topological order of ``1..n``, smallest available vertex first."""
    edges = list(edges)
    indeg = [0] * (n + 1)
    succ: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in edges:
        succ[i].append(j)
        indeg[j] += 1
    heap = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != n:
        raise GraphError("digraph has a directed cycle")
    return order


def normalize_increasing(g: SimpleAcyclicDigraph) -> tuple[SimpleAcyclicDigraph, tuple[int, ...]]:
    """Relabel ``g`` so that every edge goes from a smaller to a larger vertex.

    Returns ``(h, perm)`` where ``perm[v - 1]`` is the new name of old vertex ``v``.
    The new names follow a topological order of ``g`` (smallest index first on ties),
    so an already increasing graph comes back unchanged with the identity permutation.
    """
    if not is_acyclic(g):
        raise GraphError("cannot normalize a cyclic digraph")
    order = topological_order(g.n, g.edges)
    perm = [0] * g.n
    for new, old in enumerate(order, start=1):
        perm[old - 1] = new
    h = SimpleAcyclicDigraph(g.n, tuple((perm[i - 1], perm[j - 1]) for i, j in g.edges))
    return h, tuple(perm)


def relabel(g: SimpleAcyclicDigraph, perm: Sequence[int]) -> SimpleAcyclicDigraph:
    """Apply ``perm`` (old vertex ``v`` becomes ``perm[v - 1]``)."""
    return SimpleAcyclicDigraph(g.n, tuple((perm[i - 1], perm[j - 1]) for i, j in g.edges))


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for old, new in enumerate(perm, start=1):
        inv[new - 1] = old
    return tuple(inv)


def iter_acyclic_switch_masks(g: SimpleAcyclicDigraph) -> Iterator[tuple[int, ...]]:
    """Yield the 0/1 indicator tuples over ``g.edges`` whose flip is acyclic.

    Indicators come out in lexicographic order. This is the exhaustive subset filter
    with a prefix cut: once a partial assignment of the first edges closes a cycle,
    no completion can be acyclic, so the branch is dropped.
    """
    n, edges = g.n, g.edges
    m = len(edges)
    # reach[v]: bitmask of vertices reachable from v using the arcs fixed so far
    reach0 = [0] * (n + 1)
    choice = [0] * m

    def add_arc(reach, u, v):
        if reach[v] >> u & 1:
            return None
        new = list(reach)
        gain = (1 << v) | reach[v]
        for w in range(1, n + 1):
            if w == u or reach[w] >> u & 1:
                new[w] |= gain
        return new

    def rec(k, reach):
        if k == m:
            yield tuple(choice)
            return
        i, j = edges[k]
        for bit, (u, v) in ((0, (i, j)), (1, (j, i))):
            nxt = add_arc(reach, u, v)
            if nxt is not None:
                choice[k] = bit
                yield from rec(k + 1, nxt)

    yield from rec(0, reach0)


def acyclic_reorientations(g: SimpleAcyclicDigraph) -> list[Reorientation]:
    """All acyclic reorientations of ``g``, the unflipped one first."""
    out = []
    for mask in iter_acyclic_switch_masks(g):
        sw = frozenset(e for e, b in zip(g.edges, mask) if b)
        out.append(Reorientation._trusted(g, sw))
    return out


def graph_to_json(g) -> dict:
    """Digraph JSON body: ``{"n": .., "edges": [[i, j], ..]}`` plus ``"mult"`` when needed."""
    if isinstance(g, SimpleAcyclicDigraph):
        return {"n": g.n, "edges": [list(e) for e in g.edges]}
    body = {"n": g.n, "edges": [list(e) for e in g.pairs()]}
    mult = [g.multiplicity(*e) for e in g.pairs()]
    if any(m != 1 for m in mult):
        body["mult"] = mult
    return body


def to_dot(g, name: str = "G", switched: Optional[Iterable[Edge]] = None) -> str:
    """DOT text for ``g``; edges listed in ``switched`` are drawn reversed and red."""
    sw = {tuple(e) for e in switched or ()}
    lines = [f"digraph {name} {{"]
    for v in range(1, g.n + 1):
        lines.append(f"  {v};")
    if isinstance(g, MultiDigraph):
        arcs = [(e, g.multiplicity(*e)) for e in g.pairs()]
    else:
        arcs = [(e, 1) for e in g.edges]
    for (i, j), m in arcs:
        for _ in range(m):
            if (i, j) in sw:
                lines.append(f"  {j} -> {i} [color=red];")
            else:
                lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
