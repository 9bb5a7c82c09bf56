"""Seeded generators of test inputs: digraphs, arrangements and small linear systems."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .geometry.arrangement import Arrangement, Hyperplane
from .geometry.linsys import OPS, Constraint, LinearSystem
from .graph import SimpleAcyclicDigraph


def all_normalized_digraphs(n: int) -> Iterator[SimpleAcyclicDigraph]:
    """Every digraph on 1..n whose edges all increase (2^(n choose 2) of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleAcyclicDigraph(n, tuple(p for b, p in enumerate(pairs) if mask >> b & 1))


def random_normalized_digraph(n: int, rng: random.Random, p: float = 0.5) -> SimpleAcyclicDigraph:
    pairs = combinations(range(1, n + 1), 2)
    return SimpleAcyclicDigraph(n, tuple(e for e in pairs if rng.random() < p))


def random_digraph_relabeled(n: int, rng: random.Random, p: float = 0.5) -> SimpleAcyclicDigraph:
    """Random simple acyclic digraph with vertex names shuffled (edges not increasing)."""
    g = random_normalized_digraph(n, rng, p)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return SimpleAcyclicDigraph(n, tuple((perm[i - 1], perm[j - 1]) for i, j in g.edges))


def random_constant(rng: random.Random, max_num: int = 6, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_arrangement(n: int, m: int, rng: random.Random, max_num: int = 6, max_den: int = 3) -> Arrangement:
    """``m`` distinct hyperplanes x_i - x_j = a with random ordered pairs and positive a.

    Small numerators and denominators make coincidences (parallel copies,
    concurrent triples) common, which is what the conjecture sweeps need.
    """
    if n < 2 and m > 0:
        raise ValueError("hyperplanes need at least two vertices")
    seen = set()
    hs = []
    attempts = 0
    while len(hs) < m:
        attempts += 1
        if attempts > 1000 * (m + 1):
            raise ValueError("could not draw enough distinct hyperplanes")
        i, j = rng.sample(range(1, n + 1), 2)
        a = random_constant(rng, max_num, max_den)
        if (i, j, a) in seen:
            continue
        seen.add((i, j, a))
        hs.append(Hyperplane(i, j, a))
    return Arrangement(n, tuple(hs))


def random_linear_system(rng: random.Random, max_vars: int = 4, max_constraints: int = 8) -> LinearSystem:
    n = rng.randint(1, max_vars)
    m = rng.randint(1, max_constraints)
    cons = []
    for _ in range(m):
        coeffs = tuple(rng.randint(-2, 2) for _ in range(n))
        op = rng.choice(OPS[1:]) if rng.random() < 0.85 else "=="
        cons.append(Constraint(coeffs, op, Fraction(rng.randint(-6, 6), rng.choice((1, 2)))))
    return LinearSystem(n, tuple(cons))
