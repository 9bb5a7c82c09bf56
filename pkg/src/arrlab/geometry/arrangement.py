"""Multigraphical arrangements: hyperplanes ``x_i - x_j = a`` (``a > 0``) in the sum-zero space."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from ..graph import MultiDigraph
from .linsys import Constraint, LinearSystem


class ArrangementError(ValueError):
    pass


class Side(str, enum.Enum):
    NEAR = "near"  # origin side: x_i - x_j < a
    FAR = "far"    # x_i - x_j > a

    def __str__(self):
        return self.value


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ArrangementError("hyperplane constants must be exact (int or 'p/q' string), not float")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ArrangementError(f"bad rational {value!r}: {exc}") from None


@dataclass(frozen=True)
class Hyperplane:
    i: int
    j: int
    a: Fraction

    def __post_init__(self):
        a = as_fraction(self.a)
        if a <= 0:
            raise ArrangementError(f"a must be positive, got {a} for H({self.i},{self.j})")
        if self.i == self.j:
            raise ArrangementError(f"hyperplane needs i != j, got i = j = {self.i}")
        object.__setattr__(self, "a", a)

    def value(self, x: Sequence) -> Fraction:
        return x[self.i - 1] - x[self.j - 1]

    def row(self, n: int) -> tuple:
        r = [0] * n
        r[self.i - 1] = 1
        r[self.j - 1] = -1
        return tuple(r)

    def __str__(self):
        return f"H^{self.a}_{{{self.i},{self.j}}}"


@dataclass(frozen=True)
class Arrangement:
    n: int
    hyperplanes: tuple = ()

    def __post_init__(self):
        hs = tuple(h if isinstance(h, Hyperplane) else Hyperplane(*h) for h in self.hyperplanes)
        seen = set()
        for h in hs:
            if not (1 <= h.i <= self.n and 1 <= h.j <= self.n):
                raise ArrangementError(f"{h} has a vertex outside 1..{self.n}")
            key = (h.i, h.j, h.a)
            if key in seen:
                raise ArrangementError(f"duplicate hyperplane {h}")
            seen.add(key)
        object.__setattr__(self, "hyperplanes", hs)

    def __len__(self):
        return len(self.hyperplanes)

    def ambient(self) -> Constraint:
        """The equation x_1 + ... + x_n = 0 cutting out V."""
        return Constraint(tuple([1] * self.n), "==", 0)

    def subarrangement(self, indices: Iterable[int]) -> "Arrangement":
        return Arrangement(self.n, tuple(self.hyperplanes[k] for k in sorted(indices)))


def graph_of_arrangement(arr: Arrangement) -> MultiDigraph:
    """Multigraph with m_ij = number of distinct constants a among hyperplanes (i, j, a)."""
    counts: dict = {}
    for h in arr.hyperplanes:
        counts[(h.i, h.j)] = counts.get((h.i, h.j), 0) + 1
    return MultiDigraph(arr.n, counts)


@dataclass(frozen=True)
class Region:
    """An open region given by its side of every hyperplane.

    ``point`` is an interior witness; it is not part of equality.
    """

    arrangement: Arrangement
    signs: tuple
    point: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        signs = tuple(Side(s) for s in self.signs)
        if len(signs) != len(self.arrangement):
            raise ArrangementError("sign vector length differs from the number of hyperplanes")
        object.__setattr__(self, "signs", signs)

    def far_indices(self) -> list[int]:
        return [k for k, s in enumerate(self.signs) if s is Side.FAR]

    def system(self, closed: bool = False) -> LinearSystem:
        return side_system(self.arrangement, self.signs, closed=closed)


def side_constraint(h: Hyperplane, n: int, side: Side, closed: bool = False) -> Constraint:
    if side is Side.NEAR:
        op = "<=" if closed else "<"
    else:
        op = ">=" if closed else ">"
    return Constraint(h.row(n), op, h.a)


def side_system(arr: Arrangement, signs: Sequence[Side], closed: bool = False) -> LinearSystem:
    cons = [arr.ambient()]
    cons += [side_constraint(h, arr.n, s, closed) for h, s in zip(arr.hyperplanes, signs)]
    return LinearSystem(arr.n, tuple(cons))


def arrangement_to_json(arr: Arrangement) -> dict:
    return {
        "n": arr.n,
        "hyperplanes": [{"i": h.i, "j": h.j, "a": str(h.a)} for h in arr.hyperplanes],
    }
