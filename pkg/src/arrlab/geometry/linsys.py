"""Exact rational feasibility of small linear systems.

Equalities are removed by substitution, then the inequalities are projected
variable by variable (Fourier-Motzkin) while tracking which bounds are strict.
A witness is rebuilt by back-substitution through the stored projection stages.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

OPS = ("==", "<=", "<", ">=", ">")


def _exact(v):
    # ints stay ints; everything else must be an exact rational
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return v
    if isinstance(v, float):
        raise TypeError("coefficients must be exact rationals, not float")
    return Fraction(v)

Point = tuple


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    op: str
    rhs: Fraction

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown relation {self.op!r}")
        object.__setattr__(self, "coeffs", tuple(_exact(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", _exact(self.rhs))

    def holds(self, x: Sequence) -> bool:
        lhs = sum((c * v for c, v in zip(self.coeffs, x)), Fraction(0))
        return {
            "==": lhs == self.rhs,
            "<=": lhs <= self.rhs,
            "<": lhs < self.rhs,
            ">=": lhs >= self.rhs,
            ">": lhs > self.rhs,
        }[self.op]


@dataclass(frozen=True)
class LinearSystem:
    n: int
    constraints: tuple = ()

    def __post_init__(self):
        cs = tuple(self.constraints)
        for c in cs:
            if len(c.coeffs) != self.n:
                raise ValueError(f"constraint row has length {len(c.coeffs)}, expected {self.n}")
        object.__setattr__(self, "constraints", cs)

    def add(self, *constraints: Constraint) -> "LinearSystem":
        return LinearSystem(self.n, self.constraints + tuple(constraints))

    def weakened(self) -> "LinearSystem":
        """Closure system: every strict inequality made weak."""
        relax = {"<": "<=", ">": ">="}
        return LinearSystem(
            self.n, tuple(Constraint(c.coeffs, relax.get(c.op, c.op), c.rhs) for c in self.constraints)
        )

    def satisfied_by(self, x: Sequence) -> bool:
        return len(x) == self.n and all(c.holds(x) for c in self.constraints)


def constraint(coeffs: Iterable, op: str, rhs) -> Constraint:
    return Constraint(tuple(coeffs), op, Fraction(rhs))


# Inside the kernel an inequality is (row, rhs, strict): row.x < rhs (or <=) with an
# integer row and integer rhs, scaled by the gcd of all entries.


def _reduce(row, rhs, strict):
    g = gcd(*row, rhs)
    if g > 1:
        return tuple(c // g for c in row), rhs // g, strict
    return row, rhs, strict


def _integral(row, rhs, strict):
    den = rhs.denominator
    for c in row:
        den = lcm(den, c.denominator)
    return _reduce(tuple(int(c * den) for c in row), int(rhs * den), strict)


def _dedupe(ineqs):
    """Keep the tightest bound per direction; constant rows are checked and dropped.

    Returns None when a constant row is violated.
    """
    best: dict = {}
    for row, rhs, strict in ineqs:
        if not any(row):
            if rhs < 0 or (strict and rhs == 0):
                return None
            continue
        row, rhs, strict = _reduce(row, rhs, strict)
        g = gcd(*row)
        key = tuple(c // g for c in row)
        old = best.get(key)
        if old is not None:
            # compare rhs/g against the stored bound without division
            _, orhs, ostrict, og = old
            lhs, rhs_old = rhs * og, orhs * g
            if lhs > rhs_old or (lhs == rhs_old and (ostrict or not strict)):
                continue
        best[key] = (row, rhs, strict, g)
    return [item[:3] for item in best.values()]


def _choose(lo, hi):
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    if lo == hi:
        return lo
    return (lo + hi) / 2


def _pick_value(var, ineqs, x):
    lo = hi = None
    for row, bound, _ in ineqs:
        c = row[var]
        if not c:
            continue
        rest = bound - sum(row[k] * x[k] for k in range(len(row)) if k != var and row[k])
        b = Fraction(rest) / c
        if c > 0:
            if hi is None or b < hi:
                hi = b
        elif lo is None or b > lo:
            lo = b
    return _choose(lo, hi)


def _eliminate(var, ineqs):
    lower, upper, keep = [], [], []
    for item in ineqs:
        c = item[0][var]
        if c > 0:
            upper.append(item)
        elif c < 0:
            lower.append(item)
        else:
            keep.append(item)
    for urow, ub, ustrict in upper:
        cu = urow[var]
        for lrow, lb, lstrict in lower:
            cl = -lrow[var]
            row = tuple(cl * a + cu * b for a, b in zip(urow, lrow))
            keep.append((row, cl * ub + cu * lb, ustrict or lstrict))
    return keep


def feasible_point(system: LinearSystem) -> Optional[Point]:
    """An exact rational solution of ``system``, or None when it has none.

    Strict inequalities are honoured exactly. The witness takes the midpoint of
    each variable's final interval during back-substitution (the forced value
    when the interval is a single point).
    """
    n = system.n
    eqs = []
    ineqs = []
    for c in system.constraints:
        row, rhs = c.coeffs, c.rhs
        if c.op == "==":
            eqs.append((list(row), rhs))
        elif c.op in ("<=", "<"):
            ineqs.append((row, rhs, c.op == "<"))
        else:
            ineqs.append((tuple(-v for v in row), -rhs, c.op == ">"))

    # Equalities: pivot on the last variable with a nonzero coefficient.
    subs = []  # (pivot, row, rhs) with row[pivot] == 1
    pending = eqs
    while pending:
        row, rhs = pending.pop(0)
        piv = next((k for k in range(n - 1, -1, -1) if row[k]), None)
        if piv is None:
            if rhs:
                return None
            continue
        c = row[piv]
        if c != 1:
            row = [_div(v, c) for v in row]
            rhs = _div(rhs, c)
        subs.append((piv, row, rhs))
        pending = [_substitute_eq(r, b, piv, row, rhs) for r, b in pending]
        ineqs = [_substitute_ineq(r, b, s, piv, row, rhs) for r, b, s in ineqs]

    pivots = {p for p, _, _ in subs}
    current = _dedupe([_integral(r, b, st) for r, b, st in ineqs])
    if current is None:
        return None
    free = [k for k in range(n) if k not in pivots]
    stages = []
    remaining = list(free)
    while remaining:
        var = min(remaining, key=lambda v: _cost(v, current))
        remaining.remove(var)
        stages.append((var, current))
        current = _dedupe(_eliminate(var, current))
        if current is None:
            return None
    # every variable is gone; _dedupe already verified the constant rows
    x = [Fraction(0)] * n
    for var, ineqs_at in reversed(stages):
        x[var] = _pick_value(var, ineqs_at, x)
    for piv, row, rhs in reversed(subs):
        x[piv] = rhs - sum(row[k] * x[k] for k in range(n) if k != piv and row[k])
    return tuple(Fraction(v) for v in x)


def _div(v, c):
    if c == -1:
        return -v
    return Fraction(v) / c


def _cost(var, ineqs):
    pos = sum(1 for r, _, _ in ineqs if r[var] > 0)
    neg = sum(1 for r, _, _ in ineqs if r[var] < 0)
    return pos * neg - pos - neg


def _substitute_eq(r, b, piv, prow, prhs):
    c = r[piv]
    if not c:
        return r, b
    return [a - c * p for a, p in zip(r, prow)], b - c * prhs


def _substitute_ineq(r, b, s, piv, prow, prhs):
    c = r[piv]
    if not c:
        return r, b, s
    return tuple(a - c * p for a, p in zip(r, prow)), b - c * prhs, s


def is_feasible(system: LinearSystem) -> bool:
    return feasible_point(system) is not None
