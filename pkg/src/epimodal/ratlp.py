"""Exact rational linear programming by dense tableau simplex.

Canonical form only: maximize c.x subject to A.x <= u, x >= 0, with u >= 0
so the origin is always feasible and no phase-1 is needed.  The pivot rule
is Bland's (smallest index), which cannot cycle, and all arithmetic is
``fractions.Fraction``, so returned optima are exact.

Every OPTIMAL solution ships with a dual point; the solver verifies primal
feasibility, dual feasibility and strong duality before returning, so the
pair (point, dual_point) is a checked optimality certificate.

Problem sizes in this package are tiny (tens of variables), which is why a
dense tableau is the right tool; no sparse or revised variants.
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import Malformed, Unbounded


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective.x  subject to  rows.x <= bounds, x >= 0."""

    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    bounds: tuple[Fraction, ...]

    @classmethod
    def build(cls, objective, rows, bounds) -> "LinearProgram":
        c = tuple(Fraction(v) for v in objective)
        a = tuple(tuple(Fraction(v) for v in row) for row in rows)
        u = tuple(Fraction(v) for v in bounds)
        if len(a) != len(u):
            raise Malformed("row/bound count mismatch")
        if any(len(row) != len(c) for row in a):
            raise Malformed("row length does not match objective length")
        if any(b < 0 for b in u):
            raise Malformed("negative bound: origin would be infeasible")
        return cls(c, a, u)


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    value: Fraction | None
    point: tuple[Fraction, ...]
    dual_point: tuple[Fraction, ...]
    pivots: int


def _verify_certificate(lp: LinearProgram, x, y, value) -> None:
    n = len(lp.objective)
    for row, bound in zip(lp.rows, lp.bounds):
        if sum(a * v for a, v in zip(row, x)) > bound:
            raise Malformed("internal: primal point violates a constraint")
    if any(v < 0 for v in x) or any(w < 0 for w in y):
        raise Malformed("internal: certificate has a negative component")
    for j in range(n):
        reduced = sum(y[i] * lp.rows[i][j] for i in range(len(lp.rows)))
        if reduced < lp.objective[j]:
            raise Malformed("internal: dual point is infeasible")
    dual_value = sum(w * b for w, b in zip(y, lp.bounds))
    if dual_value != value:
        raise Malformed("internal: strong duality does not hold")


def solve(
    lp: LinearProgram,
    trace: Callable[[int, Sequence[int]], None] | None = None,
) -> LpSolution:
    """Run primal simplex with Bland's rule on an origin-feasible LP.

    ``trace`` (optional) observes (iteration, basis) before each pivot:
    either a callable or a writable text stream getting one line per
    pivot.  Tests use it to assert that no basis ever repeats, which is
    the Bland termination guarantee.  Raises Unbounded with an improving
    feasible ray when the optimum is infinite.
    """
    if trace is not None and hasattr(trace, "write"):
        stream = trace
        trace = lambda i, basis: stream.write(f"pivot {i}: basis {list(basis)}\n")
    n = len(lp.objective)
    m = len(lp.rows)
    # tableau rows: [A | I | rhs]; objective row holds reduced costs z - c.
    tab = [
        [Fraction(v) for v in lp.rows[i]]
        + [Fraction(int(i == k)) for k in range(m)]
        + [Fraction(lp.bounds[i])]
        for i in range(m)
    ]
    cost = [-Fraction(v) for v in lp.objective] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    pivots = 0
    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        if trace is not None:
            trace(pivots, tuple(basis))
        leaving = None
        best = None
        for i in range(m):
            coeff = tab[i][entering]
            if coeff > 0:
                ratio = tab[i][-1] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving is None:
            ray = [Fraction(0)] * n
            if entering < n:
                ray[entering] = Fraction(1)
            for i in range(m):
                if basis[i] < n:
                    ray[basis[i]] = -tab[i][entering]
            raise Unbounded(tuple(ray))
        pivot = tab[leaving][entering]
        tab[leaving] = [v / pivot for v in tab[leaving]]
        for i in range(m):
            if i != leaving and tab[i][entering] != 0:
                f = tab[i][entering]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leaving])]
        if cost[entering] != 0:
            f = cost[entering]
            cost = [a - f * b for a, b in zip(cost, tab[leaving] + [])]
        basis[leaving] = entering
        pivots += 1

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tab[i][-1]
    y = tuple(cost[n + i] for i in range(m))
    value = sum(c * v for c, v in zip(lp.objective, x))
    _verify_certificate(lp, x, y, value)
    return LpSolution(
        status=LpStatus.OPTIMAL,
        value=value,
        point=tuple(x),
        dual_point=y,
        pivots=pivots,
    )
