"""Exact rational linear programming.

Textbook two-phase simplex over Fractions with Bland's pivot rule, which
guarantees termination without perturbation.  Problem sizes here are desk
scale (polytope face detection, nonnegativity tests on deformation cones),
so exactness beats speed.

Strict inequalities needed by face-detection callers ("supporting
hyperplane touching exactly these vertices") are encoded by replacing
``row.x < rhs`` with ``row.x <= rhs - 1`` after homogenizing; supporting
functionals can be rescaled, so this loses no solutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Vec

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LinearProgram:
    """min/max objective . x subject to eq rows (= rhs) and le rows (<= rhs).

    Variables are free unless ``nonneg`` is set, in which case all of them
    are constrained to be >= 0 (this keeps tableaus small for callers whose
    variables are naturally nonnegative, e.g. convex combination weights).
    """

    n: int
    objective: tuple = ()
    maximize: bool = False
    eq: list = field(default_factory=list)
    le: list = field(default_factory=list)
    nonneg: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("variable count must be nonnegative")
        obj = tuple(Fraction(x) for x in self.objective) if self.objective else (Fraction(0),) * self.n
        if len(obj) != self.n:
            raise ValueError("objective has wrong dimension")
        self.objective = obj
        self.eq = [(tuple(Fraction(x) for x in row), Fraction(rhs)) for row, rhs in self.eq]
        self.le = [(tuple(Fraction(x) for x in row), Fraction(rhs)) for row, rhs in self.le]
        for row, _ in self.eq + self.le:
            if len(row) != self.n:
                raise ValueError("constraint row has wrong dimension")


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    point: Vec | None = None


def _pivot(A, b, cost, basis, r, col):
    piv = A[r][col]
    inv = 1 / piv
    A[r] = [inv * x for x in A[r]]
    b[r] *= inv
    for i in range(len(A)):
        if i != r and A[i][col] != 0:
            f = A[i][col]
            A[i] = [x - f * y for x, y in zip(A[i], A[r])]
            b[i] -= f * b[r]
    if cost[col] != 0:
        f = cost[col]
        for j in range(len(A[r])):
            cost[j] -= f * A[r][j]
        cost[-1] -= f * b[r]
    basis[r] = col


def _bland_loop(A, b, cost, basis):
    """Minimize; cost holds reduced costs (last entry = -objective value)."""
    ncols = len(cost) - 1
    while True:
        col = next((j for j in range(ncols) if cost[j] < 0), None)
        if col is None:
            return OPTIMAL
        best = None
        for i in range(len(A)):
            if A[i][col] > 0:
                ratio = b[i] / A[i][col]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED
        _pivot(A, b, cost, basis, best[1], col)


def _solve_standard(A, b, c):
    """min c.x st A x = b, x >= 0.  Returns (status, value, point)."""
    m, n = len(A), len(c)
    A = [list(row) for row in A]
    b = list(b)
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # Phase 1: artificial variables with identity columns.
    art = list(range(n, n + m))
    tab = [A[i] + [Fraction(1 if j == i else 0) for j in range(m)] for i in range(m)]
    basis = art[:]
    cost = [Fraction(0)] * (n + m) + [Fraction(0)]
    for j in range(n, n + m):
        cost[j] = Fraction(1)
    for i in range(m):  # price out the initial basis
        for j in range(n + m):
            cost[j] -= tab[i][j]
        cost[-1] -= b[i]
    status = _bland_loop(tab, b, cost, basis)
    assert status == OPTIMAL  # phase-1 objective is bounded below by 0
    if -cost[-1] != 0:
        return INFEASIBLE, None, None
    # Drive leftover artificials out of the basis (degenerate rows).
    drop_rows = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is None:
                drop_rows.append(i)
            else:
                _pivot(tab, b, cost, basis, i, col)
    for i in sorted(drop_rows, reverse=True):
        del tab[i], b[i], basis[i]
    # Phase 2 on the structural columns.
    tab = [row[:n] for row in tab]
    cost = list(c) + [Fraction(0)]
    for i, bi in enumerate(basis):
        if cost[bi] != 0:
            f = cost[bi]
            for j in range(n):
                cost[j] -= f * tab[i][j]
            cost[-1] -= f * b[i]
    status = _bland_loop(tab, b, cost, basis)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = b[i]
    return OPTIMAL, -cost[-1], tuple(x)


def solve(lp: LinearProgram) -> LPResult:
    n = lp.n
    if n == 0:
        ok = all(rhs == 0 for _, rhs in lp.eq) and all(rhs >= 0 for _, rhs in lp.le)
        return LPResult(OPTIMAL, Fraction(0), ()) if ok else LPResult(INFEASIBLE)
    obj = [-x for x in lp.objective] if lp.maximize else list(lp.objective)
    # Standard-form columns: either x_j >= 0 directly, or the split x = u - v.
    width = n if lp.nonneg else 2 * n

    def widen(row):
        return list(row) if lp.nonneg else [y for x in row for y in (x, -x)]

    A = [widen(row) for row, _ in lp.eq]
    b = [rhs for _, rhs in lp.eq]
    nle = len(lp.le)
    for k, (row, rhs) in enumerate(lp.le):
        A.append(widen(row) + [Fraction(0)] * k + [Fraction(1)] + [Fraction(0)] * (nle - k - 1))
        b.append(rhs)
    # pad rows without slack entries up to the full column count
    A = [row + [Fraction(0)] * (width + nle - len(row)) for row in A]
    c = widen(obj) + [Fraction(0)] * nle
    status, value, point = _solve_standard(A, b, c)
    if status != OPTIMAL:
        return LPResult(status)
    if lp.nonneg:
        x = point[:n]
    else:
        x = tuple(point[2 * j] - point[2 * j + 1] for j in range(n))
    return LPResult(OPTIMAL, -value if lp.maximize else value, x)


def feasible(lp: LinearProgram) -> bool:
    probe = LinearProgram(lp.n, (Fraction(0),) * lp.n, False, lp.eq, lp.le, lp.nonneg)
    return solve(probe).status == OPTIMAL
