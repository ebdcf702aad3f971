"""Exact rational scalars, vectors and matrices.

Scalars are `fractions.Fraction` (arbitrary precision, always gcd-reduced
with positive denominator, so equality is structural).  Vectors are tuples
of Fractions, matrices are lists of row lists.  All elimination routines
use plain rational Gaussian elimination with a fixed pivot rule (first
nonzero entry, scanning columns left to right and rows top to bottom) so
results are reproducible across runs.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rat = Fraction
Vec = tuple[Fraction, ...]

_RAT_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rat(text: str) -> Fraction:
    """Parse the text form ``"p"`` or ``"p/q"`` (q > 0). Decimals rejected."""
    if not isinstance(text, str) or not _RAT_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def vec(*entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def parse_vec(items) -> Vec:
    return tuple(parse_rat(s) for s in items)


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * x for x in a)


def vec_dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


def zeros(n: int) -> Vec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def parallel(a: Vec, b: Vec) -> bool:
    """True iff a and b are linearly dependent (either may be zero)."""
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns).  Accepts an empty row list when
    ``ncols`` is given.
    """
    m = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        if not m:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValueError("matrix is not rectangular")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[: len(pivots)]], pivots


def rank(rows, ncols: int | None = None) -> int:
    if not list(rows) and ncols is not None:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int) -> list[Vec]:
    """Deterministic kernel basis, pivot-normalized.

    Each basis vector has a 1 in one free column and zeros in the other
    free columns; the empty matrix yields the standard basis.
    """
    reduced, pivots = rref(rows, ncols) if list(rows) else ([], [])
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: list[Vec] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve_exact(rows, rhs):
    """One solution x of A x = b, or None if the system is inconsistent.

    Free variables are set to 0; pivoting is deterministic.
    """
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs, strict=True)]
    if not m:
        raise ValueError("empty system needs an explicit treatment by the caller")
    ncols = len(m[0]) - 1
    reduced, pivots = rref(m, ncols + 1)
    if ncols in pivots:  # pivot in the augmented column: 0 = 1
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


def in_span(vectors: list[Vec], target: Vec) -> bool:
    """True iff target lies in the linear span of the given vectors."""
    if is_zero_vec(target):
        return True
    if not vectors:
        return False
    cols = len(target)
    base = rank(vectors, cols)
    return rank(list(vectors) + [target], cols) == base


def affine_rank(points: list[Vec]) -> int:
    """Dimension of the affine span of the points (-1 for the empty set)."""
    if not points:
        return -1
    base = points[0]
    return rank([vec_sub(p, base) for p in points[1:]], len(base))
