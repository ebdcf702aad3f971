"""Vertex-described polytopes with exact face detection.

Edges are found by a small LP per vertex pair: the pair is an edge exactly
when the midpoint cannot draw positive weight from any other vertex in a
convex representation.  A supporting-functional test (strictness encoded
by the scale-invariance trick, see the LP module) is provided alongside
and used to cross-check the midpoint route on small inputs.

Facets come from ray enumeration of the dual of the homogenization cone,
computed inside the affine hull so lower-dimensional inputs (zonotopes on
hyperplanes) work unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ddcore import dd_rays
from .errors import InputError, ResourceLimitError
from .exact import Vec, rref, vec_dot, vec_sub
from .framework import Framework, edge_key
from .simplex import OPTIMAL, LinearProgram, feasible, solve

MAX_VERTICES = 200
MAX_DIM = 8


@dataclass(frozen=True)
class PolytopeV:
    vertex_ids: tuple[str, ...]
    coords: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.coords[0]) if self.coords else 0

    def point(self, v: str) -> Vec:
        return self.coords[self.vertex_ids.index(v)]

    @property
    def points(self) -> dict[str, Vec]:
        return dict(zip(self.vertex_ids, self.coords))


def _check_guard(n: int, d: int):
    if n > MAX_VERTICES or d > MAX_DIM:
        raise ResourceLimitError(
            f"polytope guard: {n} vertices in dimension {d} exceeds {MAX_VERTICES}/{MAX_DIM}"
        )


def polytope(points: dict, check: bool = True) -> PolytopeV:
    """Build from a label->coords map; rejects points that are not vertices."""
    ids = tuple(str(k) for k in points)
    coords = tuple(tuple(Fraction(x) for x in points[k]) for k in points)
    if len(set(ids)) != len(ids):
        raise InputError("duplicate vertex label")
    if len({len(c) for c in coords}) > 1:
        raise InputError("mixed coordinate dimensions")
    p = PolytopeV(ids, coords)
    if check and len(ids) > 1:
        _check_guard(len(ids), p.dim)
        for i, v in enumerate(ids):
            if _in_hull(coords[i], [c for j, c in enumerate(coords) if j != i]):
                raise InputError(f"point {v!r} is not a vertex (inside the hull of the others)")
    return p


def _in_hull(x: Vec, pts: list[Vec]) -> bool:
    if not pts:
        return False
    n = len(pts)
    d = len(x)
    eq = [(tuple(p[k] for p in pts), x[k]) for k in range(d)]
    eq.append(((Fraction(1),) * n, Fraction(1)))
    return feasible(LinearProgram(n=n, eq=eq, nonneg=True))


@lru_cache(maxsize=None)
def hull_frame(p: PolytopeV):
    """(base point, affine-hull direction basis) and hull coordinates.

    Hull coordinates of x solve x - base = sum y_i b_i; returned as a map
    aligned with vertex order.
    """
    base = p.coords[0]
    diffs = [vec_sub(c, base) for c in p.coords[1:]]
    basis, _ = rref(diffs, p.dim) if diffs else ([], [])
    h = len(basis)
    # solve the (overdetermined, consistent) systems once via rref of [B^T | diffs]
    cols = [tuple(b[i] for b in basis) for i in range(p.dim)]  # rows of B^T
    ys = []
    for c in p.coords:
        target = vec_sub(c, base)
        if h == 0:
            ys.append(())
            continue
        aug = [list(row) + [target[i]] for i, row in enumerate(cols)]
        reduced, pivots = rref(aug, h + 1)
        assert h not in pivots
        y = [Fraction(0)] * h
        for row, piv in zip(reduced, pivots):
            y[piv] = row[h]
        ys.append(tuple(y))
    return base, tuple(tuple(b) for b in basis), tuple(ys)


def hull_dim(p: PolytopeV) -> int:
    return len(hull_frame(p)[1])


@lru_cache(maxsize=None)
def edges(p: PolytopeV) -> tuple[tuple[str, str], ...]:
    """All 1-faces, as sorted label pairs."""
    n = len(p.vertex_ids)
    if n < 2:
        return ()
    _check_guard(n, p.dim)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if _midpoint_is_edge(p, i, j):
                out.append(edge_key(p.vertex_ids[i], p.vertex_ids[j]))
    return tuple(sorted(out))


def _midpoint_is_edge(p: PolytopeV, i: int, j: int) -> bool:
    others = [k for k in range(len(p.coords)) if k not in (i, j)]
    if not others:
        return True
    half = Fraction(1, 2)
    m = tuple(half * (a + b) for a, b in zip(p.coords[i], p.coords[j]))
    order = [i, j] + others
    d = p.dim
    eq = [(tuple(p.coords[k][t] for k in order), m[t]) for t in range(d)]
    eq.append(((Fraction(1),) * len(order), Fraction(1)))
    obj = (Fraction(0), Fraction(0)) + (Fraction(1),) * len(others)
    res = solve(LinearProgram(n=len(order), objective=obj, maximize=True, eq=eq, nonneg=True))
    assert res.status == OPTIMAL  # the midpoint itself is always representable
    return res.value == 0


def edge_supporting_functional(p: PolytopeV, u: str, v: str) -> bool:
    """Edge test via an exact supporting functional: c.u = c.v > c.w for
    every other vertex, strictness as a gap of one after rescaling."""
    cu, cv = p.point(u), p.point(v)
    d = p.dim
    eq = [(tuple(cu) + (Fraction(-1),), Fraction(0)), (tuple(cv) + (Fraction(-1),), Fraction(0))]
    le = []
    for w in p.vertex_ids:
        if w in (u, v):
            continue
        le.append((tuple(p.point(w)) + (Fraction(-1),), Fraction(-1)))
    return feasible(LinearProgram(n=d + 1, eq=eq, le=le))


@dataclass(frozen=True)
class Facet:
    vertex_ids: frozenset[str]
    normal: Vec  # outward, ambient coordinates
    offset: Fraction  # normal . x <= offset, equality exactly on the facet


@lru_cache(maxsize=None)
def facets(p: PolytopeV) -> tuple[Facet, ...]:
    """Irredundant facet list within the affine hull."""
    n = len(p.vertex_ids)
    if n < 2:
        return ()
    _check_guard(n, p.dim)
    base, hbasis, ys = hull_frame(p)
    h = len(hbasis)
    rows = [(Fraction(1),) + y for y in ys]
    rays = dd_rays(rows, h + 1)
    out = []
    for ray in rays:
        beta, aprime = ray[0], ray[1:]
        tight = frozenset(
            v for v, y in zip(p.vertex_ids, ys) if beta + vec_dot(aprime, y) == 0
        )
        # ambient outward normal: -a' pulled back through the hull basis
        normal = tuple(
            -sum(aprime[i] * hbasis[i][k] for i in range(h)) for k in range(p.dim)
        )
        off = max(vec_dot(normal, c) for c in p.coords)
        out.append(Facet(tight, normal, off))
    return tuple(sorted(out, key=lambda f: sorted(f.vertex_ids)))


def framework_of(p: PolytopeV) -> Framework:
    """Identity realization on the vertex set with the polytope's edges."""
    return Framework(p.vertex_ids, p.coords, edges(p))


def is_deformed_permutahedron(p: PolytopeV):
    """(flag, witness): every edge direction must be parallel to a
    difference of two coordinate directions."""
    for u, v in edges(p):
        direction = vec_sub(p.point(v), p.point(u))
        support = [i for i, x in enumerate(direction) if x != 0]
        if len(support) != 2 or direction[support[0]] + direction[support[1]] != 0:
            return False, (u, v)
    return True, None


def matroid_coordinate_test(p: PolytopeV) -> bool:
    """Necessary condition for being normally equivalent to a 0/1 deformed
    permutahedron: False means "impossible" (some coordinate takes three or
    more values over the vertices); True is inconclusive.

    Only meaningful for indecomposable inputs; the CLI checks that first.
    """
    for i in range(p.dim):
        if len({c[i] for c in p.coords}) > 2:
            return False
    return True


@dataclass
class VertexFacetCountReport:
    n_vertices: int
    n_facets: int
    hull_dim: int
    satisfies_bound: bool
    indecomposable: bool
    is_counterexample: bool
