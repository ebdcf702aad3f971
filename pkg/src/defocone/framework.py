"""Frameworks (geometric graphs) and their deformation spaces.

A framework is a finite vertex set realized by rational points plus an
edge set.  Its deformations are reparametrizations of the edges by
nonnegative factors that satisfy, for every cycle, the vector equation
saying the weighted edge vectors still close up.  Everything downstream
(indecomposability, dependency classes, rays) is computed from the exact
nullspace of that linear system.

A fundamental cycle basis suffices: the closing-up equation depends
linearly on the cycle (as an element of the rational cycle space), so a
spanning-forest basis generates the equations of all cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ContractError, InputError
from .exact import (
    Vec,
    in_span,
    is_zero_vec,
    nullspace,
    parallel,
    rank,
    rref,
    vec_scale,
    vec_sub,
)
from .simplex import OPTIMAL, LinearProgram, solve

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    if u == v:
        raise InputError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Framework:
    vertex_ids: tuple[str, ...]
    coords: tuple[Vec, ...]
    edges: tuple[Edge, ...]

    @property
    def dim(self) -> int:
        return len(self.coords[0]) if self.coords else 0

    def point(self, v: str) -> Vec:
        return self.coords[self.vertex_ids.index(v)]

    @property
    def points(self) -> dict[str, Vec]:
        return dict(zip(self.vertex_ids, self.coords))

    def edge_vector(self, e: Edge) -> Vec:
        u, v = e
        return vec_sub(self.point(v), self.point(u))

    def is_degenerate(self, e: Edge) -> bool:
        return is_zero_vec(self.edge_vector(e))

    @property
    def degenerate_edges(self) -> frozenset[Edge]:
        return frozenset(e for e in self.edges if self.is_degenerate(e))

    @property
    def nondegenerate_edges(self) -> tuple[Edge, ...]:
        deg = self.degenerate_edges
        return tuple(e for e in self.edges if e not in deg)

    def edge_index(self, e: Edge) -> int:
        return self.edges.index(e)


def framework(points: dict, edges) -> Framework:
    """Build a canonical Framework from a label->coords map and edge pairs."""
    ids = tuple(str(k) for k in points)
    coords = tuple(tuple(Fraction(x) for x in points[k]) for k in points)
    es = sorted({edge_key(str(u), str(v)) for u, v in edges})
    fw = Framework(ids, coords, tuple(es))
    problems = validate(fw)
    if problems:
        raise InputError("; ".join(problems))
    return fw


def validate(fw: Framework) -> list[str]:
    """Diagnostics; empty list means well-formed."""
    problems = []
    if len(set(fw.vertex_ids)) != len(fw.vertex_ids):
        problems.append("duplicate vertex label")
    if len(fw.coords) != len(fw.vertex_ids):
        problems.append("coordinate count does not match vertex count")
    dims = {len(c) for c in fw.coords}
    if len(dims) > 1:
        problems.append("mixed coordinate dimensions")
    known = set(fw.vertex_ids)
    seen = set()
    for u, v in fw.edges:
        if u == v:
            problems.append(f"self-loop at {u!r}")
        if u not in known or v not in known:
            problems.append(f"unknown vertex in edge {(u, v)!r}")
        k = (u, v) if u < v else (v, u)
        if k in seen:
            problems.append(f"duplicate edge {k!r}")
        seen.add(k)
    return problems


@lru_cache(maxsize=None)
def adjacency(fw: Framework) -> dict[str, tuple[str, ...]]:
    adj: dict[str, list[str]] = {v: [] for v in fw.vertex_ids}
    for u, v in fw.edges:
        adj[u].append(v)
        adj[v].append(u)
    return {v: tuple(sorted(ns)) for v, ns in adj.items()}


@lru_cache(maxsize=None)
def components(fw: Framework) -> tuple[tuple[str, ...], ...]:
    adj = adjacency(fw)
    seen: set[str] = set()
    comps = []
    for root in fw.vertex_ids:
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        queue = [root]
        while queue:
            x = queue.pop(0)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_connected(fw: Framework) -> bool:
    return len(components(fw)) <= 1


@lru_cache(maxsize=None)
def spanning_forest(fw: Framework) -> tuple[dict[str, str | None], tuple[Edge, ...]]:
    """BFS forest: parent map plus the non-tree edges, deterministically."""
    adj = adjacency(fw)
    parent: dict[str, str | None] = {}
    tree: set[Edge] = set()
    for root in fw.vertex_ids:
        if root in parent:
            continue
        parent[root] = None
        queue = [root]
        while queue:
            x = queue.pop(0)
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    tree.add(edge_key(x, y))
                    queue.append(y)
    chords = tuple(e for e in fw.edges if e not in tree)
    return parent, chords


def _tree_path(parent: dict[str, str | None], v: str) -> list[str]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


@lru_cache(maxsize=None)
def cycle_basis(fw: Framework) -> tuple[tuple[str, ...], ...]:
    """Fundamental cycles of the BFS forest, as closed vertex walks.

    A walk (u0, ..., uk) stands for the edge sequence u0u1, ..., uk u0.
    Count equals |E| - |V| + #components.
    """
    parent, chords = spanning_forest(fw)
    cycles = []
    for u, v in chords:
        pu, pv = _tree_path(parent, u), _tree_path(parent, v)
        su, sv = set(pu), set(pv)
        meet = next(x for x in pu if x in sv)
        walk = pu[: pu.index(meet) + 1] + list(reversed(pv[: pv.index(meet)]))
        cycles.append(tuple(walk))
    return tuple(cycles)


def walk_edges(walk: tuple[str, ...]):
    for i, u in enumerate(walk):
        yield u, walk[(i + 1) % len(walk)]


@dataclass(frozen=True)
class DeformationSpace:
    """Basis of the linear span of the deformation cone, indexed by edges."""

    framework: Framework
    basis: tuple[Vec, ...]
    degenerate: frozenset[Edge]
    cycles: tuple[tuple[str, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def unit_vector(self) -> Vec:
        return tuple(
            Fraction(0) if e in self.degenerate else Fraction(1) for e in self.framework.edges
        )


def cycle_equation_rows(fw: Framework, cycles) -> list[list[Fraction]]:
    """One row per cycle per coordinate, plus a forced-zero row per
    degenerate edge."""
    eidx = {e: i for i, e in enumerate(fw.edges)}
    d = fw.dim
    rows: list[list[Fraction]] = []
    for walk in cycles:
        coef: list[Vec | None] = [None] * len(fw.edges)
        acc = [[Fraction(0)] * d for _ in fw.edges]
        for u, v in walk_edges(walk):
            i = eidx[edge_key(u, v)]
            step = vec_sub(fw.point(v), fw.point(u))
            acc[i] = [a + s for a, s in zip(acc[i], step)]
        for k in range(d):
            rows.append([acc[i][k] for i in range(len(fw.edges))])
    for e in sorted(fw.degenerate_edges):
        row = [Fraction(0)] * len(fw.edges)
        row[eidx[e]] = Fraction(1)
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def deformation_space(fw: Framework) -> DeformationSpace:
    cycles = cycle_basis(fw)
    rows = cycle_equation_rows(fw, cycles)
    basis = nullspace(rows, len(fw.edges))
    return DeformationSpace(fw, tuple(basis), fw.degenerate_edges, cycles)


def dc_dimension(fw: Framework) -> int:
    return deformation_space(fw).dim


def is_indecomposable(fw: Framework) -> bool:
    """Exact ground truth.

    Connected with a one-dimensional deformation space; a lone vertex and a
    connected all-degenerate framework (a single point with multiplicity)
    count as indecomposable, a disconnected framework never does.
    """
    if len(fw.vertex_ids) == 1:
        return True
    if not is_connected(fw):
        return False
    return dc_dimension(fw) <= 1


def edge_deformation_vector(base: Framework, deformed: Framework) -> Vec:
    """Extract the per-edge factors carrying base to deformed."""
    if base.vertex_ids != deformed.vertex_ids or base.edges != deformed.edges:
        raise ContractError("frameworks do not share a graph")
    lam = []
    for e in base.edges:
        d0 = base.edge_vector(e)
        d1 = deformed.edge_vector(e)
        if is_zero_vec(d0):
            if not is_zero_vec(d1):
                raise ContractError(f"degenerate edge {e} stretched")
            lam.append(Fraction(0))
            continue
        if not parallel(d0, d1):
            raise ContractError(f"edge {e} changed direction")
        j = next(i for i, x in enumerate(d0) if x != 0)
        t = d1[j] / d0[j]
        if t < 0:
            raise ContractError(f"edge {e} reversed")
        lam.append(t)
    return tuple(lam)


def apply_deformation(fw: Framework, lam) -> Framework:
    """Rebuild a framework realizing the given edge-deformation vector.

    The anchor (smallest label) of each connected component keeps its
    coordinates; everything else is path-integrated from it.
    """
    lam = tuple(Fraction(x) for x in lam)
    if len(lam) != len(fw.edges):
        raise ContractError("deformation vector has wrong length")
    if any(x < 0 for x in lam):
        raise ContractError("negative edge factor")
    ds = deformation_space(fw)
    if not in_span(list(ds.basis), lam):
        raise ContractError("vector violates a cycle equation")
    eidx = {e: i for i, e in enumerate(fw.edges)}
    adj = adjacency(fw)
    new: dict[str, Vec] = {}
    for comp in components(fw):
        anchor = min(comp)
        new[anchor] = fw.point(anchor)
        queue = [anchor]
        seen = {anchor}
        while queue:
            x = queue.pop(0)
            for y in adj[x]:
                if y in seen:
                    continue
                seen.add(y)
                step = vec_scale(lam[eidx[edge_key(x, y)]], vec_sub(fw.point(y), fw.point(x)))
                new[y] = tuple(a + b for a, b in zip(new[x], step))
                queue.append(y)
    return Framework(fw.vertex_ids, tuple(new[v] for v in fw.vertex_ids), fw.edges)


@lru_cache(maxsize=None)
def dependency_partition(fw: Framework) -> tuple[frozenset[Edge], ...]:
    """Blocks of non-degenerate edges whose factors agree on the whole cone.

    Valid to read off the basis because the cone spans its linear hull (the
    all-ones vector is relatively interior).  Blocks are ordered by their
    smallest edge.
    """
    ds = deformation_space(fw)
    eidx = {e: i for i, e in enumerate(fw.edges)}
    groups: dict[tuple, list[Edge]] = {}
    for e in fw.nondegenerate_edges:
        key = tuple(b[eidx[e]] for b in ds.basis)
        groups.setdefault(key, []).append(e)
    blocks = [frozenset(g) for g in groups.values()]
    return tuple(sorted(blocks, key=lambda b: min(b)))


def _displacements(fw: Framework, u: str, v: str) -> list[Vec]:
    """Per basis vector, the reconstructed offset of v relative to u."""
    ds = deformation_space(fw)
    parent, _ = spanning_forest(fw)
    eidx = {e: i for i, e in enumerate(fw.edges)}
    pu, pv = _tree_path(parent, u), _tree_path(parent, v)
    meet = next(x for x in pu if x in set(pv))
    # tree walk u -> meet -> v
    walk = pu[: pu.index(meet) + 1] + list(reversed(pv[: pv.index(meet)]))
    out = []
    for b in ds.basis:
        acc = [Fraction(0)] * fw.dim
        for i in range(len(walk) - 1):
            x, y = walk[i], walk[i + 1]
            step = vec_scale(b[eidx[edge_key(x, y)]], vec_sub(fw.point(y), fw.point(x)))
            acc = [a + s for a, s in zip(acc, step)]
        out.append(tuple(acc))
    return out


def implicit_edge_coefficients(fw: Framework, u: str, v: str):
    """If every basis deformation moves v-u along its base direction,
    return the per-basis-vector scale factors; otherwise None.

    For coincident endpoints the factor list is all zeros when the pair
    moves rigidly, else None.
    """
    direction = vec_sub(fw.point(v), fw.point(u))
    disps = _displacements(fw, u, v)
    coeffs = []
    for disp in disps:
        if is_zero_vec(direction):
            if not is_zero_vec(disp):
                return None
            coeffs.append(Fraction(0))
            continue
        if not parallel(direction, disp):
            return None
        j = next(i for i, x in enumerate(direction) if x != 0)
        coeffs.append(disp[j] / direction[j])
    return coeffs


def is_implicit_edge(fw: Framework, u: str, v: str) -> bool:
    """Does the pair u,v behave like an edge in every deformation?

    Checks: same component; displacement stays on the base direction for
    the whole linear span; and the induced factor is nonnegative over the
    cone (one LP over the normalized slice).
    """
    if u == v:
        raise InputError("implicit edge needs two distinct vertices")
    if u not in fw.vertex_ids or v not in fw.vertex_ids:
        raise InputError("unknown vertex label")
    if edge_key(u, v) in fw.edges:
        return True
    comp = {c: i for i, cs in enumerate(components(fw)) for c in cs}
    if comp[u] != comp[v]:
        return False
    coeffs = implicit_edge_coefficients(fw, u, v)
    if coeffs is None:
        return False
    if all(c == 0 for c in coeffs):
        return True
    ds = deformation_space(fw)
    k = ds.dim
    nd = [i for i, e in enumerate(fw.edges) if e not in ds.degenerate]
    if not nd:
        return True
    # variables: coordinates t in the span basis; cone is (basis^T t) >= 0
    ge_rows = [[-b[i] for b in ds.basis] for i in nd]
    norm_row = [sum(b[i] for i in nd) for b in ds.basis]
    lp = LinearProgram(
        n=k,
        objective=coeffs,
        eq=[(norm_row, Fraction(1))],
        le=[(r, Fraction(0)) for r in ge_rows],
    )
    res = solve(lp)
    if res.status != OPTIMAL:
        # the slice is a nonempty bounded polytope whenever E_nd is nonempty
        raise AssertionError("implicit-edge slice LP must be solvable")
    return res.value >= 0


def implicit_condition_gap(fw: Framework, u: str, v: str) -> bool:
    """True for the curious case where every deformation in the linear
    span moves v-u along its base direction, yet the induced factor goes
    negative somewhere on the cone.  No worked example is known; corpus
    scans flag any occurrence.
    """
    if u == v or edge_key(u, v) in fw.edges:
        return False
    comp = {c: i for i, cs in enumerate(components(fw)) for c in cs}
    if comp[u] != comp[v]:
        return False
    coeffs = implicit_edge_coefficients(fw, u, v)
    if coeffs is None or all(c == 0 for c in coeffs):
        return False
    return not is_implicit_edge(fw, u, v)


def closure(fw: Framework) -> Framework:
    """Add every implicit pair as an edge; the cone is unchanged up to a
    linear isomorphism, so downstream dimensions are preserved."""
    extra = []
    ids = fw.vertex_ids
    for i, u in enumerate(ids):
        for v in ids[i + 1 :]:
            e = edge_key(u, v)
            if e not in fw.edges and is_implicit_edge(fw, u, v):
                extra.append(e)
    edges = tuple(sorted(set(fw.edges) | set(extra)))
    return Framework(fw.vertex_ids, fw.coords, edges)


def quotient_degenerate(fw: Framework):
    """Contract the transitive closure of degenerate edges.

    Returns (quotient framework, vertex -> class representative map).
    Only edges declared in the framework are contracted; mere coordinate
    coincidence without an edge does not tie vertices together.
    """
    rep = {v: v for v in fw.vertex_ids}

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for e in sorted(fw.degenerate_edges):
        a, b = find(e[0]), find(e[1])
        if a != b:
            (lo, hi) = (a, b) if a < b else (b, a)
            rep[hi] = lo
    mapping = {v: find(v) for v in fw.vertex_ids}
    new_ids = tuple(v for v in fw.vertex_ids if mapping[v] == v)
    coords = tuple(fw.point(v) for v in new_ids)
    edges = sorted(
        {
            edge_key(mapping[u], mapping[v])
            for u, v in fw.edges
            if mapping[u] != mapping[v]
        }
    )
    return Framework(new_ids, coords, tuple(edges)), mapping


def projection_map(dim: int, kernel_vectors: list[Vec]):
    """A deterministic linear map with the given kernel.

    The kernel basis is completed with the first standard basis vectors
    that keep it independent; the map reads off the coordinates on those
    completing vectors.
    """
    if not kernel_vectors or all(is_zero_vec(w) for w in kernel_vectors):
        return lambda x: tuple(x), dim
    kbasis, _ = rref(kernel_vectors, dim)
    r = len(kbasis)
    cols: list[Vec] = [tuple(row) for row in kbasis]
    complete: list[int] = []
    for j in range(dim):
        cand = tuple(Fraction(1 if i == j else 0) for i in range(dim))
        if rank(cols + [cand], dim) > len(cols):
            cols.append(cand)
            complete.append(j)
        if len(cols) == dim:
            break
    # invert the change-of-basis matrix whose columns are `cols`
    mat = [[cols[c][i] for c in range(dim)] for i in range(dim)]
    aug = [row + [Fraction(1 if i == j else 0) for j in range(dim)] for i, row in enumerate(mat)]
    reduced, pivots = rref(aug, 2 * dim)
    assert pivots == list(range(dim))
    inv = [row[dim:] for row in reduced]

    def pi(x: Vec) -> Vec:
        y = [sum(inv[i][j] * x[j] for j in range(dim)) for i in range(dim)]
        return tuple(y[r:])

    return pi, dim - r


def project(fw: Framework, kernel_vectors: list[Vec]) -> Framework:
    """Image framework under a deterministic linear map killing span(W)."""
    if fw.dim == 0:
        return fw
    pi, _ = projection_map(fw.dim, [tuple(Fraction(x) for x in w) for w in kernel_vectors])
    return Framework(fw.vertex_ids, tuple(pi(c) for c in fw.coords), fw.edges)
