"""Generators for the polytope families under study.

Graphical zonotopes and their one- and two-vertex truncations, general
zonotopes with generator bookkeeping, deep truncations with their
edge-class interaction graph, facet stackings with their summand
interaction graph, permutahedral wedges, matroid base polytopes,
products, labeled Minkowski sums, and order-cone slices.

Everything is deterministic; there is no randomness anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError, InputError, ResourceLimitError
from .exact import Vec, affine_rank, rank, vec_dot, vec_sub
from .framework import Framework, edge_key, framework
from .polytope import PolytopeV, edges, facets, hull_dim, hull_frame, polytope

MAX_ORIENTATIONS = 5000


# ---------------------------------------------------------------------------
# abstract graphs


@dataclass(frozen=True)
class SimpleGraph:
    nodes: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.arcs:
            if u == v:
                raise InputError("loops are not allowed")
            if u not in self.nodes or v not in self.nodes:
                raise InputError(f"unknown node in arc {(u, v)!r}")
            k = (u, v) if u < v else (v, u)
            if k in seen:
                raise InputError("multi-arcs are not allowed")
            seen.add(k)


def graph(nodes, arcs) -> SimpleGraph:
    ns = tuple(sorted(str(n) for n in nodes))
    es = tuple(sorted(edge_key(str(u), str(v)) for u, v in arcs))
    return SimpleGraph(ns, es)


def complete_graph(n: int) -> SimpleGraph:
    ns = [f"n{i}" for i in range(1, n + 1)]
    return graph(ns, itertools.combinations(ns, 2))


def complete_bipartite(n: int, m: int) -> SimpleGraph:
    left = [f"a{i}" for i in range(1, n + 1)]
    right = [f"b{j}" for j in range(1, m + 1)]
    return graph(left + right, itertools.product(left, right))


def _has_directed_cycle(nodes, darcs) -> bool:
    out: dict[str, list[str]] = {n: [] for n in nodes}
    indeg = {n: 0 for n in nodes}
    for u, v in darcs:
        out[u].append(v)
        indeg[v] += 1
    queue = [n for n in nodes if indeg[n] == 0]
    seen = 0
    while queue:
        x = queue.pop()
        seen += 1
        for y in out[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return seen != len(nodes)


def acyclic_orientations(g: SimpleGraph) -> list[tuple[bool, ...]]:
    """All acyclic orientations, as direction bits aligned with g.arcs
    (True orients the arc from its smaller to its larger endpoint).
    Backtracking with incremental cycle pruning; lexicographic order."""
    result: list[tuple[bool, ...]] = []
    darcs: list[tuple[str, str]] = []

    def extend(i: int):
        if len(result) > MAX_ORIENTATIONS:
            raise ResourceLimitError("too many acyclic orientations")
        if i == len(g.arcs):
            result.append(tuple(d[0] == a[0] for d, a in zip(darcs, g.arcs)))
            return
        u, v = g.arcs[i]
        for head in (False, True):
            darc = (u, v) if head else (v, u)
            darcs.append(darc)
            if not _has_directed_cycle(g.nodes, darcs):
                extend(i + 1)
            darcs.pop()

    extend(0)
    return sorted(result)


def orientation_indegrees(g: SimpleGraph, bits: tuple[bool, ...]) -> Vec:
    indeg = {n: 0 for n in g.nodes}
    for (u, v), forward in zip(g.arcs, bits):
        indeg[v if forward else u] += 1
    return tuple(Fraction(indeg[n]) for n in g.nodes)


def _bits_label(bits) -> str:
    return "o" + "".join("1" if b else "0" for b in bits)


@dataclass(frozen=True)
class GraphicalZonotope:
    graph: SimpleGraph
    polytope: PolytopeV
    orientations: tuple[tuple[bool, ...], ...]
    skeleton: tuple[tuple[str, str], ...]  # combinatorial edges

    def framework(self) -> Framework:
        return Framework(self.polytope.vertex_ids, self.polytope.coords, self.skeleton)


def graphical_zonotope(g: SimpleGraph) -> GraphicalZonotope:
    """Vertices are the in-degree vectors of acyclic orientations; the
    skeleton links orientations differing in a single arc."""
    aos = acyclic_orientations(g)
    labels = {bits: _bits_label(bits) for bits in aos}
    pts = {labels[bits]: orientation_indegrees(g, bits) for bits in aos}
    if len(pts) != len(aos):
        raise AssertionError("in-degree vectors must be distinct")
    valid = set(aos)
    skel = set()
    for bits in aos:
        for i in range(len(g.arcs)):
            flip = bits[:i] + (not bits[i],) + bits[i + 1 :]
            if flip in valid:
                skel.add(edge_key(labels[bits], labels[flip]))
    poly = PolytopeV(tuple(pts), tuple(pts.values()))
    return GraphicalZonotope(g, poly, tuple(aos), tuple(sorted(skel)))


# ---------------------------------------------------------------------------
# truncated graphical zonotopes of complete bipartite graphs


@dataclass(frozen=True)
class BipartiteTruncation:
    kind: str  # "P" or "Q"
    n: int
    m: int
    base: GraphicalZonotope
    polytope: PolytopeV
    framework: Framework
    removed: tuple[str, ...]


def bipartite_truncation(n: int, m: int, kind: str = "P") -> BipartiteTruncation:
    """Truncate the all-left-to-right vertex (and for kind Q also the
    all-right-to-left vertex) of the complete-bipartite graphical zonotope.

    The edge list is produced combinatorially: surviving skeleton edges
    plus, on each fresh facet, links between one-arc-reversed orientations
    whose reversed arcs share an endpoint.
    """
    if kind not in ("P", "Q"):
        raise InputError("kind must be 'P' or 'Q'")
    if n < 1 or m < 1:
        raise InputError("n, m must be positive")
    if kind == "Q" and n * m <= 2:
        raise InputError("kind Q needs n*m > 2")
    g = complete_bipartite(n, m)
    z = graphical_zonotope(g)
    all_lr = tuple(True for _ in g.arcs)
    all_rl = tuple(False for _ in g.arcs)
    removed_bits = [all_lr] if kind == "P" else [all_lr, all_rl]
    removed = tuple(_bits_label(b) for b in removed_bits)
    keep = [v for v in z.polytope.vertex_ids if v not in removed]
    pts = {v: z.polytope.point(v) for v in keep}
    es = {e for e in z.skeleton if e[0] not in removed and e[1] not in removed}
    for special in removed_bits:
        near = [i for i in range(len(g.arcs))]
        for i, j in itertools.combinations(near, 2):
            if set(g.arcs[i]) & set(g.arcs[j]):
                b1 = special[:i] + (not special[i],) + special[i + 1 :]
                b2 = special[:j] + (not special[j],) + special[j + 1 :]
                es.add(edge_key(_bits_label(b1), _bits_label(b2)))
    fw = framework(pts, sorted(es))
    poly = PolytopeV(tuple(pts), tuple(pts.values()))
    return BipartiteTruncation(kind, n, m, z, poly, fw, removed)


def bipartite_zonotope_facet_count(n: int, m: int) -> int:
    """Number of node subsets inducing a connected subgraph whose
    complement is also connected; equals the facet count."""
    g = complete_bipartite(n, m)
    count = 0
    for r in range(1, len(g.nodes)):
        for subset in itertools.combinations(g.nodes, r):
            s = set(subset)
            if _induced_connected(g, s) and _induced_connected(g, set(g.nodes) - s):
                count += 1
    return count


def _induced_connected(g: SimpleGraph, s: set) -> bool:
    if not s:
        return False
    adj = {n: set() for n in s}
    for u, v in g.arcs:
        if u in s and v in s:
            adj[u].add(v)
            adj[v].add(u)
    start = next(iter(sorted(s)))
    seen = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen == s


# ---------------------------------------------------------------------------
# face enumeration of graphical zonotopes and their truncations


def _connected_partitions(g: SimpleGraph):
    """All partitions of the node set into connected parts."""
    nodes = list(g.nodes)

    def split(rest: tuple[str, ...]):
        if not rest:
            yield []
            return
        first = rest[0]
        others = rest[1:]
        for r in range(len(others) + 1):
            for extra in itertools.combinations(others, r):
                part = {first, *extra}
                if not _induced_connected(g, part):
                    continue
                remaining = tuple(x for x in others if x not in part)
                for tail in split(remaining):
                    yield [frozenset(part)] + tail

    yield from split(tuple(nodes))


def zonotope_faces(g: SimpleGraph) -> list[frozenset[str]]:
    """Vertex sets of all nonempty faces, via ordered partitions: connected
    node partitions with an acyclic orientation of the contraction."""
    z = graphical_zonotope(g)
    arc_index = {a: i for i, a in enumerate(g.arcs)}
    faces: set[frozenset[str]] = set()
    for parts in _connected_partitions(g):
        part_of = {n: i for i, part in enumerate(parts) for n in part}
        quotient_nodes = [str(i) for i in range(len(parts))]
        quotient_arcs = sorted(
            {
                edge_key(str(part_of[u]), str(part_of[v]))
                for u, v in g.arcs
                if part_of[u] != part_of[v]
            }
        )
        q = SimpleGraph(tuple(quotient_nodes), tuple(quotient_arcs))
        inner = [a for a in g.arcs if part_of[a[0]] == part_of[a[1]]]
        inner_orients = _acyclic_sub_orientations(g, inner)
        for qbits in acyclic_orientations(q):
            qdir = {}
            for (qu, qv), forward in zip(q.arcs, qbits):
                qdir[(qu, qv)] = forward
            members = set()
            for sub in inner_orients:
                bits = [None] * len(g.arcs)
                for a, forward in sub.items():
                    bits[arc_index[a]] = forward
                for a in g.arcs:
                    if bits[arc_index[a]] is None:
                        pu, pv = str(part_of[a[0]]), str(part_of[a[1]])
                        qk = (pu, pv) if pu < pv else (pv, pu)
                        forward_q = qdir[qk]
                        bits[arc_index[a]] = forward_q if pu < pv else not forward_q
                members.add(_bits_label(tuple(bits)))
            faces.add(frozenset(members))
    return sorted(faces, key=lambda f: (len(f), sorted(f)))


def _acyclic_sub_orientations(g: SimpleGraph, arcs):
    """Orientation maps arc -> bool over the given arcs, acyclic within."""
    sub = graph({n for a in arcs for n in a} or {"x"}, arcs)
    out = []
    for bits in acyclic_orientations(sub):
        out.append({a: forward for a, forward in zip(sub.arcs, bits)})
    return out if arcs else [{}]


def _simplex_product_faces(n: int, m: int, reversed_label) -> set[frozenset[str]]:
    """Faces of the fresh simplex-product facet: nonempty A x B blocks."""
    pairs = list(itertools.product(range(n), range(m)))
    out = set()
    for ra in range(1, n + 1):
        for rb in range(1, m + 1):
            for A in itertools.combinations(range(n), ra):
                for B in itertools.combinations(range(m), rb):
                    out.add(frozenset(reversed_label(i, j) for i in A for j in B))
    return out


def truncation_f_vector(n: int, m: int, kind: str) -> tuple[int, ...]:
    """f-vector of the truncated bipartite zonotope by explicit face
    enumeration (zonotope faces with the special vertices deleted, plus the
    faces of the fresh facets)."""
    tr = bipartite_truncation(n, m, kind)
    g = tr.base.graph
    arc_index = {a: i for i, a in enumerate(g.arcs)}
    removed = set(tr.removed)
    faces: set[frozenset[str]] = set()
    for f in zonotope_faces(g):
        cut = frozenset(f - removed)
        if cut:
            faces.add(cut)
    for special_bits, flag in ((tuple(True for _ in g.arcs), True), (tuple(False for _ in g.arcs), False)):
        if _bits_label(special_bits) not in removed:
            continue

        def rev_label(i, j, special=special_bits):
            k = arc_index[edge_key(f"a{i + 1}", f"b{j + 1}")]
            bits = special[:k] + (not special[k],) + special[k + 1 :]
            return _bits_label(bits)

        faces |= _simplex_product_faces(n, m, rev_label)
    pts = tr.polytope.points
    dim = hull_dim(tr.polytope)
    counts = [0] * dim
    for f in faces:
        d = affine_rank([pts[v] for v in f])
        if d < dim:
            counts[d] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# plain zonotopes with generator bookkeeping


@dataclass(frozen=True)
class Zonotope:
    generators: tuple[Vec, ...]
    polytope: PolytopeV
    subsets: dict  # vertex label -> frozenset of generator indices

    def edge_class(self, e) -> int:
        """Index of the generator parallel to the given edge."""
        d = vec_sub(self.polytope.point(e[1]), self.polytope.point(e[0]))
        for i, gen in enumerate(self.generators):
            if rank([gen, d], len(d)) == 1:
                return i
        raise InputError(f"edge {e} is parallel to no generator")


def is_parallelogramic(generators) -> bool:
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    d = len(gens[0]) if gens else 0
    for a, b in itertools.combinations(gens, 2):
        if rank([a, b], d) < 2:
            return False
    for a, b, c in itertools.combinations(gens, 3):
        if rank([a, b, c], d) < 3:
            return False
    return True


def zonotope(generators) -> Zonotope:
    """Sum of segments [0, g]; vertices are the subset sums that survive a
    hull check, labeled by their generator subsets."""
    gens = tuple(tuple(Fraction(x) for x in g) for g in generators)
    if not gens:
        raise InputError("need at least one generator")
    d = len(gens[0])
    if len(gens) > 14:
        raise ResourceLimitError("too many zonotope generators")
    sums = {}
    for mask in range(2 ** len(gens)):
        s = tuple(
            sum((gens[i][k] for i in range(len(gens)) if mask >> i & 1), Fraction(0))
            for k in range(d)
        )
        sums.setdefault(s, []).append(mask)
    from .polytope import _in_hull

    pts = {}
    subsets = {}
    distinct = list(sums)
    for s, masks in sums.items():
        others = [t for t in distinct if t != s]
        if not _in_hull(s, others):
            mask = masks[0]
            label = "z" + "".join(
                "1" if mask >> i & 1 else "0" for i in range(len(gens))
            )
            pts[label] = s
            subsets[label] = frozenset(i for i in range(len(gens)) if mask >> i & 1)
    poly = PolytopeV(tuple(sorted(pts)), tuple(pts[k] for k in sorted(pts)))
    return Zonotope(gens, poly, subsets)


# ---------------------------------------------------------------------------
# deep truncation


@dataclass
class DeepTruncation:
    polytope: PolytopeV
    truncated: tuple[str, ...]
    stable: bool
    class_load_ok: bool | None
    omega_nodes: tuple[int, ...] | None
    omega_arcs: tuple[tuple[int, int], ...] | None
    omega_components: int | None


def _cut_functional(p: PolytopeV, x: str, neighbor_ids):
    """Hyperplane through the neighbors of x, oriented toward x; errors out
    if the neighbors are not coplanar or another vertex sticks past it."""
    h = hull_dim(p)
    pts = [p.point(v) for v in neighbor_ids]
    if affine_rank(pts) != h - 1:
        raise ContractError(f"no deep truncation at {x!r}: neighbors are not on a hyperplane")
    _, _, ys = hull_frame(p)
    yofs = dict(zip(p.vertex_ids, ys))
    from .exact import nullspace as _nullspace

    rows = [vec_sub(yofs[v], yofs[neighbor_ids[0]]) for v in neighbor_ids[1:]]
    normals = _nullspace(rows, h)
    assert len(normals) == 1
    a = normals[0]
    c = vec_dot(a, yofs[neighbor_ids[0]])
    if vec_dot(a, yofs[x]) < c:
        a = tuple(-t for t in a)
        c = -c
    if vec_dot(a, yofs[x]) == c:
        raise ContractError(f"no deep truncation at {x!r}: vertex lies on the neighbor hyperplane")
    for v in p.vertex_ids:
        if v == x or v in neighbor_ids:
            continue
        if vec_dot(a, yofs[v]) > c:
            raise ContractError(
                f"no deep truncation at {x!r}: vertex {v!r} lies past the neighbor hyperplane"
            )
    return a, c


def deep_truncate(p: PolytopeV, labels, zono: Zonotope | None = None) -> DeepTruncation:
    """Delete pairwise non-adjacent vertices whose neighbors are coplanar.

    With zonotope bookkeeping, also reports the interaction graph on edge
    classes (two classes linked when incident around a truncated vertex)
    and whether each class loses few enough edges for the connectivity
    bound to apply.
    """
    labels = tuple(labels)
    es = edges(p)
    adj: dict[str, list[str]] = {v: [] for v in p.vertex_ids}
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)
    stable = all(edge_key(a, b) not in es for a, b in itertools.combinations(labels, 2))
    if not stable:
        raise ContractError("truncated vertices must be pairwise non-adjacent")
    for x in labels:
        _cut_functional(p, x, sorted(adj[x]))
    keep = [v for v in p.vertex_ids if v not in labels]
    out = PolytopeV(tuple(keep), tuple(p.point(v) for v in keep))
    if zono is None:
        return DeepTruncation(out, labels, stable, None, None, None, None)
    classes = {e: zono.edge_class(e) for e in es}
    nodes = tuple(range(len(zono.generators)))
    arcs = set()
    for x in labels:
        incident = sorted({classes[edge_key(x, w)] for w in adj[x]})
        arcs.update(
            (i, j) for i, j in itertools.combinations(incident, 2)
        )
    comps = _component_count(nodes, arcs)
    dim = hull_dim(p)
    load_ok = True
    for i in nodes:
        hits = sum(
            1 for x in labels if any(classes[edge_key(x, w)] == i for w in adj[x])
        )
        if hits > dim - 2:
            load_ok = False
    return DeepTruncation(out, labels, stable, load_ok, nodes, tuple(sorted(arcs)), comps)


def _component_count(nodes, arcs) -> int:
    rep = {n: n for n in nodes}

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for a, b in arcs:
        ra, rb = find(a), find(b)
        if ra != rb:
            rep[ra] = rb
    return len({find(n) for n in nodes})


# ---------------------------------------------------------------------------
# stacking


@dataclass
class Stacking:
    polytope: PolytopeV
    stack_points: dict  # new label -> Vec
    gamma_nodes: tuple[int, ...] | None
    gamma_arcs: tuple[tuple[int, int], ...] | None
    gamma_components: int | None


def stack_vertex(p: PolytopeV, facet_vertex_sets, zono: Zonotope | None = None) -> Stacking:
    """Stack one vertex just outside each selected facet.

    The stacking point starts one unit of outward normal past the facet
    barycenter and is halved until it lies strictly inside every other
    facet's halfspace; points are recorded so outputs reproduce exactly.
    """
    targets = [frozenset(f) for f in facet_vertex_sets]
    gamma_arcs = set()
    classes = None
    if zono is not None:
        classes = {e: zono.edge_class(e) for e in edges(p)}
    current = p
    stack_points = {}
    for idx, wanted in enumerate(targets):
        fs = facets(current)
        match = next((f for f in fs if f.vertex_ids == wanted), None)
        if match is None:
            raise InputError(f"not a facet: {sorted(wanted)}")
        bary = tuple(
            sum((current.point(v)[k] for v in sorted(wanted)), Fraction(0)) / len(wanted)
            for k in range(current.dim)
        )
        eps = Fraction(1)
        while True:
            q = tuple(b + eps * nk for b, nk in zip(bary, match.normal))
            if all(
                vec_dot(f.normal, q) < f.offset
                for f in fs
                if f.vertex_ids != wanted
            ):
                break
            eps /= 2
        label = f"q{idx}"
        stack_points[label] = q
        pts = {**current.points, label: q}
        current = PolytopeV(tuple(pts), tuple(pts.values()))
        if classes is not None:
            touched = sorted({classes[e] for e in edges(p) if set(e) <= wanted})
            gamma_arcs.update(itertools.combinations(touched, 2))
    gamma = None
    if zono is not None:
        nodes = tuple(range(len(zono.generators)))
        comps = _component_count(nodes, gamma_arcs)
        return Stacking(current, stack_points, nodes, tuple(sorted(gamma_arcs)), comps)
    return Stacking(current, stack_points, None, None, None)


# ---------------------------------------------------------------------------
# wedges, products, matroids, order-cone slices


def permutahedral_wedge(p: PolytopeV, i: int, side: str = "min") -> PolytopeV:
    """Wedge over the face extreme in coordinate i, embedded so deformed
    permutahedra stay deformed permutahedra (one fresh coordinate)."""
    if not 1 <= i <= p.dim:
        raise InputError(f"coordinate index {i} out of range")
    if side not in ("min", "max"):
        raise InputError("side must be 'min' or 'max'")
    vals = [c[i - 1] for c in p.coords]
    extreme = min(vals) if side == "min" else max(vals)
    pts = {}
    for v in p.vertex_ids:
        c = p.point(v)
        pts[v] = c + (Fraction(0),)
    for v in p.vertex_ids:
        c = p.point(v)
        t = c[i - 1] - extreme
        lifted = list(c) + [Fraction(0)]
        lifted[i - 1] -= t
        lifted[p.dim] += t
        if t != 0:
            label = v + "'"
            while label in pts:  # keep iterated wedges collision-free
                label += "'"
            pts[label] = tuple(lifted)
    return polytope(pts)


def wedge_tower(base: PolytopeV, moves) -> PolytopeV:
    """Iterated permutahedral wedges; moves are (coordinate, side) pairs."""
    current = base
    for i, side in moves:
        current = permutahedral_wedge(current, i, side)
    return current


def normal_fingerprint(p: PolytopeV):
    """A cheap invariant separating non-normally-equivalent polytopes:
    the f-vector data we can read off plus the facet-normal multiset up to
    positive scaling."""
    from collections import Counter

    dirs = []
    for f in facets(p):
        n = f.normal
        j = next(i for i, x in enumerate(n) if x != 0)
        scale = 1 / abs(n[j])
        dirs.append(tuple(scale * x for x in n))
    return (
        len(p.vertex_ids),
        len(edges(p)),
        tuple(sorted(Counter(dirs).items())),
    )


def product_polytope(a: PolytopeV, b: PolytopeV) -> PolytopeV:
    pts = {}
    for u in a.vertex_ids:
        for v in b.vertex_ids:
            pts[f"{u}|{v}"] = a.point(u) + b.point(v)
    return PolytopeV(tuple(pts), tuple(pts.values()))


@dataclass(frozen=True)
class MatroidBases:
    ground: tuple[str, ...]
    bases: frozenset[frozenset[str]]

    def __post_init__(self):
        if not self.bases:
            raise InputError("a matroid needs at least one basis")
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise InputError("bases must be equicardinal")
        for b in self.bases:
            if not b <= set(self.ground):
                raise InputError("basis uses unknown element")


def verify_exchange(mb: MatroidBases) -> bool:
    for b1 in mb.bases:
        for b2 in mb.bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in mb.bases for y in b2 - b1):
                    return False
    return True


def uniform_matroid(k: int, n: int) -> MatroidBases:
    ground = tuple(f"e{i}" for i in range(1, n + 1))
    return MatroidBases(ground, frozenset(frozenset(b) for b in itertools.combinations(ground, k)))


def graphic_matroid(g: SimpleGraph) -> MatroidBases:
    """Bases are the spanning trees (the graph must be connected)."""
    n = len(g.nodes)
    trees = []
    for comb in itertools.combinations(g.arcs, n - 1):
        sub = {a: set() for a in g.nodes}
        for u, v in comb:
            sub[u].add(v)
            sub[v].add(u)
        seen = {g.nodes[0]}
        queue = [g.nodes[0]]
        while queue:
            x = queue.pop()
            for y in sub[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) == n:
            trees.append(frozenset(f"{u}-{v}" for u, v in comb))
    ground = tuple(sorted(f"{u}-{v}" for u, v in g.arcs))
    return MatroidBases(ground, frozenset(trees))


def matroid_direct_sum(*parts: MatroidBases) -> MatroidBases:
    ground = []
    for i, mb in enumerate(parts):
        ground.extend(f"s{i}.{e}" for e in mb.ground)
    bases = [frozenset()]
    for i, mb in enumerate(parts):
        bases = [
            b | frozenset(f"s{i}.{e}" for e in part)
            for b in bases
            for part in mb.bases
        ]
    return MatroidBases(tuple(ground), frozenset(bases))


@dataclass
class MatroidPolytope:
    matroid: MatroidBases
    polytope: PolytopeV
    framework: Framework
    components: tuple[frozenset[str], ...]

    @property
    def component_count(self) -> int:
        return len(self.components)


def matroid_polytope(mb: MatroidBases) -> MatroidPolytope:
    """Indicator-vector polytope; skeleton links bases with a two-element
    symmetric difference; components come from the fundamental graph of the
    lexicographically first basis (loops and coloops are isolated)."""
    if not verify_exchange(mb):
        raise InputError("basis-exchange axiom fails")
    order = mb.ground
    labels = {}
    pts = {}
    for b in sorted(mb.bases, key=lambda b: tuple(sorted(b))):
        label = "m" + "".join("1" if e in b else "0" for e in order)
        labels[b] = label
        pts[label] = tuple(Fraction(1 if e in b else 0) for e in order)
    es = []
    for b1, b2 in itertools.combinations(labels, 2):
        if len(b1 ^ b2) == 2:
            es.append((labels[b1], labels[b2]))
    fw = framework(pts, es)
    poly = PolytopeV(tuple(pts), tuple(pts.values()))
    first = min(mb.bases, key=lambda b: tuple(sorted(b)))
    arcs = set()
    for j in set(order) - first:
        for i in first:
            if (first - {i}) | {j} in mb.bases:
                arcs.add(edge_key(i, j))
    rep = {e: e for e in order}

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for a, b in arcs:
        ra, rb = find(a), find(b)
        if ra != rb:
            rep[ra] = rb
    groups: dict[str, set[str]] = {}
    for e in order:
        groups.setdefault(find(e), set()).add(e)
    comps = tuple(sorted((frozenset(s) for s in groups.values()), key=lambda s: sorted(s)))
    return MatroidPolytope(mb, poly, fw, comps)


def hyperorder_polytope(n: int, k: int) -> PolytopeV:
    """Slice of the weakly-increasing order simplex at coordinate sum k."""
    if not 1 <= k <= n:
        raise InputError("need 1 <= k <= n")
    pts = {}
    seen = set()

    def add(point):
        if point not in seen:
            seen.add(point)
            pts[f"h{len(pts)}"] = point

    apex = (Fraction(0),) * (n - k) + (Fraction(1),) * k
    add(apex)
    for j in range(0, k):
        for i in range(max(1, k - j), n - j + 1):
            val = Fraction(k - j, i)
            if val > 1:
                continue
            add((Fraction(0),) * (n - j - i) + (val,) * i + (Fraction(1),) * j)
    return polytope(pts)


@dataclass
class VertexCountReport:
    """Data for the vertices-versus-facets decomposability conjecture in
    dimension 4: an indecomposable member with V >= 2F - 4 refutes it."""

    kind: str
    n: int
    m: int
    n_vertices: int
    n_facets: int
    dim: int
    satisfies_bound: bool
    indecomposable: bool
    is_counterexample: bool


def smilansky_check(n: int, m: int, kind: str = "P") -> VertexCountReport:
    from .framework import is_indecomposable

    tr = bipartite_truncation(n, m, kind)
    f = truncation_f_vector(n, m, kind)
    dim = len(f)
    if dim != 4:
        raise InputError("the conjecture check is for 4-dimensional members")
    v_count, f_count = f[0], f[-1]
    bound = v_count >= 2 * f_count - 4
    indec = is_indecomposable(tr.framework)
    return VertexCountReport(
        kind, n, m, v_count, f_count, dim, bound, indec, bound and indec
    )


# ---------------------------------------------------------------------------
# labeled Minkowski sums and parallelogramic position


@dataclass
class LabeledSum:
    polytope: PolytopeV
    provenance: dict  # label -> (label in a, label in b)


def minkowski_sum_labeled(a: PolytopeV, b: PolytopeV) -> LabeledSum:
    """Sum with vertex provenance; requires every vertex of the sum to be
    a unique pair sum (true whenever no edge directions are shared)."""
    cand = {}
    for u in a.vertex_ids:
        for v in b.vertex_ids:
            s = tuple(x + y for x, y in zip(a.point(u), b.point(v)))
            cand.setdefault(s, []).append((u, v))
    from .polytope import _in_hull

    distinct = list(cand)
    pts = {}
    prov = {}
    for s, prs in cand.items():
        others = [t for t in distinct if t != s]
        if not _in_hull(s, others):
            if len(prs) > 1:
                raise InputError(f"ambiguous vertex decomposition at {s}")
            label = f"{prs[0][0]}+{prs[0][1]}"
            pts[label] = s
            prov[label] = prs[0]
    poly = PolytopeV(tuple(sorted(pts)), tuple(pts[k] for k in sorted(pts)))
    return LabeledSum(poly, prov)


def two_faces(p: PolytopeV) -> list[frozenset[str]]:
    """Vertex sets of the 2-faces: minimal faces spanned by two adjacent
    edges, read off the facet incidences."""
    fs = facets(p)
    out = set()
    es = edges(p)
    adj: dict[str, list] = {}
    for e in es:
        adj.setdefault(e[0], []).append(e)
        adj.setdefault(e[1], []).append(e)
    for v, incident in adj.items():
        for e1, e2 in itertools.combinations(incident, 2):
            span = set(e1) | set(e2)
            containing = [f.vertex_ids for f in fs if span <= f.vertex_ids]
            if not containing:
                face = frozenset(p.vertex_ids)
            else:
                face = frozenset(set.intersection(*map(set, containing)))
            if affine_rank([p.point(w) for w in face]) == 2:
                out.add(face)
    return sorted(out, key=sorted)


def _direction_space(p: PolytopeV, face: frozenset[str]):
    pts = [p.point(v) for v in sorted(face)]
    return [vec_sub(q, pts[0]) for q in pts[1:]]


def parallelogramic_position(a: PolytopeV, b: PolytopeV):
    """(ok, reason): no shared edge directions and no edge of one parallel
    to a 2-face of the other."""
    ea, eb = edges(a), edges(b)
    for e in ea:
        for f in eb:
            da = vec_sub(a.point(e[1]), a.point(e[0]))
            db = vec_sub(b.point(f[1]), b.point(f[0]))
            if rank([da, db], len(da)) < 2:
                return False, f"edge {e} of the first summand is parallel to edge {f} of the second"
    for p, q, ep in ((a, b, ea), (b, a, eb)):
        for face in two_faces(q):
            dirs = _direction_space(q, face)
            for e in ep:
                d = vec_sub(p.point(e[1]), p.point(e[0]))
                if rank(dirs, len(d)) == rank(dirs + [d], len(d)):
                    return False, f"edge {e} is parallel to 2-face {sorted(face)}"
    return True, None


@dataclass
class SumFactorizationReport:
    ok: bool
    reason: str | None
    dim_left: int | None = None
    dim_right: int | None = None
    dim_sum: int | None = None
    dims_add_up: bool | None = None
    partition_is_lift: bool | None = None


def parallelogramic_sum_report(a: PolytopeV, b: PolytopeV) -> SumFactorizationReport:
    """Verify the product law for a Minkowski sum in parallelogramic
    position: dimensions add and the sum's dependency blocks are the lifts
    of the summand blocks along edge classes."""
    ok, reason = parallelogramic_position(a, b)
    if not ok:
        return SumFactorizationReport(False, reason)
    from .framework import dc_dimension, dependency_partition
    from .polytope import framework_of

    s = minkowski_sum_labeled(a, b)
    fa, fb, fs = framework_of(a), framework_of(b), framework_of(s.polytope)
    expected: list[frozenset] = []
    for factor, fw_factor, side in ((a, fa, 0), (b, fb, 1)):
        for block in dependency_partition(fw_factor):
            lift = set()
            for u, v in fs.edges:
                pu, pv = s.provenance[u], s.provenance[v]
                if pu[1 - side] == pv[1 - side] and edge_key(pu[side], pv[side]) in block:
                    lift.add((u, v))
            expected.append(frozenset(lift))
    da, db, dsum = dc_dimension(fa), dc_dimension(fb), dc_dimension(fs)
    got = set(dependency_partition(fs))
    return SumFactorizationReport(
        True, None, da, db, dsum, dsum == da + db, got == set(x for x in expected if x)
    )
