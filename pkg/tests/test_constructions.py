"""Family generators: zonotopes, truncations, wedges, matroids, sums."""

from fractions import Fraction

import pytest

from defocone.constructions import (
    MatroidBases,
    acyclic_orientations,
    bipartite_truncation,
    bipartite_zonotope_facet_count,
    complete_bipartite,
    complete_graph,
    deep_truncate,
    graph,
    graphic_matroid,
    graphical_zonotope,
    hyperorder_polytope,
    is_parallelogramic,
    matroid_direct_sum,
    matroid_polytope,
    minkowski_sum_labeled,
    parallelogramic_position,
    parallelogramic_sum_report,
    permutahedral_wedge,
    product_polytope,
    smilansky_check,
    stack_vertex,
    truncation_f_vector,
    uniform_matroid,
    verify_exchange,
    zonotope,
)
from defocone.corpus import corpus
from defocone.errors import ContractError, InputError
from defocone.framework import dc_dimension, is_indecomposable
from defocone.polytope import edges, facets, framework_of, polytope


def test_acyclic_orientation_counts():
    assert len(acyclic_orientations(complete_graph(3))) == 6
    c4 = graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    assert len(acyclic_orientations(c4)) == 14
    assert len(acyclic_orientations(complete_bipartite(2, 2))) == 14


def test_graphical_zonotopes():
    star = graphical_zonotope(complete_bipartite(1, 3))
    assert len(star.polytope.vertex_ids) == 8  # a 3-cube
    assert dc_dimension(star.framework()) == 3
    hexa = graphical_zonotope(complete_graph(3))
    assert len(hexa.polytope.vertex_ids) == 6
    k22 = graphical_zonotope(complete_bipartite(2, 2))
    assert len(k22.polytope.vertex_ids) == 14
    # combinatorial skeleton agrees with LP edge detection
    assert set(star.skeleton) == set(edges(star.polytope))
    assert set(hexa.skeleton) == set(edges(hexa.polytope))


def test_bipartite_truncations():
    p31 = bipartite_truncation(3, 1, "P")
    assert len(p31.polytope.vertex_ids) == 7
    q31 = bipartite_truncation(3, 1, "Q")
    assert len(q31.polytope.vertex_ids) == 6
    q22 = bipartite_truncation(2, 2, "Q")
    assert len(q22.polytope.vertex_ids) == 12
    for tr in (p31, q31, q22):
        assert set(tr.framework.edges) == set(edges(tr.polytope))
    with pytest.raises(InputError):
        bipartite_truncation(1, 2, "Q")  # needs n*m > 2


def test_truncation_f_vectors():
    assert truncation_f_vector(3, 1, "P") == (7, 12, 7)
    assert truncation_f_vector(2, 2, "P") == (13, 24, 13)
    assert truncation_f_vector(1, 4, "P") == (15, 34, 28, 9)
    assert truncation_f_vector(2, 3, "P") == (45, 111, 89, 23)


def test_euler_relation_on_f_vectors():
    for n, m, kind in ((3, 1, "P"), (2, 2, "P"), (1, 4, "P"), (2, 3, "P"), (2, 2, "Q")):
        f = truncation_f_vector(n, m, kind)
        assert sum((-1) ** i * c for i, c in enumerate(f)) == 1 - (-1) ** len(f)


def test_facet_count_two_ways():
    """Complement-connected subgraph count equals the working facet count
    (checked against the face machinery on the small members)."""
    for n, m in ((1, 1), (1, 2), (2, 2), (1, 3)):
        enum = bipartite_zonotope_facet_count(n, m)
        z = graphical_zonotope(complete_bipartite(n, m))
        if len(z.polytope.vertex_ids) > 1:
            assert enum == len(facets(z.polytope))


def test_corrected_facet_count_closed_form():
    """facets = 2^N + 2N + 2 - 2(2^n + 2^m) + 2 [n >= 2][m >= 2]."""
    for n in range(1, 4):
        for m in range(n, 7 - n):
            big = n + m
            closed = 2**big + 2 * big + 2 - 2 * (2**n + 2**m)
            if n >= 2 and m >= 2:
                closed += 2
            assert closed == bipartite_zonotope_facet_count(n, m), (n, m)


def test_smilansky_check():
    rep = smilansky_check(1, 4, "P")
    assert (rep.n_vertices, rep.n_facets) == (15, 9)
    assert rep.satisfies_bound and rep.indecomposable and rep.is_counterexample
    with pytest.raises(InputError):
        smilansky_check(3, 1, "P")  # three-dimensional member


def test_wedge_vertices_and_preservation():
    point = polytope({"p": (3,)})
    w = permutahedral_wedge(point, 1)
    assert len(w.vertex_ids) == 1  # the lifted copy of the extreme vertex
    sq = polytope({"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (0, 1)})
    w = permutahedral_wedge(sq, 1, "min")
    assert len(w.vertex_ids) == 6  # a triangular prism
    assert not is_indecomposable(framework_of(w))
    p13 = bipartite_truncation(1, 3, "P")
    w1 = permutahedral_wedge(p13.polytope, 1, "min")
    low = min(c[0] for c in p13.polytope.coords)
    dupes = sum(1 for c in p13.polytope.coords if c[0] == low)
    assert len(w1.vertex_ids) == 2 * 7 - dupes
    assert is_indecomposable(framework_of(w1))


def test_matroid_polytopes():
    u24 = matroid_polytope(uniform_matroid(2, 4))
    assert len(u24.polytope.vertex_ids) == 6  # octahedron
    assert u24.component_count == 1
    assert is_indecomposable(u24.framework)
    assert set(u24.framework.edges) == set(edges(u24.polytope))
    two_segments = matroid_polytope(matroid_direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2)))
    assert len(two_segments.polytope.vertex_ids) == 4  # a square
    assert two_segments.component_count == 2
    assert dc_dimension(two_segments.framework) == 2
    k4 = matroid_polytope(graphic_matroid(complete_graph(4)))
    assert len(k4.matroid.bases) == 16
    assert k4.component_count == 1 and is_indecomposable(k4.framework)


def test_exchange_axiom_rejection():
    bad = MatroidBases(
        ("a", "b", "c", "d"),
        frozenset({frozenset({"a", "b"}), frozenset({"c", "d"})}),
    )
    assert not verify_exchange(bad)
    with pytest.raises(InputError):
        matroid_polytope(bad)


def test_loops_and_coloops_are_isolated_components():
    # a coloop: appears in every basis, forming its own component
    mb = MatroidBases(
        ("a", "b", "x"),
        frozenset({frozenset({"a", "x"}), frozenset({"b", "x"})}),
    )
    mp = matroid_polytope(mb)
    assert frozenset({"x"}) in mp.components
    assert mp.component_count == 2
    assert dc_dimension(mp.framework) == 1  # the polytope is a segment


def test_deep_truncation():
    # truncating a cube corner gives the (7, 12, 7) polytope
    cube = polytope({f"c{x}{y}{z}": (x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)})
    dt = deep_truncate(cube, ["c000"])
    assert len(dt.polytope.vertex_ids) == 7
    assert len(edges(dt.polytope)) == 12 and len(facets(dt.polytope)) == 7
    # a vertex with one incident edge too long has non-coplanar neighbors
    lopsided = zonotope([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -2, 2)])
    with pytest.raises(ContractError):
        deep_truncate(lopsided.polytope, ["z0000"])
    z13 = graphical_zonotope(complete_bipartite(1, 3))
    with pytest.raises(ContractError):
        deep_truncate(z13.polytope, ["o111", "o110"])  # adjacent pair


def test_stacking():
    cube = zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    fs = facets(cube.polytope)
    top = next(f for f in fs if all(cube.polytope.point(v)[2] == 1 for v in f.vertex_ids))
    stk = stack_vertex(cube.polytope, [top.vertex_ids], zono=cube)
    assert not is_indecomposable(framework_of(stk.polytope))  # a vertical segment survives
    x1 = next(f for f in fs if all(cube.polytope.point(v)[0] == 1 for v in f.vertex_ids))
    y1 = next(f for f in fs if all(cube.polytope.point(v)[1] == 1 for v in f.vertex_ids))
    stk2 = stack_vertex(cube.polytope, [x1.vertex_ids, y1.vertex_ids], zono=cube)
    assert stk2.gamma_components == 1
    assert is_indecomposable(framework_of(stk2.polytope))


def test_stacked_points_are_reproducible():
    cube = zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    fs = facets(cube.polytope)
    top = next(f for f in fs if all(cube.polytope.point(v)[2] == 1 for v in f.vertex_ids))
    a = stack_vertex(cube.polytope, [top.vertex_ids])
    b = stack_vertex(cube.polytope, [top.vertex_ids])
    assert a.stack_points == b.stack_points
    assert a.polytope == b.polytope


def test_hyperorder():
    seg = hyperorder_polytope(2, 1)
    assert len(seg.vertex_ids) == 2
    assert is_indecomposable(framework_of(seg))
    p42 = hyperorder_polytope(4, 2)
    assert is_indecomposable(framework_of(p42))
    apexish = hyperorder_polytope(3, 3)
    assert len(apexish.vertex_ids) == 1
    # the extreme vertex is adjacent to every other vertex
    apex = (Fraction(0),) * 2 + (Fraction(1),) * 2
    label = next(v for v in p42.vertex_ids if p42.point(v) == apex)
    incident = sum(1 for e in edges(p42) if label in e)
    assert incident == len(p42.vertex_ids) - 1


def test_products():
    seg = polytope({"x": (0,), "y": (1,)})
    sq = product_polytope(seg, seg)
    assert len(sq.vertex_ids) == 4 and dc_dimension(framework_of(sq)) == 2
    tri = polytope({"a": (0, 0), "b": (1, 0), "c": (0, 1)})
    prism = product_polytope(tri, seg)
    assert len(prism.vertex_ids) == 6 and dc_dimension(framework_of(prism)) == 2
    t2 = product_polytope(tri, tri)
    assert len(t2.vertex_ids) == 9 and dc_dimension(framework_of(t2)) == 2


def test_parallelogramic_sums():
    t1 = polytope({"a": (0, 0, 0), "b": (1, 0, 0), "c": (Fraction(1, 2), 0, 1)})
    t2 = polytope({"a": (0, 0, 0), "b": (0, 1, 0), "c": (0, Fraction(1, 2), -1)})
    rep = parallelogramic_sum_report(t1, t2)
    assert rep.ok and rep.dims_add_up and rep.partition_is_lift
    assert rep.dim_sum == 2
    s1 = polytope({"a": (0, 0, 0), "b": (1, 0, 0)})
    s2 = polytope({"a": (0, 0, 0), "b": (2, 0, 0)})
    ok, reason = parallelogramic_position(s1, s2)
    assert not ok and "parallel" in reason
    assert not parallelogramic_sum_report(s1, s2).ok


def test_triangle_free_simpliciality():
    from defocone.cones import is_simplicial_by_partition

    # triangle-free: the complete bipartite zonotope is simplicial with one
    # ray per arc
    z = graphical_zonotope(complete_bipartite(2, 2))
    ok, rays = is_simplicial_by_partition(z.framework())
    assert ok and len(rays) == 4
    hexa = graphical_zonotope(complete_graph(3))
    ok, _ = is_simplicial_by_partition(hexa.framework())
    assert not ok


def test_zonotope_parallelogramic_guard():
    assert is_parallelogramic([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 2, 3)])
    assert not is_parallelogramic([(1, 0, 0), (0, 1, 0), (1, 1, 0)])


def test_wedge_preservation_on_corpus():
    """Wedging keeps the edge-direction property, and wedges of
    indecomposable members stay indecomposable."""
    from defocone.polytope import is_deformed_permutahedron

    cp = corpus()
    for name in ("hexagon", "p_3_1", "q_3_1"):
        p = cp[name].polytope
        assert is_deformed_permutahedron(p)[0]
        for side in ("min", "max"):
            w = permutahedral_wedge(p, 1, side)
            assert is_deformed_permutahedron(w)[0], (name, side)
            if cp[name].expected.get("indecomposable"):
                assert is_indecomposable(framework_of(w)), (name, side)


def test_wedge_tower_spot_checks():
    """Short towers over the seven-vertex member stay indecomposable
    deformed permutahedra and are separated by cheap fingerprints."""
    from defocone.constructions import normal_fingerprint, wedge_tower
    from defocone.polytope import is_deformed_permutahedron

    base = bipartite_truncation(1, 3, "P").polytope
    towers = {
        "11": wedge_tower(base, [(1, "min"), (1, "min")]),
        "12": wedge_tower(base, [(1, "min"), (2, "min")]),
        "21max": wedge_tower(base, [(2, "min"), (1, "max")]),
    }
    prints = {}
    for name, t in towers.items():
        assert is_indecomposable(framework_of(t)), name
        assert is_deformed_permutahedron(t)[0], name
        prints[name] = normal_fingerprint(t)
    assert len(set(prints.values())) == len(prints)


def test_implicit_condition_gap_scan():
    """The two nonnegativity conditions never split on this corpus; any
    future hit is interesting enough to fail loudly here."""
    import itertools as it

    from defocone.framework import implicit_condition_gap

    cp = corpus()
    hits = []
    for name in ("trapezoid", "hexagon", "square", "kallay_coplanar", "q_2_2"):
        fw = cp[name].framework
        for u, v in it.combinations(fw.vertex_ids, 2):
            if implicit_condition_gap(fw, u, v):
                hits.append((name, u, v))
    assert hits == []


def test_mixed_matroid_direct_sums():
    pieces = {
        "U23+U24": (uniform_matroid(2, 3), uniform_matroid(2, 4)),
        "U12+U23": (uniform_matroid(1, 2), uniform_matroid(2, 3)),
    }
    for label, parts in pieces.items():
        mp = matroid_polytope(matroid_direct_sum(*parts))
        assert mp.component_count == len(parts), label
        assert dc_dimension(mp.framework) == len(parts), label
