"""Polytope face detection and the framework bridge."""

import itertools

import pytest

from defocone.constructions import bipartite_truncation
from defocone.corpus import corpus
from defocone.errors import InputError
from defocone.framework import edge_key
from defocone.polytope import (
    edge_supporting_functional,
    edges,
    facets,
    framework_of,
    hull_dim,
    is_deformed_permutahedron,
    matroid_coordinate_test,
    polytope,
)


@pytest.fixture(scope="module")
def cp():
    return corpus()


def test_square_edges_exclude_diagonals(cp):
    sq = cp["square"].polytope
    assert edges(sq) == (("A", "B"), ("A", "D"), ("B", "C"), ("C", "D"))


def test_simplex_has_all_pairs():
    simp = polytope({"a": (0, 0, 0), "b": (1, 0, 0), "c": (0, 1, 0), "d": (0, 0, 1)})
    assert len(edges(simp)) == 6
    assert len(facets(simp)) == 4


def test_cuboctahedron_edge_count():
    q22 = bipartite_truncation(2, 2, "Q")
    assert len(edges(q22.polytope)) == 24
    assert set(edges(q22.polytope)) == set(q22.framework.edges)


def test_facet_counts(cp):
    assert len(facets(cp["cube"].polytope)) == 6
    p31 = bipartite_truncation(3, 1, "P")
    assert len(facets(p31.polytope)) == 7
    p22 = bipartite_truncation(2, 2, "P")
    assert len(facets(p22.polytope)) == 13


def test_facet_flats_are_connected(cp):
    for name in ("cube", "hexagonal_pyramid", "triangular_cupola", "p_2_2"):
        p = cp[name].polytope
        fw = framework_of(p)
        es = set(fw.edges)
        for f in facets(p):
            vs = sorted(f.vertex_ids)
            seen = {vs[0]}
            queue = [vs[0]]
            while queue:
                x = queue.pop()
                for y in vs:
                    if y not in seen and edge_key(x, y) in es:
                        seen.add(y)
                        queue.append(y)
            assert seen == set(vs)


def test_every_edge_in_enough_facets(cp):
    for name in ("cube", "hexagonal_pyramid", "q_2_2"):
        p = cp[name].polytope
        h = hull_dim(p)
        fs = facets(p)
        for e in edges(p):
            count = sum(1 for f in fs if set(e) <= f.vertex_ids)
            assert count >= h - 1


def test_vertex_validation():
    with pytest.raises(InputError):
        polytope({"a": (0, 0), "b": (2, 0), "mid": (1, 0)})
    with pytest.raises(InputError):
        polytope({"a": (0, 0), "b": (0, 0)})


def test_supporting_functional_agrees_with_midpoint_route(cp):
    for name in ("square", "triangle", "hexagon", "triangular_cupola"):
        p = cp[name].polytope
        es = set(edges(p))
        for u, v in itertools.combinations(p.vertex_ids, 2):
            assert edge_supporting_functional(p, u, v) == (edge_key(u, v) in es)


def test_deformed_permutahedron_checks(cp):
    assert is_deformed_permutahedron(cp["hexagon"].polytope)[0]
    ok, witness = is_deformed_permutahedron(cp["cube"].polytope)
    assert not ok and witness is not None
    for kind, n, m in (("P", 3, 1), ("Q", 2, 2)):
        tr = bipartite_truncation(n, m, kind)
        assert is_deformed_permutahedron(tr.polytope)[0]


def test_matroid_coordinate_test(cp):
    # persimmon: some coordinate takes in-degrees 0, 1, 2
    p22 = bipartite_truncation(2, 2, "P")
    assert matroid_coordinate_test(p22.polytope) is False
    # octahedron member: inconclusive (it is a matroid polytope)
    q31 = bipartite_truncation(3, 1, "Q")
    assert matroid_coordinate_test(q31.polytope) is True
    assert matroid_coordinate_test(cp["cube"].polytope) is True


def test_pq_verdict_table():
    """The small-member table: indecomposability and the 0/1-coordinate
    necessary condition."""
    from defocone.framework import is_indecomposable

    expectations = {
        ("P", 1, 1): (True, True),
        ("P", 1, 2): (True, True),
        ("P", 1, 3): (True, False),
        ("P", 2, 2): (True, False),
        ("Q", 1, 3): (True, True),
        ("Q", 2, 2): (False, False),
    }
    for (kind, n, m), (indec, coord_ok) in expectations.items():
        tr = bipartite_truncation(n, m, kind)
        if len(tr.polytope.vertex_ids) == 1:
            assert indec
            continue
        assert is_indecomposable(tr.framework) == indec, (kind, n, m)
        assert matroid_coordinate_test(tr.polytope) == coord_ok, (kind, n, m)
