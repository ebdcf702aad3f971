"""Rule engine: saturation, conclusions, bounds, certificate replay."""

import pytest

from defocone.corpus import corpus, facet_flats
from defocone.deduction import (
    COVERING_CONCLUSION,
    DEGENERATE_CONTRACTION,
    IMPLICIT_FROM_PATH,
    PROJECTION_LIFT,
    RIGID_CYCLE,
    TRIANGLE,
    RuleConfig,
    Step,
    conclude_indecomposable,
    dim_upper_bound,
    saturate,
    verify_certificate,
)
from defocone.framework import dc_dimension, dependency_partition, framework


@pytest.fixture(scope="module")
def cp():
    return corpus()


def test_strawberry_saturation(cp):
    e = cp["p_3_1"]
    st = saturate(e.framework)
    # one class spans all seven vertices
    rep, comp = st.class_components()[0]
    assert comp == frozenset(e.framework.vertex_ids)
    ok, step = conclude_indecomposable(st, facet_flats(e.polytope))
    assert ok and step.kind == COVERING_CONCLUSION


def test_kallay_pair(cp):
    cop = cp["kallay_coplanar"]
    st = saturate(cop.framework)
    ok, _ = conclude_indecomposable(st, facet_flats(cop.polytope))
    assert not ok  # it really is decomposable
    assert dim_upper_bound(st, facet_flats(cop.polytope)) == 2
    skew = cp["kallay_skew"]
    st2 = saturate(skew.framework)
    ok2, _ = conclude_indecomposable(st2, facet_flats(skew.polytope))
    assert ok2
    kinds = {s.kind for s in st2.log}
    assert RIGID_CYCLE in kinds and IMPLICIT_FROM_PATH in kinds


def test_hexagon_learns_nothing(cp):
    st = saturate(cp["hexagon"].framework)
    assert all(s.kind == COVERING_CONCLUSION for s in st.log)  # i.e. no merges
    ok, _ = conclude_indecomposable(st, facet_flats(cp["hexagon"].polytope))
    assert not ok


def test_chiseled_square_pyramid_bound_without_conclusion(cp):
    e = cp["chiseled_square_pyramid"]
    st = saturate(e.framework)
    ok, _ = conclude_indecomposable(st, facet_flats(e.polytope))
    assert not ok  # decomposable, so no sound engine can conclude
    assert dim_upper_bound(st, facet_flats(e.polytope)) == 2


def test_dim_bounds(cp):
    for name in ("triangular_cupola", "chiseled_cube", "triangle_sum_shared_direction"):
        e = cp[name]
        st = saturate(e.framework)
        bound = dim_upper_bound(st, facet_flats(e.polytope))
        assert bound == e.expected["dim_bound"]
        assert bound >= dc_dimension(e.framework)


def test_bound_validity_on_corpus(cp):
    for name, e in cp.items():
        st = saturate(e.framework)
        flats = facet_flats(e.polytope) if e.polytope is not None else None
        bound = dim_upper_bound(st, flats)
        if bound is not None:
            assert bound >= dc_dimension(e.framework), name


def test_soundness_on_corpus(cp):
    for name, e in cp.items():
        st = saturate(e.framework)
        blocks = dependency_partition(e.framework)
        block_of = {edge: i for i, b in enumerate(blocks) for edge in b}
        for rep, es in st.classes().items():
            base = [x for x in es if x in e.framework.edges and x in block_of]
            assert len({block_of[x] for x in base}) <= 1, name


def test_determinism(cp):
    fw = cp["kallay_skew"].framework
    a = saturate(fw)
    b = saturate(fw)
    assert a.log == b.log


def test_degenerate_transfer_rule():
    # doubled-vertex triangle: degenerate edges transfer dependencies
    x, y, z = (0, 0), (4, 0), (0, 4)
    fw = framework(
        {"1": x, "2": x, "3": y, "4": y, "5": z, "6": z},
        [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6")],
    )
    st = saturate(fw)
    assert any(s.kind == DEGENERATE_CONTRACTION for s in st.log)
    ok, _ = conclude_indecomposable(st, None)
    assert ok
    good, idx, reason = verify_certificate(fw, st.log)
    assert good, (idx, reason)


def test_replay_all_produced_certificates(cp):
    for name, e in cp.items():
        st = saturate(e.framework)
        flats = facet_flats(e.polytope) if e.polytope is not None else None
        conclude_indecomposable(st, flats)
        dim_upper_bound(st, flats)
        good, idx, reason = verify_certificate(e.framework, st.log)
        assert good, (name, idx, reason)


def test_mutated_certificates_fail(cp):
    from defocone.report import _mutation_checks

    ok, detail = _mutation_checks(cp)
    assert ok, detail


def test_trivial_conclusions():
    point = framework({"p": (0, 0)}, [])
    ok, _ = conclude_indecomposable(saturate(point), None)
    assert ok
    seg = framework({"a": (0,), "b": (1,)}, [("a", "b")])
    ok, _ = conclude_indecomposable(saturate(seg), None)
    assert ok
    two_points = framework({"a": (0,), "b": (1,)}, [])
    ok, _ = conclude_indecomposable(saturate(two_points), None)
    assert not ok


def test_rule_budget_configuration(cp):
    fw = cp["kallay_skew"].framework
    st = saturate(fw, RuleConfig(use_rigid_cycles=False))
    ok, _ = conclude_indecomposable(st, facet_flats(cp["kallay_skew"].polytope))
    assert not ok  # without rigid cycles the two halves stay separate


def test_collinear_triangle_rejected(cp):
    collinear = framework(
        {"a": (0, 0), "b": (1, 0), "c": (2, 0)},
        [("a", "b"), ("b", "c"), ("a", "c")],
    )
    ok, idx, reason = verify_certificate(
        collinear, [Step(TRIANGLE, {"vertices": ["a", "b", "c"]})]
    )
    assert not ok and "affinely independent" in reason


def test_projection_lift_requires_parallel_paths(cp):
    sq = cp["square"].framework
    good = Step(
        PROJECTION_LIFT,
        {
            "kernel": [["1", "0"]],
            "edge_a": ["B", "C"],
            "edge_b": ["A", "D"],
            "path_a": ["B", "A"],
            "path_b": ["C", "D"],
        },
    )
    ok, _, _ = verify_certificate(sq, [good])
    assert ok
    bad = Step(PROJECTION_LIFT, {**good.payload, "kernel": [["0", "1"]]})
    ok, _, reason = verify_certificate(sq, [bad])
    assert not ok and "parallel" in reason
