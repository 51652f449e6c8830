"""
Testes de classificação: formas de links, painel local, simetria do h-vetor,
decomposição em conexões paralelas e síntese de ordens
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import (CohenMacaulayNotGrantedError, DomainPreconditionError, NotConnectedError,
                            NotSimpleError, OrderSizeError)
from src.models.classify import (Leaf, Parallel, ShapeKind, Verdict, bc_local_panel, ci_orders_exhaustive,
                                 classify_matroid, dehn_sommerville, gorenstein_shape, is_complete_intersection,
                                 last_two_symmetric, link_shape, local_panel, matroid_complex_panel,
                                 parallel_decompose, realize, synthesize_ci_order, tree_leaves)
from src.models.complex import Ordering, SimplicialComplex
from src.models.constructions import direct_sum, glue
from src.models.matroid import graphic, uniform
from src.utils.expression import parse_expression


def polygon(n):
    return SimplicialComplex.from_facets([[i, (i + 1) % n] for i in range(n)])


def test_link_shapes():
    assert link_shape(polygon(3)).kind == ShapeKind.NGON
    assert link_shape(polygon(6)).size == 6
    path = link_shape(SimplicialComplex.from_facets([[1, 2], [2, 3]]))
    assert (path.kind, path.size) == (ShapeKind.PATH, 3)
    assert link_shape(SimplicialComplex.from_facets([[7]])).kind == ShapeKind.POINT
    assert link_shape(SimplicialComplex.empty()).kind == ShapeKind.EMPTY
    assert link_shape(SimplicialComplex.from_facets([[1], [2]])).kind == ShapeKind.OTHER
    assert link_shape(SimplicialComplex.from_facets([[0, 1], [0, 2], [0, 3]])).kind == ShapeKind.OTHER
    with pytest.raises(DomainPreconditionError):
        link_shape(SimplicialComplex.from_facets([[0, 1, 2]]))


def test_gorenstein_shape_requires_cohen_macaulay():
    with pytest.raises(CohenMacaulayNotGrantedError):
        gorenstein_shape(polygon(4), cm_granted=False)


def test_pentagon_is_gorenstein_but_not_complete_intersection():
    panel = local_panel(polygon(5))
    assert panel.gorenstein
    assert panel.locally_gorenstein
    assert not panel.ci_links
    assert not panel.complete_intersection
    assert not panel.agree


def test_small_gorenstein_verdicts():
    assert gorenstein_shape(SimplicialComplex.empty(), cm_granted=True)
    assert gorenstein_shape(SimplicialComplex.from_facets([[1], [2]]), cm_granted=True)
    assert not gorenstein_shape(SimplicialComplex.from_facets([[1], [2], [3]]), cm_granted=True)
    assert not gorenstein_shape(SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4]]), cm_granted=True)


def test_bc_panel_depends_on_order(two_triangles):
    good = bc_local_panel(two_triangles, Ordering((1, 2, 3, 4, 5)))
    bad = bc_local_panel(two_triangles, Ordering((1, 4, 2, 3, 5)))
    assert good.agree and all(good.as_tuple())
    assert bad.agree and not any(bad.as_tuple())
    assert is_complete_intersection(two_triangles, Ordering((1, 2, 3, 4, 5)))
    assert not is_complete_intersection(two_triangles, Ordering((1, 4, 2, 3, 5)))


def test_k4_bc_complex_is_not_gorenstein(k4):
    panel = bc_local_panel(k4, Ordering.of(k4))
    assert not panel.gorenstein


def test_matroid_complex_panel(u23, k4):
    assert matroid_complex_panel(u23).gorenstein == matroid_complex_panel(u23).complete_intersection
    triangle_complex = matroid_complex_panel(u23)
    assert triangle_complex.gorenstein and triangle_complex.complete_intersection
    assert not matroid_complex_panel(k4).complete_intersection


def test_h_vector_symmetry():
    assert dehn_sommerville((1, 2, 1))
    assert not dehn_sommerville((1, 3, 2))
    assert last_two_symmetric((1, 2, 3, 4, 2, 1))
    assert not dehn_sommerville((1, 2, 3, 4, 2, 1))
    assert last_two_symmetric((1,))
    with pytest.raises(DomainPreconditionError):
        dehn_sommerville((1, 2, 0))


def test_parallel_decompose_two_triangles(two_triangles):
    tree = parallel_decompose(two_triangles)
    assert isinstance(tree, Parallel)
    assert tree.basepoint == 3
    assert [leaf.elements for leaf in tree_leaves(tree)] == [(1, 2, 3), (3, 4, 5)]
    assert realize(tree).same_as(two_triangles)


def test_parallel_decompose_single_block():
    assert parallel_decompose(uniform(3, 4)) == Leaf((0, 1, 2, 3))


def test_k4_does_not_decompose(k4):
    assert parallel_decompose(k4) is None
    assert synthesize_ci_order(k4) is None


def test_parallel_decompose_preconditions():
    with pytest.raises(NotConnectedError):
        parallel_decompose(direct_sum(uniform(2, 3, [0, 1, 2]), uniform(2, 3, [3, 4, 5])))
    with pytest.raises(NotSimpleError):
        parallel_decompose(uniform(1, 2))


def test_synthesized_order_is_verified(two_triangles):
    order = synthesize_ci_order(two_triangles)
    assert order == Ordering((1, 2, 3, 4, 5))
    assert is_complete_intersection(two_triangles, order)


def test_exhaustive_sweep(k4, two_triangles):
    results = ci_orders_exhaustive(k4)
    assert len(results) == 720
    assert not any(ok for _, ok in results)
    witnesses = [perm for perm, ok in ci_orders_exhaustive(two_triangles) if ok]
    assert witnesses[0] == (1, 2, 3, 4, 5)
    with pytest.raises(OrderSizeError):
        ci_orders_exhaustive(uniform(2, 8))


def test_classify_anchors(k4):
    report = classify_matroid(k4)
    assert report.h == (1, 3, 2)
    assert report.verdict == Verdict.NEITHER
    assert report.ci_order is None and not report.decomposable
    for m in range(2, 6):
        circuit = classify_matroid(uniform(m, m + 1))
        assert circuit.h == (1,) * m
        assert circuit.verdict == Verdict.COMPLETE_INTERSECTION


def test_classify_parallel_connection_expression():
    report = classify_matroid(parse_expression("P(U(2,3),U(2,3);3)"), exhaustive=True)
    assert report.h == (1, 2, 1)
    assert report.verdict == Verdict.COMPLETE_INTERSECTION
    data = report.to_dict()
    assert data['verdict'] == 'CI'
    assert data['per_order_results']['orders'] == 120
    assert data['per_order_results']['least_witness'] == [1, 2, 3, 4, 5]
    assert data['decomposition'][0]['parallel'] == 3


def test_classify_simplifies_first():
    doubled_triangle = graphic([(0, 1), (0, 1), (1, 2), (0, 2)])
    report = classify_matroid(doubled_triangle)
    assert report.simplified
    assert report.h == (1, 1)
    assert report.verdict == Verdict.COMPLETE_INTERSECTION


def test_classify_disconnected_sum():
    total = glue('sum', uniform(2, 3, [1, 2, 3]), uniform(3, 4, [1, 2, 3, 4]))
    report = classify_matroid(total)
    assert report.h == (1, 2, 2, 1)
    assert len(report.components) == 2
    assert report.verdict == Verdict.COMPLETE_INTERSECTION


@settings(max_examples=15, deadline=None)
@given(blocks=st.lists(st.integers(2, 3), min_size=1, max_size=3), data=st.data())
def test_parallel_blocks_always_classify_ci(blocks, data):
    matroid = uniform(blocks[0], blocks[0] + 1, range(1, blocks[0] + 2))
    for m in blocks[1:]:
        e = data.draw(st.sampled_from(matroid.ground))
        matroid = glue('P', matroid, uniform(m, m + 1, range(1, m + 2)), e)
    report = classify_matroid(matroid)
    assert report.verdict == Verdict.COMPLETE_INTERSECTION
    assert is_complete_intersection(matroid, report.ci_order)
    assert dehn_sommerville(report.h)
