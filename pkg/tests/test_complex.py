"""
Testes de complexos simpliciais, ordens e complexos de circuitos quebrados
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import DomainPreconditionError, LoopError, SchemaError
from src.models.complex import (Ordering, SimplicialComplex, bc_complex, broken_circuits,
                                independence_complex, minimal_broken_circuits, reduced_bc_complex)
from src.models.matroid import graphic, uniform


def test_ordering_rejects_repeats_and_foreign_elements(u23):
    with pytest.raises(SchemaError):
        Ordering((0, 1, 1))
    with pytest.raises(DomainPreconditionError):
        Ordering((0, 1, 5)).check_for(u23)


def test_broken_circuits_of_two_triangles(two_triangles):
    order = Ordering((1, 2, 3, 4, 5))
    assert broken_circuits(two_triangles, order) == {
        frozenset({2, 3}), frozenset({4, 5}), frozenset({2, 4, 5})
    }
    assert minimal_broken_circuits(two_triangles, order) == {frozenset({2, 3}), frozenset({4, 5})}


def test_bc_h_vectors(k4, two_triangles, u23):
    assert bc_complex(k4, Ordering.of(k4)).h_vector().entries == (1, 3, 2, 0)
    assert bc_complex(two_triangles, Ordering.of(two_triangles)).h_vector().truncated() == (1, 2, 1)
    assert bc_complex(u23, Ordering.of(u23)).facets == (frozenset({0, 1}), frozenset({0, 2}))


def test_minimum_is_a_cone_point(k4):
    order = Ordering((3, 0, 1, 2, 4, 5))
    assert 3 in bc_complex(k4, order).cone_points


def test_bc_faces_are_independent(k4):
    complex_ = bc_complex(k4, Ordering((5, 4, 3, 2, 1, 0)))
    assert all(k4.is_independent(face) for face in complex_.faces())


def test_loops_are_rejected():
    with pytest.raises(LoopError):
        bc_complex(graphic([(0, 1), (1, 1)]), Ordering((0, 1)))


def test_polygons_and_nonfaces():
    triangle = SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]])
    assert triangle.f_vector().entries == (1, 3, 3)
    assert triangle.h_vector().entries == (1, 1, 1)
    assert triangle.reduced_euler() == -1
    assert triangle.minimal_nonfaces() == {frozenset({1, 2, 3})}
    square = SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4], [1, 4]])
    assert square.minimal_nonfaces() == {frozenset({1, 3}), frozenset({2, 4})}
    assert square.is_complete_intersection()
    pentagon = SimplicialComplex.from_facets([[i, (i + 1) % 5] for i in range(5)])
    assert len(pentagon.minimal_nonfaces()) == 5
    assert not pentagon.is_complete_intersection()


def test_ambient_vertices_become_singleton_nonfaces():
    complex_ = SimplicialComplex.from_facets([[0, 1]], ambient=[0, 1, 2])
    assert frozenset({2}) in complex_.minimal_nonfaces()


def test_void_and_empty_complexes():
    void = SimplicialComplex.void()
    assert void.is_void
    with pytest.raises(DomainPreconditionError):
        void.h_vector()
    empty = SimplicialComplex.empty()
    assert empty.dim == -1
    assert empty.f_vector().entries == (1,)
    assert empty.h_vector().entries == (1,)


def test_link_star_and_core():
    cone = SimplicialComplex.from_facets([[0, 1, 2], [0, 2, 3]])
    assert cone.link([0]).facets == (frozenset({1, 2}), frozenset({2, 3}))
    assert cone.star([1]).facets == (frozenset({0, 1, 2}),)
    assert cone.cone_points == frozenset({0, 2})
    assert cone.core().vertices == (1, 3)
    with pytest.raises(DomainPreconditionError):
        cone.link([1, 3])


def test_faces_with_one_dimensional_link():
    cone = SimplicialComplex.from_facets([[0, 1, 2], [0, 2, 3]])
    faces = set(cone.faces_with_one_dimensional_link())
    assert faces == {frozenset({v}) for v in range(4)}


def test_independence_and_reduced_complexes(u23):
    assert set(independence_complex(u23).facets) == {frozenset(p) for p in [(0, 1), (0, 2), (1, 2)]}
    reduced = reduced_bc_complex(u23, Ordering.of(u23))
    assert reduced.facets == (frozenset({1}), frozenset({2}))


@settings(max_examples=30, deadline=None)
@given(perm=st.permutations([0, 1, 2, 3, 4, 5]))
def test_h_vector_does_not_depend_on_order(perm):
    k4 = graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert bc_complex(k4, Ordering(tuple(perm))).h_vector().entries == (1, 3, 2, 0)


@settings(max_examples=20, deadline=None)
@given(perm=st.permutations([0, 1, 2, 3, 4]))
def test_bc_of_uniform_is_a_cone(perm):
    m = uniform(3, 5)
    complex_ = bc_complex(m, Ordering(tuple(perm)))
    assert perm[0] in complex_.cone_points
    assert complex_.h_vector().truncated() == (1, 2, 3)
