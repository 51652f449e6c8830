"""
Testes das construções: soma direta, conexões em série / paralelo, extensões livres
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import ConnectionSpecError
from src.models.constructions import (ConnectionSpec, align_right, direct_sum, free_dual_extension,
                                      free_extension, glue, graph_parallel_connection,
                                      graph_series_connection, parallel_connection, series_connection)
from src.models.matroid import graphic, uniform


@pytest.fixture
def triangles():
    return uniform(2, 3, [1, 2, 3]), uniform(2, 3, [3, 4, 5])


def test_parallel_connection_of_two_triangles(triangles, two_triangles):
    left, right = triangles
    glued = parallel_connection(ConnectionSpec(left, right, 3))
    assert glued.ground == (1, 2, 3, 4, 5)
    assert glued.same_as(two_triangles)
    assert glued.full_rank == left.full_rank + right.full_rank - 1


def test_series_connection_of_two_triangles(triangles):
    left, right = triangles
    glued = series_connection(ConnectionSpec(left, right, 3))
    assert glued.same_as(uniform(4, 5, [1, 2, 3, 4, 5]))
    assert glued.full_rank == left.full_rank + right.full_rank


def test_connection_requires_single_shared_element(triangles):
    left, _ = triangles
    with pytest.raises(ConnectionSpecError):
        parallel_connection(ConnectionSpec(left, uniform(2, 3, [2, 3, 4]), 3))


def test_connection_rejects_coloop_basepoint(triangles):
    left, _ = triangles
    with pytest.raises(ConnectionSpecError):
        series_connection(ConnectionSpec(left, uniform(1, 1, [3]), 3))


def test_direct_sum():
    total = direct_sum(uniform(2, 3, [0, 1, 2]), uniform(1, 2, [3, 4]))
    assert total.full_rank == 3
    assert len(total.components()) == 2
    with pytest.raises(ConnectionSpecError):
        direct_sum(uniform(1, 2, [0, 1]), uniform(1, 2, [1, 2]))


def test_free_extension_of_triangle_is_u24():
    triangle = graphic([(0, 1), (1, 2), (0, 2)])
    assert free_extension(triangle).same_as(uniform(2, 4))
    assert free_extension(uniform(2, 3)).same_as(uniform(2, 4))


def test_free_dual_extension_keeps_rank_plus_one():
    extended = free_dual_extension(uniform(2, 3))
    assert extended.same_as(uniform(3, 4))
    k4 = graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert free_dual_extension(k4).full_rank == k4.full_rank + 1


def test_align_right_moves_labels_above_left():
    left = uniform(2, 3, [1, 2, 3])
    right = uniform(2, 3, [1, 2, 3])
    assert align_right(left, right).ground == (4, 5, 6)
    assert align_right(left, right, 2).ground == (2, 4, 5)


def test_glue_kinds(two_triangles):
    left = uniform(2, 3, [1, 2, 3])
    assert glue('P', left, left, 3).same_as(two_triangles)
    assert glue('sum', left, left).ground == (1, 2, 3, 4, 5, 6)
    with pytest.raises(ConnectionSpecError):
        glue('P', left, left)
    with pytest.raises(ConnectionSpecError):
        glue('X', left, left, 3)


def test_graph_connections_realize_matroid_connections():
    witness = {1: (0, 1), 2: (0, 1)}
    c2 = uniform(1, 2, [1, 2])
    series = glue('S', c2, c2, 1)
    series_edges = graph_series_connection(witness, {1: (0, 1), 3: (0, 1)}, 1)
    assert graphic([series_edges[e] for e in series.ground], series.ground).same_as(series)
    parallel = glue('P', series, c2, 2)
    parallel_edges = graph_parallel_connection(series_edges, {2: (0, 1), 4: (0, 1)}, 2)
    assert graphic([parallel_edges[e] for e in parallel.ground], parallel.ground).same_as(parallel)


@settings(max_examples=25, deadline=None)
@given(m1=st.integers(1, 4), m2=st.integers(1, 4))
def test_parallel_connection_rank(m1, m2):
    left = uniform(m1, m1 + 1, range(1, m1 + 2))
    right = uniform(m2, m2 + 1, range(1, m2 + 2))
    glued = glue('P', left, right, 1)
    assert glued.full_rank == m1 + m2 - 1
    assert len(glued.ground) == m1 + m2 + 1
    assert glued.is_connected()
