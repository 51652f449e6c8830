"""
Testes de invariantes: h de Tutte, β, componentes, identidades de Hilbert e colagens
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import DomainPreconditionError, LoopError
from src.models.complex import Ordering, bc_complex
from src.models.constructions import direct_sum, glue
from src.models.invariants import (HPolynomial, beta, check_hilbert_identity, component_count_from_h,
                                   connectivity_after_deletion_contraction, deletion_contraction_h_check,
                                   direct_sum_h, h_polynomial_tutte, parallel_connection_h,
                                   partial_sum_dominance)
from src.models.matroid import graphic, uniform


def test_tutte_h_of_k4(k4):
    assert h_polynomial_tutte(k4).h_vector().entries == (1, 3, 2, 0)
    assert beta(k4) == 2


def test_beta_of_circuits_is_one():
    for m in range(1, 6):
        assert beta(uniform(m, m + 1)) == 1


def test_beta_vanishes_on_disconnected():
    m = direct_sum(uniform(1, 1, [0]), uniform(1, 1, [1]))
    assert beta(m) == 0
    assert component_count_from_h(h_polynomial_tutte(m).h_vector(), 2) == 2


def test_component_count(k4, two_triangles):
    assert component_count_from_h((1, 3, 2, 0), 3) == 1
    assert component_count_from_h(h_polynomial_tutte(two_triangles).h_vector(), 3) == 1
    with pytest.raises(DomainPreconditionError):
        component_count_from_h((1,), 0)


def test_loops_make_tutte_vanish():
    looped = graphic([(0, 1), (1, 1)])
    assert h_polynomial_tutte(looped).coefficients == (0,)


def test_hilbert_identity(k4):
    complex_ = bc_complex(k4, Ordering.of(k4))
    assert check_hilbert_identity(complex_.f_vector(), complex_.h_vector(), 3)
    assert not check_hilbert_identity(complex_.f_vector(), (1, 3, 3, 0), 3)


def test_deletion_contraction(k4, two_triangles):
    assert all(deletion_contraction_h_check(k4, e) for e in k4.ground)
    assert deletion_contraction_h_check(two_triangles, 3)
    with pytest.raises(DomainPreconditionError):
        deletion_contraction_h_check(uniform(1, 1), 0)


def test_deletion_contraction_rejects_loops():
    looped = graphic([(0, 1), (1, 1), (1, 2), (0, 2)])
    with pytest.raises(LoopError):
        deletion_contraction_h_check(looped, 0)


def test_exactly_one_side_connected_when_beta_is_one(two_triangles):
    assert beta(two_triangles) == 1
    assert connectivity_after_deletion_contraction(two_triangles, 3) == (True, False)


def test_partial_sum_dominance():
    assert partial_sum_dominance((1, 3, 2))
    assert partial_sum_dominance((1, 2, 1))
    assert not partial_sum_dominance((3, 1, 1))


def test_product_formulas(two_triangles):
    p = h_polynomial_tutte(uniform(2, 3))
    total = direct_sum(uniform(2, 3, [0, 1, 2]), uniform(2, 3, [3, 4, 5]))
    assert h_polynomial_tutte(total) == direct_sum_h(p, p)
    assert h_polynomial_tutte(two_triangles) == parallel_connection_h(p, p)
    assert parallel_connection_h(p, p).h_vector().entries == (1, 2, 1, 0)


def test_hpolynomial_arithmetic():
    p = HPolynomial.from_h_vector((1, 1, 0))
    assert p.coefficients == (0, 1, 1)
    assert (p + p).coefficients == (0, 2, 2)
    assert p.divide_by_t().h_vector().entries == (1, 1)
    with pytest.raises(DomainPreconditionError):
        HPolynomial((1, 1)).divide_by_t()


@settings(max_examples=20, deadline=None)
@given(m1=st.integers(1, 4), m2=st.integers(1, 4))
def test_parallel_connection_h_product(m1, m2):
    left = uniform(m1, m1 + 1, range(1, m1 + 2))
    right = uniform(m2, m2 + 1, range(1, m2 + 2))
    glued = glue('P', left, right, 1)
    assert h_polynomial_tutte(glued) == parallel_connection_h(h_polynomial_tutte(left), h_polynomial_tutte(right))
