"""
Testes de arranjos: relações de circuito, termos líderes e veredito de Orlik-Terao
"""

from fractions import Fraction

import pytest
import sympy as sp

from src.exceptions import DomainPreconditionError, LoopError, NonEssentialError, NotACircuitError, SchemaError
from src.models.classify import Verdict
from src.models.complex import Ordering
from src.models.matroid import graphic, uniform
from src.models.orlik_terao import (ArrangementMatrix, circuit_relation, generic_arrangement,
                                    graphic_arrangement, lead_monomial, lead_term_check, lead_term_report,
                                    ot_classification, relation_vanishes, underlying_matroid)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture
def u23_arrangement():
    return ArrangementMatrix.from_columns([[1, 0], [0, 1], [1, 1]])


def test_relation_of_u23(u23_arrangement):
    relation = circuit_relation(u23_arrangement, [0, 1, 2])
    assert relation.circuit == (0, 1, 2)
    assert relation.coefficients == (Fraction(1), Fraction(1), Fraction(-1))
    x0, x1, x2 = sp.symbols('x0 x1 x2')
    assert sp.expand(relation.polynomial - (x1 * x2 + x0 * x2 - x0 * x1)) == 0
    assert relation_vanishes(u23_arrangement, relation)


def test_relation_of_generic_columns():
    arrangement = generic_arrangement(2, 3)
    relation = circuit_relation(arrangement, [0, 1, 2])
    assert relation.coefficients == (Fraction(1), Fraction(-2), Fraction(1))
    assert relation_vanishes(arrangement, relation)


def test_wrong_coefficients_do_not_vanish(u23_arrangement):
    relation = circuit_relation(u23_arrangement, [0, 1, 2])
    tampered = type(relation)(relation.circuit, (Fraction(1), Fraction(1), Fraction(1)))
    assert not relation_vanishes(u23_arrangement, tampered)


def test_not_a_circuit(u23_arrangement):
    with pytest.raises(NotACircuitError):
        circuit_relation(u23_arrangement, [0, 1])
    with pytest.raises(NotACircuitError):
        circuit_relation(u23_arrangement, [0, 7])


def test_lead_monomial_precedence(u23_arrangement):
    relation = circuit_relation(u23_arrangement, [0, 1, 2])
    order = Ordering((0, 1, 2))
    assert lead_monomial(relation, order, 'reverse') == (1, 2)
    assert lead_monomial(relation, order, 'forward') == (0, 1)
    with pytest.raises(SchemaError):
        lead_monomial(relation, order, 'sideways')


def test_lead_terms_are_broken_circuits_on_k4():
    arrangement = graphic_arrangement(K4_EDGES)
    for perm in [(0, 1, 2, 3, 4, 5), (5, 3, 1, 0, 2, 4)]:
        assert lead_term_check(arrangement, Ordering(perm))
        assert not lead_term_check(arrangement, Ordering(perm), 'forward')


def test_lead_term_report_rows(u23_arrangement):
    rows = lead_term_report(u23_arrangement, Ordering((2, 0, 1)))
    assert len(rows) == 1
    assert rows[0]['broken_circuit'] == [0, 1]
    assert rows[0]['lead_monomial'] == [0, 1]
    assert rows[0]['matches']
    with pytest.raises(DomainPreconditionError):
        lead_term_report(u23_arrangement, Ordering((0, 1)))


def test_underlying_matroid_preconditions():
    with pytest.raises(LoopError):
        underlying_matroid(ArrangementMatrix.from_columns([[1, 0], [0, 0], [0, 1]]))
    with pytest.raises(NonEssentialError):
        underlying_matroid(ArrangementMatrix.from_columns([[1, 2, 0], [2, 4, 0], [1, 1, 0]]))


def test_arrangement_schema():
    with pytest.raises(SchemaError):
        ArrangementMatrix.from_columns([[1, 0], [0, 1]], labels=[1, 1])
    with pytest.raises(SchemaError):
        ArrangementMatrix.from_columns([[1, 0], [1]])
    with pytest.raises(SchemaError):
        generic_arrangement(3, 2)


def test_simplified_drops_proportional_columns():
    arrangement = ArrangementMatrix.from_columns([[1, 0], [2, 0], [0, 1]], labels=[4, 5, 6])
    simple, mapping = arrangement.simplified()
    assert simple.labels == (4, 6)
    assert mapping == {4: 4, 5: 4, 6: 6}
    assert arrangement.to_dict()['matrix'][1] == ['2', '0']


def test_graphic_arrangement_realizes_graphic_matroid():
    assert underlying_matroid(graphic_arrangement([(0, 1), (1, 2), (0, 2)])).same_as(uniform(2, 3))
    assert underlying_matroid(graphic_arrangement(K4_EDGES)).same_as(graphic(K4_EDGES))


def test_ot_verdicts(u23_arrangement):
    report = ot_classification(u23_arrangement)
    assert report.h == (1, 1)
    assert report.verdict == Verdict.COMPLETE_INTERSECTION
    assert any('Orlik-Terao' in note for note in report.notes)
    generic = ot_classification(generic_arrangement(2, 4))
    assert generic.h == (1, 2)
    assert generic.verdict == Verdict.NEITHER
    assert ot_classification(graphic_arrangement(K4_EDGES)).verdict == Verdict.NEITHER


def test_ot_classification_simplifies_arrangement():
    report = ot_classification(ArrangementMatrix.from_columns([[1, 0], [2, 0], [0, 1], [1, 1]]))
    assert report.simplified
    assert report.h == (1, 1)
    with pytest.raises(LoopError):
        ot_classification(ArrangementMatrix.from_columns([[0, 0], [0, 1], [1, 0]]))
