"""
Testes do carregamento e da validação dos arquivos JSON
"""

from fractions import Fraction

import pytest

from src.exceptions import GroundSetCapError, SchemaError
from src.models.matroid import from_circuits, graphic, linear, uniform
from src.utils.data_loader import arrangement_from_dict, matroid_from_dict, matroid_to_dict


def test_load_graphic_file(loader, k4):
    m = loader.load_matroid('k4.json')
    assert m.same_as(k4)
    summary = loader.get_matroid_summary(m)
    assert summary == {'size': 6, 'rank': 3, 'representation': 'graphic', 'circuits': 7, 'simple': True}


def test_load_arrangement_and_corpus(loader):
    arrangement = loader.load_arrangement('u23_matrix.json')
    assert arrangement.labels == (0, 1, 2)
    assert arrangement.column(2) == (Fraction(1), Fraction(1))
    spec = loader.load_corpus_spec('uniform_corpus.json')
    assert spec.uniform.max_n == 4
    assert spec.order_budget.samples == 5


def test_missing_and_broken_files(loader):
    with pytest.raises(SchemaError):
        loader.load_json('nao_existe.json')
    with pytest.raises(SchemaError):
        loader.load_matroid('broken.json')


def test_save_json_creates_directories(loader, data_dir):
    path = loader.save_json({'type': 'uniform', 'm': 1, 'n': 2}, 'novos/u12.json')
    assert path == str(data_dir / 'novos' / 'u12.json')
    assert loader.load_matroid('novos/u12.json').same_as(uniform(1, 2))


@pytest.mark.parametrize("data", [
    [],
    {'type': 'matrix'},
    {'type': 'uniform', 'm': 2},
    {'type': 'uniform', 'm': '2', 'n': 3},
    {'type': 'uniform', 'm': 2, 'n': 3, 'ground': [1, 2]},
    {'type': 'graphic', 'edges': [[0, 1, 2]]},
    {'type': 'graphic', 'vertices': 2, 'edges': [[0, 5]]},
    {'type': 'linear', 'matrix': [[1, 0.5]]},
    {'type': 'circuits', 'circuits': [[0, 1]]},
    {'type': 'circuits', 'n': 3, 'circuits': [[0, True]]},
])
def test_schema_errors(data):
    with pytest.raises(SchemaError):
        matroid_from_dict(data)


def test_ground_set_cap():
    with pytest.raises(GroundSetCapError):
        matroid_from_dict({'type': 'uniform', 'm': 1, 'n': 25})


def test_linear_accepts_fraction_strings():
    m = matroid_from_dict({'type': 'linear', 'matrix': [[1, 0], [0, 1], ['1/3', '2/3']], 'ground': [7, 8, 9]})
    assert m.ground == (7, 8, 9)
    assert m.circuits == frozenset([frozenset({7, 8, 9})])


def test_serialization_keeps_native_representation(two_triangles):
    assert matroid_to_dict(uniform(2, 3)) == {'type': 'uniform', 'm': 2, 'n': 3}
    graph = matroid_to_dict(graphic([(5, 7), (7, 9)]))
    assert graph == {'type': 'graphic', 'vertices': 3, 'edges': [[0, 1], [1, 2]]}
    assert matroid_to_dict(linear([[1, 0], ['1/2', 1]]))['matrix'] == [['1', '0'], ['1/2', '1']]
    data = matroid_to_dict(two_triangles)
    assert data['type'] == 'circuits'
    assert data['ground'] == [1, 2, 3, 4, 5]
    assert matroid_from_dict(data).same_as(two_triangles)
    assert matroid_to_dict(from_circuits([0, 1], [[0, 1]]))['circuits'] == [[0, 1]]


def test_arrangement_schema():
    assert arrangement_from_dict({'matrix': [[1, 0], [0, 1]], 'ground': [3, 4]}).labels == (3, 4)
    with pytest.raises(SchemaError):
        arrangement_from_dict({'type': 'graphic', 'edges': []})
    with pytest.raises(SchemaError):
        arrangement_from_dict({'matrix': 'abc'})
