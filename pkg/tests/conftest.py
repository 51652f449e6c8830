"""
Fixtures compartilhadas: instâncias âncora e diretórios de dados temporários
"""

import json

import pytest

from src.models.matroid import from_circuits, graphic, uniform
from src.utils.data_loader import DataLoader

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture
def k4():
    return graphic(K4_EDGES)


@pytest.fixture
def two_triangles():
    return from_circuits([1, 2, 3, 4, 5], [[1, 2, 3], [3, 4, 5], [1, 2, 4, 5]])


@pytest.fixture
def u23():
    return uniform(2, 3)


@pytest.fixture
def data_dir(tmp_path):
    """Diretório de dados com alguns arquivos de exemplo"""
    files = {
        'k4.json': {'type': 'graphic', 'vertices': 4, 'edges': [list(e) for e in K4_EDGES]},
        'u23_matrix.json': {'type': 'linear', 'matrix': [[1, 0], [0, 1], [1, 1]]},
        'generic_2x4.json': {'type': 'linear', 'matrix': [[1, 1], [1, 2], [1, 3], [1, 4]]},
        'rank_deficient.json': {'type': 'linear', 'matrix': [[1, 2, 0], [2, 4, 0], [3, 6, 0]]},
        'looped.json': {'type': 'graphic', 'edges': [[0, 1], [1, 1], [1, 2], [0, 2]]},
        'broken.json': None,
        'uniform_corpus.json': {
            'families': {'uniform': {'max_n': 4}},
            'order_budget': {'exhaustive_below': 7, 'samples': 5, 'max_sampled': 10},
        },
    }
    for name, content in files.items():
        path = tmp_path / name
        if content is None:
            path.write_text('{"type": "uniform", ', encoding='utf-8')
        else:
            path.write_text(json.dumps(content), encoding='utf-8')
    return tmp_path


@pytest.fixture
def loader(data_dir):
    return DataLoader(str(data_dir))
