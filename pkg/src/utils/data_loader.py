"""
BCCKit - Data Loader
Módulo para carregamento e validação de matroides, matrizes de arranjos e
especificações de corpus em JSON (UTF-8)
"""

import json
import logging
import os
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from ..exceptions import SchemaError
from ..models.linalg import to_fraction
from ..models.matroid import (Graphic, Linear, Matroid, Uniform, from_circuits, graphic, linear,
                              uniform)
from ..models.orlik_terao import ArrangementMatrix
from .corpus import CorpusSpec

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

MATROID_TYPES = ('uniform', 'graphic', 'linear', 'circuits')


def _require(data: Dict[str, Any], *keys: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise SchemaError(f"Campos obrigatórios ausentes: {missing}")


def _int_list(values: Any, what: str) -> List[int]:
    if not isinstance(values, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in values):
        raise SchemaError(f"{what} deve ser uma lista de inteiros: {values!r}")
    return list(values)


def _ground(data: Dict[str, Any], n: int) -> Optional[List[int]]:
    if 'ground' not in data:
        return None
    ground = _int_list(data['ground'], 'ground')
    if len(ground) != n:
        raise SchemaError(f"'ground' tem {len(ground)} rótulos, esperado {n}")
    return ground


def matroid_from_dict(data: Dict[str, Any]) -> Matroid:
    """
    Constrói um matroide a partir do esquema JSON

    Args:
        data: {"type": "uniform"|"graphic"|"linear"|"circuits", ...}; "ground" opcional

    Returns:
        Matroid validado
    """
    if not isinstance(data, dict):
        raise SchemaError("O matroide deve ser um objeto JSON")
    kind = data.get('type')
    if kind not in MATROID_TYPES:
        raise SchemaError(f"Tipo de matroide desconhecido: {kind!r} (esperado um de {MATROID_TYPES})")
    if kind == 'uniform':
        _require(data, 'm', 'n')
        m, n = data['m'], data['n']
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (m, n)):
            raise SchemaError("'m' e 'n' devem ser inteiros")
        return uniform(m, n, _ground(data, n))
    if kind == 'graphic':
        _require(data, 'edges')
        edges = data['edges']
        if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise SchemaError("'edges' deve ser uma lista de pares")
        pairs = [tuple(_int_list(e, 'aresta')) for e in edges]
        vertices = data.get('vertices')
        if vertices is not None and any(not 0 <= x < vertices for pair in pairs for x in pair):
            raise SchemaError(f"Aresta com vértice fora de 0..{vertices - 1}")
        return graphic(pairs, _ground(data, len(pairs)))
    if kind == 'linear':
        _require(data, 'matrix')
        columns = data['matrix']
        if not isinstance(columns, list) or any(not isinstance(c, list) for c in columns):
            raise SchemaError("'matrix' deve ser uma lista de colunas")
        return linear(columns, _ground(data, len(columns)))
    _require(data, 'circuits')
    circuits = [_int_list(c, 'circuito') for c in data['circuits']]
    n = data.get('n')
    ground = _ground(data, n) if n is not None else data.get('ground')
    if ground is None:
        if n is None:
            raise SchemaError("Representação por circuitos exige 'n' ou 'ground'")
        ground = list(range(n))
    return from_circuits(_int_list(ground, 'ground'), circuits)


def _compact_edges(edges) -> Tuple[int, List[List[int]]]:
    graph = nx.MultiGraph()
    graph.add_edges_from(edges)
    index = {v: i for i, v in enumerate(sorted(graph.nodes))}
    return len(index), [[index[u], index[v]] for u, v in edges]


def matroid_to_dict(matroid: Matroid) -> Dict[str, Any]:
    """Serializa na representação nativa; "ground" só quando difere de 0..n-1"""
    n = len(matroid.ground)
    rep = matroid.rep
    if isinstance(rep, Uniform):
        data: Dict[str, Any] = {'type': 'uniform', 'm': rep.m, 'n': n}
    elif isinstance(rep, Graphic):
        vertices, edges = _compact_edges(rep.edges)
        data = {'type': 'graphic', 'vertices': vertices, 'edges': edges}
    elif isinstance(rep, Linear):
        data = {'type': 'linear', 'matrix': [[str(x) for x in col] for col in rep.columns]}
    else:
        data = {'type': 'circuits', 'n': n, 'circuits': sorted(sorted(c) for c in rep.circuits)}
    if list(matroid.ground) != list(range(n)):
        data['ground'] = list(matroid.ground)
    return data


def arrangement_from_dict(data: Dict[str, Any]) -> ArrangementMatrix:
    """Matriz de arranjo no esquema Linear ("type" opcional)"""
    if not isinstance(data, dict):
        raise SchemaError("A matriz deve ser um objeto JSON")
    if data.get('type', 'linear') != 'linear':
        raise SchemaError(f"Arranjos usam o tipo 'linear', recebido {data.get('type')!r}")
    _require(data, 'matrix')
    columns = data['matrix']
    if not isinstance(columns, list) or any(not isinstance(c, list) for c in columns):
        raise SchemaError("'matrix' deve ser uma lista de colunas")
    exact = [[to_fraction(x) for x in col] for col in columns]
    return ArrangementMatrix.from_columns(exact, _ground(data, len(columns)))


class DataLoader:
    """Classe para carregar e validar arquivos JSON do BCCKit"""

    def __init__(self, data_path: str = "data"):
        self.data_path = data_path

    def resolve(self, filename: str) -> str:
        if os.path.isabs(filename) or os.path.exists(filename):
            return filename
        return os.path.join(self.data_path, filename)

    def load_json(self, filename: str) -> Any:
        """
        Lê um arquivo JSON em UTF-8

        Args:
            filename: caminho absoluto, relativo ao diretório atual ou a data_path

        Returns:
            Objeto decodificado
        """
        filepath = self.resolve(filename)
        try:
            with open(filepath, encoding='utf-8') as handle:
                data = json.load(handle)
            logger.info(f"Arquivo carregado com sucesso: {filepath}")
            return data
        except FileNotFoundError:
            logger.error(f"Arquivo não encontrado: {filepath}")
            raise SchemaError(f"Arquivo não encontrado: {filepath}")
        except json.JSONDecodeError as e:
            logger.error(f"JSON inválido em {filepath}: {e}")
            raise SchemaError(f"JSON inválido em {filepath}: {e}")

    def save_json(self, data: Any, filename: str) -> str:
        filepath = self.resolve(filename)
        os.makedirs(os.path.dirname(filepath) or '.', exist_ok=True)
        with open(filepath, 'w', encoding='utf-8') as handle:
            json.dump(data, handle, indent=2, ensure_ascii=False)
            handle.write('\n')
        logger.info(f"Arquivo salvo: {filepath}")
        return filepath

    def load_matroid(self, filename: str) -> Matroid:
        return matroid_from_dict(self.load_json(filename))

    def load_arrangement(self, filename: str) -> ArrangementMatrix:
        return arrangement_from_dict(self.load_json(filename))

    def load_corpus_spec(self, filename: str) -> CorpusSpec:
        return CorpusSpec.from_dict(self.load_json(filename))

    def get_matroid_summary(self, matroid: Matroid) -> Dict:
        """
        Retorna um resumo do matroide

        Args:
            matroid: matroide carregado

        Returns:
            Dicionário com tamanho, posto, representação e número de circuitos
        """
        return {
            'size': len(matroid.ground),
            'rank': matroid.full_rank,
            'representation': matroid.kind,
            'circuits': len(matroid.circuits),
            'simple': matroid.is_simple(),
        }
