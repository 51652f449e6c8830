"""
BCCKit - Corpus
Geradores de instâncias (grafos conexos simples, uniformes, redes série-paralelas
aleatórias, conexões paralelas de U_{m,m+1}), testes de menor K4 e contagens douradas
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

from ..exceptions import GroundSetCapError, SchemaError
from ..models.constructions import EdgeMap, glue, graph_parallel_connection, graph_series_connection
from ..models.matroid import GROUND_SET_CAP, Matroid, graphic, uniform

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

GraphLike = Union[nx.Graph, nx.MultiGraph, Iterable[Tuple[int, int]]]


# ----------------------------------------------------------------------
# especificação
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class GraphFamily:
    max_vertices: int
    max_edges: int


@dataclass(frozen=True)
class UniformFamily:
    max_n: int


@dataclass(frozen=True)
class SpRandomFamily:
    count: int
    max_size: int
    seed: int


@dataclass(frozen=True)
class ParallelUmFamily:
    count: int
    max_blocks: int
    seed: int


@dataclass(frozen=True)
class OrderBudget:
    """Ordens exaustivas até `exhaustive_below` elementos; `samples` ordens sorteadas até `max_sampled`"""

    exhaustive_below: int = 7
    samples: int = 20
    max_sampled: int = 10


@dataclass(frozen=True)
class CorpusSpec:
    """Famílias de instâncias e orçamento de ordens"""

    graphs: Optional[GraphFamily] = None
    uniform: Optional[UniformFamily] = None
    sp_random: Optional[SpRandomFamily] = None
    parallel_um: Optional[ParallelUmFamily] = None
    order_budget: OrderBudget = field(default_factory=OrderBudget)

    _FAMILIES = {
        'graphs': GraphFamily,
        'uniform': UniformFamily,
        'sp_random': SpRandomFamily,
        'parallel_um': ParallelUmFamily,
    }

    def __post_init__(self):
        sizes = {
            'graphs.max_edges': self.graphs.max_edges if self.graphs else 0,
            'uniform.max_n': self.uniform.max_n if self.uniform else 0,
            'sp_random.max_size': self.sp_random.max_size if self.sp_random else 0,
        }
        for key, size in sizes.items():
            if size > GROUND_SET_CAP:
                raise GroundSetCapError(f"{key} = {size} excede o limite de {GROUND_SET_CAP} elementos")

    @classmethod
    def from_dict(cls, data: Dict) -> 'CorpusSpec':
        """
        Lê {"families": {...}, "order_budget": {...}}

        Args:
            data: objeto JSON da especificação

        Returns:
            CorpusSpec validada
        """
        if not isinstance(data, dict) or not isinstance(data.get('families'), dict):
            raise SchemaError("CorpusSpec exige um objeto 'families'")
        families = {}
        for name, params in data['families'].items():
            family_cls = cls._FAMILIES.get(name)
            if family_cls is None:
                raise SchemaError(f"Família desconhecida: {name!r}")
            try:
                families[name] = family_cls(**params)
            except TypeError as e:
                raise SchemaError(f"Parâmetros inválidos para {name}: {e}")
        try:
            budget = OrderBudget(**data.get('order_budget', {}))
        except TypeError as e:
            raise SchemaError(f"order_budget inválido: {e}")
        return cls(order_budget=budget, **families)

    def to_dict(self) -> Dict:
        families = {name: asdict(getattr(self, name)) for name in self._FAMILIES if getattr(self, name)}
        return {'families': families, 'order_budget': asdict(self.order_budget)}

    def with_seed(self, seed: Optional[int]) -> 'CorpusSpec':
        """Substitui todas as sementes (BCCKIT_SEED / --seed)"""
        if seed is None:
            return self
        return replace(
            self,
            sp_random=replace(self.sp_random, seed=seed) if self.sp_random else None,
            parallel_um=replace(self.parallel_um, seed=seed) if self.parallel_um else None,
        )


@dataclass
class CorpusInstance:
    name: str
    family: str
    matroid: Matroid
    trace: Optional[str] = None
    witness: Optional[EdgeMap] = None


# ----------------------------------------------------------------------
# grafos conexos simples
# ----------------------------------------------------------------------
def _bucket_insert(buckets: Dict[str, List[nx.Graph]], graph: nx.Graph) -> bool:
    key = nx.weisfeiler_lehman_graph_hash(graph)
    bucket = buckets.setdefault(key, [])
    if any(nx.is_isomorphic(graph, other) for other in bucket):
        return False
    bucket.append(graph)
    return True


def enumerate_connected_graphs(max_v: int, max_e: int) -> List[nx.Graph]:
    """
    Grafos conexos simples com até max_v vértices e max_e arestas, a menos de isomorfismo

    Cada nível é obtido do anterior acrescentando uma aresta (entre vértices
    existentes ou até um vértice novo); repetições são descartadas por hash
    de Weisfeiler-Lehman seguido de teste de isomorfismo.
    """
    seed = nx.Graph([(0, 1)])
    level = [seed]
    found = [seed]
    for _ in range(1, max_e):
        buckets: Dict[str, List[nx.Graph]] = {}
        nxt = []
        for graph in level:
            n = graph.number_of_nodes()
            candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if not graph.has_edge(u, v)]
            if n < max_v:
                candidates += [(u, n) for u in range(n)]
            for u, v in candidates:
                grown = graph.copy()
                grown.add_edge(u, v)
                if _bucket_insert(buckets, grown):
                    nxt.append(grown)
        if not nxt:
            break
        level = nxt
        found.extend(nxt)
    return sorted(found, key=lambda g: (g.number_of_nodes(), g.number_of_edges()))


def gen_graphic(max_v: int, max_e: int) -> Iterator[Matroid]:
    """
    Matroides gráficos dos grafos conexos simples com 3..max_v vértices

    Args:
        max_v: número máximo de vértices
        max_e: número máximo de arestas (<= 20)

    Returns:
        Iterador de matroides gráficos (arestas ordenadas, vértices 0..n-1)
    """
    if max_e > GROUND_SET_CAP:
        raise GroundSetCapError(f"max_e = {max_e} excede o limite de {GROUND_SET_CAP}")
    graphs = [g for g in enumerate_connected_graphs(max_v, max_e) if g.number_of_nodes() >= 3]
    logger.info(f"Grafos conexos simples (v <= {max_v}, e <= {max_e}): {len(graphs)}")
    for graph in graphs:
        yield graphic(sorted(tuple(sorted(e)) for e in graph.edges()))


def gen_uniform(max_n: int) -> Iterator[Matroid]:
    """U_{m,n} sem laços, 1 <= m <= n <= max_n"""
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            yield uniform(m, n)


# ----------------------------------------------------------------------
# construções aleatórias
# ----------------------------------------------------------------------
def _c2_edges(basepoint: int, new: int) -> EdgeMap:
    return {basepoint: (0, 1), new: (0, 1)}


def gen_sp_random(count: int, max_size: int, seed: int) -> Iterator[Tuple[Matroid, str, EdgeMap]]:
    """
    Redes série-paralelas aleatórias a partir de C_2

    Cada passo cola C_2 = U(1,2) em série ou em paralelo num elemento
    sorteado; o grafo testemunha acompanha as mesmas colagens. O gerador é
    numpy.random.default_rng (PCG64), reprodutível pela semente.

    Args:
        count: número de instâncias
        max_size: tamanho máximo do conjunto base (>= 3)
        seed: semente do PCG64

    Returns:
        Iterador de (matroide, expressão de construção, grafo testemunha)
    """
    if max_size > GROUND_SET_CAP:
        raise GroundSetCapError(f"max_size = {max_size} excede o limite de {GROUND_SET_CAP}")
    if max_size < 3:
        raise SchemaError("gen_sp_random exige max_size >= 3")
    rng = np.random.default_rng(seed)
    for _ in range(count):
        target = int(rng.integers(3, max_size + 1))
        matroid = uniform(1, 2, (1, 2))
        trace = "U(1,2)"
        witness: EdgeMap = {1: (0, 1), 2: (0, 1)}
        while len(matroid.ground) < target:
            kind = 'S' if rng.random() < 0.5 else 'P'
            e = int(matroid.ground[int(rng.integers(len(matroid.ground)))])
            new = max(matroid.ground) + 1
            matroid = glue(kind, matroid, uniform(1, 2, (1, 2)), e)
            trace = f"{kind}({trace},U(1,2);{e})"
            connect = graph_series_connection if kind == 'S' else graph_parallel_connection
            witness = connect(witness, _c2_edges(e, new), e)
        yield matroid, trace, witness


def gen_parallel_um(count: int, max_blocks: int, seed: int) -> Iterator[Tuple[Matroid, str]]:
    """
    Conexões paralelas iteradas de blocos U_{m,m+1} (2 <= m <= 4)

    Returns:
        Iterador de (matroide simples, expressão de construção)
    """
    rng = np.random.default_rng(seed)
    for _ in range(count):
        blocks = int(rng.integers(1, max_blocks + 1))
        m = int(rng.integers(2, 5))
        matroid = uniform(m, m + 1, range(1, m + 2))
        trace = f"U({m},{m + 1})"
        for _ in range(blocks - 1):
            m = int(rng.integers(2, 5))
            if len(matroid.ground) + m > GROUND_SET_CAP:
                break
            e = int(matroid.ground[int(rng.integers(len(matroid.ground)))])
            matroid = glue('P', matroid, uniform(m, m + 1, range(1, m + 2)), e)
            trace = f"P({trace},U({m},{m + 1});{e})"
        yield matroid, trace


def build_corpus(spec: CorpusSpec) -> List[CorpusInstance]:
    """Materializa todas as famílias da especificação"""
    instances: List[CorpusInstance] = []
    if spec.graphs:
        for i, matroid in enumerate(gen_graphic(spec.graphs.max_vertices, spec.graphs.max_edges)):
            witness = {e: uv for e, uv in zip(matroid.ground, matroid.rep.edges)}
            instances.append(CorpusInstance(f"graph-{i}", 'graphs', matroid, witness=witness))
    if spec.uniform:
        for matroid in gen_uniform(spec.uniform.max_n):
            instances.append(CorpusInstance(f"U({matroid.rep.m},{len(matroid.ground)})", 'uniform', matroid,
                                            trace=f"U({matroid.rep.m},{len(matroid.ground)})"))
    if spec.sp_random:
        family = spec.sp_random
        for i, (matroid, trace, witness) in enumerate(gen_sp_random(family.count, family.max_size, family.seed)):
            instances.append(CorpusInstance(f"sp-{i}", 'sp_random', matroid, trace=trace, witness=witness))
    if spec.parallel_um:
        family = spec.parallel_um
        for i, (matroid, trace) in enumerate(gen_parallel_um(family.count, family.max_blocks, family.seed)):
            instances.append(CorpusInstance(f"pum-{i}", 'parallel_um', matroid, trace=trace))
    logger.info(f"Corpus com {len(instances)} instâncias")
    return instances


# ----------------------------------------------------------------------
# menores K4
# ----------------------------------------------------------------------
def _edge_list(graph: GraphLike) -> List[Tuple[int, int]]:
    if isinstance(graph, (nx.Graph, nx.MultiGraph)):
        return [(u, v) for u, v, *_ in graph.edges()]
    return [tuple(e) for e in graph]


def _simple_edges(edges: Iterable[Tuple[int, int]]) -> frozenset:
    """Remove laços e arestas paralelas (vértices isolados somem junto)"""
    return frozenset(frozenset(e) for e in edges if e[0] != e[1])


def _has_k4_minor(edges: frozenset, memo: Dict[frozenset, bool]) -> bool:
    if edges in memo:
        return memo[edges]
    vertices = set().union(*edges) if edges else set()
    if len(vertices) < 4 or len(edges) < 6:
        result = False
    elif len(vertices) == 4 and len(edges) == 6:
        result = True
    else:
        result = False
        for edge in sorted(edges, key=sorted):
            deleted = edges - {edge}
            if _has_k4_minor(deleted, memo):
                result = True
                break
            u, v = sorted(edge)
            contracted = _simple_edges(
                tuple(u if x == v else x for x in sorted(other)) for other in deleted
            )
            if _has_k4_minor(contracted, memo):
                result = True
                break
    memo[edges] = result
    return result


def k4_minor_free(graph: GraphLike) -> bool:
    """
    Busca exaustiva de menor K4 por deleção/contração de arestas

    Args:
        graph: grafo networkx ou lista de arestas (até 20 arestas)

    Returns:
        True se o grafo não tem K4 como menor
    """
    edges = _edge_list(graph)
    if len(edges) > GROUND_SET_CAP:
        raise GroundSetCapError(f"{len(edges)} arestas excedem o limite de {GROUND_SET_CAP}")
    return not _has_k4_minor(_simple_edges(edges), {})


def k4_reduction_free(graph: GraphLike) -> bool:
    """
    Segundo oráculo: reduções série-paralelas

    Remove laços, funde arestas paralelas, apaga vértices de grau <= 1 e
    suprime vértices de grau 2; o grafo é livre de menor K4 sse sobra um
    grafo sem arestas.
    """
    work = nx.Graph()
    work.add_edges_from((u, v) for u, v in _edge_list(graph) if u != v)
    changed = True
    while changed and work.number_of_edges():
        changed = False
        for node in list(work.nodes):
            degree = work.degree(node)
            if degree <= 1:
                work.remove_node(node)
                changed = True
            elif degree == 2:
                a, b = list(work.neighbors(node))
                work.remove_node(node)
                work.add_edge(a, b)
                changed = True
    return work.number_of_edges() == 0


# ----------------------------------------------------------------------
# contagens douradas
# ----------------------------------------------------------------------
def load_golden_counts(path: str) -> Dict[str, int]:
    if not os.path.exists(path):
        return {}
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)


def write_golden_counts(path: str, counts: Dict[str, int]) -> None:
    os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(dict(sorted(counts.items())), handle, indent=2)
        handle.write('\n')
    logger.info(f"Contagens douradas gravadas em {path}")


def check_golden_count(path: str, key: str, value: int) -> bool:
    """
    Compara uma contagem com o arquivo dourado; grava a chave na primeira execução

    Returns:
        True se a contagem confere (ou acabou de ser registrada)
    """
    counts = load_golden_counts(path)
    if key not in counts:
        counts[key] = value
        write_golden_counts(path, counts)
        return True
    if counts[key] != value:
        logger.error(f"Contagem {key}: esperado {counts[key]}, obtido {value}")
        return False
    return True


def golden_key(max_v: int, max_e: int) -> str:
    return f"graphs({max_v},{max_e})"
