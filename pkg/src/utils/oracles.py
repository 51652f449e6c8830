"""
BCCKit - Oráculos
Recontagens por força bruta, independentes dos caminhos principais
"""

import itertools
import logging
from math import comb, factorial
from typing import FrozenSet, List, Optional, Sequence

import networkx as nx

from ..exceptions import LoopError, OrderSizeError
from ..models.complex import HVector, Ordering
from ..models.linalg import column_rank
from ..models.matroid import Circuits, Graphic, Linear, Matroid, Uniform

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

ORACLE_ORDER_LIMIT = 7


def _dependent_in_representation(matroid: Matroid, subset: Sequence[int]) -> bool:
    """Dependência lida da representação, sem passar pelo oráculo de posto"""
    rep = matroid.rep
    position = {e: i for i, e in enumerate(matroid.ground)}
    if isinstance(rep, Uniform):
        return len(subset) > rep.m
    if isinstance(rep, Graphic):
        graph = nx.MultiGraph()
        graph.add_edges_from(rep.edges[position[e]] for e in subset)
        return len(subset) > graph.number_of_nodes() - nx.number_connected_components(graph)
    if isinstance(rep, Linear):
        return column_rank([rep.columns[position[e]] for e in subset]) < len(subset)
    assert isinstance(rep, Circuits)
    members = set(subset)
    return any(c <= members for c in rep.circuits)


def oracle_circuits(matroid: Matroid) -> FrozenSet[FrozenSet[int]]:
    """
    Subconjuntos dependentes cujos subconjuntos de um a menos são independentes

    A dependência vem direto da representação: tamanho para U_{m,n}, ciclos
    para grafos, posto exato das colunas para matrizes.
    """
    found = set()
    for k in range(1, len(matroid.ground) + 1):
        for subset in itertools.combinations(matroid.ground, k):
            if not _dependent_in_representation(matroid, subset):
                continue
            if not any(_dependent_in_representation(matroid, subset[:i] + subset[i + 1:]) for i in range(k)):
                found.add(frozenset(subset))
    return frozenset(found)


def oracle_h_vector(matroid: Matroid, order: Optional[Ordering] = None) -> HVector:
    """
    h-vetor por contagem direta das faces de BC(M, <)

    Todos os subconjuntos são testados contra todos os circuitos quebrados
    (não só os minimais).

    Args:
        matroid: matroide sem laços
        order: ordem usada (padrão: ordem do conjunto base)

    Returns:
        HVector (h_0, ..., h_r)
    """
    if matroid.loops:
        raise LoopError("O oráculo de h-vetor exige um matroide sem laços")
    order = order or Ordering.of(matroid)
    broken = [c - {order.minimum(c)} for c in matroid.circuits]
    f: List[int] = []
    for k in range(len(matroid.ground) + 1):
        count = sum(
            1 for subset in itertools.combinations(matroid.ground, k)
            if not any(b <= set(subset) for b in broken)
        )
        if count == 0:
            break
        f.append(count)
    r = len(f) - 1
    h = [sum((-1) ** (i - j) * comb(r - j, i - j) * f[j] for j in range(i + 1)) for i in range(r + 1)]
    return HVector(tuple(h))


def _disjoint_minimal_broken(matroid: Matroid, order: Ordering) -> bool:
    broken = {c - {order.minimum(c)} for c in matroid.circuits}
    minimal = [b for b in broken if not any(other < b for other in broken)]
    for a, b in itertools.combinations(minimal, 2):
        if a & b:
            return False
    return True


def oracle_ci_orders(matroid: Matroid) -> List[Ordering]:
    """
    Todas as ordens com circuitos quebrados minimais disjuntos, em ordem lexicográfica

    Returns:
        Lista (possivelmente vazia) de Ordering
    """
    n = len(matroid.ground)
    if n > ORACLE_ORDER_LIMIT:
        raise OrderSizeError(f"Varredura de ordens limitada a {ORACLE_ORDER_LIMIT} elementos (|E|={n})")
    if matroid.loops:
        raise LoopError("A varredura de ordens exige um matroide sem laços")
    orders = [
        Ordering(perm) for perm in itertools.permutations(sorted(matroid.ground))
        if _disjoint_minimal_broken(matroid, Ordering(perm))
    ]
    logger.debug(f"Oráculo de ordens CI: {len(orders)} de {factorial(n)}")
    return orders