"""
BCCKit - Classificação
Procedimentos de decisão: interseção completa, critério de Gorenstein por
forma (core / Euler / links), painel das seis condições locais, simetria do
h-vetor, decomposição em conexões paralelas e síntese de ordens CI
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..exceptions import (CohenMacaulayNotGrantedError, DomainPreconditionError, ConnectionSpecError,
                          LoopError, NotConnectedError, NotSimpleError, OrderSizeError, PropertyFailure)
from .complex import (HVector, Ordering, SimplicialComplex, bc_complex, independence_complex,
                      minimal_broken_circuits)
from .constructions import ConnectionSpec, parallel_connection
from .matroid import Matroid, mask_of, uniform

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

EXHAUSTIVE_ORDER_LIMIT = 7


# ----------------------------------------------------------------------
# forma de complexos de dimensão <= 1
# ----------------------------------------------------------------------
class ShapeKind(Enum):
    NGON = 'ngon'
    PATH = 'path'
    POINT = 'point'
    EMPTY = 'empty'
    OTHER = 'other'


@dataclass(frozen=True)
class LinkShape:
    kind: ShapeKind
    size: int = 0

    def __str__(self) -> str:
        if self.kind in (ShapeKind.NGON, ShapeKind.PATH):
            return f"{self.kind.value}({self.size})"
        return self.kind.value


def link_shape(complex_: SimplicialComplex) -> LinkShape:
    """
    Classifica um complexo de dimensão 0 ou 1 pelo grafo subjacente

    Args:
        complex_: complexo com dim <= 1

    Returns:
        NGon(n), Path(m vértices), Point, Empty ou Other
    """
    if complex_.dim > 1:
        raise DomainPreconditionError(f"link_shape exige dim <= 1, recebeu dim {complex_.dim}")
    if not complex_.vertices:
        return LinkShape(ShapeKind.EMPTY)
    graph = nx.Graph()
    graph.add_nodes_from(complex_.vertices)
    graph.add_edges_from(complex_.edges)
    n = graph.number_of_nodes()
    if n == 1:
        return LinkShape(ShapeKind.POINT, 1)
    if not nx.is_connected(graph):
        return LinkShape(ShapeKind.OTHER, n)
    degrees = [d for _, d in graph.degree()]
    if n >= 3 and all(d == 2 for d in degrees):
        return LinkShape(ShapeKind.NGON, n)
    if nx.is_tree(graph) and max(degrees) <= 2:
        return LinkShape(ShapeKind.PATH, n)
    return LinkShape(ShapeKind.OTHER, n)


def _sign(exponent: int) -> int:
    return 1 if exponent % 2 == 0 else -1


def _gorenstein_link_shape(shape: LinkShape) -> bool:
    return shape.kind == ShapeKind.NGON or (shape.kind == ShapeKind.PATH and shape.size <= 3)


def _ci_link_shape(shape: LinkShape) -> bool:
    """Complexos 1-dimensionais que são interseção completa: 3-gono, 4-gono, caminhos com até 3 vértices"""
    if shape.kind == ShapeKind.NGON:
        return shape.size in (3, 4)
    return shape.kind == ShapeKind.PATH and shape.size <= 3


def gorenstein_shape(complex_: SimplicialComplex, cm_granted: bool) -> bool:
    """
    Critério de Gorenstein por forma para complexos Cohen-Macaulay

    Δ é Gorenstein sse Δ = {∅}, ou Δ tem um ou dois vértices, ou
    χ̃(core Δ) = (-1)^dim(core Δ) e todo link 1-dimensional é um n-gono ou um
    caminho com no máximo 3 vértices.

    Args:
        complex_: complexo simplicial
        cm_granted: o chamador garante que Δ é Cohen-Macaulay

    Returns:
        Veredito do critério
    """
    if not cm_granted:
        raise CohenMacaulayNotGrantedError(
            "O critério por forma só vale para complexos Cohen-Macaulay; recusando"
        )
    if complex_.is_void or complex_.dim < 0:
        return True
    if complex_.dim == 0:
        return len(complex_.vertices) <= 2
    core = complex_.core()
    if core.reduced_euler() != _sign(core.dim):
        return False
    for face in complex_.faces_with_one_dimensional_link():
        if not _gorenstein_link_shape(link_shape(complex_.link(face))):
            return False
    return True


# ----------------------------------------------------------------------
# painel local (Gorenstein / interseção completa)
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class LocalPanel:
    """Seis condições sobre um complexo Cohen-Macaulay"""

    gorenstein: bool
    locally_gorenstein: bool
    gorenstein_links: bool
    ci_links: bool
    locally_ci: bool
    complete_intersection: bool

    def as_tuple(self) -> Tuple[bool, ...]:
        return (self.gorenstein, self.locally_gorenstein, self.gorenstein_links,
                self.ci_links, self.locally_ci, self.complete_intersection)

    @property
    def agree(self) -> bool:
        return len(set(self.as_tuple())) == 1


def local_panel(complex_: SimplicialComplex) -> LocalPanel:
    """Avalia as seis condições para um complexo Cohen-Macaulay"""
    vertex_links = [complex_.link([v]) for v in complex_.vertices]
    one_dim_links = [complex_.link(f) for f in complex_.faces_with_one_dimensional_link()]
    return LocalPanel(
        gorenstein=gorenstein_shape(complex_, cm_granted=True),
        locally_gorenstein=all(gorenstein_shape(lk, cm_granted=True) for lk in vertex_links),
        gorenstein_links=all(gorenstein_shape(lk, cm_granted=True) for lk in one_dim_links),
        ci_links=all(_ci_link_shape(link_shape(lk)) for lk in one_dim_links),
        locally_ci=all(lk.is_complete_intersection() for lk in vertex_links),
        complete_intersection=complex_.is_complete_intersection(),
    )


def is_complete_intersection(matroid: Matroid, order: Ordering) -> bool:
    """
    BC(M, <) é interseção completa sse os circuitos quebrados minimais são disjuntos

    Args:
        matroid: matroide sem laços
        order: ordem do conjunto base

    Returns:
        True se os circuitos quebrados minimais forem dois a dois disjuntos
    """
    seen = 0
    for bc in minimal_broken_circuits(matroid, order):
        m = mask_of(bc)
        if m & seen:
            return False
        seen |= m
    return True


def bc_local_panel(matroid: Matroid, order: Ordering) -> LocalPanel:
    """Painel das seis condições equivalentes para BC(M, <)"""
    if matroid.loops:
        raise LoopError("O painel exige um matroide sem laços")
    panel = local_panel(bc_complex(matroid, order))
    if panel.complete_intersection != is_complete_intersection(matroid, order):
        raise PropertyFailure("Não-faces minimais de BC diferem dos circuitos quebrados minimais")
    return panel


def matroid_complex_panel(matroid: Matroid) -> LocalPanel:
    """Mesmo painel para o complexo de independentes do matroide"""
    return local_panel(independence_complex(matroid))


# ----------------------------------------------------------------------
# simetria do h-vetor
# ----------------------------------------------------------------------
def _truncated(h: Union[HVector, Sequence[int]]) -> Tuple[int, ...]:
    entries = h.truncated() if isinstance(h, HVector) else tuple(h)
    if not entries:
        raise DomainPreconditionError("h-vetor vazio")
    if entries[-1] == 0:
        raise DomainPreconditionError(f"O h-vetor deve estar truncado em h_s != 0: {entries}")
    return entries


def dehn_sommerville(h: Union[HVector, Sequence[int]]) -> bool:
    """h_i = h_(s-i) para todo i"""
    entries = _truncated(h)
    return entries == entries[::-1]


def last_two_symmetric(h: Union[HVector, Sequence[int]]) -> bool:
    """h_0 = h_s e h_1 = h_(s-1)"""
    entries = _truncated(h)
    s = len(entries) - 1
    if s == 0:
        return True
    return entries[0] == entries[s] and entries[1] == entries[s - 1]


# ----------------------------------------------------------------------
# árvore de decomposição
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Leaf:
    """Bloco U_{m,m+1} com seus rótulos"""

    elements: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.elements) - 1


@dataclass(frozen=True)
class Coloop:
    element: int


@dataclass(frozen=True)
class Parallel:
    left: 'DecompositionTree'
    right: 'DecompositionTree'
    basepoint: int


DecompositionTree = Union[Leaf, Coloop, Parallel]


def realize(tree: DecompositionTree) -> Matroid:
    """Avalia a árvore por conexões em paralelo"""
    if isinstance(tree, Leaf):
        return uniform(tree.m, tree.m + 1, tree.elements)
    if isinstance(tree, Coloop):
        return uniform(1, 1, (tree.element,))
    return parallel_connection(ConnectionSpec(realize(tree.left), realize(tree.right), tree.basepoint))


def tree_leaves(tree: DecompositionTree) -> List[Union[Leaf, Coloop]]:
    if isinstance(tree, Parallel):
        return tree_leaves(tree.left) + tree_leaves(tree.right)
    return [tree]


def tree_to_dict(tree: Optional[DecompositionTree]) -> Optional[dict]:
    if tree is None:
        return None
    if isinstance(tree, Leaf):
        return {'leaf': f"U({tree.m},{tree.m + 1})", 'elements': list(tree.elements)}
    if isinstance(tree, Coloop):
        return {'coloop': tree.element}
    return {
        'parallel': tree.basepoint,
        'left': tree_to_dict(tree.left),
        'right': tree_to_dict(tree.right),
    }


def _is_circuit_block(matroid: Matroid) -> bool:
    n = len(matroid.ground)
    return n >= 3 and matroid.full_rank == n - 1 and matroid.circuits == frozenset([frozenset(matroid.ground)])


def _decompose(matroid: Matroid) -> Optional[DecompositionTree]:
    if len(matroid.ground) == 1 and matroid.full_rank == 1:
        return Coloop(matroid.ground[0])
    if _is_circuit_block(matroid):
        return Leaf(matroid.ground)
    for f in matroid.ground:
        contracted, representative = matroid.contract(f).simplify()
        parts = contracted.components()
        if len(parts) < 2:
            continue
        first_part = parts[0][0]
        first = {x for x in matroid.ground if x != f and representative.get(x) in first_part}
        rest = set(matroid.ground) - first - {f}
        left = matroid.restrict(first | {f})
        right = matroid.restrict(rest | {f})
        try:
            glued = parallel_connection(ConnectionSpec(left, right, f))
        except ConnectionSpecError:
            continue
        if glued.circuits != matroid.circuits:
            continue
        left_tree = _decompose(left)
        right_tree = _decompose(right) if left_tree is not None else None
        if left_tree is None or right_tree is None:
            continue
        logger.debug(f"Decomposição em paralelo no ponto {f}: {sorted(first)} | {sorted(rest)}")
        return Parallel(left_tree, right_tree, f)
    return None


def parallel_decompose(matroid: Matroid) -> Optional[DecompositionTree]:
    """
    Decompõe um matroide simples e conexo como conexão paralela iterada de U_{m,m+1}

    O primeiro f (na ordem do conjunto base) cuja contração simplificada é
    separável divide o conjunto base; a primeira componente vai para a
    esquerda e as demais para a direita, recursivamente.

    Args:
        matroid: matroide simples e conexo

    Returns:
        Árvore de decomposição, ou None se a condição não vale
    """
    if not matroid.is_simple():
        raise NotSimpleError("parallel_decompose exige um matroide simples")
    if not matroid.is_connected():
        raise NotConnectedError("parallel_decompose exige um matroide conexo")
    return _decompose(matroid)


def _order_from_tree(tree: DecompositionTree, ground: Sequence[int]) -> List[int]:
    rank_in_ground = {e: i for i, e in enumerate(ground)}
    blocks = [
        sorted(leaf.elements if isinstance(leaf, Leaf) else (leaf.element,), key=rank_in_ground.get)
        for leaf in tree_leaves(tree)
    ]
    order: List[int] = list(blocks.pop(0))
    placed = set(order)
    while blocks:
        index = next((i for i, b in enumerate(blocks) if placed & set(b)), 0)
        block = blocks.pop(index)
        new = [e for e in block if e not in placed]
        order.extend(new)
        placed.update(new)
    return order


def synthesize_ci_order(matroid: Matroid) -> Optional[Ordering]:
    """
    Constrói uma ordem com BC(M, <) interseção completa

    Cada bloco U_{m,m+1} entra depois dos elementos já ordenados, de modo que
    o ponto de colagem é o mínimo do bloco; componentes são concatenadas.

    Returns:
        Ordering verificada, ou None se alguma componente não se decompõe
    """
    if not matroid.is_simple():
        raise NotSimpleError("synthesize_ci_order exige um matroide simples")
    order: List[int] = []
    for part, component in matroid.components():
        if len(component.ground) == 1:
            order.extend(component.ground)
            continue
        tree = parallel_decompose(component)
        if tree is None:
            return None
        order.extend(_order_from_tree(tree, component.ground))
    ordering = Ordering(tuple(order))
    if not is_complete_intersection(matroid, ordering):
        raise PropertyFailure(f"A ordem sintetizada {order} não é interseção completa")
    return ordering


def ci_orders_exhaustive(matroid: Matroid) -> List[Tuple[Tuple[int, ...], bool]]:
    """Todas as ordens (lexicográficas) com o veredito de interseção completa"""
    if len(matroid.ground) > EXHAUSTIVE_ORDER_LIMIT:
        raise OrderSizeError(
            f"Varredura exaustiva limitada a {EXHAUSTIVE_ORDER_LIMIT} elementos (|E|={len(matroid.ground)})"
        )
    return [
        (perm, is_complete_intersection(matroid, Ordering(perm)))
        for perm in itertools.permutations(sorted(matroid.ground))
    ]


# ----------------------------------------------------------------------
# relatório
# ----------------------------------------------------------------------
class Verdict(Enum):
    COMPLETE_INTERSECTION = 'CI'
    GORENSTEIN = 'Gorenstein'
    NEITHER = 'neither'


@dataclass
class ClassificationReport:
    """Resultado das condições equivalentes sobre um matroide simples"""

    h: Tuple[int, ...]
    s: int
    rank: int
    size: int
    dehn_sommerville: bool
    last_two: bool
    components: List[Tuple[int, ...]]
    trees: List[Optional[DecompositionTree]]
    ci_order: Optional[Ordering]
    simplified: bool = False
    per_order_results: Optional[List[Tuple[Tuple[int, ...], bool]]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def decomposable(self) -> bool:
        return all(tree is not None for tree in self.trees)

    @property
    def verdict(self) -> Verdict:
        return ot_verdict(self)

    def to_dict(self) -> dict:
        data = {
            'h': list(self.h),
            's': self.s,
            'rank': self.rank,
            'size': self.size,
            'dehn_sommerville': self.dehn_sommerville,
            'last_two': self.last_two,
            'components': [list(c) for c in self.components],
            'decomposition': [tree_to_dict(t) for t in self.trees],
            'ci_order': list(self.ci_order.perm) if self.ci_order else None,
            'verdict': self.verdict.value,
            'simplified': self.simplified,
            'notes': list(self.notes),
        }
        if self.per_order_results is not None:
            data['per_order_results'] = {
                'orders': len(self.per_order_results),
                'ci_orders': sum(1 for _, ok in self.per_order_results if ok),
                'least_witness': next((list(p) for p, ok in self.per_order_results if ok), None),
            }
        return data


def ot_verdict(report: ClassificationReport) -> Verdict:
    """
    CI ⟺ Gorenstein ⟺ condições do h-vetor

    GORENSTEIN só aparece se a simetria do h-vetor vale sem testemunha de
    interseção completa, o que indicaria uma inconsistência.
    """
    if report.last_two and report.decomposable and report.ci_order is not None:
        return Verdict.COMPLETE_INTERSECTION
    if report.dehn_sommerville:
        return Verdict.GORENSTEIN
    return Verdict.NEITHER


def _explain(h: Tuple[int, ...]) -> List[str]:
    s = len(h) - 1
    if s == 0:
        return ["s = 0: h-vetor (1), condições triviais"]
    notes = []
    if h[0] != h[s]:
        notes.append(f"h_0 = {h[0]} ≠ h_s = {h[s]}")
    if h[1] != h[s - 1]:
        notes.append(f"h_1 = {h[1]} ≠ h_(s-1) = {h[s - 1]}")
    if not notes:
        notes.append(f"h_0 = h_s = {h[0]} e h_1 = h_(s-1) = {h[1]}")
    return notes


def classify_matroid(matroid: Matroid, exhaustive: bool = False) -> ClassificationReport:
    """
    Monta o relatório das condições equivalentes para M

    Args:
        matroid: matroide (simplificado automaticamente se necessário)
        exhaustive: também varre todas as ordens (|E| <= 7)

    Returns:
        ClassificationReport
    """
    simplified = False
    if not matroid.is_simple():
        logger.warning(
            f"Matroide não simples ({len(matroid.ground)} elementos): usando a simplificação"
        )
        matroid, _ = matroid.simplify()
        simplified = True
    h = bc_complex(matroid, Ordering.of(matroid)).h_vector().truncated()
    components = matroid.components()
    trees: List[Optional[DecompositionTree]] = []
    for part, component in components:
        if len(component.ground) == 1:
            trees.append(Coloop(component.ground[0]))
        else:
            trees.append(parallel_decompose(component))
    ci_order = synthesize_ci_order(matroid) if all(t is not None for t in trees) else None
    report = ClassificationReport(
        h=h,
        s=len(h) - 1,
        rank=matroid.full_rank,
        size=len(matroid.ground),
        dehn_sommerville=dehn_sommerville(h),
        last_two=last_two_symmetric(h),
        components=[tuple(c.ground) for _, c in components],
        trees=trees,
        ci_order=ci_order,
        simplified=simplified,
        notes=_explain(h),
    )
    if exhaustive:
        report.per_order_results = ci_orders_exhaustive(matroid)
    logger.debug(f"Classificação: h={h}, veredito={report.verdict.value}")
    return report
