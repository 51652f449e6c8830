"""
BCCKit - Matroid Core
Módulo com as representações de matroides, oráculo exato de posto, circuitos,
menores, dualidade, simplificação e conexidade
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

import networkx as nx

from ..exceptions import GroundSetCapError, SchemaError, UnknownElementError
from .linalg import column_rank, quotient_columns, to_fraction

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

GROUND_SET_CAP = 20

Element = int
ElementSet = FrozenSet[int]


@dataclass(frozen=True)
class Uniform:
    """U_{m,n}: independentes são os subconjuntos com no máximo m elementos"""

    m: int


@dataclass(frozen=True)
class Graphic:
    """Matroide de ciclos de um multigrafo; edges[i] é a aresta do elemento ground[i]"""

    edges: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Linear:
    """Matroide de vetores racionais; columns[i] é o vetor do elemento ground[i]"""

    columns: Tuple[Tuple[Fraction, ...], ...]
    rows: int


@dataclass(frozen=True)
class Circuits:
    """Lista explícita de circuitos (anticadeia)"""

    circuits: FrozenSet[ElementSet]


Representation = Union[Uniform, Graphic, Linear, Circuits]


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> ElementSet:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def minimalize(sets: Iterable[Iterable[int]]) -> FrozenSet[ElementSet]:
    """Membros minimais por inclusão (e não vazios) de uma família de conjuntos"""
    family = sorted({frozenset(s) for s in sets if s}, key=len)
    kept: List[ElementSet] = []
    for candidate in family:
        if not any(small <= candidate for small in kept):
            kept.append(candidate)
    return frozenset(kept)


def sweep_circuits(ground: Sequence[int], rank_of: Callable[[int], int], max_size: int) -> FrozenSet[ElementSet]:
    """
    Circuitos por varredura de subconjuntos em tamanho crescente

    Um conjunto é circuito se for dependente e não contiver circuito menor
    (logo todos os subconjuntos próprios são independentes).
    """
    found: List[int] = []
    bits = [1 << e for e in ground]
    for k in range(1, min(max_size, len(ground)) + 1):
        for combo in itertools.combinations(bits, k):
            mask = sum(combo)
            if any(c & mask == c for c in found):
                continue
            if rank_of(mask) < k:
                found.append(mask)
    return frozenset(elements_of(c) for c in found)


@dataclass(frozen=True)
class Matroid:
    """
    Matroide sobre um conjunto base ordenado de inteiros não negativos

    O posto é calculado pela representação: binomial (Uniform), floresta
    geradora (Graphic), posto exato de matriz (Linear) ou guloso por ausência
    de circuitos (Circuits). Valores são imutáveis.
    """

    ground: Tuple[int, ...]
    rep: Representation
    _rank_cache: Dict[int, int] = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ground = tuple(self.ground)
        object.__setattr__(self, 'ground', ground)
        if len(ground) > GROUND_SET_CAP:
            raise GroundSetCapError(f"Conjunto base com {len(ground)} elementos excede o limite {GROUND_SET_CAP}")
        if any((not isinstance(e, int)) or e < 0 for e in ground):
            raise SchemaError(f"Elementos devem ser inteiros não negativos: {ground}")
        if len(set(ground)) != len(ground):
            raise SchemaError(f"Elementos repetidos no conjunto base: {ground}")
        self._validate_rep()

    def _validate_rep(self):
        rep, n = self.rep, len(self.ground)
        if isinstance(rep, Uniform):
            if not 0 <= rep.m <= n:
                raise SchemaError(f"U_{{{rep.m},{n}}} exige 0 <= m <= n")
        elif isinstance(rep, Graphic):
            if len(rep.edges) != n:
                raise SchemaError("Número de arestas difere do tamanho do conjunto base")
        elif isinstance(rep, Linear):
            if len(rep.columns) != n or any(len(col) != rep.rows for col in rep.columns):
                raise SchemaError("Matriz com dimensões inconsistentes")
        elif isinstance(rep, Circuits):
            members = set(self.ground)
            for circuit in rep.circuits:
                if not circuit or not circuit <= members:
                    raise SchemaError(f"Circuito fora do conjunto base: {sorted(circuit)}")
            if minimalize(rep.circuits) != rep.circuits:
                raise SchemaError("A lista de circuitos não é uma anticadeia")
        else:
            raise SchemaError(f"Representação desconhecida: {rep!r}")

    # ------------------------------------------------------------------
    # oráculo de posto
    # ------------------------------------------------------------------
    @cached_property
    def ground_mask(self) -> int:
        return mask_of(self.ground)

    @cached_property
    def _position(self) -> Dict[int, int]:
        return {e: i for i, e in enumerate(self.ground)}

    def _check_subset(self, elements: Iterable[int]) -> int:
        mask = 0
        for e in elements:
            if e not in self._position:
                raise UnknownElementError(f"Elemento {e} fora do conjunto base")
            mask |= 1 << e
        return mask

    def rank(self, elements: Iterable[int]) -> int:
        """
        Posto de um subconjunto do conjunto base

        Args:
            elements: subconjunto S do conjunto base

        Returns:
            Tamanho de um independente maximal contido em S
        """
        return self.rank_mask(self._check_subset(elements))

    def rank_mask(self, mask: int) -> int:
        cached = self._rank_cache.get(mask)
        if cached is None:
            cached = self._compute_rank(mask)
            self._rank_cache[mask] = cached
        return cached

    def _compute_rank(self, mask: int) -> int:
        rep = self.rep
        if isinstance(rep, Uniform):
            return min(bin(mask).count('1'), rep.m)
        if isinstance(rep, Graphic):
            graph = nx.MultiGraph()
            graph.add_edges_from(rep.edges[i] for i, e in enumerate(self.ground) if mask >> e & 1)
            return graph.number_of_nodes() - nx.number_connected_components(graph)
        if isinstance(rep, Linear):
            return column_rank([rep.columns[i] for i, e in enumerate(self.ground) if mask >> e & 1])
        independent = 0
        for e in self.ground:
            if mask >> e & 1:
                candidate = independent | (1 << e)
                if not any(c & candidate == c for c in self.circuit_masks):
                    independent = candidate
        return bin(independent).count('1')

    @property
    def full_rank(self) -> int:
        return self.rank_mask(self.ground_mask)

    def is_independent(self, elements: Iterable[int]) -> bool:
        mask = self._check_subset(elements)
        return self.rank_mask(mask) == bin(mask).count('1')

    def closure(self, elements: Iterable[int]) -> ElementSet:
        mask = self._check_subset(elements)
        r = self.rank_mask(mask)
        return frozenset(e for e in self.ground if self.rank_mask(mask | (1 << e)) == r)

    # ------------------------------------------------------------------
    # circuitos e bases
    # ------------------------------------------------------------------
    @cached_property
    def circuits(self) -> FrozenSet[ElementSet]:
        """Conjuntos dependentes minimais"""
        rep = self.rep
        if isinstance(rep, Circuits):
            return rep.circuits
        if isinstance(rep, Uniform):
            return frozenset(frozenset(c) for c in itertools.combinations(self.ground, rep.m + 1))
        return sweep_circuits(self.ground, self.rank_mask, self.full_rank + 1)

    @cached_property
    def circuit_masks(self) -> Tuple[int, ...]:
        if isinstance(self.rep, Circuits):
            return tuple(mask_of(c) for c in self.rep.circuits)
        return tuple(mask_of(c) for c in self.circuits)

    @cached_property
    def bases(self) -> FrozenSet[ElementSet]:
        r = self.full_rank
        return frozenset(
            frozenset(b) for b in itertools.combinations(self.ground, r)
            if self.rank_mask(mask_of(b)) == r
        )

    def to_circuits(self) -> 'Matroid':
        return Matroid(self.ground, Circuits(self.circuits))

    def same_as(self, other: 'Matroid') -> bool:
        """Mesmo conjunto base e mesma família de circuitos"""
        return set(self.ground) == set(other.ground) and self.circuits == other.circuits

    # ------------------------------------------------------------------
    # menores
    # ------------------------------------------------------------------
    def restrict(self, keep: Iterable[int]) -> 'Matroid':
        """
        Restrição M|keep (deleção de todos os outros elementos)

        Args:
            keep: elementos mantidos

        Returns:
            Matroide na mesma representação quando ela é fechada por deleção
        """
        keep_mask = self._check_subset(keep)
        positions = [i for i, e in enumerate(self.ground) if keep_mask >> e & 1]
        ground = tuple(self.ground[i] for i in positions)
        rep = self.rep
        if isinstance(rep, Uniform):
            return Matroid(ground, Uniform(min(rep.m, len(ground))))
        if isinstance(rep, Graphic):
            return Matroid(ground, Graphic(tuple(rep.edges[i] for i in positions)))
        if isinstance(rep, Linear):
            return Matroid(ground, Linear(tuple(rep.columns[i] for i in positions), rep.rows))
        return Matroid(ground, Circuits(frozenset(c for c in self.circuits if mask_of(c) & keep_mask == mask_of(c))))

    def delete(self, e: int) -> 'Matroid':
        """M - e"""
        if e not in self._position:
            raise UnknownElementError(f"Elemento {e} fora do conjunto base")
        return self.restrict(x for x in self.ground if x != e)

    def contract(self, e: int) -> 'Matroid':
        """M / e: circuitos são os membros minimais não vazios de {C - e}"""
        if e not in self._position:
            raise UnknownElementError(f"Elemento {e} fora do conjunto base")
        i = self._position[e]
        ground = tuple(x for x in self.ground if x != e)
        rep = self.rep
        if isinstance(rep, Uniform):
            return Matroid(ground, Uniform(max(rep.m - 1, 0)))
        if isinstance(rep, Graphic):
            u, v = rep.edges[i]
            merged = tuple(
                (u if a == v else a, u if b == v else b)
                for j, (a, b) in enumerate(rep.edges) if j != i
            )
            return Matroid(ground, Graphic(merged))
        if isinstance(rep, Linear):
            columns = quotient_columns(rep.columns, i)
            rows = rep.rows if not any(rep.columns[i]) else rep.rows - 1
            return Matroid(ground, Linear(tuple(tuple(c) for c in columns), rows))
        return Matroid(ground, Circuits(minimalize(c - {e} for c in self.circuits)))

    def relabel(self, mapping: Mapping[int, int]) -> 'Matroid':
        """Renomeia elementos; elementos ausentes do mapa ficam iguais"""
        ground = tuple(mapping.get(e, e) for e in self.ground)
        if isinstance(self.rep, Circuits):
            rep = Circuits(frozenset(frozenset(mapping.get(e, e) for e in c) for c in self.rep.circuits))
            return Matroid(ground, rep)
        return Matroid(ground, self.rep)

    # ------------------------------------------------------------------
    # dualidade
    # ------------------------------------------------------------------
    def dual(self) -> 'Matroid':
        """
        Matroide dual: bases são os complementos das bases de M

        O posto dual é r*(S) = |S| + r(E - S) - r(E).
        """
        if isinstance(self.rep, Uniform):
            return Matroid(self.ground, Uniform(len(self.ground) - self.rep.m))
        full, r = self.ground_mask, self.full_rank

        def dual_rank(mask: int) -> int:
            return bin(mask).count('1') + self.rank_mask(full & ~mask) - r

        circuits = sweep_circuits(self.ground, dual_rank, len(self.ground) - r + 1)
        return Matroid(self.ground, Circuits(circuits))

    # ------------------------------------------------------------------
    # laços, colaços, classes paralelas, simplificação
    # ------------------------------------------------------------------
    @cached_property
    def loops(self) -> ElementSet:
        return frozenset(e for e in self.ground if self.rank_mask(1 << e) == 0)

    @cached_property
    def coloops(self) -> ElementSet:
        r = self.full_rank
        return frozenset(e for e in self.ground if self.rank_mask(self.ground_mask & ~(1 << e)) == r - 1)

    @cached_property
    def parallel_classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Partição dos não-laços em classes paralelas, na ordem do conjunto base"""
        classes: List[List[int]] = []
        for e in self.ground:
            if e in self.loops:
                continue
            for cls in classes:
                if self.rank_mask((1 << e) | (1 << cls[0])) == 1:
                    cls.append(e)
                    break
            else:
                classes.append([e])
        return tuple(tuple(cls) for cls in classes)

    def is_simple(self) -> bool:
        return not self.loops and all(len(cls) == 1 for cls in self.parallel_classes)

    def simplify(self) -> Tuple['Matroid', Dict[int, int]]:
        """
        Simplificação: identifica cada classe paralela e remove os laços

        Returns:
            (matroide simples, mapa elemento -> representante da classe)
        """
        mapping = {e: cls[0] for cls in self.parallel_classes for e in cls}
        simple = self.restrict(cls[0] for cls in self.parallel_classes)
        if len(simple.ground) != len(self.ground):
            logger.debug(f"Simplificação: {len(self.ground)} -> {len(simple.ground)} elementos")
        return simple, mapping

    # ------------------------------------------------------------------
    # conexidade
    # ------------------------------------------------------------------
    @cached_property
    def _component_sets(self) -> Tuple[ElementSet, ...]:
        graph = nx.Graph()
        graph.add_nodes_from(self.ground)
        for circuit in self.circuits:
            members = sorted(circuit)
            graph.add_edges_from(zip(members, members[1:]))
        parts = [frozenset(c) for c in nx.connected_components(graph)]
        return tuple(sorted(parts, key=lambda part: min(self._position[e] for e in part)))

    def components(self) -> List[Tuple[ElementSet, 'Matroid']]:
        """Componentes conexas: fecho transitivo de 'estar num circuito comum'"""
        return [(part, self.restrict(part)) for part in self._component_sets]

    def is_connected(self) -> bool:
        return len(self.ground) >= 1 and len(self._component_sets) == 1

    @property
    def kind(self) -> str:
        return type(self.rep).__name__.lower()

    def __len__(self) -> int:
        return len(self.ground)


def uniform(m: int, n: int, ground: Sequence[int] = None) -> Matroid:
    """U_{m,n} sobre `ground` (padrão 0..n-1)"""
    if not 0 <= m <= n:
        raise SchemaError(f"U_{{{m},{n}}} exige 0 <= m <= n")
    labels = tuple(range(n)) if ground is None else tuple(ground)
    if len(labels) != n:
        raise SchemaError("O conjunto base de U_{m,n} precisa ter n elementos")
    return Matroid(labels, Uniform(m))


def graphic(edges: Sequence[Tuple[int, int]], ground: Sequence[int] = None) -> Matroid:
    """Matroide de ciclos M(G) do multigrafo dado pela lista de arestas"""
    labels = tuple(range(len(edges))) if ground is None else tuple(ground)
    return Matroid(labels, Graphic(tuple((int(u), int(v)) for u, v in edges)))


def linear(columns: Sequence[Sequence[object]], ground: Sequence[int] = None) -> Matroid:
    """Matroide de vetores; cada coluna é convertida para racionais exatos"""
    exact = tuple(tuple(to_fraction(x) for x in col) for col in columns)
    rows = len(exact[0]) if exact else 0
    labels = tuple(range(len(exact))) if ground is None else tuple(ground)
    return Matroid(labels, Linear(exact, rows))


def from_circuits(ground: Sequence[int], circuits: Iterable[Iterable[int]]) -> Matroid:
    return Matroid(tuple(ground), Circuits(frozenset(frozenset(c) for c in circuits)))


def circuit_matroid(size: int, ground: Sequence[int] = None) -> Matroid:
    """C_k = U_{k-1,k}"""
    return uniform(size - 1, size, ground)
