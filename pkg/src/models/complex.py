"""
BCCKit - Complexos Simpliciais
Complexos explícitos, maquinário de circuitos quebrados, link, star, core,
característica de Euler, f/h-vetores e não-faces minimais
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import DomainPreconditionError, LoopError, SchemaError
from .matroid import ElementSet, Matroid, elements_of, mask_of, minimalize

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ordering:
    """Ordem total sobre o conjunto base"""

    perm: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'perm', tuple(self.perm))
        if len(set(self.perm)) != len(self.perm):
            raise SchemaError(f"Ordem com elementos repetidos: {self.perm}")

    @classmethod
    def of(cls, matroid: Matroid) -> 'Ordering':
        """Ordem natural do conjunto base"""
        return cls(matroid.ground)

    @cached_property
    def position(self) -> Dict[int, int]:
        return {e: i for i, e in enumerate(self.perm)}

    def key(self, e: int) -> int:
        return self.position[e]

    def minimum(self, elements: Iterable[int]) -> int:
        return min(elements, key=self.key)

    def check_for(self, matroid: Matroid) -> None:
        if set(self.perm) != set(matroid.ground) or len(self.perm) != len(matroid.ground):
            raise DomainPreconditionError(
                f"A ordem {list(self.perm)} não é uma permutação do conjunto base {list(matroid.ground)}"
            )

    def __iter__(self):
        return iter(self.perm)

    def __len__(self):
        return len(self.perm)


@dataclass(frozen=True)
class FVector:
    """(f_0, ..., f_r): f_i = número de faces com i elementos"""

    entries: Tuple[int, ...]


@dataclass(frozen=True)
class HVector:
    """(h_0, ..., h_r) com zeros finais mantidos; truncated() remove os zeros"""

    entries: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.entries) - 1

    @property
    def s(self) -> int:
        """Maior índice com h_s != 0 (-1 se o vetor for nulo)"""
        nonzero = [i for i, h in enumerate(self.entries) if h != 0]
        return nonzero[-1] if nonzero else -1

    def truncated(self) -> Tuple[int, ...]:
        return self.entries[:self.s + 1]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def _collect_faces(vertices: Sequence[int], is_face: Callable[[int], bool]) -> List[int]:
    """Faces de uma família fechada para baixo, por extensões em ordem crescente"""
    faces = [0]
    stack = [(0, 0)]
    while stack:
        mask, start = stack.pop()
        for i in range(start, len(vertices)):
            candidate = mask | (1 << vertices[i])
            if is_face(candidate):
                faces.append(candidate)
                stack.append((candidate, i + 1))
    return faces


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _popcount(mask: int) -> int:
    return bin(mask).count('1')


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Complexo simplicial dado pelas facetas (anticadeia)

    `vertices` são os rótulos que aparecem em alguma face; `ambient` é o
    conjunto de vértices do anel de polinômios (contém `vertices`) e define as
    não-faces unitárias. Faces são bitmasks sobre os rótulos.
    """

    vertices: Tuple[int, ...]
    facets: Tuple[ElementSet, ...]
    ambient: Tuple[int, ...]

    # ------------------------------------------------------------------
    # construtores
    # ------------------------------------------------------------------
    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], ambient: Optional[Iterable[int]] = None) -> 'SimplicialComplex':
        family = {frozenset(f) for f in facets}
        maximal = [f for f in family if not any(f < g for g in family)]
        return cls._canonical(maximal, ambient)

    @classmethod
    def from_face_masks(cls, faces: Iterable[int], ambient: Optional[Iterable[int]] = None) -> 'SimplicialComplex':
        face_set = set(faces)
        support = 0
        for f in face_set:
            support |= f
        labels = elements_of(support)
        maximal = [
            elements_of(f) for f in face_set
            if not any((f | (1 << v)) in face_set for v in labels if not f >> v & 1)
        ]
        return cls._canonical(maximal, ambient)

    @classmethod
    def _canonical(cls, maximal: List[ElementSet], ambient: Optional[Iterable[int]]) -> 'SimplicialComplex':
        facets = tuple(sorted(maximal, key=lambda f: (sorted(f), len(f))))
        vertices = tuple(sorted(set().union(*facets))) if facets else ()
        amb = tuple(sorted(set(ambient) | set(vertices))) if ambient is not None else vertices
        return cls(vertices, facets, amb)

    @classmethod
    def void(cls) -> 'SimplicialComplex':
        return cls((), (), ())

    @classmethod
    def empty(cls) -> 'SimplicialComplex':
        """O complexo {∅}"""
        return cls((), (frozenset(),), ())

    # ------------------------------------------------------------------
    # faces
    # ------------------------------------------------------------------
    @cached_property
    def face_masks(self) -> FrozenSet[int]:
        faces = set()
        for facet in self.facets:
            faces.update(_submasks(mask_of(facet)))
        return frozenset(faces)

    def faces(self) -> List[ElementSet]:
        return sorted((elements_of(f) for f in self.face_masks), key=lambda f: (len(f), sorted(f)))

    def is_face(self, face: Iterable[int]) -> bool:
        return mask_of(face) in self.face_masks

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(tuple(sorted(elements_of(f))) for f in self.face_masks if _popcount(f) == 2)

    # ------------------------------------------------------------------
    # link, star, restrição, core
    # ------------------------------------------------------------------
    def _require_face(self, face: Iterable[int]) -> int:
        mask = mask_of(face)
        if mask not in self.face_masks:
            raise DomainPreconditionError(f"{sorted(face)} não é face do complexo")
        return mask

    def link(self, face: Iterable[int]) -> 'SimplicialComplex':
        """lk F = {G ∈ Δ : F ∪ G ∈ Δ, F ∩ G = ∅}"""
        f = self._require_face(face)
        faces = [g for g in self.face_masks if g & f == 0 and (g | f) in self.face_masks]
        return SimplicialComplex.from_face_masks(faces)

    def star(self, face: Iterable[int]) -> 'SimplicialComplex':
        """st F = {G ∈ Δ : F ∪ G ∈ Δ}"""
        f = self._require_face(face)
        return SimplicialComplex.from_face_masks(g for g in self.face_masks if (g | f) in self.face_masks)

    def restriction(self, keep: Iterable[int]) -> 'SimplicialComplex':
        w = mask_of(keep)
        return SimplicialComplex.from_face_masks(g for g in self.face_masks if g & w == g)

    @cached_property
    def cone_points(self) -> FrozenSet[int]:
        """Vértices cujo star é o complexo todo (estão em todas as facetas)"""
        if not self.facets:
            return frozenset()
        return frozenset.intersection(*self.facets)

    def core(self) -> 'SimplicialComplex':
        """Restrição aos vértices i com st{i} != Δ"""
        if self.is_void:
            return self
        return self.restriction(v for v in self.vertices if v not in self.cone_points)

    def max_facet_size_through(self, mask: int) -> int:
        return max((len(f) for f in self.facets if mask_of(f) & mask == mask), default=-1)

    def faces_with_one_dimensional_link(self) -> List[ElementSet]:
        """Faces F com dim lk F = 1"""
        return [
            elements_of(f) for f in self.face_masks
            if self.max_facet_size_through(f) - _popcount(f) == 2
        ]

    # ------------------------------------------------------------------
    # contagens
    # ------------------------------------------------------------------
    def f_vector(self) -> FVector:
        if self.is_void:
            return FVector(())
        counts = [0] * (self.dim + 2)
        for f in self.face_masks:
            counts[_popcount(f)] += 1
        return FVector(tuple(counts))

    def h_vector(self) -> HVector:
        """
        h_i = sum_{j<=i} (-1)^(i-j) C(r-j, i-j) f_j, com r = dim + 1

        Returns:
            HVector com zeros finais mantidos
        """
        if self.is_void:
            raise DomainPreconditionError("O complexo vazio (void) não tem h-vetor")
        f = self.f_vector().entries
        r = self.dim + 1
        h = [
            sum((-1) ** (i - j) * comb(r - j, i - j) * f[j] for j in range(i + 1))
            for i in range(r + 1)
        ]
        return HVector(tuple(h))

    def reduced_euler(self) -> int:
        """χ̃ = sum_i (-1)^(i-1) f_i (a face vazia contribui -1)"""
        return sum((-1) ** (i - 1) * fi for i, fi in enumerate(self.f_vector().entries))

    # ------------------------------------------------------------------
    # Stanley-Reisner
    # ------------------------------------------------------------------
    def minimal_nonfaces(self) -> FrozenSet[ElementSet]:
        """Não-faces minimais (geradores do ideal de Stanley-Reisner)"""
        out = {frozenset([w]) for w in self.ambient if w not in self.vertices}
        for f in self.face_masks:
            top = f.bit_length() - 1
            for v in self.vertices:
                if v <= top:
                    continue
                candidate = f | (1 << v)
                if candidate in self.face_masks:
                    continue
                if all((candidate & ~(1 << x)) in self.face_masks for x in elements_of(f)):
                    out.add(elements_of(candidate))
        return frozenset(out)

    def is_complete_intersection(self) -> bool:
        """Interseção completa: não-faces minimais duas a duas disjuntas"""
        nonfaces = sorted(self.minimal_nonfaces(), key=sorted)
        seen = 0
        for n in nonfaces:
            m = mask_of(n)
            if m & seen:
                return False
            seen |= m
        return True

    def to_dict(self) -> dict:
        return {
            'vertices': list(self.vertices),
            'facets': [sorted(f) for f in self.facets],
        }


# ----------------------------------------------------------------------
# circuitos quebrados
# ----------------------------------------------------------------------
def _require_loopless(matroid: Matroid) -> None:
    if matroid.loops:
        raise LoopError(
            f"O matroide tem laços {sorted(matroid.loops)}: o circuito quebrado de um laço é vazio"
        )


def broken_circuits(matroid: Matroid, order: Ordering) -> FrozenSet[ElementSet]:
    """{C - min(C) : C circuito}"""
    _require_loopless(matroid)
    order.check_for(matroid)
    return frozenset(c - {order.minimum(c)} for c in matroid.circuits)


def minimal_broken_circuits(matroid: Matroid, order: Ordering) -> FrozenSet[ElementSet]:
    return minimalize(broken_circuits(matroid, order))


def bc_complex(matroid: Matroid, order: Ordering) -> SimplicialComplex:
    """
    Complexo de circuitos quebrados BC(M, <)

    Args:
        matroid: matroide sem laços
        order: ordem total do conjunto base

    Returns:
        Subconjuntos do conjunto base que não contêm circuito quebrado
    """
    masks = [mask_of(b) for b in minimal_broken_circuits(matroid, order)]
    faces = _collect_faces(order.perm, lambda f: not any(b & f == b for b in masks))
    return SimplicialComplex.from_face_masks(faces, ambient=matroid.ground)


def reduced_bc_complex(matroid: Matroid, order: Ordering) -> SimplicialComplex:
    """BC reduzido: faces de BC contidas em E - e0, com e0 o mínimo da ordem"""
    masks = [mask_of(b) for b in minimal_broken_circuits(matroid, order)]
    rest = order.perm[1:]
    faces = _collect_faces(rest, lambda f: not any(b & f == b for b in masks))
    return SimplicialComplex.from_face_masks(faces, ambient=rest)


def independence_complex(matroid: Matroid) -> SimplicialComplex:
    """Complexo do matroide: os independentes (facetas = bases)"""
    return SimplicialComplex.from_facets(matroid.bases, ambient=matroid.ground)
