"""
BCCKit - Construções
Soma direta, conexões em série e em paralelo, extensões livres e famílias nomeadas
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..exceptions import ConnectionSpecError
from .matroid import (Circuits, Matroid, Uniform, circuit_matroid, graphic, minimalize,
                      uniform)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

EdgeMap = Dict[int, Tuple[int, int]]

__all__ = [
    'ConnectionSpec', 'direct_sum', 'series_connection', 'parallel_connection',
    'free_extension', 'free_dual_extension', 'uniform', 'graphic', 'circuit_matroid',
    'align_right', 'glue', 'graph_series_connection', 'graph_parallel_connection',
]


@dataclass(frozen=True)
class ConnectionSpec:
    """Dois matroides cujos conjuntos base se intersectam exatamente em {basepoint}"""

    left: Matroid
    right: Matroid
    basepoint: int

    def validate(self) -> None:
        shared = set(self.left.ground) & set(self.right.ground)
        if shared != {self.basepoint}:
            raise ConnectionSpecError(
                f"Os conjuntos base devem se intersectar em {{{self.basepoint}}}, intersecção: {sorted(shared)}"
            )
        for side, matroid in (('esquerdo', self.left), ('direito', self.right)):
            if self.basepoint in matroid.loops or self.basepoint in matroid.coloops:
                raise ConnectionSpecError(
                    f"O ponto base {self.basepoint} é laço ou colaço no lado {side}"
                )

    def merged_ground(self) -> Tuple[int, ...]:
        return self.left.ground + tuple(e for e in self.right.ground if e != self.basepoint)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """
    Soma direta M1 ⊕ M2 (circuitos = união disjunta dos circuitos)

    Args:
        m1: primeiro matroide
        m2: segundo matroide, com conjunto base disjunto

    Returns:
        Matroide na representação por circuitos
    """
    overlap = set(m1.ground) & set(m2.ground)
    if overlap:
        raise ConnectionSpecError(f"Soma direta exige conjuntos base disjuntos; comuns: {sorted(overlap)}")
    return Matroid(m1.ground + m2.ground, Circuits(m1.circuits | m2.circuits))


def series_connection(spec: ConnectionSpec) -> Matroid:
    """C(S) = C(M1-e) ∪ C(M2-e) ∪ {C1 ∪ C2 : e ∈ C1, e ∈ C2}"""
    spec.validate()
    e = spec.basepoint
    through_left = [c for c in spec.left.circuits if e in c]
    through_right = [c for c in spec.right.circuits if e in c]
    family = [c for c in spec.left.circuits if e not in c]
    family += [c for c in spec.right.circuits if e not in c]
    family += [c1 | c2 for c1 in through_left for c2 in through_right]
    return Matroid(spec.merged_ground(), Circuits(minimalize(family)))


def parallel_connection(spec: ConnectionSpec) -> Matroid:
    """C(P) = C(M1) ∪ C(M2) ∪ {C1 ∪ C2 - e : e ∈ C1, e ∈ C2}"""
    spec.validate()
    e = spec.basepoint
    through_left = [c for c in spec.left.circuits if e in c]
    through_right = [c for c in spec.right.circuits if e in c]
    family = list(spec.left.circuits) + list(spec.right.circuits)
    family += [(c1 | c2) - {e} for c1 in through_left for c2 in through_right]
    return Matroid(spec.merged_ground(), Circuits(minimalize(family)))


def free_extension(matroid: Matroid) -> Matroid:
    """
    Extensão livre: o novo elemento (maior rótulo + 1) só é dependente com
    conjuntos geradores; os novos circuitos são B ∪ {e0} para cada base B
    """
    new = max(matroid.ground, default=-1) + 1
    ground = matroid.ground + (new,)
    if isinstance(matroid.rep, Uniform):
        return Matroid(ground, Uniform(matroid.rep.m))
    family = set(matroid.circuits) | {basis | {new} for basis in matroid.bases}
    return Matroid(ground, Circuits(frozenset(family)))


def free_dual_extension(matroid: Matroid) -> Matroid:
    """Extensão livre dual: dual(free_extension(dual(M)))"""
    return free_extension(matroid.dual()).dual()


def align_right(left: Matroid, right: Matroid, basepoint: Optional[int] = None) -> Matroid:
    """
    Renomeia o operando direito para uma colagem

    Os rótulos do lado direito passam a vir depois do maior rótulo do lado
    esquerdo; com ponto base, o menor rótulo do lado direito vira o ponto base.
    """
    labels = sorted(right.ground)
    nxt = max(left.ground, default=0) + 1
    mapping = {}
    for label in labels:
        if basepoint is not None and not mapping:
            mapping[label] = basepoint
            continue
        mapping[label] = nxt
        nxt += 1
    return right.relabel(mapping)


def glue(kind: str, left: Matroid, right: Matroid, basepoint: Optional[int] = None) -> Matroid:
    """Aplica sum / P / S depois de alinhar os rótulos do operando direito"""
    if kind == 'sum':
        return direct_sum(left, align_right(left, right))
    if basepoint is None:
        raise ConnectionSpecError(f"A conexão {kind} exige um ponto base")
    spec = ConnectionSpec(left, align_right(left, right, basepoint), basepoint)
    if kind == 'P':
        return parallel_connection(spec)
    if kind == 'S':
        return series_connection(spec)
    raise ConnectionSpecError(f"Tipo de colagem desconhecido: {kind}")


# ----------------------------------------------------------------------
# realizações em grafos (testemunha de que a rede série-paralela é gráfica)
# ----------------------------------------------------------------------
def _fresh_vertices(left: EdgeMap, right: EdgeMap) -> EdgeMap:
    offset = 1 + max((max(uv) for uv in left.values()), default=0)
    return {label: (u + offset, v + offset) for label, (u, v) in right.items()}


def graph_parallel_connection(left: EdgeMap, right: EdgeMap, basepoint: int) -> EdgeMap:
    """Cola as duas cópias da aresta basepoint (mesmos extremos)"""
    shifted = _fresh_vertices(left, right)
    u1, v1 = left[basepoint]
    u2, v2 = shifted[basepoint]
    rename = {u2: u1, v2: v1}
    out = dict(left)
    for label, (a, b) in shifted.items():
        if label != basepoint:
            out[label] = (rename.get(a, a), rename.get(b, b))
    return out


def graph_series_connection(left: EdgeMap, right: EdgeMap, basepoint: int) -> EdgeMap:
    """Remove as duas cópias de basepoint, identifica v1 ~ u2 e liga u1 a v2"""
    shifted = _fresh_vertices(left, right)
    u1, v1 = left[basepoint]
    u2, v2 = shifted[basepoint]
    rename = {u2: v1}
    out = {label: uv for label, uv in left.items() if label != basepoint}
    for label, (a, b) in shifted.items():
        if label != basepoint:
            out[label] = (rename.get(a, a), rename.get(b, b))
    out[basepoint] = (u1, rename.get(v2, v2))
    return out
