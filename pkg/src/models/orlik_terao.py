"""
BCCKit - Orlik-Terao
Arranjos dados por matrizes racionais: matroide subjacente, relações de
circuito, verificação de termos líderes contra circuitos quebrados e veredito
Gorenstein / interseção completa
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import sympy as sp

from ..exceptions import LoopError, NonEssentialError, NotACircuitError, SchemaError
from .classify import ClassificationReport, classify_matroid
from .complex import Ordering
from .linalg import column_rank, nullspace, to_fraction
from .matroid import Matroid, linear

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

PRECEDENCES = ('reverse', 'forward')


@dataclass(frozen=True)
class ArrangementMatrix:
    """
    Matriz r x n racional; a coluna i é a forma linear α_i do hiperplano i

    Args:
        columns: vetores coluna exatos
        labels: rótulo de cada coluna (elementos do matroide)
    """

    columns: Tuple[Tuple[Fraction, ...], ...]
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.columns) != len(self.labels):
            raise SchemaError("Número de rótulos difere do número de colunas")
        if len({len(c) for c in self.columns}) > 1:
            raise SchemaError("Colunas com tamanhos diferentes")
        if len(set(self.labels)) != len(self.labels):
            raise SchemaError(f"Rótulos repetidos: {self.labels}")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], labels: Optional[Sequence[int]] = None) -> 'ArrangementMatrix':
        exact = tuple(tuple(to_fraction(x) for x in col) for col in columns)
        ids = tuple(range(len(exact))) if labels is None else tuple(labels)
        return cls(exact, ids)

    @property
    def rows(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    def column(self, label: int) -> Tuple[Fraction, ...]:
        return self.columns[self.labels.index(label)]

    def zero_columns(self) -> List[int]:
        return [label for label, col in zip(self.labels, self.columns) if not any(col)]

    def is_essential(self) -> bool:
        return column_rank(self.columns) == self.rows

    def simplified(self) -> Tuple['ArrangementMatrix', Dict[int, int]]:
        """
        Remove colunas proporcionais a uma coluna anterior

        Returns:
            (matriz simples, mapa rótulo -> rótulo mantido)
        """
        if self.zero_columns():
            raise LoopError(f"Colunas nulas: {self.zero_columns()}")
        kept: List[int] = []
        mapping: Dict[int, int] = {}
        for i, col in enumerate(self.columns):
            twin = next((j for j in kept if column_rank([self.columns[j], col]) == 1), None)
            if twin is None:
                kept.append(i)
                mapping[self.labels[i]] = self.labels[i]
            else:
                mapping[self.labels[i]] = self.labels[twin]
        if len(kept) != len(self.columns):
            logger.warning(
                f"Arranjo não simples: {len(self.columns) - len(kept)} coluna(s) proporcional(is) removida(s)"
            )
        return ArrangementMatrix(tuple(self.columns[i] for i in kept), tuple(self.labels[i] for i in kept)), mapping

    def to_dict(self) -> dict:
        return {
            'ground': list(self.labels),
            'matrix': [[str(x) for x in col] for col in self.columns],
        }


def underlying_matroid(arrangement: ArrangementMatrix) -> Matroid:
    """
    Matroide linear das colunas

    Args:
        arrangement: matriz de um arranjo essencial sem colunas nulas

    Returns:
        Matroide com representação Linear
    """
    zeros = arrangement.zero_columns()
    if zeros:
        raise LoopError(f"Colunas nulas não definem hiperplanos: {zeros}")
    if not arrangement.is_essential():
        raise NonEssentialError(
            f"Arranjo não essencial: posto {column_rank(arrangement.columns)} < {arrangement.rows} linhas"
        )
    return linear(arrangement.columns, arrangement.labels)


def _variable(label: int) -> sp.Symbol:
    return sp.Symbol(f"x{label}")


@dataclass(frozen=True)
class CircuitRelation:
    """Σ_j c_j α_(i_j) = 0, com polinômio Σ_j c_j Π_(l≠j) x_(i_l)"""

    circuit: Tuple[int, ...]
    coefficients: Tuple[Fraction, ...]

    @property
    def variables(self) -> List[sp.Symbol]:
        return [_variable(e) for e in self.circuit]

    @property
    def polynomial(self) -> sp.Expr:
        xs = self.variables
        terms = []
        for j, c in enumerate(self.coefficients):
            others = [x for l, x in enumerate(xs) if l != j]
            terms.append(sp.Rational(c.numerator, c.denominator) * sp.Mul(*others))
        return sp.Add(*terms)

    def to_dict(self, lead_monomial: Optional[Sequence[int]] = None) -> dict:
        data = {
            'circuit': list(self.circuit),
            'coeffs': [str(c) for c in self.coefficients],
        }
        if lead_monomial is not None:
            data['lead_monomial'] = list(lead_monomial)
        return data


def circuit_relation(arrangement: ArrangementMatrix, circuit: Sequence[int]) -> CircuitRelation:
    """
    Coeficientes de dependência de um circuito (núcleo exato de dimensão 1)

    Args:
        arrangement: matriz do arranjo
        circuit: circuito do matroide subjacente

    Returns:
        CircuitRelation normalizada com c_1 = 1
    """
    position = {label: i for i, label in enumerate(arrangement.labels)}
    missing = [e for e in circuit if e not in position]
    if missing:
        raise NotACircuitError(f"Elementos fora do arranjo: {missing}")
    members = tuple(sorted(circuit, key=position.get))
    kernel = nullspace([arrangement.columns[position[e]] for e in members])
    if len(kernel) != 1 or any(c == 0 for c in kernel[0]):
        raise NotACircuitError(
            f"{list(members)} não é circuito: núcleo de dimensão {len(kernel)}"
        )
    vector = kernel[0]
    first = vector[0]
    return CircuitRelation(members, tuple(c / first for c in vector))


def relation_vanishes(arrangement: ArrangementMatrix, relation: CircuitRelation) -> bool:
    """
    Verifica Σ c_j α_j = 0 e a anulação do polinômio em x_i = 1/α_i

    As formas α_i são polinômios simbólicos nas coordenadas y_1..y_r.
    """
    combined = [Fraction(0)] * arrangement.rows
    for c, e in zip(relation.coefficients, relation.circuit):
        combined = [acc + c * a for acc, a in zip(combined, arrangement.column(e))]
    if any(combined):
        return False
    ys = sp.symbols(f"y1:{arrangement.rows + 1}")
    forms = {
        _variable(e): 1 / sum(sp.Rational(a.numerator, a.denominator) * y
                              for a, y in zip(arrangement.column(e), ys))
        for e in relation.circuit
    }
    value = sp.cancel(sp.together(relation.polynomial.subs(forms)))
    return value == 0


def _precedence(order: Ordering, precedence: str) -> List[int]:
    if precedence not in PRECEDENCES:
        raise SchemaError(f"Precedência desconhecida: {precedence}")
    return list(reversed(order.perm)) if precedence == 'reverse' else list(order.perm)


def lead_monomial(relation: CircuitRelation, order: Ordering, precedence: str = 'reverse') -> Tuple[int, ...]:
    """
    Monômio líder na ordem lexicográfica

    Com precedência 'reverse' os elementos posteriores na ordem são as
    variáveis maiores; 'forward' inverte isso.
    """
    ranked = [e for e in _precedence(order, precedence) if e in relation.circuit]
    gens = [_variable(e) for e in ranked]
    poly = sp.Poly(relation.polynomial, *gens)
    leading = poly.monoms(order='lex')[0]
    return tuple(sorted(e for e, exp in zip(ranked, leading) if exp))


def lead_term_report(arrangement: ArrangementMatrix, order: Ordering, precedence: str = 'reverse',
                     matroid: Optional[Matroid] = None) -> List[dict]:
    """Relação, monômio líder e circuito quebrado de cada circuito"""
    if matroid is None:
        matroid = underlying_matroid(arrangement)
    order.check_for(matroid)
    rows = []
    for circuit in sorted(matroid.circuits, key=lambda c: (len(c), sorted(c))):
        relation = circuit_relation(arrangement, circuit)
        lead = lead_monomial(relation, order, precedence)
        broken = tuple(sorted(circuit - {order.minimum(circuit)}))
        row = relation.to_dict(lead)
        row['broken_circuit'] = list(broken)
        row['matches'] = lead == broken
        rows.append(row)
    return rows


def lead_term_check(arrangement: ArrangementMatrix, order: Ordering, precedence: str = 'reverse',
                    matroid: Optional[Matroid] = None) -> bool:
    """
    Todo monômio líder de relação de circuito é o monômio do circuito quebrado

    Args:
        arrangement: arranjo simples e essencial
        order: ordem das colunas
        precedence: 'reverse' (posteriores maiores) ou 'forward' (controle negativo)
        matroid: matroide subjacente já calculado (opcional)

    Returns:
        Conjunção sobre todos os circuitos
    """
    rows = lead_term_report(arrangement, order, precedence, matroid)
    failures = [r['circuit'] for r in rows if not r['matches']]
    if failures:
        logger.debug(f"Termos líderes divergentes ({precedence}): {failures}")
    return not failures


def ot_classification(arrangement: ArrangementMatrix) -> ClassificationReport:
    """
    Classificação do matroide subjacente com as observações sobre a álgebra de Orlik-Terao

    Returns:
        ClassificationReport com notas sobre CI ⟺ Gorenstein e as entradas do h-vetor usadas
    """
    zeros = arrangement.zero_columns()
    if zeros:
        raise LoopError(f"Colunas nulas não definem hiperplanos: {zeros}")
    simple, _ = arrangement.simplified()
    matroid = underlying_matroid(simple)
    report = classify_matroid(matroid)
    n, r = len(matroid.ground), matroid.full_rank
    h = report.h
    report.simplified = report.simplified or len(simple.labels) != len(arrangement.labels)
    report.notes.append("Álgebra de Orlik-Terao: Gorenstein ⟺ interseção completa")
    tail = f"h_(s-1) = {h[-2]}, h_s = {h[-1]}" if len(h) > 1 else f"h_s = {h[-1]}"
    report.notes.append(
        f"O veredito depende só das duas últimas entradas não nulas: h_0 = 1, h_1 = n - r = {n - r}, {tail}"
    )
    report.notes.append(
        "Termos líderes verificados só no nível dos geradores: consistente com o ideal inicial de circuitos quebrados"
    )
    return report


def graphic_arrangement(edges: Sequence[Tuple[int, int]], labels: Optional[Sequence[int]] = None) -> ArrangementMatrix:
    """
    Arranjo gráfico: coluna e_u - e_v por aresta, sem a linha do último vértice

    Para grafos conexos o arranjo é essencial.
    """
    graph = nx.MultiGraph()
    graph.add_edges_from(edges)
    vertices = sorted(graph.nodes)
    row_of = {v: i for i, v in enumerate(vertices[:-1])}
    columns = []
    for u, v in edges:
        col = [0] * len(row_of)
        if u in row_of:
            col[row_of[u]] += 1
        if v in row_of:
            col[row_of[v]] -= 1
        columns.append(col)
    return ArrangementMatrix.from_columns(columns, labels)


def generic_arrangement(r: int, n: int, labels: Optional[Sequence[int]] = None) -> ArrangementMatrix:
    """Colunas de Vandermonde (1, k, k², ...), k = 1..n: todos os menores r x r são não nulos"""
    if not 0 < r <= n:
        raise SchemaError(f"generic_arrangement exige 0 < r <= n (r={r}, n={n})")
    columns = [[k ** i for i in range(r)] for k in range(1, n + 1)]
    return ArrangementMatrix.from_columns(columns, labels)
