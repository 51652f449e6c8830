"""
BCCKit - Álgebra Linear Exata
Eliminação livre de frações (Bareiss) e núcleo racional, sem ponto flutuante
"""

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Union

from ..exceptions import SchemaError

Number = Union[int, str, Fraction]


def to_fraction(value: Number) -> Fraction:
    """
    Converte uma entrada de matriz para racional exato

    Args:
        value: inteiro, Fraction ou string "p/q"

    Returns:
        Fraction equivalente
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(f"Entrada não exata na matriz: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SchemaError(f"Racional inválido: {value!r}") from exc


def integer_column(column: Sequence[Fraction]) -> List[int]:
    """Multiplica a coluna pelo mmc dos denominadores (o posto não muda)"""
    scale = lcm(*(x.denominator for x in column)) if column else 1
    return [int(x * scale) for x in column]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """
    Posto de uma matriz inteira por eliminação de Bareiss

    Args:
        matrix: lista de linhas com entradas inteiras

    Returns:
        Posto exato
    """
    m = [list(row) for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            lead = m[r][col]
            for c in range(col + 1, n_cols):
                # divisão exata: as entradas são menores da matriz original
                m[r][c] = (m[r][c] * p - lead * m[rank][c]) // previous
            m[r][col] = 0
        previous = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def column_rank(columns: Sequence[Sequence[Fraction]]) -> int:
    """Posto do conjunto de vetores coluna dado"""
    if not columns:
        return 0
    scaled = [integer_column(col) for col in columns]
    n_rows = len(scaled[0])
    rows = [[scaled[j][i] for j in range(len(scaled))] for i in range(n_rows)]
    return bareiss_rank(rows)


def nullspace(columns: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """
    Base do núcleo {c : sum_j c_j * col_j = 0} por forma escalonada reduzida

    Args:
        columns: vetores coluna racionais, todos do mesmo tamanho

    Returns:
        Lista de vetores (um por variável livre)
    """
    k = len(columns)
    n_rows = len(columns[0]) if k else 0
    m = [[Fraction(columns[j][i]) for j in range(k)] for i in range(n_rows)]
    pivots: List[int] = []
    r = 0
    for c in range(k):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(k) if c not in pivots):
        vector = [Fraction(0)] * k
        vector[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            vector[pc] = -m[row][free]
        basis.append(vector)
    return basis


def quotient_columns(columns: Sequence[Sequence[Fraction]], index: int) -> List[List[Fraction]]:
    """
    Projeta as colunas no quociente pelo vetor columns[index] (contração linear)

    A coluna de índice `index` é removida; se ela for nula as demais ficam iguais.
    """
    pivot_col = columns[index]
    rest = [list(col) for j, col in enumerate(columns) if j != index]
    p = next((i for i, x in enumerate(pivot_col) if x != 0), None)
    if p is None:
        return rest
    projected = []
    for col in rest:
        factor = Fraction(col[p]) / pivot_col[p]
        reduced = [a - factor * b for a, b in zip(col, pivot_col)]
        projected.append(reduced[:p] + reduced[p + 1:])
    return projected
