"""
BCCKit - Invariantes
Especialização de Tutte h_M(t) = T_M(t, 0), invariante beta, número de
componentes pelo h-vetor, polinômio de Poincaré e série de Hilbert
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Sequence, Tuple, Union

import sympy as sp

from ..exceptions import DomainPreconditionError, LoopError
from .complex import FVector, HVector
from .matroid import Matroid

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

T = sp.Symbol('t')


@dataclass(frozen=True)
class HPolynomial:
    """
    h_M(t) = h_0 t^r + h_1 t^(r-1) + ... + h_r

    Os coeficientes são guardados do menor grau para o maior, ou seja,
    coefficients[k] = h_(r-k).
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients) or [0]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(int(c) for c in coeffs))

    @classmethod
    def from_h_vector(cls, h: Union[HVector, Sequence[int]]) -> 'HPolynomial':
        entries = h.entries if isinstance(h, HVector) else tuple(h)
        return cls(tuple(reversed(entries)))

    @classmethod
    def from_poly(cls, poly: sp.Poly) -> 'HPolynomial':
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def h_vector(self) -> HVector:
        return HVector(tuple(reversed(self.coefficients)))

    def as_poly(self) -> sp.Poly:
        return sp.Poly.from_list(list(reversed(self.coefficients)), T)

    def __add__(self, other: 'HPolynomial') -> 'HPolynomial':
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return HPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: 'HPolynomial') -> 'HPolynomial':
        return HPolynomial.from_poly(self.as_poly() * other.as_poly())

    def divide_by_t(self) -> 'HPolynomial':
        if self.coefficients[0] != 0:
            raise DomainPreconditionError("O polinômio não é divisível por t")
        return HPolynomial(self.coefficients[1:])


def _monomial(degree: int) -> Tuple[int, ...]:
    return (0,) * degree + (1,)


def _add(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _tutte_at_y0(elements: int, bases: FrozenSet[int], memo: Dict) -> Tuple[int, ...]:
    key = (elements, bases)
    if key in memo:
        return memo[key]
    union, inter = 0, elements
    for b in bases:
        union |= b
        inter &= b
    if elements & ~union:
        # laço: fator y, que se anula em y = 0
        result: Tuple[int, ...] = (0,)
    else:
        free = elements & ~inter
        if not free:
            result = _monomial(bin(inter).count('1'))
        else:
            bit = free & -free
            rest = elements & ~bit
            deleted = frozenset(b for b in bases if not b & bit)
            contracted = frozenset(b & ~bit for b in bases if b & bit)
            result = _add(_tutte_at_y0(rest, deleted, memo), _tutte_at_y0(rest, contracted, memo))
    memo[key] = result
    return result


def h_polynomial_tutte(matroid: Matroid) -> HPolynomial:
    """
    h_M(t) = T_M(t, 0) por deleção-contração

    O pivô é o menor elemento (na ordem do conjunto base) que não é laço nem
    colaço; a memória é indexada pela família de bases e vive só nesta chamada.

    Args:
        matroid: matroide com no máximo 20 elementos

    Returns:
        HPolynomial de grau rank(M) (nulo se M tiver laços)
    """
    position = {e: i for i, e in enumerate(matroid.ground)}
    bases = frozenset(sum(1 << position[e] for e in b) for b in matroid.bases)
    memo: Dict = {}
    coefficients = _tutte_at_y0((1 << len(matroid.ground)) - 1, bases, memo)
    logger.debug(f"Tutte: {len(memo)} menores memorizados para |E|={len(matroid.ground)}")
    return HPolynomial(coefficients)


def beta(matroid: Matroid) -> int:
    """β(M) = h_(r-1)"""
    r = matroid.full_rank
    if r < 1:
        raise DomainPreconditionError("β(M) exige posto >= 1")
    coefficients = h_polynomial_tutte(matroid).coefficients
    return coefficients[1] if len(coefficients) > 1 else 0


def component_count_from_h(h: Union[HVector, Sequence[int]], r: int) -> int:
    """
    Menor k com h_(r-k) != 0

    Args:
        h: h-vetor (h_0, ..., h_r)
        r: posto do matroide

    Returns:
        Número de componentes conexas
    """
    entries = h.entries if isinstance(h, HVector) else tuple(h)
    if r < 1:
        raise DomainPreconditionError("Posto 0: o número de componentes não é determinado pelo h-vetor")
    if not any(entries):
        raise DomainPreconditionError("h-vetor nulo")
    for k in range(1, r + 1):
        if r - k < len(entries) and entries[r - k] != 0:
            return k
    raise DomainPreconditionError(f"Nenhuma entrada não nula em {entries}")


def poincare_polynomial(f: Union[FVector, Sequence[int]]) -> sp.Poly:
    """π(t) = sum_i f_i t^i"""
    entries = f.entries if isinstance(f, FVector) else tuple(f)
    return sp.Poly.from_list(list(reversed(entries)) or [0], T)


def hilbert_numerator(h: Union[HVector, Sequence[int]]) -> sp.Poly:
    """sum_i h_i t^i"""
    entries = h.entries if isinstance(h, HVector) else tuple(h)
    return sp.Poly.from_list(list(reversed(entries)) or [0], T)


def hilbert_series(f: Union[FVector, Sequence[int]]) -> sp.Expr:
    """H(t) = π(t / (1 - t)) como função racional"""
    return sp.cancel(poincare_polynomial(f).as_expr().subs(T, T / (1 - T)))


def check_hilbert_identity(f: Union[FVector, Sequence[int]], h: Union[HVector, Sequence[int]], r: int) -> bool:
    """
    Verifica sum f_i t^i (1-t)^(r-i) = sum h_i t^i e π(t/(1-t)) = h(t)/(1-t)^r

    Args:
        f: f-vetor (f_0, ..., f_r)
        h: h-vetor (h_0, ..., h_r)
        r: dim + 1 do complexo

    Returns:
        True se as duas identidades valem exatamente
    """
    f_entries = f.entries if isinstance(f, FVector) else tuple(f)
    h_entries = h.entries if isinstance(h, HVector) else tuple(h)
    if len(f_entries) != r + 1 or len(h_entries) != r + 1:
        raise DomainPreconditionError(
            f"Tamanhos incompatíveis: f={f_entries}, h={h_entries}, r={r}"
        )
    lhs = sum((fi * T ** i * (1 - T) ** (r - i) for i, fi in enumerate(f_entries)), sp.Integer(0))
    polynomial_ok = sp.Poly(lhs, T) == hilbert_numerator(h_entries)
    series_gap = sp.cancel(hilbert_series(f_entries) - hilbert_numerator(h_entries).as_expr() / (1 - T) ** r)
    return bool(polynomial_ok and series_gap == 0)


def deletion_contraction_h_check(matroid: Matroid, e: int) -> bool:
    """h_M(t) = h_(M-e)(t) + h_(simplificação de M/e)(t), para e que não é colaço"""
    if matroid.loops:
        raise LoopError("A recorrência de deleção-contração exige um matroide sem laços")
    if e in matroid.coloops:
        raise DomainPreconditionError(f"O elemento {e} é colaço")
    contracted, _ = matroid.contract(e).simplify()
    lhs = h_polynomial_tutte(matroid)
    rhs = h_polynomial_tutte(matroid.delete(e)) + h_polynomial_tutte(contracted)
    return lhs == rhs


def connectivity_after_deletion_contraction(matroid: Matroid, e: int) -> Tuple[bool, bool]:
    """(M - e é conexo, simplificação de M/e é conexa)"""
    contracted, _ = matroid.contract(e).simplify()
    return matroid.delete(e).is_connected(), contracted.is_connected()


def partial_sum_dominance(h: Sequence[int]) -> bool:
    """sum_{j<=i} h_j <= sum_{j<=i} h_(s-j) para i = 0..s (h truncado)"""
    s = len(h) - 1
    left = right = 0
    for i in range(s + 1):
        left += h[i]
        right += h[s - i]
        if left > right:
            return False
    return True


def direct_sum_h(p1: HPolynomial, p2: HPolynomial) -> HPolynomial:
    """h de uma soma direta: produto dos h-polinômios"""
    return p1 * p2


def parallel_connection_h(p1: HPolynomial, p2: HPolynomial) -> HPolynomial:
    """h de uma conexão em paralelo: t^-1 vezes o produto"""
    return (p1 * p2).divide_by_t()
