"""
BCCKit - Models Package
"""

from .matroid import Matroid, uniform, graphic, linear, from_circuits, circuit_matroid
from .constructions import (ConnectionSpec, direct_sum, series_connection, parallel_connection,
                            free_extension, free_dual_extension, glue)
from .complex import (Ordering, SimplicialComplex, HVector, FVector, bc_complex, reduced_bc_complex,
                      broken_circuits, minimal_broken_circuits, independence_complex)
from .invariants import HPolynomial, h_polynomial_tutte, beta
from .classify import (ClassificationReport, Verdict, classify_matroid, parallel_decompose,
                       synthesize_ci_order, is_complete_intersection)
from .orlik_terao import ArrangementMatrix, underlying_matroid, ot_classification

__all__ = [
    'Matroid', 'uniform', 'graphic', 'linear', 'from_circuits', 'circuit_matroid',
    'ConnectionSpec', 'direct_sum', 'series_connection', 'parallel_connection',
    'free_extension', 'free_dual_extension', 'glue',
    'Ordering', 'SimplicialComplex', 'HVector', 'FVector', 'bc_complex', 'reduced_bc_complex',
    'broken_circuits', 'minimal_broken_circuits', 'independence_complex',
    'HPolynomial', 'h_polynomial_tutte', 'beta',
    'ClassificationReport', 'Verdict', 'classify_matroid', 'parallel_decompose',
    'synthesize_ci_order', 'is_complete_intersection',
    'ArrangementMatrix', 'underlying_matroid', 'ot_classification',
]
