"""
BCCKit - Utils Package
"""

from .data_loader import DataLoader, matroid_from_dict, matroid_to_dict, arrangement_from_dict
from .expression import parse_expression
from .corpus import CorpusSpec, build_corpus
from .suite import run_suite, SuiteReport
from .visualizer import ReportVisualizer

__all__ = [
    'DataLoader', 'matroid_from_dict', 'matroid_to_dict', 'arrangement_from_dict',
    'parse_expression', 'CorpusSpec', 'build_corpus', 'run_suite', 'SuiteReport',
    'ReportVisualizer',
]
