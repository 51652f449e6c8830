"""
BCCKit - Report Visualizer
Módulo para formatar relatórios de análise como tabelas de texto ou JSON
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..models.classify import (ClassificationReport, Coloop, DecompositionTree, Leaf, LocalPanel,
                               Parallel)
from ..models.complex import Ordering
from ..models.matroid import Matroid

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

PANEL_LABELS = {
    'gorenstein': 'Gorenstein',
    'locally_gorenstein': 'localmente Gorenstein',
    'gorenstein_links': 'links 1-dim Gorenstein',
    'ci_links': 'links 1-dim CI',
    'locally_ci': 'localmente CI',
    'complete_intersection': 'interseção completa',
}


def _yes(value: bool) -> str:
    return 'sim' if value else 'não'


def _set(elements: Sequence[int]) -> str:
    return '{' + ','.join(str(e) for e in sorted(elements)) + '}'


class ReportVisualizer:
    """Classe para renderizar relatórios do BCCKit no terminal"""

    def __init__(self, as_json: bool = False, width: int = 100):
        self.as_json = as_json
        self.width = width

    def dumps(self, data: Any) -> str:
        """JSON determinístico (chaves na ordem de inserção, UTF-8)"""
        return json.dumps(data, indent=2, ensure_ascii=False)

    def _table(self, df: pd.DataFrame) -> str:
        if df.empty:
            return '(vazio)'
        return df.to_string(index=False, line_width=self.width)

    # ------------------------------------------------------------------
    # tabelas
    # ------------------------------------------------------------------
    def circuits_table(self, matroid: Matroid, order: Optional[Ordering] = None) -> pd.DataFrame:
        """
        Cria tabela de circuitos com o circuito quebrado correspondente

        Args:
            matroid: matroide sem laços
            order: ordem usada para quebrar os circuitos

        Returns:
            DataFrame com colunas circuit, size, broken
        """
        order = order or Ordering.of(matroid)
        rows = [
            {
                'circuit': _set(c),
                'size': len(c),
                'broken': _set(c - {order.minimum(c)}),
            }
            for c in sorted(matroid.circuits, key=lambda c: (len(c), sorted(c)))
        ]
        return pd.DataFrame(rows, columns=['circuit', 'size', 'broken'])

    def panel_table(self, panel: LocalPanel) -> pd.DataFrame:
        rows = [{'condição': PANEL_LABELS[k], 'vale': _yes(v)} for k, v in zip(PANEL_LABELS, panel.as_tuple())]
        return pd.DataFrame(rows, columns=['condição', 'vale'])

    def relations_table(self, rows: List[Dict]) -> pd.DataFrame:
        """Relações de circuito com monômio líder e circuito quebrado"""
        frame = pd.DataFrame([
            {
                'circuit': _set(r['circuit']),
                'coeffs': '(' + ', '.join(r['coeffs']) + ')',
                'lead': _set(r['lead_monomial']),
                'broken': _set(r['broken_circuit']),
                'ok': _yes(r['matches']),
            }
            for r in rows
        ], columns=['circuit', 'coeffs', 'lead', 'broken', 'ok'])
        return frame

    # ------------------------------------------------------------------
    # árvores de decomposição
    # ------------------------------------------------------------------
    def tree_lines(self, tree: Optional[DecompositionTree], indent: int = 0) -> List[str]:
        pad = '  ' * indent
        if tree is None:
            return [f"{pad}(não decomponível)"]
        if isinstance(tree, Leaf):
            return [f"{pad}U({tree.m},{tree.m + 1}) em {_set(tree.elements)}"]
        if isinstance(tree, Coloop):
            return [f"{pad}coloop {tree.element}"]
        assert isinstance(tree, Parallel)
        return ([f"{pad}P(·,·; {tree.basepoint})"]
                + self.tree_lines(tree.left, indent + 1)
                + self.tree_lines(tree.right, indent + 1))

    def render_trees(self, components: Sequence[Sequence[int]], trees: Sequence[Optional[DecompositionTree]]) -> str:
        lines = []
        for part, tree in zip(components, trees):
            lines.append(f"componente {_set(part)}:")
            lines.extend(self.tree_lines(tree, 1))
        return '\n'.join(lines)

    # ------------------------------------------------------------------
    # relatórios completos
    # ------------------------------------------------------------------
    def render_classification(self, report: ClassificationReport) -> str:
        """
        Texto das condições equivalentes

        Args:
            report: relatório de classify_matroid

        Returns:
            Bloco de texto multilinha
        """
        lines = [
            f"h-vetor: {tuple(report.h)} (s = {report.s}, posto {report.rank}, {report.size} elementos)",
            f"h simétrico (Dehn-Sommerville): {_yes(report.dehn_sommerville)}",
            f"h_0 = h_s e h_1 = h_(s-1): {_yes(report.last_two)}",
            f"decomponível em U(m,m+1) por conexões paralelas: {_yes(report.decomposable)}",
        ]
        if report.ci_order is not None:
            lines.append(f"ordem CI sintetizada: {' < '.join(str(e) for e in report.ci_order)}")
        else:
            lines.append("ordem CI sintetizada: nenhuma")
        if report.per_order_results is not None:
            total = len(report.per_order_results)
            good = [p for p, ok in report.per_order_results if ok]
            lines.append(f"ordens CI (varredura exaustiva): {len(good)} de {total}")
            if good:
                lines.append(f"menor testemunha: {' < '.join(str(e) for e in good[0])}")
        if report.simplified:
            lines.append("aviso: o matroide foi simplificado antes da análise")
        lines.append(f"veredito: {report.verdict.value}")
        lines.extend(f"  - {note}" for note in report.notes)
        return '\n'.join(lines)

    def section(self, title: str, body: str) -> str:
        return f"== {title} ==\n{body}\n"

    def render_frame(self, df: pd.DataFrame) -> str:
        return self._table(df)

    def emit(self, sections: Dict[str, str], data: Dict[str, Any]) -> str:
        """Escolhe entre o texto por seções e o JSON, conforme o modo"""
        if self.as_json:
            return self.dumps(data)
        return '\n'.join(self.section(title, body) for title, body in sections.items())
