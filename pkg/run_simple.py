"""
BCCKit - Versão Simplificada para Demonstração
Analisa as instâncias âncora no console
"""

import pandas as pd

from src.models.classify import ci_orders_exhaustive, classify_matroid, is_complete_intersection
from src.models.complex import Ordering
from src.models.invariants import beta
from src.models.matroid import from_circuits, graphic, uniform
from src.models.orlik_terao import circuit_relation, generic_arrangement, ot_classification
from src.utils.expression import parse_expression


def anchor_instances():
    """Instâncias âncora com o veredito esperado"""
    return {
        'U(2,3)': uniform(2, 3, [1, 2, 3]),
        'U(4,5)': uniform(4, 5, [1, 2, 3, 4, 5]),
        'M(K4)': graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        'dois triângulos': from_circuits([1, 2, 3, 4, 5], [[1, 2, 3], [3, 4, 5], [1, 2, 4, 5]]),
        'P(U(2,3),U(2,3);3)': parse_expression('P(U(2,3),U(2,3);3)'),
        'U(2,4)': uniform(2, 4, [1, 2, 3, 4]),
    }


def run_console_version():
    """Executa a demonstração no console"""
    print("\n🧮 BCCKIT - Complexos de Circuitos Quebrados")
    print("=" * 50)

    rows = []
    for name, matroid in anchor_instances().items():
        report = classify_matroid(matroid)
        sweep = ci_orders_exhaustive(matroid)
        rows.append({
            'matroide': name,
            'h': str(report.h),
            'β': beta(matroid),
            'ordens CI': f"{sum(ok for _, ok in sweep)}/{len(sweep)}",
            'ordem sintetizada': ','.join(map(str, report.ci_order)) if report.ci_order else '-',
            'veredito': report.verdict.value,
        })
    print(pd.DataFrame(rows).to_string(index=False))

    print("\n📐 ORLIK-TERAO: arranjo genérico 2x3")
    arrangement = generic_arrangement(2, 3)
    relation = circuit_relation(arrangement, arrangement.labels)
    print(f"Relação: {relation.polynomial} = 0")
    print(f"Veredito: {ot_classification(arrangement).verdict.value}")

    triangles = anchor_instances()['dois triângulos']
    print("\n🎯 Dois triângulos:")
    for ordem in (Ordering((1, 2, 3, 4, 5)), Ordering((1, 4, 2, 3, 5))):
        ci = is_complete_intersection(triangles, ordem)
        print(f"   ordem {','.join(map(str, ordem))}: {'interseção completa' if ci else 'não é interseção completa'}")
    print("\n🔄 Para o relatório completo:")
    print("   python -m src.app analyze \"P(U(2,3),U(2,3);3)\"")
    print("   python -m src.app verify data/corpus/default_corpus.json")


if __name__ == "__main__":
    run_console_version()
