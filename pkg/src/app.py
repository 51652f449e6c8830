"""
BCCKit - Linha de Comando
Ponto de entrada: python -m src.app <comando> <entrada> [opções]

Comandos:
    analyze    circuitos, h-vetor, β, componentes, painel local e condições equivalentes
    decompose  árvore de conexões paralelas de blocos U(m,m+1)
    order      síntese (e varredura) de ordens de interseção completa
    verify     suíte de propriedades sobre um corpus
    ot         relações de circuito e veredito da álgebra de Orlik-Terao
    construct  JSON do matroide descrito por uma expressão de construção

Entradas de matroide são um arquivo JSON ou uma expressão, por exemplo
"P(U(2,3),U(2,3);3)". Códigos de saída: 0 ok, 1 falha de propriedade,
2 esquema, 3 limite do conjunto base, 4 pré-condição matemática.
"""

import argparse
import logging
import os
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from .config import get_settings
from .exceptions import BccKitError, PropertyFailure, SchemaError
from .models.classify import (Coloop, bc_local_panel, ci_orders_exhaustive, classify_matroid,
                              is_complete_intersection, parallel_decompose, synthesize_ci_order,
                              tree_to_dict)
from .models.complex import Ordering, bc_complex
from .models.invariants import beta
from .models.matroid import Matroid
from .models.orlik_terao import (circuit_relation, lead_term_report, ot_classification,
                                 relation_vanishes, underlying_matroid)
from .utils.data_loader import DataLoader, matroid_to_dict
from .utils.expression import parse_expression
from .utils.suite import run_suite
from .utils.visualizer import ReportVisualizer

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def parse_order(text: Optional[str]) -> Optional[Ordering]:
    """'3,1,2' -> Ordering((3, 1, 2))"""
    if text is None:
        return None
    try:
        return Ordering(tuple(int(part) for part in text.split(',') if part.strip()))
    except ValueError:
        raise SchemaError(f"Ordem inválida: {text!r} (esperado e1,e2,...)")


def load_input(source: str, loader: DataLoader) -> Matroid:
    """
    Carrega o matroide de um arquivo JSON ou avalia uma expressão de construção

    Args:
        source: caminho (existente ou terminado em .json) ou expressão
        loader: DataLoader para arquivos e para G(arquivo)

    Returns:
        Matroid
    """
    if source.endswith('.json') or os.path.exists(loader.resolve(source)):
        return loader.load_matroid(source)
    return parse_expression(source, loader)


def _ordered(order: Optional[Ordering], matroid: Matroid) -> Ordering:
    order = order or Ordering.of(matroid)
    order.check_for(matroid)
    return order


# ----------------------------------------------------------------------
# comandos
# ----------------------------------------------------------------------
def cmd_analyze(matroid: Matroid, order: Optional[Ordering], all_orders: bool,
                viz: ReportVisualizer) -> int:
    order = _ordered(order, matroid)
    simplified = not matroid.is_simple()
    if simplified:
        logger.warning("Matroide não simples: analisando a simplificação")
        matroid, _ = matroid.simplify()
        kept = set(matroid.ground)
        order = Ordering(tuple(e for e in order if e in kept))
    h = bc_complex(matroid, order).h_vector().truncated()
    b = beta(matroid) if matroid.full_rank >= 1 else None
    panel = bc_local_panel(matroid, order)
    report = classify_matroid(matroid, exhaustive=all_orders)
    report.simplified = report.simplified or simplified
    components = [sorted(part) for part, _ in matroid.components()]
    circuits = viz.circuits_table(matroid, order)
    sections = {
        'matroide': f"{len(matroid.ground)} elementos, posto {matroid.full_rank}, representação {matroid.kind}",
        'circuitos': viz.render_frame(circuits),
        'h-vetor': f"h = {h}  β = {'indefinido (posto 0)' if b is None else b}",
        'componentes': ', '.join('{' + ','.join(map(str, c)) + '}' for c in components),
        f"painel local (ordem {','.join(map(str, order))})": viz.render_frame(viz.panel_table(panel)),
        'condições equivalentes': viz.render_classification(report),
    }
    data = {
        'size': len(matroid.ground),
        'rank': matroid.full_rank,
        'simplified': report.simplified,
        'circuits': [sorted(c) for c in sorted(matroid.circuits, key=lambda c: (len(c), sorted(c)))],
        'order': list(order),
        'h': list(h),
        'beta': b,
        'components': components,
        'panel': asdict(panel),
        'classification': report.to_dict(),
    }
    print(viz.emit(sections, data))
    return 0


def cmd_decompose(matroid: Matroid, viz: ReportVisualizer) -> int:
    if not matroid.is_simple():
        logger.warning("Matroide não simples: decompondo a simplificação")
        matroid, _ = matroid.simplify()
    parts, trees = [], []
    for part, component in matroid.components():
        parts.append(sorted(part))
        trees.append(Coloop(component.ground[0]) if len(component.ground) == 1 else parallel_decompose(component))
    decomposable = all(t is not None for t in trees)
    sections = {
        'decomposição': viz.render_trees(parts, trees),
        'resultado': 'decomponível' if decomposable else 'não decomponível em blocos U(m,m+1)',
    }
    data = {
        'components': parts,
        'decomposition': [tree_to_dict(t) for t in trees],
        'decomposable': decomposable,
    }
    print(viz.emit(sections, data))
    return 0


def cmd_order(matroid: Matroid, all_orders: bool, viz: ReportVisualizer) -> int:
    if not matroid.is_simple():
        logger.warning("Matroide não simples: sintetizando para a simplificação")
        matroid, _ = matroid.simplify()
    order = synthesize_ci_order(matroid)
    verified = order is not None and is_complete_intersection(matroid, order)
    sections = {
        'ordem sintetizada': ' < '.join(map(str, order)) if order else 'nenhuma ordem CI',
    }
    data = {'ci_order': list(order) if order else None, 'verified': verified}
    if all_orders:
        results = ci_orders_exhaustive(matroid)
        witnesses = [list(p) for p, ok in results if ok]
        sections['varredura exaustiva'] = (
            f"{len(witnesses)} ordens CI de {len(results)}"
            + (f"; menor: {' < '.join(map(str, witnesses[0]))}" if witnesses else '')
        )
        data['per_order_results'] = {'orders': len(results), 'ci_orders': len(witnesses),
                                     'least_witness': witnesses[0] if witnesses else None}
    print(viz.emit(sections, data))
    return 0


def cmd_verify(corpus_path: str, loader: DataLoader, jobs: int, seed: Optional[int],
               inject_fault: bool, quiet: bool, viz: ReportVisualizer) -> int:
    spec = loader.load_corpus_spec(corpus_path).with_seed(seed)
    report = run_suite(spec, jobs=jobs, data_path=loader.data_path, inject_fault=inject_fault,
                       progress=not (quiet or viz.as_json))
    failures = []
    for name, (_, found) in report.outcomes.items():
        failures.extend(f"{name}: {viz.dumps(item)}" for item in found[:3])
    sections = {
        'suíte': viz.render_frame(report.to_frame()),
        'resumo': f"{report.instances} instâncias em {report.seconds:.1f}s: "
                  + ('todas as propriedades valem' if report.passed else 'HÁ FALHAS'),
    }
    if failures:
        sections['falhas (até 3 por propriedade)'] = '\n'.join(failures)
    print(viz.emit(sections, report.to_dict()))
    return 0 if report.passed else PropertyFailure.exit_code


def cmd_ot(matrix_path: str, order: Optional[Ordering], loader: DataLoader, viz: ReportVisualizer) -> int:
    arrangement = loader.load_arrangement(matrix_path)
    report = ot_classification(arrangement)
    simple, _ = arrangement.simplified()
    matroid = underlying_matroid(simple)
    order = _ordered(order, matroid)
    rows = lead_term_report(simple, order, matroid=matroid)
    vanish = all(relation_vanishes(simple, circuit_relation(simple, c)) for c in matroid.circuits)
    lead_ok = all(r['matches'] for r in rows)
    sections = {
        'arranjo': f"{simple.rows}×{len(simple.labels)}, ordem {','.join(map(str, order))}",
        'relações de circuito': viz.render_frame(viz.relations_table(rows)),
        'verificações': f"termos líderes = circuitos quebrados: {'sim' if lead_ok else 'não'}\n"
                        f"relações anulam-se em x = 1/α: {'sim' if vanish else 'não'}",
        'veredito': viz.render_classification(report),
    }
    data = {
        'arrangement': simple.to_dict(),
        'order': list(order),
        'relations': rows,
        'lead_term_check': lead_ok,
        'relations_vanish': vanish,
        'classification': report.to_dict(),
    }
    print(viz.emit(sections, data))
    if not (lead_ok and vanish):
        logger.error("Verificação das relações de Orlik-Terao falhou")
        return PropertyFailure.exit_code
    return 0


def cmd_construct(expression: str, loader: DataLoader, viz: ReportVisualizer) -> int:
    matroid = parse_expression(expression, loader)
    print(viz.dumps(matroid_to_dict(matroid)))
    return 0


# ----------------------------------------------------------------------
# parser e main
# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='saída em JSON')
    common.add_argument('--quiet', action='store_true', help='apenas avisos e erros no log')
    common.add_argument('--data-path', default=None, help='diretório de dados (padrão: BCCKIT_DATA_PATH)')

    parser = argparse.ArgumentParser(prog='bcckit', description='Complexos de circuitos quebrados')
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', parents=[common], help='relatório completo de um matroide')
    analyze.add_argument('source', help='arquivo JSON ou expressão de construção')
    analyze.add_argument('--order', help='ordem e1,e2,... (padrão: ordem do conjunto base)')
    analyze.add_argument('--all-orders', action='store_true', help='varredura exaustiva (|E| <= 7)')

    decompose = sub.add_parser('decompose', parents=[common], help='decomposição em conexões paralelas')
    decompose.add_argument('source')

    order = sub.add_parser('order', parents=[common], help='síntese de ordem de interseção completa')
    order.add_argument('source')
    order.add_argument('--all-orders', action='store_true')

    verify = sub.add_parser('verify', parents=[common], help='suíte de propriedades sobre um corpus')
    verify.add_argument('corpus', help='CorpusSpec em JSON')
    verify.add_argument('--jobs', type=int, default=None, help='processos (padrão: BCCKIT_JOBS)')
    verify.add_argument('--seed', type=int, default=None, help='sobrescreve as sementes do corpus')
    verify.add_argument('--inject-fault', action='store_true', help='autoteste: corrompe uma instância')

    ot = sub.add_parser('ot', parents=[common], help='relatório de Orlik-Terao de uma matriz')
    ot.add_argument('matrix', help='matriz do arranjo em JSON')
    ot.add_argument('--order')

    construct = sub.add_parser('construct', parents=[common], help='JSON de uma expressão de construção')
    construct.add_argument('expression')
    return parser


def _configure_logging(level: str, quiet: bool) -> None:
    root = logging.getLogger()
    root.setLevel(logging.WARNING if quiet else getattr(logging, level, logging.INFO))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Executa um comando e devolve o código de saída

    Args:
        argv: argumentos (padrão: sys.argv[1:])

    Returns:
        0 ok, 1 falha de propriedade, 2 esquema, 3 limite, 4 pré-condição
    """
    args = build_parser().parse_args(argv)
    settings = get_settings()
    _configure_logging(settings.log_level, args.quiet)
    loader = DataLoader(args.data_path or settings.data_path)
    viz = ReportVisualizer(as_json=args.json)
    try:
        if args.command == 'analyze':
            return cmd_analyze(load_input(args.source, loader), parse_order(args.order), args.all_orders, viz)
        if args.command == 'decompose':
            return cmd_decompose(load_input(args.source, loader), viz)
        if args.command == 'order':
            return cmd_order(load_input(args.source, loader), args.all_orders, viz)
        if args.command == 'verify':
            seed = args.seed if args.seed is not None else settings.seed
            return cmd_verify(args.corpus, loader, args.jobs or settings.jobs, seed,
                              args.inject_fault, args.quiet, viz)
        if args.command == 'ot':
            return cmd_ot(args.matrix, parse_order(args.order), loader, viz)
        return cmd_construct(args.expression, loader, viz)
    except BccKitError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
