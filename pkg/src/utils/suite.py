"""
BCCKit - Suíte de Verificação
Verifica as propriedades combinatórias sobre um corpus: cada verificação é
registrada por nome, roda por instância num pool de processos e o resultado
é agregado num DataFrame
"""

import itertools
import logging
import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import pandas as pd
from tqdm import tqdm

from ..exceptions import BccKitError, ConnectionSpecError, DomainPreconditionError
from ..models.classify import (ShapeKind, Verdict, classify_matroid, is_complete_intersection, last_two_symmetric,
                               link_shape, local_panel, matroid_complex_panel, realize)
from ..models.complex import (HVector, Ordering, bc_complex, independence_complex, minimal_broken_circuits,
                              reduced_bc_complex)
from ..models.constructions import free_dual_extension, glue
from ..models.invariants import (beta, check_hilbert_identity, component_count_from_h,
                                 connectivity_after_deletion_contraction, deletion_contraction_h_check,
                                 h_polynomial_tutte, parallel_connection_h, partial_sum_dominance)
from ..models.matroid import Matroid, graphic, uniform
from ..models.orlik_terao import (circuit_relation, generic_arrangement, graphic_arrangement, lead_term_check,
                                  ot_classification, relation_vanishes, underlying_matroid)
from .corpus import (CorpusInstance, CorpusSpec, OrderBudget, build_corpus, check_golden_count, golden_key,
                     k4_minor_free, k4_reduction_free)
from .data_loader import matroid_to_dict
from .expression import parse_expression
from .oracles import ORACLE_ORDER_LIMIT, oracle_circuits, oracle_ci_orders, oracle_h_vector

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Outcome = Dict[str, Tuple[int, List[dict]]]

MAX_RECORDED_FAILURES = 5
BRIDGE_LIMIT = 6
ORACLE_FACE_LIMIT = 14
GLUING_PAIRS = 100
ARRANGEMENT_EXHAUSTIVE = 6


@dataclass(frozen=True)
class CheckContext:
    budget: OrderBudget
    seed: int
    fault_target: Optional[str] = None


@dataclass(frozen=True)
class CheckSpec:
    fn: Callable
    kind: str
    names: Tuple[str, ...]


CHECKS: Dict[str, CheckSpec] = {}
DESCRIPTIONS: Dict[str, str] = {}


def register(kind: str, **described: str):
    """Registra uma verificação ('instance' ou 'global') com as propriedades que ela reporta"""

    def decorator(fn: Callable) -> Callable:
        CHECKS[fn.__name__] = CheckSpec(fn, kind, tuple(described))
        DESCRIPTIONS.update(described)
        return fn

    return decorator


# ----------------------------------------------------------------------
# auxiliares
# ----------------------------------------------------------------------
def _failure(instance: CorpusInstance, **detail) -> dict:
    record = {
        'instance': instance.name,
        'family': instance.family,
        'matroid': matroid_to_dict(instance.matroid),
    }
    if instance.trace:
        record['trace'] = instance.trace
    record.update(detail)
    return record


def _matroid_failure(name: str, matroid: Matroid, **detail) -> dict:
    record = {'instance': name, 'matroid': matroid_to_dict(matroid)}
    record.update(detail)
    return record


def _rng(ctx: CheckContext, name: str) -> np.random.Generator:
    return np.random.default_rng([ctx.seed, zlib.crc32(name.encode('utf-8'))])


def _orders(matroid: Matroid, ctx: CheckContext, name: str) -> List[Ordering]:
    """Todas as ordens até o limite exaustivo; acima dele, a ordem natural e `samples` sorteadas"""
    if len(matroid.ground) <= ctx.budget.exhaustive_below:
        return [Ordering(p) for p in itertools.permutations(matroid.ground)]
    rng = _rng(ctx, name)
    orders = [Ordering.of(matroid)]
    for _ in range(ctx.budget.samples):
        orders.append(Ordering(tuple(int(e) for e in rng.permutation(matroid.ground))))
    return orders


def _simple(matroid: Matroid) -> Matroid:
    return matroid if matroid.is_simple() else matroid.simplify()[0]


def _add(outcome: Outcome, name: str, count: int, failures: List[dict]) -> None:
    total, recorded = outcome.get(name, (0, []))
    outcome[name] = (total + count, recorded + failures)


# ----------------------------------------------------------------------
# verificações por instância
# ----------------------------------------------------------------------
@register('instance', h_order_invariance="h-vetor de BC(M,<) não depende da ordem")
def check_h_order_invariance(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = instance.matroid
    reference = bc_complex(matroid, Ordering.of(matroid)).h_vector()
    orders = _orders(matroid, ctx, instance.name)
    failures = []
    for order in orders:
        h = bc_complex(matroid, order).h_vector()
        if h != reference and len(failures) < MAX_RECORDED_FAILURES:
            failures.append(_failure(instance, order=list(order.perm), h=list(h.entries),
                                     expected=list(reference.entries)))
    return {'h_order_invariance': (len(orders), failures)}


@register('instance', tutte_matches_faces="T_M(t,0) = contagem de faces de BC = oráculo; identidade de Hilbert")
def check_tutte_matches_faces(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = instance.matroid
    complex_ = bc_complex(matroid, Ordering.of(matroid))
    faces_h = complex_.h_vector()
    tutte_h = h_polynomial_tutte(matroid).h_vector()
    if ctx.fault_target == instance.name:
        tutte_h = HVector((tutte_h.entries[0] + 1,) + tutte_h.entries[1:])
    failures = []
    if tutte_h != faces_h:
        failures.append(_failure(instance, tutte=list(tutte_h.entries), faces=list(faces_h.entries)))
    if len(matroid.ground) <= ORACLE_FACE_LIMIT:
        oracle_h = oracle_h_vector(matroid)
        if oracle_h != faces_h:
            failures.append(_failure(instance, oracle=list(oracle_h.entries), faces=list(faces_h.entries)))
    r = complex_.dim + 1
    if not check_hilbert_identity(complex_.f_vector(), faces_h, r):
        failures.append(_failure(instance, hilbert=list(complex_.f_vector().entries)))
    return {'tutte_matches_faces': (1, failures)}


@register('instance', h_vector_identities="h_0 = 1, h_1 = n - r, h_(r-1) = β, h_r = 0; componentes; "
                                          "deleção-contração; conexidade; somas parciais")
def check_h_vector_identities(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = _simple(instance.matroid)
    n, r = len(matroid.ground), matroid.full_rank
    h = h_polynomial_tutte(matroid).h_vector().entries
    failures = []
    count = 0
    if r >= 1:
        b = beta(matroid)
        count += 1
        if (h[0], h[1], h[r - 1], h[r]) != (1, n - r, b, 0):
            failures.append(_failure(instance, h=list(h), beta=b, check='entradas extremas'))
        count += 1
        if component_count_from_h(h, r) != len(matroid.components()):
            failures.append(_failure(instance, h=list(h), components=len(matroid.components())))
        connected = matroid.is_connected()
        for e in matroid.ground:
            if e in matroid.coloops:
                continue
            count += 1
            if not deletion_contraction_h_check(matroid, e):
                failures.append(_failure(instance, element=e, check='deleção-contração'))
            if connected:
                deleted_ok, contracted_ok = connectivity_after_deletion_contraction(matroid, e)
                if not (deleted_ok or contracted_ok) or (b == 1 and deleted_ok == contracted_ok):
                    failures.append(_failure(instance, element=e, beta=b, check='conexidade',
                                             deletion=deleted_ok, contraction=contracted_ok))
    truncated = HVector(h).truncated()
    count += 1
    if not partial_sum_dominance(truncated):
        failures.append(_failure(instance, h=list(truncated), check='somas parciais'))
    return {'h_vector_identities': (count, failures[:MAX_RECORDED_FAILURES])}


def _vertex_precedence_violations(matroid: Matroid, order: Ordering, faces: Sequence[int]) -> int:
    """Conta faces F de BC em que um vértice de lk_Σ F - lk_Δ F precede todos os de lk_Δ F"""
    violations = 0
    face_set = set(faces)
    for f in faces:
        size = bin(f).count('1')
        v1 = [v for v in matroid.ground if not f >> v & 1 and (f | 1 << v) in face_set]
        v2 = [v for v in matroid.ground if not f >> v & 1 and matroid.rank_mask(f | 1 << v) == size + 1]
        extra = [v for v in v2 if v not in v1]
        if not extra:
            continue
        if not v1 or min(order.key(v) for v in v1) > min(order.key(v) for v in extra):
            violations += 1
    return violations


@register('instance',
          local_panel_agreement="as seis condições locais de BC(M,<) coincidem e igualam a disjunção dos circuitos quebrados",
          link_shape_bounds="links 1-dimensionais não são n-gonos com n >= 5; BC 1-dimensional não é caminho com >= 4 vértices",
          link_vertex_precedence="vértices de lk_Σ F - lk_Δ F são precedidos por algum vértice de lk_Δ F")
def check_order_sweep(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = instance.matroid
    if len(matroid.ground) > ctx.budget.max_sampled:
        return {}
    outcome: Outcome = {}
    cache: Dict[frozenset, tuple] = {}
    for order in _orders(matroid, ctx, instance.name):
        key = minimal_broken_circuits(matroid, order)
        if key not in cache:
            complex_ = bc_complex(matroid, order)
            panel = local_panel(complex_)
            bad_shapes = []
            for face in complex_.faces_with_one_dimensional_link():
                shape = link_shape(complex_.link(face))
                if shape.kind == ShapeKind.NGON and shape.size >= 5:
                    bad_shapes.append((sorted(face), str(shape)))
            if complex_.dim == 1:
                whole = link_shape(complex_)
                if whole.kind == ShapeKind.PATH and whole.size >= 4:
                    bad_shapes.append(([], str(whole)))
            cache[key] = (complex_, panel, bad_shapes)
        complex_, panel, bad_shapes = cache[key]
        panel_fail = []
        if not panel.agree or panel.complete_intersection != is_complete_intersection(matroid, order):
            panel_fail.append(_failure(instance, order=list(order.perm), panel=list(panel.as_tuple())))
        _add(outcome, 'local_panel_agreement', 1, panel_fail)
        shape_fail = [_failure(instance, order=list(order.perm), shapes=bad_shapes)] if bad_shapes else []
        _add(outcome, 'link_shape_bounds', 1, shape_fail)
        faces = sorted(complex_.face_masks)
        violations = _vertex_precedence_violations(matroid, order, faces)
        precedence_fail = [_failure(instance, order=list(order.perm), violations=violations)] if violations else []
        _add(outcome, 'link_vertex_precedence', len(faces), precedence_fail)
    return {name: (count, fails[:MAX_RECORDED_FAILURES]) for name, (count, fails) in outcome.items()}


@register('instance', h_symmetry_agreement="Dehn-Sommerville = duas últimas entradas = decomponível = ordem CI sintetizada "
                                           "(= existe ordem CI, por varredura exaustiva)")
def check_h_symmetry_agreement(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = _simple(instance.matroid)
    report = classify_matroid(matroid)
    conditions = {
        'dehn_sommerville': report.dehn_sommerville,
        'last_two': report.last_two,
        'decomposable': report.decomposable,
        'synthesized': report.ci_order is not None,
    }
    failures = []
    if len(matroid.ground) <= min(ctx.budget.exhaustive_below, ORACLE_ORDER_LIMIT):
        witnesses = oracle_ci_orders(matroid)
        conditions['exhaustive'] = bool(witnesses)
        if report.ci_order is not None and report.ci_order not in witnesses:
            failures.append(_failure(instance, ci_order=list(report.ci_order.perm), check='ordem fora do oráculo'))
    if len(set(conditions.values())) != 1:
        failures.append(_failure(instance, h=list(report.h), **conditions))
    for (part, component), tree in zip(matroid.components(), report.trees):
        if tree is not None and not realize(tree).same_as(component):
            failures.append(_failure(instance, component=sorted(part), check='árvore não realiza a componente'))
    if report.verdict == Verdict.GORENSTEIN:
        failures.append(_failure(instance, h=list(report.h), check='simetria sem testemunha CI'))
    return {'h_symmetry_agreement': (1, failures)}


@register('instance', matroid_complex_bridge="complexo do matroide = BC reduzido da extensão livre dual; "
                                             "Gorenstein por forma = interseção completa")
def check_matroid_complex_bridge(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = instance.matroid
    if len(matroid.ground) > BRIDGE_LIMIT:
        return {}
    extended = free_dual_extension(matroid)
    apex = max(matroid.ground) + 1
    order = Ordering((apex,) + matroid.ground)
    failures = []
    try:
        reduced = reduced_bc_complex(extended, order)
    except DomainPreconditionError as e:
        return {'matroid_complex_bridge': (1, [_failure(instance, error=str(e))])}
    sigma = independence_complex(matroid)
    if set(reduced.facets) != set(sigma.facets):
        failures.append(_failure(instance, reduced=[sorted(f) for f in reduced.facets],
                                 independence=[sorted(f) for f in sigma.facets]))
    panel = matroid_complex_panel(matroid)
    if panel.gorenstein != panel.complete_intersection or (sigma.dim >= 1 and not panel.agree):
        failures.append(_failure(instance, panel=list(panel.as_tuple()), dim=sigma.dim))
    return {'matroid_complex_bridge': (1, failures)}


@register('instance', series_parallel_agreement="β = 1 ⟺ construção série-paralela ⟺ sem menor K4 "
                                                "(dois oráculos); vértice de grau 2")
def check_series_parallel(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = instance.matroid
    failures = []
    if instance.family == 'graphs':
        if not matroid.is_connected():
            return {}
        edges = list(instance.witness.values())
        verdicts = {
            'beta_one': beta(matroid) == 1,
            'k4_minor_free': k4_minor_free(edges),
            'k4_reduction_free': k4_reduction_free(edges),
        }
        if len(set(verdicts.values())) != 1:
            failures.append(_failure(instance, **verdicts))
        return {'series_parallel_agreement': (1, failures)}
    if instance.family == 'sp_random':
        edges = [instance.witness[e] for e in matroid.ground]
        checks = {
            'beta_one': beta(matroid) == 1,
            'trace_rebuilds': parse_expression(instance.trace).same_as(matroid),
            'witness_graphic': graphic(edges, matroid.ground).same_as(matroid),
            'k4_minor_free': k4_minor_free(edges),
            'k4_reduction_free': k4_reduction_free(edges),
        }
        simple_graph = nx.Graph((u, v) for u, v in edges if u != v)
        if simple_graph.number_of_nodes() >= 3:
            checks['degree_two_vertex'] = any(d == 2 for _, d in simple_graph.degree())
        if not all(checks.values()):
            failures.append(_failure(instance, witness=edges, **checks))
        return {'series_parallel_agreement': (1, failures)}
    if instance.family == 'parallel_um':
        if not parse_expression(instance.trace).same_as(matroid):
            failures.append(_failure(instance, check='trace_rebuilds'))
        return {'series_parallel_agreement': (1, failures)}
    return {}


@register('instance', matroid_axioms="deleção preserva circuitos, eliminação de circuitos, submodularidade, "
                                     "dual do dual, circuitos = oráculo")
def check_matroid_axioms(instance: CorpusInstance, ctx: CheckContext) -> Outcome:
    matroid = instance.matroid
    if len(matroid.ground) > ctx.budget.max_sampled:
        return {}
    failures = []
    count = 0
    circuits = matroid.circuits
    for e in matroid.ground:
        count += 1
        expected = frozenset(c for c in circuits if e not in c)
        if matroid.delete(e).circuits != expected:
            failures.append(_failure(instance, element=e, check='deleção'))
    for c1, c2 in itertools.islice(itertools.combinations(sorted(circuits, key=sorted), 2), 200):
        for e in c1 & c2:
            count += 1
            union = (c1 | c2) - {e}
            if not any(c <= union for c in circuits):
                failures.append(_failure(instance, c1=sorted(c1), c2=sorted(c2), element=e, check='eliminação'))
    rng = _rng(ctx, instance.name)
    full = matroid.ground_mask
    for _ in range(200):
        a = int(rng.integers(full + 1)) & full
        b = int(rng.integers(full + 1)) & full
        count += 1
        if matroid.rank_mask(a | b) + matroid.rank_mask(a & b) > matroid.rank_mask(a) + matroid.rank_mask(b):
            failures.append(_failure(instance, a=a, b=b, check='submodularidade'))
    count += 1
    if matroid.dual().dual().bases != matroid.bases:
        failures.append(_failure(instance, check='dual do dual'))
    count += 1
    if oracle_circuits(matroid) != circuits:
        failures.append(_failure(instance, check='circuitos'))
    return {'matroid_axioms': (count, failures[:MAX_RECORDED_FAILURES])}


# ----------------------------------------------------------------------
# verificações globais
# ----------------------------------------------------------------------
@dataclass
class SuiteContext:
    spec: CorpusSpec
    instances: List[CorpusInstance]
    check: CheckContext
    data_path: str


@register('global', graph_enumeration_golden="contagem de grafos conexos simples confere com o arquivo dourado")
def check_graph_enumeration(suite: SuiteContext) -> Outcome:
    family = suite.spec.graphs
    if family is None:
        return {}
    count = sum(1 for instance in suite.instances if instance.family == 'graphs')
    path = os.path.join(suite.data_path, 'golden', 'enumeration_counts.json')
    key = golden_key(family.max_vertices, family.max_edges)
    failures = [] if check_golden_count(path, key, count) else [{'instance': key, 'count': count}]
    return {'graph_enumeration_golden': (1, failures)}


@register('global', classification_anchors="U_{m,m+1} (m <= 5) CI; M(K4) sem ordem CI em 720; P(U(2,3),U(2,3)) CI com h = (1,2,1)")
def check_anchors(suite: SuiteContext) -> Outcome:
    failures = []
    count = 0
    for m in range(2, 6):
        count += 1
        report = classify_matroid(uniform(m, m + 1))
        if report.verdict != Verdict.COMPLETE_INTERSECTION or report.h != (1,) * m:
            failures.append(_matroid_failure(f"U({m},{m + 1})", uniform(m, m + 1), h=list(report.h)))
    k4 = graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    report = classify_matroid(k4)
    count += 1
    orders = oracle_ci_orders(k4)
    if report.verdict != Verdict.NEITHER or report.h != (1, 3, 2) or orders:
        failures.append(_matroid_failure('M(K4)', k4, h=list(report.h), ci_orders=len(orders)))
    two_triangles = parse_expression("P(U(2,3),U(2,3);3)")
    report = classify_matroid(two_triangles)
    count += 1
    if (report.verdict != Verdict.COMPLETE_INTERSECTION or report.h != (1, 2, 1)
            or not is_complete_intersection(two_triangles, report.ci_order)):
        failures.append(_matroid_failure('P(U(2,3),U(2,3);3)', two_triangles, h=list(report.h)))
    return {'classification_anchors': (count, failures)}


def _gluing_pieces(suite: SuiteContext) -> List[Matroid]:
    pieces = []
    for instance in suite.instances:
        matroid = _simple(instance.matroid)
        if 1 <= matroid.full_rank and len(matroid.ground) <= 7:
            pieces.append(matroid.relabel({e: i + 1 for i, e in enumerate(matroid.ground)}))
    return pieces


def _truncated_h(matroid: Matroid) -> Tuple[int, ...]:
    return h_polynomial_tutte(matroid).h_vector().truncated()


@register('global', gluing_identities="h(M1 ⊕ M2) = h1·h2, h(P(M1,M2)) = h1·h2/t e simetria das duas "
                                      "últimas entradas do todo ⟺ das partes")
def check_gluing(suite: SuiteContext) -> Outcome:
    pieces = _gluing_pieces(suite)
    if len(pieces) < 2:
        return {}
    rng = np.random.default_rng(suite.check.seed)
    failures = []
    sums = parallels = 0
    attempts = 0
    while (sums < GLUING_PAIRS or parallels < GLUING_PAIRS) and attempts < 20 * GLUING_PAIRS:
        attempts += 1
        left = pieces[int(rng.integers(len(pieces)))]
        right = pieces[int(rng.integers(len(pieces)))]
        if len(left.ground) + len(right.ground) > 14:
            continue
        p1, p2 = h_polynomial_tutte(left), h_polynomial_tutte(right)
        parts_symmetric = last_two_symmetric(_truncated_h(left)) and last_two_symmetric(_truncated_h(right))
        if sums < GLUING_PAIRS:
            whole = glue('sum', left, right)
            sums += 1
            if h_polynomial_tutte(whole) != p1 * p2 or last_two_symmetric(_truncated_h(whole)) != parts_symmetric:
                failures.append(_matroid_failure('soma direta', whole, left=matroid_to_dict(left),
                                                 right=matroid_to_dict(right)))
        if parallels < GLUING_PAIRS:
            candidates = [e for e in left.ground if e not in left.coloops]
            if not candidates:
                continue
            e = candidates[int(rng.integers(len(candidates)))]
            try:
                whole = glue('P', left, right, e)
            except ConnectionSpecError:
                continue
            parallels += 1
            if (h_polynomial_tutte(whole) != parallel_connection_h(p1, p2)
                    or last_two_symmetric(_truncated_h(whole)) != parts_symmetric):
                failures.append(_matroid_failure('conexão paralela', whole, basepoint=e,
                                                 left=matroid_to_dict(left), right=matroid_to_dict(right)))
    return {'gluing_identities': (sums + parallels, failures[:MAX_RECORDED_FAILURES])}


def _arrangements(suite: SuiteContext):
    graphs = [i for i in suite.instances if i.family == 'graphs' and len(i.matroid.ground) <= ARRANGEMENT_EXHAUSTIVE]
    for instance in graphs[:6]:
        yield instance.name, graphic_arrangement(list(instance.witness.values()), instance.matroid.ground), instance.matroid
    for r, n in ((2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6)):
        yield f"generic({r},{n})", generic_arrangement(r, n), uniform(r, n)


@register('global', orlik_terao_arrangements="termos líderes = circuitos quebrados em toda ordem; relações se anulam; "
                                             "veredito do arranjo = veredito do matroide")
def check_arrangements(suite: SuiteContext) -> Outcome:
    failures = []
    count = 0
    forward_mismatch = False
    for name, arrangement, expected in _arrangements(suite):
        matroid = underlying_matroid(arrangement)
        count += 1
        if not matroid.same_as(expected):
            failures.append(_matroid_failure(name, expected, check='matroide subjacente'))
            continue
        for circuit in matroid.circuits:
            if not relation_vanishes(arrangement, circuit_relation(arrangement, circuit)):
                failures.append(_matroid_failure(name, expected, circuit=sorted(circuit), check='relação'))
        if len(matroid.ground) <= ARRANGEMENT_EXHAUSTIVE:
            orders = [Ordering(p) for p in itertools.permutations(matroid.ground)]
        else:
            orders = _orders(matroid, suite.check, name)
        for order in orders:
            count += 1
            if not lead_term_check(arrangement, order, matroid=matroid):
                failures.append(_matroid_failure(name, expected, order=list(order.perm), check='termo líder'))
                break
        forward_mismatch = forward_mismatch or not lead_term_check(arrangement, Ordering.of(matroid), 'forward', matroid)
        if ot_classification(arrangement).verdict != classify_matroid(_simple(expected)).verdict:
            failures.append(_matroid_failure(name, expected, check='veredito'))
    if not forward_mismatch:
        failures.append({'instance': 'controle negativo', 'check': "precedência 'forward' nunca diverge"})
    return {'orlik_terao_arrangements': (count, failures[:MAX_RECORDED_FAILURES])}


# ----------------------------------------------------------------------
# execução
# ----------------------------------------------------------------------
def _run_instance(task: Tuple[CorpusInstance, CheckContext, Tuple[str, ...]]) -> Outcome:
    instance, ctx, names = task
    outcome: Outcome = {}
    for name in names:
        spec = CHECKS[name]
        try:
            result = spec.fn(instance, ctx)
        except BccKitError as e:
            result = {prop: (1, [_failure(instance, error=f"{type(e).__name__}: {e}")]) for prop in spec.names}
        for prop, (count, failures) in result.items():
            _add(outcome, prop, count, failures)
    return outcome


@dataclass
class SuiteReport:
    """Contagens e falhas por propriedade"""

    outcomes: Dict[str, Tuple[int, List[dict]]] = field(default_factory=dict)
    seconds: float = 0.0
    instances: int = 0

    @property
    def passed(self) -> bool:
        return all(not failures for _, failures in self.outcomes.values())

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                'check': name,
                'description': DESCRIPTIONS.get(name, ''),
                'instances': count,
                'failures': len(failures),
                'status': 'ok' if not failures else 'FALHOU',
            }
            for name, (count, failures) in self.outcomes.items()
        ]
        return pd.DataFrame(rows, columns=['check', 'description', 'instances', 'failures', 'status'])

    def to_dict(self) -> dict:
        return {
            'passed': self.passed,
            'instances': self.instances,
            'seconds': round(self.seconds, 2),
            'checks': [
                {'check': name, 'instances': count, 'failures': failures}
                for name, (count, failures) in self.outcomes.items()
            ],
        }


def run_suite(spec: CorpusSpec, jobs: int = 1, data_path: str = 'data', inject_fault: bool = False,
              checks: Optional[Sequence[str]] = None, progress: bool = True) -> SuiteReport:
    """
    Roda todas as verificações registradas sobre o corpus

    Args:
        spec: especificação do corpus (sementes já resolvidas)
        jobs: processos do pool (1 = sequencial)
        data_path: diretório com golden/
        inject_fault: corrompe o h de Tutte da primeira instância (autoteste)
        checks: subconjunto de verificações pelo nome da função
        progress: barra de progresso tqdm

    Returns:
        SuiteReport agregado
    """
    start = time.time()
    instances = build_corpus(spec)
    seed = spec.sp_random.seed if spec.sp_random else (spec.parallel_um.seed if spec.parallel_um else 0)
    fault_target = instances[0].name if inject_fault and instances else None
    ctx = CheckContext(spec.order_budget, seed, fault_target)
    selected = [name for name in CHECKS if checks is None or name in checks]
    per_instance = tuple(name for name in selected if CHECKS[name].kind == 'instance')
    tasks = [(instance, ctx, per_instance) for instance in instances]

    report = SuiteReport(instances=len(instances))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(tqdm(executor.map(_run_instance, tasks), total=len(tasks),
                                desc="Verificando", disable=not progress))
    else:
        results = [_run_instance(task) for task in tqdm(tasks, desc="Verificando", disable=not progress)]
    for outcome in results:
        for name, (count, failures) in outcome.items():
            _add(report.outcomes, name, count, failures)

    suite_ctx = SuiteContext(spec, instances, ctx, data_path)
    for name in selected:
        if CHECKS[name].kind != 'global':
            continue
        logger.info(f"Verificação global: {name}")
        try:
            outcome = CHECKS[name].fn(suite_ctx)
        except BccKitError as e:
            outcome = {prop: (1, [{'instance': name, 'error': f"{type(e).__name__}: {e}"}])
                       for prop in CHECKS[name].names}
        for prop, (count, failures) in outcome.items():
            _add(report.outcomes, prop, count, failures)

    report.seconds = time.time() - start
    status = "todas as propriedades valem" if report.passed else "há propriedades violadas"
    logger.info(f"Suíte concluída em {report.seconds:.1f}s com {len(instances)} instâncias: {status}")
    return report
