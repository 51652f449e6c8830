"""
Testes da suíte de verificação
"""

import json

import pytest

from src.utils.corpus import CorpusSpec, GraphFamily, OrderBudget, SpRandomFamily, UniformFamily
from src.utils.suite import CHECKS, run_suite

SMALL_BUDGET = OrderBudget(exhaustive_below=5, samples=3, max_sampled=8)


@pytest.fixture
def small_spec():
    return CorpusSpec(uniform=UniformFamily(4), sp_random=SpRandomFamily(4, 6, 5), order_budget=SMALL_BUDGET)


def test_registry_lists_instance_and_global_checks():
    kinds = {spec.kind for spec in CHECKS.values()}
    assert kinds == {'instance', 'global'}
    assert 'check_h_order_invariance' in CHECKS
    assert CHECKS['check_order_sweep'].names == (
        'local_panel_agreement', 'link_shape_bounds', 'link_vertex_precedence'
    )


def test_instance_checks_pass_on_small_corpus(small_spec, tmp_path):
    names = [name for name, spec in CHECKS.items() if spec.kind == 'instance']
    report = run_suite(small_spec, jobs=1, data_path=str(tmp_path), checks=names, progress=False)
    assert report.instances == 14
    assert report.passed, report.to_dict()
    assert 'h_order_invariance' in report.outcomes
    assert 'series_parallel_agreement' in report.outcomes


def test_injected_fault_is_detected(small_spec, tmp_path):
    report = run_suite(small_spec, data_path=str(tmp_path), inject_fault=True,
                       checks=['check_tutte_matches_faces'], progress=False)
    assert not report.passed
    count, failures = report.outcomes['tutte_matches_faces']
    assert count == report.instances
    assert len(failures) == 1
    assert failures[0]['instance'] == 'U(1,1)'
    frame = report.to_frame()
    assert list(frame['status']) == ['FALHOU']


def test_golden_count_is_recorded_then_enforced(tmp_path):
    spec = CorpusSpec(graphs=GraphFamily(4, 6), order_budget=SMALL_BUDGET)
    first = run_suite(spec, data_path=str(tmp_path), checks=['check_graph_enumeration'], progress=False)
    assert first.passed
    golden = tmp_path / 'golden' / 'enumeration_counts.json'
    assert json.loads(golden.read_text(encoding='utf-8')) == {'graphs(4,6)': 8}
    golden.write_text(json.dumps({'graphs(4,6)': 9}), encoding='utf-8')
    second = run_suite(spec, data_path=str(tmp_path), checks=['check_graph_enumeration'], progress=False)
    assert not second.passed
    assert second.outcomes['graph_enumeration_golden'][1] == [{'instance': 'graphs(4,6)', 'count': 8}]


def test_anchors_and_gluing_hold(tmp_path):
    spec = CorpusSpec(uniform=UniformFamily(3), order_budget=SMALL_BUDGET)
    report = run_suite(spec, data_path=str(tmp_path), checks=['check_anchors', 'check_gluing'], progress=False)
    assert report.passed, report.to_dict()
    assert report.outcomes['classification_anchors'][0] == 6
    assert report.outcomes['gluing_identities'][0] > 0


def test_graph_family_series_parallel_agreement(tmp_path):
    spec = CorpusSpec(graphs=GraphFamily(5, 7), order_budget=SMALL_BUDGET)
    report = run_suite(spec, data_path=str(tmp_path), checks=['check_series_parallel'], progress=False)
    count, failures = report.outcomes['series_parallel_agreement']
    # árvores e grafos com pontes ficam de fora (matroide desconexo)
    assert 0 < count < report.instances
    assert failures == []


def test_process_pool_matches_sequential(small_spec, tmp_path):
    checks = ['check_h_order_invariance', 'check_matroid_axioms']
    sequential = run_suite(small_spec, jobs=1, data_path=str(tmp_path), checks=checks, progress=False)
    pooled = run_suite(small_spec, jobs=2, data_path=str(tmp_path), checks=checks, progress=False)
    assert {k: v[0] for k, v in pooled.outcomes.items()} == {k: v[0] for k, v in sequential.outcomes.items()}
    assert pooled.passed


def test_report_dict_shape(tmp_path):
    spec = CorpusSpec(uniform=UniformFamily(2), order_budget=SMALL_BUDGET)
    data = run_suite(spec, data_path=str(tmp_path), checks=['check_h_order_invariance'], progress=False).to_dict()
    assert data['passed'] is True
    assert data['instances'] == 3
    assert [c['check'] for c in data['checks']] == ['h_order_invariance']
