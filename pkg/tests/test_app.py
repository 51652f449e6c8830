"""
Testes da linha de comando: saídas JSON e códigos de saída
"""

import json

import pytest

from src.app import main, parse_order
from src.exceptions import SchemaError

TWO_TRIANGLES = "P(U(2,3),U(2,3);3)"


@pytest.fixture
def run(data_dir, capsys):
    """Executa o CLI e devolve (código, stdout)"""

    def _run(*argv):
        code = main([*argv, '--data-path', str(data_dir)])
        return code, capsys.readouterr().out

    return _run


def test_parse_order():
    assert tuple(parse_order("3, 1,2")) == (3, 1, 2)
    assert parse_order(None) is None
    with pytest.raises(SchemaError):
        parse_order("1,x")


def test_construct_prints_matroid_json(run):
    code, out = run('construct', TWO_TRIANGLES)
    assert code == 0
    data = json.loads(out)
    assert data['type'] == 'circuits'
    assert data['ground'] == [1, 2, 3, 4, 5]
    assert data['circuits'] == [[1, 2, 3], [1, 2, 4, 5], [3, 4, 5]]


def test_analyze_k4_json(run):
    code, out = run('analyze', 'k4.json', '--json')
    assert code == 0
    data = json.loads(out)
    assert (data['size'], data['rank']) == (6, 3)
    assert data['h'] == [1, 3, 2]
    assert not data['simplified']
    assert data['beta'] == 2
    assert data['components'] == [[0, 1, 2, 3, 4, 5]]
    assert not data['panel']['gorenstein']
    assert data['classification']['verdict'] == 'neither'


def test_analyze_k4_all_orders(run):
    code, out = run('analyze', 'k4.json', '--all-orders', '--json')
    assert code == 0
    sweep = json.loads(out)['classification']['per_order_results']
    assert sweep == {'orders': 720, 'ci_orders': 0, 'least_witness': None}


def test_analyze_two_triangles_text_and_orders(run):
    code, out = run('analyze', TWO_TRIANGLES)
    assert code == 0
    assert 'h = (1, 2, 1)  β = 1' in out
    code, out = run('analyze', TWO_TRIANGLES, '--order', '1,4,2,3,5', '--json')
    assert code == 0
    panel = json.loads(out)['panel']
    assert not any(panel.values())


def test_analyze_reports_truncated_h(run):
    code, out = run('analyze', 'U(2,3)', '--json')
    assert code == 0
    data = json.loads(out)
    assert data['h'] == [1, 1]
    assert data['h'] == data['classification']['h']
    assert data['beta'] == 1


def test_analyze_simplifies_looped_input(run):
    code, out = run('analyze', 'looped.json', '--json')
    assert code == 0
    data = json.loads(out)
    assert data['simplified'] and data['classification']['simplified']
    assert data['circuits'] == [[0, 2, 3]]
    assert data['h'] == [1, 1]
    code, out = run('analyze', 'looped.json')
    assert code == 0
    assert 'simplificado antes da análise' in out


@pytest.mark.parametrize("source", ['U(0,2)', 'U(0,0)'])
def test_analyze_rank_zero_has_undefined_beta(run, source):
    code, out = run('analyze', source, '--json')
    assert code == 0
    data = json.loads(out)
    assert (data['size'], data['rank']) == (0, 0)
    assert data['h'] == [1]
    assert data['beta'] is None
    code, out = run('analyze', source)
    assert code == 0
    assert 'indefinido' in out


@pytest.mark.parametrize("argv,expected", [
    (('analyze', 'broken.json'), 2),
    (('analyze', 'nao_existe.json'), 2),
    (('analyze', 'Q(1,2)'), 2),
    (('analyze', 'k4.json', '--order', '1,x'), 2),
    (('analyze', 'U(2,21)'), 3),
    (('analyze', 'k4.json', '--order', '0,1'), 4),
    (('construct', 'P(U(2,3),U(2,3);9)'), 4),
    (('ot', 'rank_deficient.json'), 4),
])
def test_exit_codes(run, argv, expected):
    code, _ = run(*argv)
    assert code == expected


def test_decompose(run):
    code, out = run('decompose', TWO_TRIANGLES, '--json')
    assert code == 0
    data = json.loads(out)
    assert data['decomposable']
    assert data['decomposition'][0]['parallel'] == 3
    code, out = run('decompose', 'k4.json', '--json')
    assert code == 0
    assert json.loads(out) == {'components': [[0, 1, 2, 3, 4, 5]], 'decomposition': [None], 'decomposable': False}


def test_order_synthesis(run):
    code, out = run('order', TWO_TRIANGLES, '--all-orders', '--json')
    assert code == 0
    data = json.loads(out)
    assert data['ci_order'] == [1, 2, 3, 4, 5]
    assert data['verified']
    assert data['per_order_results']['least_witness'] == [1, 2, 3, 4, 5]
    code, out = run('order', 'k4.json', '--json')
    assert code == 0
    assert json.loads(out) == {'ci_order': None, 'verified': False}


def test_ot_reports(run):
    code, out = run('ot', 'u23_matrix.json', '--json')
    assert code == 0
    data = json.loads(out)
    assert data['relations'][0]['coeffs'] == ['1', '1', '-1']
    assert data['lead_term_check'] and data['relations_vanish']
    assert data['classification']['verdict'] == 'CI'
    code, out = run('ot', 'generic_2x4.json', '--order', '3,2,1,0', '--json')
    assert code == 0
    data = json.loads(out)
    assert data['classification']['verdict'] == 'neither'
    assert data['classification']['h'] == [1, 2]
    assert len(data['relations']) == 4


def test_verify_uniform_corpus(run):
    code, out = run('verify', 'uniform_corpus.json', '--jobs', '1', '--json')
    assert code == 0
    assert json.loads(out)['passed']
    code, out = run('verify', 'uniform_corpus.json', '--jobs', '1', '--inject-fault', '--json')
    assert code == 1
    data = json.loads(out)
    assert not data['passed']
    failed = [c['check'] for c in data['checks'] if c['failures']]
    assert failed == ['tutte_matches_faces']


def test_unknown_command_exits_through_argparse():
    with pytest.raises(SystemExit):
        main(['classify'])
