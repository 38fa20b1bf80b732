import json

import pytest

from wsync.automaton import WeightedAutomaton
from wsync.cli import main
from wsync.matrix import Matrix
from wsync.reductions import FpcpInstance, fpcp_to_nat_sync
from wsync.semiring import make_semiring


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def matrix_set(semiring, mats, alphabet=None):
    obj = {'semiring': semiring, 'matrices': mats}
    if alphabet:
        obj['alphabet'] = alphabet
    return obj


@pytest.fixture
def cerny4(tmp_path, capsys):
    path = tmp_path / 'cerny4.json'
    assert run(capsys, 'generate', 'cerny', 4, '-o', path)[0] == 0
    return path


def test_generate_cerny4_matrices(cerny4):
    obj = json.loads(cerny4.read_text())
    aut = WeightedAutomaton.from_json(obj)
    assert aut.transitions[0].rows == ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0))
    assert aut.transitions[1].rows == ((0, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert obj['alphabet'] == ['0', '1']


def test_check_cerny4(cerny4, capsys, tmp_path):
    out_path = tmp_path / 'verdict.json'
    code, out = run(capsys, 'check', cerny4, '--json-out', out_path)
    assert code == 0
    assert out['outcome'] == 'Yes' and ''.join(out['witness']) == '100010001'
    assert json.loads(out_path.read_text()) == out


def test_check_cerny3_length_4(tmp_path, capsys):
    path = tmp_path / 'c3.json'
    run(capsys, 'generate', 'cerny', 3, '-o', path)
    code, out = run(capsys, 'check', path)
    assert code == 0 and len(out['witness']) == 4


def test_generate_rejects_one_state(capsys):
    assert main(['generate', 'cerny', '1']) == 3


def test_generate_other_semiring(capsys):
    code, out = run(capsys, 'generate', 'cerny', 3, 'fin_lang', '--alphabet', 'ab')
    assert code == 0 and out['semiring']['name'] == 'fin_lang'
    assert WeightedAutomaton.from_json(out).semiring.name == 'fin_lang'


def test_check_identity_only_is_no(tmp_path, capsys):
    path = write(tmp_path / 'id.json', matrix_set('boolean', [[[1, 0], [0, 1]]]))
    code, out = run(capsys, 'check', path)
    assert code == 1 and out['outcome'] == 'No' and out['fixpoint_t'] == 0


def test_check_nat_doubling_is_unknown(tmp_path, capsys):
    path = write(tmp_path / 'd.json', matrix_set('nat', [[['2', '0'], ['0', '2']]]))
    code, out = run(capsys, 'check', path, '--max-len', 10)
    assert code == 2 and out['outcome'] == 'Unknown' and out['bound'] == 10


def test_check_infinite_semiring_gets_default_budget(tmp_path, capsys):
    path = write(tmp_path / 'd.json', matrix_set('nat', [[[2, 0], [0, 2]]]))
    code, out = run(capsys, 'check', path)
    assert code == 2 and out['bound'] == 12


def test_targets(tmp_path, capsys):
    path = write(tmp_path / 'nil.json', matrix_set('boolean', [[[0, 1], [0, 0]]]))
    code, out = run(capsys, 'check', path, '--target', 'mortal')
    assert code == 0 and len(out['witness']) == 2
    code, _ = run(capsys, 'check', path, '--target', 'zero-corner')
    assert code == 0


def test_sigma_route(tmp_path, capsys):
    path = write(tmp_path / 'n.json', matrix_set('nat', [[[2, 0], [3, 0]]]))
    code, out = run(capsys, 'check', path, '--target', 'locsync', '--route', 'sigma')
    assert code == 0 and len(out['witness']) == 1
    assert main(['check', path, '--route', 'sigma']) == 4
    ints = write(tmp_path / 'z.json', matrix_set('int', [[[1, -1], [0, 1]]]))
    assert main(['check', ints, '--target', 'locsync', '--route', 'sigma']) == 4


def test_classical_route(cerny4, tmp_path, capsys):
    code, out = run(capsys, 'check', cerny4, '--route', 'classical')
    assert code == 0 and len(out['witness']) <= 27
    nondet = write(tmp_path / 'nd.json', matrix_set('boolean', [[[1, 1], [0, 1]]]))
    assert main(['check', nondet, '--route', 'classical']) == 4
    assert main(['check', str(cerny4), '--route', 'classical', '--target', 'mortal']) == 4


def test_oracle(cerny4, tmp_path, capsys):
    code, out = run(capsys, 'oracle', cerny4, '--max-len', 10)
    assert code == 0 and ''.join(out['witness']) == '100010001'
    path = write(tmp_path / 'id.json', matrix_set('boolean', [[[1, 0], [0, 1]]]))
    code, out = run(capsys, 'oracle', path, '--max-len', 5)
    assert code == 2 and out['outcome'] == 'Unknown'


def test_reduce_fpcp_nat_then_check(tmp_path, capsys):
    inst = write(tmp_path / 'fpcp.json', {'tiles': [['01', '0'], ['1', '11']]})
    out_path = tmp_path / 'nat.json'
    assert main(['reduce', 'fpcp-nat', inst, '-o', str(out_path)]) == 0
    obj = json.loads(out_path.read_text())
    assert obj['alphabet'] == ['A1', 'A2', 'B', 'C'] and obj['n'] == 6
    expected = fpcp_to_nat_sync(FpcpInstance((('01', '0'), ('1', '11'))))
    nat = make_semiring('nat')
    assert [Matrix.from_json(m, semiring=nat) for m in obj['matrices']] == expected
    code, out = run(capsys, 'check', out_path, '--max-len', 4)
    assert code == 0 and out['witness'] == ['B', 'A2', 'C']


def test_reduce_fpcp_nat_shifted_digits(tmp_path, capsys):
    inst = write(tmp_path / 'fpcp.json', {'tiles': [['0', '0']]})
    out_path = tmp_path / 'nat.json'
    assert main(['reduce', 'fpcp-nat', inst, '--digits', '12', '-o', str(out_path)]) == 0
    code, out = run(capsys, 'check', out_path, '--max-len', 4)
    assert code == 0 and out['witness'] == ['B', 'C']


def test_reduce_free_and_convention(tmp_path, capsys):
    first = write(tmp_path / 'f.json', {'tiles': [['0', '00'], ['00', '0']]})
    assert main(['reduce', 'fpcp-free', first]) == 4
    capsys.readouterr()
    last = write(tmp_path / 'l.json', {'tiles': [['0', '00'], ['00', '0']],
                                       'convention': 'last_tile_fixed'})
    out_path = tmp_path / 'free.json'
    assert main(['reduce', 'fpcp-free', last, '-o', str(out_path)]) == 0
    code, out = run(capsys, 'check', out_path, '--max-len', 3)
    assert code == 0 and len(out['witness']) == 2


def test_reduce_mortality(tmp_path, capsys):
    nil = write(tmp_path / 'nil.json', matrix_set('boolean', [[[0, 1], [0, 0]]]))
    out_path = tmp_path / 'm.json'
    assert main(['reduce', 'mortality', nil, '-o', str(out_path)]) == 0
    obj = json.loads(out_path.read_text())
    assert obj['alphabet'] == ['A0', 'A1'] and obj['n'] == 3
    code, out = run(capsys, 'check', out_path)
    assert code == 0 and out['witness'] == ['A0', 'A1', 'A1']
    swap = write(tmp_path / 'swap.json', matrix_set('boolean', [[[0, 1], [1, 0]]]))
    main(['reduce', 'mortality', swap, '-o', str(out_path)])
    assert run(capsys, 'check', out_path)[0] == 1


def test_emitted_files_load_back(tmp_path, capsys):
    # every document the tool writes is accepted again as input
    src = write(tmp_path / 'src.json',
                matrix_set({'name': 'int_mod', 'k': 4}, [[[0, 2], [2, 0]]]))
    fpcp = write(tmp_path / 'fpcp.json', {'tiles': [['01', '0'], ['1', '11']]})
    free = write(tmp_path / 'free.json', {'tiles': [['0', '0']], 'convention': 'last_tile_fixed'})
    jobs = [['generate', 'cerny', '3', 'int_mod', '--k', '5'],
            ['generate', 'cerny', '3', 'fin_int_set'],
            ['reduce', 'mortality', src],
            ['reduce', 'fpcp-nat', fpcp],
            ['reduce', 'fpcp-free', free]]
    for i, job in enumerate(jobs):
        dst = tmp_path / f'out{i}.json'
        assert main(job + ['-o', str(dst)]) == 0
        assert main(['check', str(dst), '--max-len', '4']) in (0, 1, 2)
        out = capsys.readouterr().out
        assert json.loads(out)['outcome'] in ('Yes', 'No', 'Unknown')


def test_verify_claims(tmp_path, capsys):
    inst = write(tmp_path / 'fpcp.json', {'tiles': [['01', '0'], ['1', '11']]})
    code, out = run(capsys, 'verify-claims', inst, '--samples', 20)
    assert code == 0 and out['ok'] and out['checked'] == {'A': 20, 'B': 20, 'C': 20}


def test_law_check(capsys):
    code, out = run(capsys, 'law-check', 'int_mod', '--k', 6, '--trials', 200)
    assert code == 0 and out['ok']
    code, out = run(capsys, 'law-check', 'fin_lang', '--alphabet', 'ab', '--trials', 100)
    assert code == 0


def test_parse_errors(tmp_path, capsys):
    assert main(['check', str(tmp_path / 'missing.json')]) == 3
    bad = tmp_path / 'bad.json'
    bad.write_text('{not json')
    assert main(['check', str(bad)]) == 3
    assert main(['check', write(tmp_path / 'e.json', matrix_set('nat', []))]) == 3
    ragged = matrix_set('nat', [[[1, 0], [0, 1]], [[1]]])
    assert main(['check', write(tmp_path / 'r.json', ragged)]) == 3
    wrong = matrix_set('boolean', [[[1, 0], [0, 1]]], alphabet=['a', 'b'])
    assert main(['check', write(tmp_path / 'w.json', wrong)]) == 3
    assert main(['check', write(tmp_path / 's.json', matrix_set('tropical', [[[1]]]))]) == 3
    assert main(['reduce', 'fpcp-nat', write(tmp_path / 't.json', {'tiles': [['2', '1']]})]) == 3
