import json
import subprocess
import sys

from abelian_lattices import cli
from abelian_lattices.errors import InternalInvariantError


def run_cli(args, capsys):
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_plain(capsys):
    code, out, _ = run_cli(['enumerate', '--sig', '2,4'], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert lines[0] == '0: 1,0;0,1 order=8'
    assert lines[-1] == '7: 2,0;0,4 order=1'


def test_enumerate_json_roundtrip(capsys):
    code, out, _ = run_cli(['enumerate', '--sig', '2,2', '--json'], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload['signature'] == [2, 2]
    assert len(payload['nodes']) == 5
    # serialization is canonical: parse and re-dump reproduces the bytes
    assert json.dumps(payload, separators=(',', ':')) == out.strip()


def test_hasse_json(capsys):
    code, out, _ = run_cli(['hasse', '--sig', '2,2', '--format', 'json'], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload['signature'] == [2, 2]
    ids = {n['id'] for n in payload['nodes']}
    assert ids == set(range(5))
    assert len(payload['hasse_edges']) == 6
    for lo, hi in payload['hasse_edges']:
        assert lo in ids and hi in ids
    assert json.dumps(payload, separators=(',', ':')) == out.strip()


def test_hasse_dot(capsys):
    code, out, _ = run_cli(['hasse', '--sig', '2,2'], capsys)
    assert code == 0
    assert out.startswith('digraph lattice {')
    assert out.rstrip().endswith('}')
    assert out.count('->') == 6
    assert 'n0 [label="1,0;0,1\\norder 4"];' in out


def test_member_exit_codes(capsys):
    code, out, _ = run_cli(['member', '--sig', '2,4', '--matrix', '1,1;0,2'], capsys)
    assert code == 0 and out.strip() == 'true'
    code, out, _ = run_cli(['member', '--sig', '2,4', '--matrix', '1,1;0,4'], capsys)
    assert code == 1 and out.strip() == 'false'
    # divisibility check fails on the off-diagonal entry
    code, out, _ = run_cli(['member', '--sig', '2,2', '--matrix', '2,1;0,2'], capsys)
    assert code == 1 and out.strip() == 'false'


def test_leq_exit_codes(capsys):
    code, out, _ = run_cli(
        ['leq', '--sig', '2,4', '--left', '2,0;0,4', '--right', '1,0;0,1'], capsys)
    assert code == 0 and out.strip() == 'true'
    code, out, _ = run_cli(
        ['leq', '--sig', '2,4', '--left', '1,0;0,1', '--right', '2,0;0,4'], capsys)
    assert code == 1 and out.strip() == 'false'


def test_iso_verdicts(capsys):
    code, out, _ = run_cli(['iso', '--left', '6', '--right', '10'], capsys)
    assert code == 0
    assert out.splitlines()[0] == 'true'
    code, out, _ = run_cli(['iso', '--left', '4', '--right', '8'], capsys)
    assert code == 1
    assert out.splitlines()[0] == 'false'


def test_iso_with_oracle_cross_check(capsys):
    code, out, _ = run_cli(['iso', '--left', '6', '--right', '10', '--oracle'], capsys)
    assert code == 0
    assert 'oracle: true' in out


def test_invalid_input_exits_2(capsys):
    code, _, err = run_cli(['enumerate', '--sig', 'zap'], capsys)
    assert code == 2
    assert 'error:' in err
    code, _, err = run_cli(['member', '--sig', '2,4', '--matrix', '1,1'], capsys)
    assert code == 2
    code, _, err = run_cli(['enumerate', '--sig', '0'], capsys)
    assert code == 2


def test_internal_invariant_exits_3(capsys, monkeypatch):
    def boom(sig):
        raise InternalInvariantError('forced for the test')
    monkeypatch.setattr(cli, 'build_lattice', boom)
    code, _, err = run_cli(['hasse', '--sig', '2,2', '--format', 'json'], capsys)
    assert code == 3
    assert 'internal invariant' in err


def test_verify_report_shape(capsys):
    code, out, _ = run_cli(['verify', 'theorem-a', '--max-order', '8'], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload['theorem'] == 'theorem-a'
    assert payload['pass'] is True
    assert payload['counterexamples'] == []
    assert set(payload) == {
        'theorem', 'max_order', 'cases', 'counterexamples', 'oracle_checked', 'pass'}
    assert json.dumps(payload, separators=(',', ':')) == out.strip()


def test_verify_all_theorems_run(capsys):
    for name in ['theorem-b', 'theorem-1']:
        code, out, _ = run_cli(['verify', name, '--max-order', '8'], capsys)
        assert code == 0, name
        assert json.loads(out)['pass'] is True
    code, out, _ = run_cli(
        ['verify', 'theorem-2', '--max-order', '6', '--power', '2'], capsys)
    assert code == 0
    code, out, _ = run_cli(
        ['verify', 'theorem-3', '--max-order', '6', '--max-exp', '2'], capsys)
    assert code == 0


def test_explore_json(capsys):
    code, out, _ = run_cli(['explore', '--max-order', '8', '--max-exp', '3'], capsys)
    assert code == 0
    findings = json.loads(out)
    assert any(f['m'] == [3] and f['n'] == [2] for f in findings)


def test_oracle_subgroups_listing(capsys):
    code, out, _ = run_cli(['oracle-subgroups', '--sig', '2,2'], capsys)
    assert code == 0
    assert out.splitlines()[0].startswith('5 subgroups')


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, '-m', 'abelian_lattices', 'member',
         '--sig', '2,2', '--matrix', '1,1;0,2'],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == 'true'
