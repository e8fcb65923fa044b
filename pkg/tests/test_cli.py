# coding: utf-8
import json
import logging

import pytest
from click.testing import CliRunner

from sctype.cli import cli
from sctype.io import parse
from sctype.utils import set_logger

TRIANGLE_PAIR = '{"name": "triangle-pair", "X": [[0,1,2]], "A": [[0,1],[1,2],[0,2]]}'


@pytest.fixture(autouse=True)
def _restore_logging():
    yield
    set_logger(log_level=logging.INFO)


def _invoke(*args, input=None):
    return CliRunner().invoke(cli, list(args), input=input)


def _json(output: str):
    """The pretty-printed JSON document in the output, skipping log lines around it."""
    start = min(i for i in (output.find('{\n'), output.find('[\n')) if i >= 0)
    return json.JSONDecoder().raw_decode(output[start:])[0]


def _write(tmp_path, name, text):
    fp = tmp_path / name
    fp.write_text(text, encoding='utf-8')
    return str(fp)


def test_check_exit_codes(tmp_path):
    result = _invoke('check', 'gallery:torus')
    assert result.exit_code == 0, result.output
    assert 'verdict: ComputableType' in result.output

    assert _invoke('check', 'gallery:bing_house').exit_code == 0

    result = _invoke('check', 'gallery:dunce_hat')
    assert result.exit_code == 1
    assert 'failing vertex v:' in result.output

    fp = _write(tmp_path, 'full.json', '{"X": [[0, 1]], "A": [[0, 1]]}')
    result = _invoke('check', fp)
    assert result.exit_code == 2
    assert 'EmptyInteriorViolated' in result.output

    result = _invoke('check', 'gallery:simplex(3)')
    assert result.exit_code == 2


def test_check_input_errors(tmp_path):
    fp = _write(tmp_path, 'bad.json', '{"X": [[0, 1]')
    result = _invoke('check', '--json', fp)
    assert result.exit_code == 3
    report = _json(result.output)
    assert report['applicability'] == 'InputError'

    not_utf8 = tmp_path / 'latin1.json'
    not_utf8.write_bytes(b'{"X": [[0, 1]], "name": "\xff\xfe"}')
    nested = _write(tmp_path, 'nested.json', '{"X": ' + '[' * 200000)
    for command in ('check', 'check-cone', 'union-check'):
        for fp in (str(not_utf8), nested):
            result = _invoke(command, fp, fp) if command == 'union-check' else _invoke(command, fp)
            assert result.exit_code == 3, (command, fp, result.output)
            assert not isinstance(result.exception, (UnicodeDecodeError, RecursionError))
    assert report['exit_code'] == 3

    assert _invoke('check', str(tmp_path / 'missing.json')).exit_code == 3
    assert _invoke('check', 'gallery:klein_bottle').exit_code == 3


def test_check_json_parallel():
    result = _invoke('check', '--json', '--parallel', '-w', '2', 'gallery:n_squares(3)')
    assert result.exit_code == 0, result.output
    report = _json(result.output)
    assert report['overall'] == 'ComputableType'
    assert report['input_digest'].startswith('sha256:')
    assert len(report['locals']) == 9


def test_check_stdin():
    result = _invoke('check', '-', input=TRIANGLE_PAIR)
    assert result.exit_code == 0, result.output
    assert 'pair: triangle-pair' in result.output


@pytest.mark.parametrize(
    'doc, code',
    [
        ('{"L": [[0, 1], [1, 2], [0, 2]]}', 0),
        ('{"L": [[0], [1], [2], [3], [4]]}', 0),
        ('{"L": [[0]]}', 1),
        ('{"L": [[0]], "tip_in_m": true}', 0),
        ('{"L": [[0, 1], [1, 2]], "N": [0, 2]}', 0),
        ('{"L": [[0, 1], [1, 2]], "N": [0]}', 1),
        ('{"L": [[0, 1, 2]]}', 3),
        ('{"L": [[0, 1]], "N": [5]}', 3),
    ],
)
def test_check_cone(doc, code):
    result = _invoke('check-cone', '-', input=doc)
    assert result.exit_code == code, result.output


def test_link():
    result = _invoke('link', 'gallery:dunce_hat', '-V', 'v')
    assert result.exit_code == 0, result.output
    assert 'passes: False' in result.output
    assert 'N: {}' in result.output

    result = _invoke('link', 'gallery:segment_bare', '-V', '0', '--json')
    local = _json(result.output)
    assert local['passes'] is False
    assert local['certificate']['reason'] == 'isolated-link'
    assert 'FreeVertexOutsideA' not in local['notes']

    assert _invoke('link', 'gallery:dunce_hat', '-V', 'nowhere').exit_code == 3


def test_boundary():
    result = _invoke('boundary', 'gallery:ball_pair(2)')
    assert result.exit_code == 0, result.output
    B = parse(result.output.strip().splitlines()[-1])
    assert B.X.f_vector == [3, 3]

    result = _invoke('boundary', '--kind', 'one', 'gallery:dunce_hat')
    assert result.exit_code == 0, result.output
    assert len(parse(result.output.strip().splitlines()[-1]).X) == 0

    result = _invoke('boundary', '-k', 'plus', 'gallery:dunce_hat')
    B = parse(result.output.strip().splitlines()[-1])
    assert B.X.f_vector == [13, 39]

    assert _invoke('boundary', '-k', 'two', 'gallery:dunce_hat').exit_code == 2


def test_subdivide(tmp_path):
    out = tmp_path / 'sd.json'
    result = _invoke('subdivide', 'gallery:simplex(2)', '-o', str(out))
    assert result.exit_code == 0, result.output
    P = parse(out.read_text(encoding='utf-8'))
    assert P.X.f_vector == [7, 12, 6]

    result = _invoke('subdivide', '-i', '-1', 'gallery:simplex(1)')
    assert result.exit_code == 3


def test_union_check(tmp_path):
    whole = _write(
        tmp_path,
        'whole.json',
        '{"X": [[0,1,2],[1,2,3]], "A": [[0,1],[0,2],[1,2],[1,3],[2,3]]}',
    )
    left = _write(tmp_path, 'left.json', '{"X": [[0,1,2]], "A": [[0,1],[0,2],[1,2]]}')
    right = _write(tmp_path, 'right.json', '{"X": [[1,2,3]], "A": [[1,2],[1,3],[2,3]]}')
    result = _invoke('union-check', whole, left, right)
    assert result.exit_code == 0, result.output
    assert 'flag: BallSpherePair at 0' in result.output

    result = _invoke('union-check', whole, left)
    assert result.exit_code == 3

    result = _invoke('union-check', whole)
    assert result.exit_code == 3

    result = _invoke('union-check', '--plus-boundary', '--json', 'gallery:dunce_hat')
    assert result.exit_code == 0, result.output
    assert len(_json(result.output)['pieces']) == 27

    result = _invoke('union-check', 'gallery:segment_bare', 'gallery:segment_bare')
    assert result.exit_code == 2
    assert 'Inconclusive' in result.output


def test_gallery():
    result = _invoke('gallery')
    assert result.exit_code == 0
    assert 'dunce_hat' in result.output
    assert 'star(n)' in result.output

    result = _invoke('gallery', 'star(3)', '--emit')
    P = parse(result.output)
    assert P.X.f_vector == [4, 3]
    assert sorted(P.A.vertices) == [1, 2, 3]

    result = _invoke('gallery', 'torus')
    assert 'expected euler: 0' in result.output

    assert _invoke('gallery', 'klein_bottle').exit_code == 3


def test_self_test():
    result = _invoke('self-test')
    assert result.exit_code == 0, result.output
    assert 'FAILED' not in result.output
