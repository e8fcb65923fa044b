# coding: utf-8
import json

import pytest

from sctype.complex import Pair, SubcomplexError, closure, simplex_boundary
from sctype.decision import computable_type, cone_pair_mode
from sctype.gallery import generate
from sctype.io import (
    DocumentError,
    DocumentSyntaxError,
    Report,
    load_pair,
    parse,
    parse_cone_document,
    serialize,
)
from sctype.utils import sha256_digest

TRIANGLE_PAIR = '{"name": "triangle-pair", "X": [[0,1,2]], "A": [[0,1],[1,2],[0,2]]}'


def test_parse():
    P = parse(TRIANGLE_PAIR)
    assert P.name == 'triangle-pair'
    assert P.X == closure([(0, 1, 2)])
    assert P.A == simplex_boundary((0, 1, 2))

    P = parse('{"X": [[0]]}')
    assert P.X.f_vector == [1] and P.A.is_empty()


def test_parse_vertex_names():
    P = parse('{"vertices": ["a", "b", "c"], "X": [["a", "b", "c"]], "A": [["a", 1]]}')
    assert P.A == closure([(0, 1)])
    assert P.vertex_by_label('c') == 2
    assert P.label(1) == 'b'


@pytest.mark.parametrize(
    'text',
    [
        '[]',
        '{"A": []}',
        '{"X": [[0, 1.5]]}',
        '{"X": [[0, NaN]]}',
        '{"X": [[0, -1]]}',
        '{"X": [[true, 1]]}',
        '{"X": [[0, 1]], "extra": 1}',
        '{"X": [[0, "z"]]}',
        '{"X": [0, 1]}',
        '{"X": [[0]], "name": 5}',
        '{"X": [[0]], "vertices": ["a", "a"]}',
    ],
)
def test_parse_rejects(text):
    with pytest.raises(DocumentError):
        parse(text)


def test_parse_rejects_deep_nesting():
    with pytest.raises(DocumentError, match='nested too deeply'):
        parse('{"X": ' + '[' * 200000)


def test_parse_rejects_non_subcomplex():
    with pytest.raises(SubcomplexError):
        parse('{"X": [[0, 1]], "A": [[1, 2]]}')


def test_syntax_error_position():
    with pytest.raises(DocumentSyntaxError) as excinfo:
        parse('{"X": [[0,1]]\n  "A": []}')
    assert (excinfo.value.lineno, excinfo.value.colno) == (2, 3)
    assert 'line 2, column 3' in str(excinfo.value)


@pytest.mark.parametrize('name', ['dunce_hat', 'mobius_pair', 'cylinder_theta_pair', 'graph'])
def test_serialize_round_trip(name):
    P = generate(name).pair
    text = serialize(P)
    Q = parse(text)
    assert Q == P
    assert Q.name == P.name
    assert all(Q.label(v) == P.label(v) for v in P.X.vertices)
    assert serialize(Q) == text


def test_serialize_partial_labels():
    # vertex 0 is named "2" while vertex 2 has no name
    P = Pair(closure([(0, 1, 2)]), labels={0: '2'})
    doc = json.loads(serialize(P))
    assert doc['vertices'] == ['2', '1', '_2']
    Q = parse(serialize(P))
    assert Q == P
    assert Q.label(0) == '2'
    assert Q.vertex_by_label('2') == 0

    P = Pair(closure([(0, 1)]), labels={0: '1', 1: '_1'})
    assert json.loads(serialize(P))['vertices'] == ['1', '_1']


def test_serialize_is_canonical():
    a = parse('{"X": [[2,1,0], [3, 0]], "A": [[0]]}')
    b = parse('{"A": [[0]], "X": [[0, 3], [0, 1, 2], [1]]}')
    assert serialize(a) == serialize(b)
    assert json.loads(serialize(a)) == {'X': [[0, 3], [0, 1, 2]], 'A': [[0]]}


def test_parse_cone_document():
    L, N, tip = parse_cone_document('{"L": [[0, 1], [2]], "N": [0]}')
    assert L == closure([(0, 1), (2,)])
    assert N == [0] and tip is None
    _, _, tip = parse_cone_document('{"L": [[0]], "tip_in_m": true}')
    assert tip is True
    with pytest.raises(DocumentError):
        parse_cone_document('{"L": [[0]], "tip_in_m": 1}')
    with pytest.raises(DocumentError):
        parse_cone_document('{"N": [0]}')


def test_load_pair(tmp_path):
    fp = tmp_path / 'tri.json'
    fp.write_text('{"X": [[0,1,2]], "A": [[0,1],[1,2],[0,2]]}', encoding='utf-8')
    P, digest = load_pair(str(fp))
    assert P.name == 'tri'
    assert digest == sha256_digest(fp.read_text(encoding='utf-8'))

    P, digest = load_pair('gallery:star(3)')
    assert P.name == 'star(3)'
    assert digest == sha256_digest(serialize(P))

    with pytest.raises(DocumentError):
        load_pair(str(tmp_path / 'missing.json'))

    latin1 = tmp_path / 'latin1.json'
    latin1.write_bytes(b'{"X": [[0]], "name": "\xe9"}')
    with pytest.raises(DocumentError, match='not UTF-8'):
        load_pair(str(latin1))


def test_report_round_trip():
    P = generate('dunce_hat').pair
    report = Report(computable_type(P), input_digest=sha256_digest(serialize(P)), labels=P.labels)
    again = Report.from_json(report.to_json())
    assert again == report
    d = json.loads(report.to_json())
    assert d['exit_code'] == 1
    assert d['overall'] == 'NotComputableType'
    assert d['input_digest'].startswith('sha256:')
    assert again.labels == P.labels
    # N and C keep their names after the JSON round trip
    assert again.to_text() == report.to_text()
    assert 'failing vertex v:' in again.to_text()


def test_report_text():
    P = generate('dunce_hat').pair
    text = Report(computable_type(P), labels=P.labels).to_text()
    assert 'verdict: NotComputableType (Applicable)' in text
    assert 'failing vertex v:' in text
    assert '  N = {}' in text
    assert '  C = {' in text

    text = Report(cone_pair_mode(closure([(0,)]), [])).to_text()
    assert 'single vertex {0}' in text
    assert 'flag: IsolatedLinkException at tip' in text

    P = generate('torus').pair
    text = Report(computable_type(P)).to_text()
    assert 'positive certificates: 18 of 18 use cycles only' in text
