# coding: utf-8
# Copyright (C) 2026, sctype developers.
# Licensed to the Apache Software Foundation (ASF) under one
# or more contributor license agreements.  See the NOTICE file
# distributed with this work for additional information
# regarding copyright ownership.  The ASF licenses this file
# to you under the Apache License, Version 2.0 (the
# "License"); you may not use this file except in compliance
# with the License.  You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied.  See the License for the
# specific language governing permissions and limitations
# under the License.

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import click

from .__version__ import __version__
from .complex import Complex, Pair, closure
from .consts import GALLERY_SCHEME, REPORT_SCHEMA_VERSION, STDIN_SOURCE
from .decision import Overall, Verdict
from .gallery import from_uri
from .link_graph import PositiveCertificate
from .utils import SctypeError, VertexId, sha256_digest
from .utils.repr import NestedObject

logger = logging.getLogger(__name__)

__all__ = [
    'DocumentError',
    'DocumentSyntaxError',
    'parse',
    'serialize',
    'complex_document',
    'parse_cone_document',
    'read_source',
    'load_pair',
    'Report',
]

PAIR_KEYS = ('name', 'vertices', 'X', 'A')
CONE_KEYS = ('name', 'L', 'N', 'tip_in_m')


class DocumentError(SctypeError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, msg: str, lineno: int = 0, colno: int = 0):
        super().__init__('%s (line %d, column %d)' % (msg, lineno, colno))
        self.lineno = lineno
        self.colno = colno


def _reject_float(text: str):
    raise DocumentError('only integers are allowed, got the number %s' % text)


def _reject_constant(text: str):
    raise DocumentError('%s is not allowed in documents' % text)


def _load_json(text: str, keys: Sequence[str]) -> Dict[str, Any]:
    try:
        doc = json.loads(text, parse_float=_reject_float, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from e
    except RecursionError as e:
        raise DocumentError('the document is nested too deeply') from e
    if not isinstance(doc, dict):
        raise DocumentError('the document must be a JSON object')
    unknown = sorted(set(doc) - set(keys))
    if unknown:
        raise DocumentError('unknown keys %s, expected some of %s' % (unknown, list(keys)))
    return doc


def _strict_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DocumentError('%s: expected a non-negative integer, got %r' % (where, value))
    return value


def _vertex_table(doc: Dict[str, Any]) -> Dict[str, VertexId]:
    names = doc.get('vertices')
    if names is None:
        return {}
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise DocumentError('"vertices" must be a list of names')
    if len(set(names)) != len(names):
        raise DocumentError('"vertices" contains a repeated name')
    return {name: i for i, name in enumerate(names)}


def _simplex_list(doc: Dict[str, Any], key: str, table: Mapping[str, VertexId]) -> List[List[VertexId]]:
    items = doc.get(key, [])
    if not isinstance(items, list):
        raise DocumentError('"%s" must be a list of simplices' % key)
    out = []
    for i, item in enumerate(items):
        where = '%s[%d]' % (key, i)
        if not isinstance(item, list):
            raise DocumentError('%s: a simplex is a list of vertices, got %r' % (where, item))
        simplex = []
        for v in item:
            if isinstance(v, str):
                if v not in table:
                    raise DocumentError('%s: unknown vertex name %r' % (where, v))
                simplex.append(table[v])
            else:
                simplex.append(_strict_int(v, where))
        out.append(simplex)
    return out


def parse(text: str) -> Pair:
    """Parse a pair document.

    Example:
        >>> parse('{"name": "triangle-pair", "X": [[0,1,2]], "A": [[0,1],[1,2],[0,2]]}')

    Raises:
        DocumentSyntaxError: not valid JSON; carries the line and column
        DocumentError: schema violation
        ComplexError: malformed simplex, or A is not a subcomplex of X
    """
    doc = _load_json(text, PAIR_KEYS)
    if 'X' not in doc:
        raise DocumentError('missing the required key "X"')
    name = doc.get('name')
    if name is not None and not isinstance(name, str):
        raise DocumentError('"name" must be a string')
    table = _vertex_table(doc)
    X = closure(_simplex_list(doc, 'X', table))
    A = closure(_simplex_list(doc, 'A', table))
    labels = {i: label for label, i in table.items()}
    return Pair(X, A, name=name, labels=labels)


def _maximal_lists(C: Complex) -> List[List[VertexId]]:
    return [list(s) for s in C.sorted_maximal]


def serialize(P: Pair) -> str:
    """Canonical document of a pair: maximal generators in canonical order, sorted keys."""
    doc: Dict[str, Any] = {'X': _maximal_lists(P.X), 'A': _maximal_lists(P.A)}
    if P.name is not None:
        doc['name'] = P.name
    if P.labels:
        doc['vertices'] = _vertex_names(P)
    return json.dumps(doc, sort_keys=True, ensure_ascii=False) + '\n'


def _vertex_names(P: Pair) -> List[str]:
    """The positional vertex table; unlabelled ids get a fill name no label uses."""
    top = max(max(P.labels), max(P.X.vertices, default=0))
    used = set(P.labels.values())
    names = []
    for i in range(top + 1):
        name = P.labels.get(i)
        if name is None:
            name = str(i)
            while name in used:
                name = '_' + name
            used.add(name)
        names.append(name)
    return names


def complex_document(C: Complex, name: Optional[str] = None, labels=None) -> str:
    """A complex written as a pair document with A empty."""
    return serialize(Pair(C, name=name, labels=labels))


def parse_cone_document(text: str) -> Tuple[Complex, List[VertexId], Optional[bool]]:
    """Parse `{"L": [[...], ...], "N": [...], "tip_in_m": true}` for the cone-pair mode."""
    doc = _load_json(text, CONE_KEYS)
    if 'L' not in doc:
        raise DocumentError('missing the required key "L"')
    L = closure(_simplex_list(doc, 'L', {}))
    N = doc.get('N', [])
    if not isinstance(N, list):
        raise DocumentError('"N" must be a list of vertices')
    N = [_strict_int(n, 'N') for n in N]
    tip = doc.get('tip_in_m')
    if tip is not None and not isinstance(tip, bool):
        raise DocumentError('"tip_in_m" must be true or false')
    return L, N, tip


def read_source(source: str) -> str:
    """Text of a file path, or of stdin for '-'."""
    try:
        if source == STDIN_SOURCE:
            return click.get_text_stream('stdin').read()
        return Path(source).read_text(encoding='utf-8')
    except OSError as e:
        raise DocumentError('cannot read %s: %s' % (source, e)) from e
    except UnicodeDecodeError as e:
        raise DocumentError('%s is not UTF-8 text: %s' % (source, e)) from e


def load_pair(source: str) -> Tuple[Pair, str]:
    """Load a pair from `gallery:NAME[(args)]`, '-' or a file path.

    Returns:
        the pair and the digest of its document (the canonical document for
        gallery items)
    """
    if source.startswith(GALLERY_SCHEME):
        P = from_uri(source).pair
        return P, sha256_digest(serialize(P))
    text = read_source(source)
    P = parse(text)
    if P.name is None:
        P.name = Path(source).stem if source != STDIN_SOURCE else 'stdin'
    return P, sha256_digest(text)


def _fmt(labels: Mapping[VertexId, str], nodes) -> str:
    return '{%s}' % ', '.join(labels.get(n, str(n)) for n in sorted(nodes))


class Report(NestedObject):
    """A verdict with the tool version and the digest of the input it was computed from."""

    _children_names = ['verdict']

    def __init__(
        self,
        verdict: Verdict,
        input_digest: Optional[str] = None,
        tool_version: str = __version__,
        schema_version: str = REPORT_SCHEMA_VERSION,
        labels: Optional[Mapping[VertexId, str]] = None,
    ):
        self.verdict = verdict
        self.input_digest = input_digest
        self.tool_version = tool_version
        self.schema_version = schema_version
        self.labels = dict(labels or {})

    def __eq__(self, other):
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    @property
    def exit_code(self) -> int:
        return int(self.verdict.exit_code)

    def to_dict(self) -> Dict[str, Any]:
        out = {
            'schema_version': self.schema_version,
            'tool_version': self.tool_version,
            'input_digest': self.input_digest,
            'exit_code': self.exit_code,
            'labels': {str(v): name for v, name in sorted(self.labels.items())},
        }
        out.update(self.verdict.to_dict())
        return out

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> 'Report':
        return cls(
            Verdict.from_dict(d),
            input_digest=d['input_digest'],
            tool_version=d['tool_version'],
            schema_version=d['schema_version'],
            labels={int(v): name for v, name in d.get('labels', {}).items()},
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        v, labels = self.verdict, self.labels
        lines = [
            'pair: %s' % (v.name or '-'),
            'verdict: %s (%s)' % (v.overall, v.applicability),
        ]
        if v.reason:
            lines.append('reason: %s' % v.reason)
        if v.locals:
            lines.append('vertices: %d decided, %d failing' % (len(v.locals), len(v.failing)))
        if v.pieces:
            for i, piece in enumerate(v.pieces):
                lines.append('piece %d (%s): %s' % (i, piece.name or '-', piece.overall))
        for record in v.assumptions:
            where = record.get('vertex', record.get('piece', '-'))
            lines.append('flag: %s at %s' % (record['flag'], where))
        for lv in v.failing:
            cert = lv.certificate
            lines.append('failing vertex %s:' % lv.label)
            N = lv.marked_link.terminals
            if cert.reason == 'isolated-link':
                lines.append(
                    '  link is the single vertex %s, outside N and with the tip outside M'
                    % _fmt(labels, cert.component)
                )
            else:
                u, w = cert.edge
                lines.append(
                    '  link edge e = (%s, %s) is not on a cycle or an N-to-N path'
                    % (labels.get(u, str(u)), labels.get(w, str(w)))
                )
            lines.append('  N = %s' % _fmt(labels, N))
            lines.append('  C = %s' % _fmt(labels, cert.component))
        if v.overall == Overall.COMPUTABLE and v.locals:
            cycles_only = sum(
                1
                for lv in v.locals
                if isinstance(lv.certificate, PositiveCertificate) and lv.certificate.only_cycles()
            )
            lines.append(
                'positive certificates: %d of %d use cycles only' % (cycles_only, len(v.locals))
            )
        return '\n'.join(lines)
