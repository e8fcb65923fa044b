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

import re
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
import yaml

from ..complex import Pair, boundary, euler_characteristic, link
from ..consts import GALLERY_SCHEME
from ..decision import Verdict, computable_type
from ..link_graph import bridges, make_graph, link_cycle_rank
from ..utils import SctypeError
from ..utils.repr import NestedObject
from .builders import BUILDERS, InvalidGalleryParams, collar_polygon, bing_house_squares

logger = logging.getLogger(__name__)

__all__ = [
    'UnknownGalleryItem',
    'InvalidGalleryParams',
    'NamedPair',
    'SelfCheckReport',
    'GALLERY',
    'generate',
    'parse_gallery_uri',
    'from_uri',
    'list_gallery',
    'self_test_uris',
    'self_check',
    'collar_polygon',
    'bing_house_squares',
]

GALLERY_FILE = Path(__file__).parent / 'gallery.yaml'


class UnknownGalleryItem(SctypeError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else ''


def _load_gallery(fp=GALLERY_FILE) -> Dict[str, Dict[str, Any]]:
    with open(fp, encoding='utf-8') as f:
        items = yaml.safe_load(f)
    missing = set(BUILDERS) ^ set(items)
    assert not missing, 'gallery.yaml and builders disagree on %s' % sorted(missing)
    return items


GALLERY = _load_gallery()


class NamedPair(NestedObject):
    _children_names = ['pair']

    def __init__(self, name: str, pair: Pair, provenance: str, expected: Dict[str, Any]):
        self.name = name
        self.pair = pair
        self.provenance = provenance
        self.expected = expected

    def extra_repr(self) -> str:
        return f'name={self.name!r}'


def generate(name: str, *args, **params) -> NamedPair:
    """Build a gallery item.

    Args:
        name: an item of `list_gallery()`, e.g. 'dunce_hat' or 'star'
        args, params: the item's parameters, positionally or by name

    Raises:
        UnknownGalleryItem: no such item
        InvalidGalleryParams: parameters out of range or not accepted
    """
    if name not in BUILDERS:
        raise UnknownGalleryItem(
            'unknown gallery item %r, expected one of: %s' % (name, ', '.join(GALLERY))
        )
    entry = GALLERY[name]
    if len(args) > len(entry['params']):
        raise InvalidGalleryParams(
            '%s takes at most %d parameters, got %d' % (name, len(entry['params']), len(args))
        )
    try:
        pair, facts = BUILDERS[name](*args, **params)
    except TypeError as e:
        raise InvalidGalleryParams('%s: %s' % (name, e)) from e
    expected = dict(entry.get('expected') or {})
    expected.update(facts)
    return NamedPair(pair.name, pair, entry['provenance'], expected)


_URI_PATTERN = re.compile(r'^(\w+)(?:\(([-\d\s,]*)\))?$')


def parse_gallery_uri(uri: str) -> Tuple[str, Tuple[int, ...]]:
    """`gallery:star(3)` -> ('star', (3,)); the scheme prefix is optional."""
    ref = uri[len(GALLERY_SCHEME):] if uri.startswith(GALLERY_SCHEME) else uri
    matched = _URI_PATTERN.match(ref.strip())
    if not matched:
        raise InvalidGalleryParams('malformed gallery reference %r' % uri)
    name, raw = matched.groups()
    args = tuple(int(a) for a in raw.split(',') if a.strip()) if raw else ()
    return name, args


def from_uri(uri: str) -> NamedPair:
    name, args = parse_gallery_uri(uri)
    return generate(name, *args)


def list_gallery() -> List[Dict[str, Any]]:
    return [
        {'name': name, 'params': list(entry['params']), 'provenance': entry['provenance']}
        for name, entry in GALLERY.items()
    ]


# parametric items are also checked over the ranges their facts cover
_SELF_TEST_RANGES = {
    'simplex': range(0, 4),
    'sphere': range(0, 4),
    'ball_pair': range(0, 3),
    'star': range(1, 7),
    'n_squares': range(2, 7),
}


def self_test_uris() -> List[str]:
    uris = []
    for name in GALLERY:
        uris.append(GALLERY_SCHEME + name)
        uris.extend('%s%s(%d)' % (GALLERY_SCHEME, name, n) for n in _SELF_TEST_RANGES.get(name, ()))
    return uris


class SelfCheckReport(NestedObject):
    def __init__(self, name: str, checks: List[Dict[str, Any]], verdict: Optional[Verdict] = None):
        self.name = name
        self.checks = checks
        self.verdict = verdict

    def extra_repr(self) -> str:
        return f'name={self.name!r}, ok={self.ok}, violations={self.violations}'

    @property
    def violations(self) -> List[Dict[str, Any]]:
        return [c for c in self.checks if not c['ok']]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'ok': self.ok, 'checks': self.checks}


def _link_graphs(P: Pair):
    for v in P.X.vertices:
        L = link(P.X, v)
        yield v, make_graph(L.vertices, (s for s in L.simplices if len(s) == 2))


def _rank_histogram(P: Pair) -> Tuple[Dict[int, int], Dict[int, List[str]], bool, bool]:
    ranks: Dict[int, int] = {}
    labels: Dict[int, List[str]] = {}
    bridgeless, connected = True, True
    for v, G in _link_graphs(P):
        rank = link_cycle_rank(G)
        ranks[rank] = ranks.get(rank, 0) + 1
        labels.setdefault(rank, []).append(P.label(v))
        bridgeless = bridgeless and not bridges(G)
        connected = connected and (len(G) == 0 or nx.is_connected(G))
    return ranks, {k: sorted(v) for k, v in labels.items()}, bridgeless, connected


def self_check(item: NamedPair) -> SelfCheckReport:
    """Verify the stored structural facts and the expected verdict of a gallery item.

    Every certificate of the verdict is also re-checked. Violations are
    listed in the report, never raised.
    """
    P, expected = item.pair, item.expected
    verdict = computable_type(P)
    boundary_one = boundary(P.X, 'one')
    actual: Dict[str, Any] = {
        'verdict': verdict.overall,
        'certificates': all(lv.check() for lv in verdict.locals),
        'euler': euler_characteristic(P.X),
        'f_vector': P.X.f_vector,
        'boundary_one_edges': sum(1 for s in boundary_one.simplices if len(s) == 2),
    }
    actual['failing'] = sorted(lv.label for lv in verdict.failing)
    actual['cycle_only_certificates'] = all(
        lv.certificate.only_cycles() for lv in verdict.locals if lv.passes
    )
    if {'link_cycle_ranks', 'labels_by_rank', 'bridgeless_links', 'connected_links'} & set(expected):
        ranks, by_rank, bridgeless, connected = _rank_histogram(P)
        actual['link_cycle_ranks'] = ranks
        actual['labels_by_rank'] = {k: by_rank.get(k, []) for k in expected.get('labels_by_rank', {})}
        actual['bridgeless_links'] = bridgeless
        actual['connected_links'] = connected

    checks = []
    for fact in sorted(set(expected) | {'certificates'}):
        want = expected.get(fact, True)
        if fact == 'failing':
            want = sorted(str(w) for w in want)
        got = actual.get(fact)
        checks.append({'fact': fact, 'expected': want, 'actual': got, 'ok': got == want})
    report = SelfCheckReport(item.name, checks, verdict)
    if report.ok:
        logger.info('self-check %s: %d facts hold', item.name, len(checks))
    else:
        logger.warning('self-check %s: violations %s', item.name, report.violations)
    return report
