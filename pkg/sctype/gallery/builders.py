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

"""Triangulations of the named example spaces."""

import logging
from itertools import product
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..complex import Pair, boundary, closure, simplex_boundary
from ..utils import SctypeError

logger = logging.getLogger(__name__)

Facts = Dict[str, object]


class InvalidGalleryParams(SctypeError):
    pass


def _require(ok: bool, msg: str):
    if not ok:
        raise InvalidGalleryParams(msg)


class _Labeller(object):
    """Hands out consecutive vertex ids for display names."""

    def __init__(self):
        self.ids: Dict[str, int] = {}

    def __call__(self, name: str) -> int:
        if name not in self.ids:
            self.ids[name] = len(self.ids)
        return self.ids[name]

    @property
    def labels(self) -> Dict[int, str]:
        return {i: name for name, i in self.ids.items()}


def _verdict_by_dimension(n: int, low: Dict[int, str]) -> str:
    return low.get(n, 'Inapplicable')


def build_simplex(n: int = 2) -> Tuple[Pair, Facts]:
    _require(n >= 0, 'simplex(n) needs n >= 0')
    X = closure([tuple(range(n + 1))])
    facts = {
        'euler': 1,
        'f_vector': [comb(n + 1, k + 1) for k in range(n + 1)],
        'verdict': _verdict_by_dimension(
            n, {0: 'ComputableType', 1: 'NotComputableType', 2: 'NotComputableType'}
        ),
    }
    return Pair(X, name='simplex(%d)' % n), facts


def build_sphere(n: int = 2) -> Tuple[Pair, Facts]:
    """∂Δⁿ⁺¹ with A empty."""
    _require(n >= 0, 'sphere(n) needs n >= 0')
    X = simplex_boundary(range(n + 2))
    facts = {
        'euler': 1 + (-1) ** n,
        'boundary_one_edges': 0,
        'verdict': 'ComputableType' if n <= 2 else 'Inapplicable',
    }
    return Pair(X, name='sphere(%d)' % n), facts


def build_ball_pair(n: int = 2) -> Tuple[Pair, Facts]:
    """(Δⁿ, ∂Δⁿ)."""
    _require(0 <= n <= 2, 'ball_pair(n) needs 0 <= n <= 2')
    top = tuple(range(n + 1))
    P = Pair(closure([top]), simplex_boundary(top), name='ball_pair(%d)' % n)
    return P, {'euler': 1, 'verdict': 'ComputableType'}


def build_star(n: int = 5) -> Tuple[Pair, Facts]:
    """Star with n branches; A = the leaves, or both endpoints when n = 1."""
    _require(n >= 1, 'star(n) needs n >= 1')
    X = closure((0, leaf) for leaf in range(1, n + 1))
    A = [(leaf,) for leaf in range(1, n + 1)]
    if n == 1:
        A.append((0,))
    labels = {0: 'center'}
    labels.update({leaf: 'leaf%d' % leaf for leaf in range(1, n + 1)})
    P = Pair(X, A, name='star(%d)' % n, labels=labels)
    return P, {'euler': 1, 'f_vector': [n + 1, n], 'verdict': 'ComputableType'}


def build_n_squares(n: int = 5) -> Tuple[Pair, Facts]:
    """n squares sharing the path p-t-q; A is the union of the opposite sides."""
    _require(n >= 2, 'n_squares(n) needs n >= 2')
    t, p, q = 0, 1, 2
    labels = {t: 't', p: 'p', q: 'q'}
    triangles, paths = [], []
    for k in range(n):
        x, y = 3 + 2 * k, 4 + 2 * k
        labels[x], labels[y] = 'x%d' % k, 'y%d' % k
        triangles += [(t, p, x), (t, x, y), (t, y, q)]
        paths += [(p, x), (x, y), (y, q)]
    P = Pair(closure(triangles), paths, name='n_squares(%d)' % n, labels=labels)
    facts = {
        'euler': 1,
        'f_vector': [3 + 2 * n, 2 + 5 * n, 3 * n],
        'boundary_one_edges': 3 * n,
        'verdict': 'ComputableType',
    }
    return P, facts


DEFAULT_GRAPH_EDGES = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 5)]


def build_graph(
    V: Optional[Iterable[int]] = None, E: Optional[Iterable[Sequence[int]]] = None
) -> Tuple[Pair, Facts]:
    """A finite graph with A its set of degree-one vertices."""
    if E is None:
        E = DEFAULT_GRAPH_EDGES
        if V is None:
            V = range(6)
    E = [tuple(e) for e in E]
    V = set(V) if V is not None else set()
    for e in E:
        _require(len(e) == 2 and e[0] != e[1], 'graph edges join two distinct vertices: %r' % (e,))
        V.update(e)
    X = closure([(v,) for v in V] + E)
    degree = {v: len(X.cofaces(v)) - 1 for v in X.vertices}
    A = [(v,) for v, d in degree.items() if d == 1]
    P = Pair(X, A, name='graph')
    return P, {'verdict': 'ComputableType'}


def build_segment_bare() -> Tuple[Pair, Facts]:
    return Pair(closure([(0, 1)]), name='segment_bare'), {}


def collar_polygon(boundary_labels: Sequence[str], name: str) -> Tuple[Pair, _Labeller]:
    """Triangulate a polygon whose boundary vertices carry the given labels.

    Equal labels are identified, so equal consecutive label pairs glue the
    corresponding boundary edges. Between the boundary b_0..b_{m-1} and an
    inner ring r_0..r_{m-1} sit the triangles {b_i, b_i+1, r_i} and
    {b_i+1, r_i, r_i+1}; the ring is coned off from a centre z. Inner
    vertices are never identified, so the identifications only glue boundary
    edges with equal labels.
    """
    m = len(boundary_labels)
    _require(m >= 3, 'a polygon needs at least 3 boundary vertices')
    for i in range(m):
        _require(
            boundary_labels[i] != boundary_labels[(i + 1) % m],
            'consecutive boundary labels must differ at position %d' % i,
        )
    vid = _Labeller()
    b = [vid(label) for label in boundary_labels]
    r = [vid('r%d' % i) for i in range(m)]
    z = vid('z')
    triangles = []
    for i in range(m):
        j = (i + 1) % m
        triangles += [(b[i], b[j], r[i]), (b[j], r[i], r[j]), (z, r[i], r[j])]
    return Pair(closure(triangles), name=name, labels=vid.labels), vid


# each side of the model triangle is cut in three: v -> a1 -> a2 -> v
DUNCE_HAT_BOUNDARY = ['v', 'a1', 'a2', 'v', 'a1', 'a2', 'v', 'a2', 'a1']
TORUS_BOUNDARY = ['v', 'a1', 'a2', 'v', 'b1', 'b2', 'v', 'a2', 'a1', 'v', 'b2', 'b1']
MOBIUS_BOUNDARY = ['q', 'f11', 'f12', 'p', 'a1', 'a2', 'q', 'f21', 'f22', 'p', 'a1', 'a2']


def build_dunce_hat() -> Tuple[Pair, Facts]:
    P, _ = collar_polygon(DUNCE_HAT_BOUNDARY, 'dunce_hat')
    return P, {}


def build_dunce_hat_with_A() -> Tuple[Pair, Facts]:
    P, vid = collar_polygon(DUNCE_HAT_BOUNDARY, 'dunce_hat_with_A')
    v, a1, a2 = vid('v'), vid('a1'), vid('a2')
    return Pair(P.X, [(v, a1), (a1, a2), (a2, v)], name=P.name, labels=P.labels), {}


def build_torus() -> Tuple[Pair, Facts]:
    P, _ = collar_polygon(TORUS_BOUNDARY, 'torus')
    return P, {}


def build_mobius_pair() -> Tuple[Pair, Facts]:
    P, _ = collar_polygon(MOBIUS_BOUNDARY, 'mobius_pair')
    return Pair(P.X, boundary(P.X, 'one'), name=P.name, labels=P.labels), {}


def build_mobius_bare() -> Tuple[Pair, Facts]:
    P, _ = collar_polygon(MOBIUS_BOUNDARY, 'mobius_bare')
    return P, {}


# two triangles joined by the arc 2-3-4
THETA_BASE_EDGES = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]


def build_cylinder_theta_pair() -> Tuple[Pair, Facts]:
    """The cylinder L x [0, 1] over a graph L, with A its two bases."""
    n = 1 + max(max(e) for e in THETA_BASE_EDGES)
    top = {u: u + n for u in range(n)}
    triangles = []
    for u, w in THETA_BASE_EDGES:
        triangles += [(u, w, top[w]), (u, top[u], top[w])]
    A = THETA_BASE_EDGES + [(top[u], top[w]) for u, w in THETA_BASE_EDGES]
    labels = {u: 'base%d' % u for u in range(n)}
    labels.update({top[u]: 'top%d' % u for u in range(n)})
    return Pair(closure(triangles), A, name='cylinder_theta_pair', labels=labels), {}


# Bing's house: the box [0,10]x[0,6]x[0,4] cut by a floor at height 2. The
# lower room is entered from below through a tube over [2,4]x[2,4]; the upper
# room from above through a tube over [6,8]x[2,4]. Each tube leads through the
# other room, and a wall at y=3 ties each tube to the outer wall.
_BING_BOX = (10, 6, 4)
_BING_FLOOR = 2


def _unit_squares(axis: int, level: int, ranges: Tuple[range, range], holes=()):
    """Unit squares in the plane {coordinate `axis` = level}, as doubled corners."""
    others = [k for k in range(3) if k != axis]
    for i, j in product(*ranges):
        if (i, j) in holes:
            continue
        corners = []
        for di, dj in ((0, 0), (1, 0), (1, 1), (0, 1)):
            point = [0, 0, 0]
            point[axis] = 2 * level
            point[others[0]] = 2 * (i + di)
            point[others[1]] = 2 * (j + dj)
            corners.append(tuple(point))
        yield corners


def bing_house_squares() -> List[List[Tuple[int, int, int]]]:
    X_, Y_, Z_ = _BING_BOX
    hole1 = set(product((2, 3), (2, 3)))
    hole2 = set(product((6, 7), (2, 3)))
    squares = []
    # bottom, top and the floor between the rooms
    squares += _unit_squares(2, 0, (range(X_), range(Y_)), hole1)
    squares += _unit_squares(2, Z_, (range(X_), range(Y_)), hole2)
    squares += _unit_squares(2, _BING_FLOOR, (range(X_), range(Y_)), hole1 | hole2)
    # outer walls
    squares += _unit_squares(0, 0, (range(Y_), range(Z_)))
    squares += _unit_squares(0, X_, (range(Y_), range(Z_)))
    squares += _unit_squares(1, 0, (range(X_), range(Z_)))
    squares += _unit_squares(1, Y_, (range(X_), range(Z_)))
    # the two tubes
    for (x0, x1), zs in (((2, 4), range(0, _BING_FLOOR)), ((6, 8), range(_BING_FLOOR, Z_))):
        for x in (x0, x1):
            squares += _unit_squares(0, x, (range(2, 4), zs))
        for y in (2, 4):
            squares += _unit_squares(1, y, (range(x0, x1), zs))
    # walls tying each tube to the outer wall
    squares += _unit_squares(1, 3, (range(0, 2), range(0, _BING_FLOOR)))
    squares += _unit_squares(1, 3, (range(8, 10), range(_BING_FLOOR, Z_)))
    return squares


def _half(c: int) -> str:
    return str(c // 2) if c % 2 == 0 else '%d.5' % (c // 2)


def _point_label(point: Tuple[int, int, int]) -> str:
    kind = 'p' if all(c % 2 == 0 for c in point) else 'c'
    return '%s(%s)' % (kind, ','.join(_half(c) for c in point))


def build_bing_house() -> Tuple[Pair, Facts]:
    """Bing's house, each unit square of the cubical model coned from its centre."""
    squares = bing_house_squares()
    centres = []
    for corners in squares:
        centres.append(tuple(sum(c[k] for c in corners) // 4 for k in range(3)))
    points = sorted({c for corners in squares for c in corners}) + sorted(set(centres))
    index = {point: i for i, point in enumerate(points)}
    triangles = []
    for corners, centre in zip(squares, centres):
        for k in range(4):
            triangles.append(
                (index[centre], index[corners[k]], index[corners[(k + 1) % 4]])
            )
    labels = {i: _point_label(point) for point, i in index.items()}
    return Pair(closure(triangles), name='bing_house', labels=labels), {}


BUILDERS = {
    'simplex': build_simplex,
    'sphere': build_sphere,
    'ball_pair': build_ball_pair,
    'star': build_star,
    'n_squares': build_n_squares,
    'dunce_hat': build_dunce_hat,
    'dunce_hat_with_A': build_dunce_hat_with_A,
    'bing_house': build_bing_house,
    'mobius_pair': build_mobius_pair,
    'mobius_bare': build_mobius_bare,
    'torus': build_torus,
    'cylinder_theta_pair': build_cylinder_theta_pair,
    'segment_bare': build_segment_bare,
    'graph': build_graph,
}
