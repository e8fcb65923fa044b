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

import logging
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from .complex import Pair, link
from .consts import APEX
from .utils import SctypeError, Edge, Node, VertexId
from .utils.repr import NestedObject, brief

logger = logging.getLogger(__name__)

__all__ = [
    'DimensionUnsupported',
    'InteriorViolation',
    'CertificateUnavailable',
    'NotAFailure',
    'canonical_edge',
    'make_graph',
    'MarkedLink',
    'Walk',
    'PositiveCertificate',
    'NegativeCertificate',
    'CheckResult',
    'extract_marked_link',
    'bridges',
    'augment_with_apex',
    'edge_passes',
    'failing_edges',
    'is_exceptional',
    'link_cycle_rank',
    'make_positive_certificate',
    'make_negative_certificate',
    'make_isolated_certificate',
    'check_certificate',
    'certificate_from_dict',
]


class DimensionUnsupported(SctypeError):
    pass


class InteriorViolation(SctypeError):
    pass


class CertificateUnavailable(SctypeError):
    pass


class NotAFailure(SctypeError):
    pass


def canonical_edge(u: Node, w: Node) -> Edge:
    return (u, w) if u < w else (w, u)


def make_graph(nodes: Iterable[Node] = (), edges: Iterable[Tuple[Node, Node]] = ()) -> nx.Graph:
    """A simple undirected graph; edge endpoints are added as nodes."""
    G = nx.Graph()
    G.add_nodes_from(nodes)
    for u, w in edges:
        if u == w:
            raise SctypeError('loop at node %r: link graphs are simple' % (u,))
        G.add_edge(u, w)
    return G


def _sorted_edges(G: nx.Graph) -> List[Edge]:
    return sorted(canonical_edge(u, w) for u, w in G.edges)


class MarkedLink(NestedObject):
    """The local cone pair at a vertex, in graph form.

    Args:
        origin: the cone tip v
        graph: the link L of v in X
        terminals: N, the vertices of the link of v in A
        tip_in_m: whether v belongs to A
    """

    def __init__(
        self,
        origin: Optional[VertexId],
        graph: nx.Graph,
        terminals: Iterable[Node] = (),
        tip_in_m: Optional[bool] = None,
    ):
        terminals = frozenset(terminals)
        if not terminals.issubset(graph.nodes):
            raise SctypeError(
                'terminals %s are not link vertices' % sorted(terminals - set(graph.nodes))
            )
        if tip_in_m is None:
            tip_in_m = bool(terminals)
        if terminals and not tip_in_m:
            raise SctypeError('a non-empty terminal set forces the tip into M')
        self.origin = origin
        self.graph = graph
        self.terminals = terminals
        self.tip_in_m = tip_in_m

    def extra_repr(self) -> str:
        return (
            f'origin={self.origin}, nodes={brief(sorted(self.graph.nodes))}, '
            f'edges={brief(self.edges)}, N={sorted(self.terminals)}, tip_in_m={self.tip_in_m}'
        )

    @property
    def edges(self) -> List[Edge]:
        return _sorted_edges(self.graph)

    @property
    def isolated(self) -> List[Node]:
        return sorted(n for n, deg in self.graph.degree if deg == 0)

    def summary(self) -> Dict:
        return {
            'nodes': sorted(self.graph.nodes),
            'edges': [list(e) for e in self.edges],
            'N': sorted(self.terminals),
            'tip_in_M': self.tip_in_m,
        }


class Walk(NamedTuple):
    """A simple cycle (closing edge implicit) or a simple path through an edge."""

    kind: str
    nodes: Tuple[Node, ...]

    def edges(self) -> List[Edge]:
        pairs = list(zip(self.nodes, self.nodes[1:]))
        if self.kind == 'cycle' and len(self.nodes) > 2:
            pairs.append((self.nodes[-1], self.nodes[0]))
        return [canonical_edge(u, w) for u, w in pairs]


class CheckResult(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


_OK = CheckResult(True, 'ok')


class PositiveCertificate(NestedObject):
    """Every edge of L covered by a cycle or an N-N path, plus the reason each
    isolated vertex is harmless ('terminal', 'coexisting' or 'tip')."""

    kind = 'positive'

    def __init__(self, walks: Dict[Edge, Walk], isolated: Dict[Node, str]):
        self.walks = dict(walks)
        self.isolated = dict(isolated)

    def extra_repr(self) -> str:
        return f'edges={len(self.walks)}, isolated={self.isolated}'

    def only_cycles(self) -> bool:
        return all(w.kind == 'cycle' for w in self.walks.values())

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind,
            'walks': [
                {'edge': list(e), 'kind': w.kind, 'nodes': list(w.nodes)}
                for e, w in sorted(self.walks.items())
            ],
            'isolated': [
                {'vertex': n, 'justification': j} for n, j in sorted(self.isolated.items())
            ],
        }

    @classmethod
    def from_dict(cls, d: Dict) -> 'PositiveCertificate':
        walks = {
            tuple(item['edge']): Walk(item['kind'], tuple(item['nodes']))
            for item in d['walks']
        }
        isolated = {item['vertex']: item['justification'] for item in d['isolated']}
        return cls(walks, isolated)

    def __eq__(self, other):
        if not isinstance(other, PositiveCertificate):
            return NotImplemented
        return self.walks == other.walks and self.isolated == other.isolated


class NegativeCertificate(NestedObject):
    """A link edge on no cycle and no N-N path, with the N-free side C.

    `reason` is 'bridge' for an edge e = (u, w) where C is the component of
    one endpoint in L - e, or 'isolated-link' when L is a single vertex u
    outside N and the tip is outside M (then `edge` is None and C = {u}).
    """

    kind = 'negative'

    def __init__(self, edge: Optional[Edge], component: Iterable[Node], reason: str = 'bridge'):
        self.edge = None if edge is None else canonical_edge(*edge)
        self.component = frozenset(component)
        self.reason = reason

    def extra_repr(self) -> str:
        return f'reason={self.reason}, edge={self.edge}, component={brief(sorted(self.component))}'

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind,
            'reason': self.reason,
            'edge': None if self.edge is None else list(self.edge),
            'component': sorted(self.component),
        }

    @classmethod
    def from_dict(cls, d: Dict) -> 'NegativeCertificate':
        edge = d.get('edge')
        return cls(None if edge is None else tuple(edge), d['component'], d.get('reason', 'bridge'))

    def __eq__(self, other):
        if not isinstance(other, NegativeCertificate):
            return NotImplemented
        return (self.edge, self.component, self.reason) == (
            other.edge,
            other.component,
            other.reason,
        )


def certificate_from_dict(d: Dict):
    if d.get('kind') == PositiveCertificate.kind:
        return PositiveCertificate.from_dict(d)
    if d.get('kind') == NegativeCertificate.kind:
        return NegativeCertificate.from_dict(d)
    raise SctypeError('unknown certificate kind %r' % d.get('kind'))


def extract_marked_link(P: Pair, v: VertexId) -> MarkedLink:
    """The local cone pair of P at vertex v.

    Raises:
        DimensionUnsupported: some simplex containing v has dimension 3 or more
        InteriorViolation: the link of v in A contains an edge
    """
    cofaces = P.X.cofaces(v)
    if any(len(s) > 3 for s in cofaces):
        raise DimensionUnsupported(
            'vertex %s lies in a simplex of dimension %d' % (P.label(v), max(map(len, cofaces)) - 1)
        )
    L = link(P.X, v)
    graph = make_graph(L.vertices, (s for s in L.simplices if len(s) == 2))
    tip_in_m = (v,) in P.A.simplices
    terminals: FrozenSet[VertexId] = frozenset()
    if tip_in_m:
        LA = link(P.A, v)
        if LA.dimension >= 1:
            raise InteriorViolation(
                'the link of vertex %s in A contains an edge' % P.label(v)
            )
        terminals = frozenset(LA.vertices)
    M = MarkedLink(v, graph, terminals, tip_in_m)
    logger.debug('link of %s: %s', P.label(v), M)
    return M


def bridges(G: nx.Graph) -> List[Edge]:
    """Edges lying on no cycle, by one depth-first traversal with low-link values."""
    preorder: Dict[Node, int] = {}
    low: Dict[Node, int] = {}
    found = []
    for root in sorted(G.nodes):
        if root in preorder:
            continue
        preorder[root] = low[root] = len(preorder)
        stack = [(root, None, iter(sorted(G[root])))]
        while stack:
            node, parent, children = stack[-1]
            for child in children:
                if child == parent:
                    continue
                if child in preorder:
                    low[node] = min(low[node], preorder[child])
                else:
                    preorder[child] = low[child] = len(preorder)
                    stack.append((child, node, iter(sorted(G[child]))))
                    break
            else:
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[node])
                    if low[node] > preorder[parent]:
                        found.append(canonical_edge(parent, node))
    return sorted(found)


def augment_with_apex(G: nx.Graph, N: Iterable[Node]) -> nx.Graph:
    """G plus a fresh node ω adjacent to every terminal."""
    if APEX in G:
        raise SctypeError('node label %r is reserved for the apex' % APEX)
    H = G.copy()
    H.add_node(APEX)
    H.add_edges_from((APEX, n) for n in N)
    return H


def failing_edges(G: nx.Graph, N: Iterable[Node]) -> List[Edge]:
    """Edges of G on no cycle and on no simple path joining two terminals."""
    return [e for e in bridges(augment_with_apex(G, N)) if APEX not in e]


def edge_passes(G: nx.Graph, N: Iterable[Node], e: Tuple[Node, Node]) -> bool:
    """Whether e lies on a cycle of G or on a simple path between two distinct terminals."""
    e = canonical_edge(*e)
    if not G.has_edge(*e):
        raise SctypeError('%r is not an edge of the graph' % (e,))
    return e not in failing_edges(G, N)


def is_exceptional(M: MarkedLink) -> bool:
    """L is a single vertex outside N and the tip is outside M."""
    return len(M.graph) == 1 and not M.terminals and not M.tip_in_m


def link_cycle_rank(G: nx.Graph) -> int:
    return G.number_of_edges() - len(G) + nx.number_connected_components(G)


def _nearest_terminal_path(H: nx.Graph, source: Node, N: FrozenSet[Node]) -> Optional[List[Node]]:
    paths = nx.single_source_shortest_path(H, source)
    reachable = [n for n in paths if n in N]
    if not reachable:
        return None
    target = min(reachable, key=lambda n: (len(paths[n]), n))
    return paths[target]


def _isolated_justification(M: MarkedLink, node: Node) -> Optional[str]:
    if node in M.terminals:
        return 'terminal'
    if len(M.graph) >= 2:
        return 'coexisting'
    if M.tip_in_m:
        return 'tip'
    return None


def make_positive_certificate(M: MarkedLink) -> PositiveCertificate:
    """A cycle or an N-N path for every edge of the link.

    Raises:
        CertificateUnavailable: some edge fails, or the link is the exceptional
            single vertex outside N with the tip outside M
    """
    G, N = M.graph, M.terminals
    failing = failing_edges(G, N)
    if failing:
        raise CertificateUnavailable('link edge %r is on no cycle and no N-N path' % (failing[0],))
    if is_exceptional(M):
        raise CertificateUnavailable('isolated link vertex outside N with the tip outside M')

    in_cycle = set(_sorted_edges(G)) - set(bridges(G))
    walks = {}
    for u, w in _sorted_edges(G):
        H = nx.restricted_view(G, [], [(u, w)])
        if (u, w) in in_cycle:
            walks[(u, w)] = Walk('cycle', tuple(nx.shortest_path(H, u, w)))
            continue
        left = _nearest_terminal_path(H, u, N)
        right = _nearest_terminal_path(H, w, N)
        assert left is not None and right is not None, (u, w)
        walks[(u, w)] = Walk('path', tuple(reversed(left)) + tuple(right))

    isolated = {n: _isolated_justification(M, n) for n in M.isolated}
    return PositiveCertificate(walks, isolated)


def make_negative_certificate(M: MarkedLink, e: Tuple[Node, Node]) -> NegativeCertificate:
    """The N-free side of a failing edge.

    Prefers the endpoint whose component avoids N; when both do, the
    smaller-labelled endpoint.

    Raises:
        NotAFailure: e lies on a cycle or an N-N path
    """
    u, w = canonical_edge(*e)
    if not M.graph.has_edge(u, w):
        raise SctypeError('%r is not an edge of the link' % ((u, w),))
    H = nx.restricted_view(M.graph, [], [(u, w)])
    for end in (u, w):
        component = nx.node_connected_component(H, end)
        if not component & M.terminals and (w if end == u else u) not in component:
            return NegativeCertificate((u, w), component)
    raise NotAFailure('link edge %r lies on a cycle or an N-N path' % ((u, w),))


def make_isolated_certificate(M: MarkedLink) -> NegativeCertificate:
    if not is_exceptional(M):
        raise NotAFailure('the link is not a single vertex outside N with the tip outside M')
    return NegativeCertificate(None, M.graph.nodes, reason='isolated-link')


def _check_walk(M: MarkedLink, edge: Edge, walk: Walk) -> CheckResult:
    nodes = walk.nodes
    if any(n not in M.graph for n in nodes):
        return CheckResult(False, 'not-in-link')
    if len(set(nodes)) != len(nodes):
        return CheckResult(False, 'not-simple')
    if walk.kind == 'cycle':
        if len(nodes) < 3:
            return CheckResult(False, 'not-simple')
    elif walk.kind == 'path':
        if len(nodes) < 2:
            return CheckResult(False, 'not-simple')
        if nodes[0] not in M.terminals or nodes[-1] not in M.terminals:
            return CheckResult(False, 'endpoint-not-terminal')
    else:
        return CheckResult(False, 'kind-mismatch')
    walk_edges = walk.edges()
    if any(not M.graph.has_edge(*we) for we in walk_edges):
        return CheckResult(False, 'not-in-link')
    if edge not in walk_edges:
        return CheckResult(False, 'edge-not-on-walk')
    return _OK


def _check_positive(M: MarkedLink, cert: PositiveCertificate) -> CheckResult:
    edges = set(M.edges)
    covered = set(cert.walks)
    if edges - covered:
        return CheckResult(False, 'missing-edge')
    if covered - edges:
        return CheckResult(False, 'extra-edge')
    for edge, walk in sorted(cert.walks.items()):
        result = _check_walk(M, edge, walk)
        if not result:
            return result
    if set(cert.isolated) != set(M.isolated):
        return CheckResult(False, 'bad-isolated')
    for node, justification in cert.isolated.items():
        valid = {
            'terminal': node in M.terminals,
            'coexisting': len(M.graph) >= 2,
            'tip': M.tip_in_m,
        }
        if not valid.get(justification, False):
            return CheckResult(False, 'bad-isolated')
    return _OK


def _check_negative(M: MarkedLink, cert: NegativeCertificate) -> CheckResult:
    if cert.reason == 'isolated-link':
        if cert.edge is None and is_exceptional(M) and cert.component == frozenset(M.graph.nodes):
            return _OK
        return CheckResult(False, 'not-exceptional')
    if cert.reason != 'bridge' or cert.edge is None:
        return CheckResult(False, 'kind-mismatch')
    u, w = cert.edge
    if not M.graph.has_edge(u, w):
        return CheckResult(False, 'edge-unknown')
    inside = [end for end in (u, w) if end in cert.component]
    if len(inside) != 1:
        return CheckResult(False, 'component-mismatch')
    H = nx.restricted_view(M.graph, [], [(u, w)])
    if nx.node_connected_component(H, inside[0]) != cert.component:
        return CheckResult(False, 'component-mismatch')
    if cert.component & M.terminals:
        return CheckResult(False, 'component-touches-terminals')
    return _OK


def check_certificate(M: MarkedLink, cert) -> CheckResult:
    """Verify a certificate against its marked link, independently of how it was made."""
    if isinstance(cert, PositiveCertificate):
        return _check_positive(M, cert)
    if isinstance(cert, NegativeCertificate):
        return _check_negative(M, cert)
    return CheckResult(False, 'kind-mismatch')
