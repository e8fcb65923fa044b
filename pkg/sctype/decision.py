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
from multiprocessing.pool import ThreadPool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from .complex import (
    Complex,
    Pair,
    UnknownVertexError,
    boundary,
    closure,
    cone,
    free_vertices,
    has_empty_interior,
    simplex_boundary,
)
from .consts import DEFAULT_WORKERS, ExitCode, Flags
from .link_graph import (
    DimensionUnsupported,
    MarkedLink,
    NegativeCertificate,
    PositiveCertificate,
    certificate_from_dict,
    check_certificate,
    extract_marked_link,
    failing_edges,
    is_exceptional,
    make_graph,
    make_isolated_certificate,
    make_negative_certificate,
    make_positive_certificate,
)
from .utils import SctypeError, VertexId
from .utils.repr import NestedObject

logger = logging.getLogger(__name__)

__all__ = [
    'Applicability',
    'Overall',
    'CoverViolation',
    'LocalVerdict',
    'Verdict',
    'Decomposition',
    'cone_surjection_property',
    'decide_link',
    'computable_type',
    'cone_pair',
    'cone_pair_mode',
    'is_ball_sphere_pair',
    'union_check',
    'plus_boundary_pair',
]


class Applicability(object):
    APPLICABLE = 'Applicable'
    EMPTY_INTERIOR_VIOLATED = 'EmptyInteriorViolated'
    DIMENSION_UNSUPPORTED = 'DimensionUnsupported'
    INPUT_ERROR = 'InputError'
    # union_check only: the pieces do not all have computable type
    INCONCLUSIVE = 'Inconclusive'


class Overall(object):
    COMPUTABLE = 'ComputableType'
    NOT_COMPUTABLE = 'NotComputableType'
    INAPPLICABLE = 'Inapplicable'


_EXIT_CODES = {
    Overall.COMPUTABLE: ExitCode.COMPUTABLE,
    Overall.NOT_COMPUTABLE: ExitCode.NOT_COMPUTABLE,
    Overall.INAPPLICABLE: ExitCode.INAPPLICABLE,
}


class CoverViolation(SctypeError):
    pass


class LocalVerdict(NestedObject):
    """Decision at one vertex: its marked link, the outcome and the certificate."""

    def __init__(
        self,
        vertex: Optional[VertexId],
        passes: bool,
        certificate: Union[PositiveCertificate, NegativeCertificate],
        notes: Iterable[str] = (),
        marked_link: Optional[MarkedLink] = None,
        label: Optional[str] = None,
    ):
        self.vertex = vertex
        self.passes = passes
        self.certificate = certificate
        self.notes = list(notes)
        self.marked_link = marked_link
        self.label = label if label is not None else str(vertex)

    def extra_repr(self) -> str:
        return f'vertex={self.label}, passes={self.passes}, notes={self.notes}'

    def check(self) -> bool:
        """The certificate checks and has the sign of the outcome."""
        expected = PositiveCertificate if self.passes else NegativeCertificate
        return isinstance(self.certificate, expected) and bool(
            check_certificate(self.marked_link, self.certificate)
        )

    def to_dict(self) -> Dict:
        return {
            'vertex': self.vertex,
            'label': self.label,
            'passes': self.passes,
            'notes': list(self.notes),
            'link': self.marked_link.summary(),
            'certificate': self.certificate.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: Dict) -> 'LocalVerdict':
        summary = d['link']
        M = MarkedLink(
            d['vertex'],
            make_graph(summary['nodes'], [tuple(e) for e in summary['edges']]),
            summary['N'],
            summary['tip_in_M'],
        )
        return cls(
            d['vertex'],
            d['passes'],
            certificate_from_dict(d['certificate']),
            d['notes'],
            marked_link=M,
            label=d['label'],
        )


class Verdict(NestedObject):
    """Outcome of a decision on a pair.

    Args:
        applicability: one of `Applicability`
        overall: one of `Overall`
        locals: per-vertex verdicts, in vertex order
        assumptions: flag records, e.g. `{'flag': 'FreeVertexOutsideA', 'vertex': '3'}`
        reason: human-readable explanation when not applicable
        pieces: piece verdicts, for `union_check`
        name: name of the decided pair
    """

    _children_names = ['locals']

    def __init__(
        self,
        applicability: str,
        overall: str,
        locals: Sequence[LocalVerdict] = (),
        assumptions: Iterable[Dict] = (),
        reason: Optional[str] = None,
        pieces: Sequence['Verdict'] = (),
        name: Optional[str] = None,
    ):
        self.applicability = applicability
        self.overall = overall
        self.locals = list(locals)
        self.assumptions = list(assumptions)
        self.reason = reason
        self.pieces = list(pieces)
        self.name = name

    def extra_repr(self) -> str:
        return f'name={self.name!r}, applicability={self.applicability}, overall={self.overall}'

    @classmethod
    def inapplicable(cls, applicability: str, reason: str, name: Optional[str] = None) -> 'Verdict':
        return cls(applicability, Overall.INAPPLICABLE, reason=reason, name=name)

    @classmethod
    def input_error(cls, reason: str, name: Optional[str] = None) -> 'Verdict':
        return cls.inapplicable(Applicability.INPUT_ERROR, reason, name=name)

    @property
    def exit_code(self) -> ExitCode:
        if self.applicability == Applicability.INPUT_ERROR:
            return ExitCode.INPUT_ERROR
        return _EXIT_CODES[self.overall]

    @property
    def failing(self) -> List[LocalVerdict]:
        return [lv for lv in self.locals if not lv.passes]

    @property
    def flags(self) -> List[str]:
        return sorted({a['flag'] for a in self.assumptions})

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'applicability': self.applicability,
            'overall': self.overall,
            'reason': self.reason,
            'assumptions': [dict(a) for a in self.assumptions],
            'locals': [lv.to_dict() for lv in self.locals],
            'pieces': [p.to_dict() for p in self.pieces],
        }

    @classmethod
    def from_dict(cls, d: Dict) -> 'Verdict':
        return cls(
            d['applicability'],
            d['overall'],
            [LocalVerdict.from_dict(lv) for lv in d['locals']],
            d['assumptions'],
            reason=d['reason'],
            pieces=[cls.from_dict(p) for p in d['pieces']],
            name=d['name'],
        )


class Decomposition(NestedObject):
    """Pieces (X_i, A_i) whose X_i cover X and whose A_i cover A."""

    _children_names = ['pieces']

    def __init__(self, pieces: Iterable[Pair]):
        self.pieces = list(pieces)

    def validate(self, P: Pair):
        """
        Raises:
            CoverViolation: a piece leaves the ambient pair, or the unions differ
        """
        xs, as_ = set(), set()
        for i, piece in enumerate(self.pieces):
            if not piece.X <= P.X or not piece.A <= P.A:
                raise CoverViolation('piece %d is not a pair of subcomplexes of the ambient pair' % i)
            xs |= piece.X.simplices
            as_ |= piece.A.simplices
        if xs != P.X.simplices:
            raise CoverViolation(
                'the pieces cover %d of the %d simplices of X' % (len(xs), len(P.X))
            )
        if as_ != P.A.simplices:
            raise CoverViolation(
                'the pieces cover %d of the %d simplices of A' % (len(as_), len(P.A))
            )


def cone_surjection_property(
    M: MarkedLink,
) -> Tuple[bool, Union[PositiveCertificate, NegativeCertificate]]:
    """Whether the cone pair of a marked link has the surjection property.

    True iff every link edge lies on a cycle or an N-N path, except when the
    link is a single vertex outside N and the tip is outside M.
    """
    failing = failing_edges(M.graph, M.terminals)
    if failing:
        return False, make_negative_certificate(M, failing[0])
    if is_exceptional(M):
        return False, make_isolated_certificate(M)
    return True, make_positive_certificate(M)


def decide_link(M: MarkedLink, label: Optional[str] = None, notes: Iterable[str] = ()) -> LocalVerdict:
    passes, cert = cone_surjection_property(M)
    notes = list(notes)
    if isinstance(cert, NegativeCertificate) and cert.reason == 'isolated-link':
        notes.append(Flags.ISOLATED_LINK_EXCEPTION)
    if isinstance(cert, PositiveCertificate) and 'tip' in cert.isolated.values():
        notes.append(Flags.DERIVED_TIP_RULE)
    return LocalVerdict(M.origin, passes, cert, notes, marked_link=M, label=label)


def _assumption_records(locals: Iterable[LocalVerdict]) -> List[Dict]:
    return [{'flag': note, 'vertex': lv.label} for lv in locals for note in lv.notes]


def computable_type(
    P: Pair,
    parallel: bool = False,
    workers: Optional[int] = DEFAULT_WORKERS,
    progress: bool = False,
) -> Verdict:
    """判断单纯复形对 (X, A) 是否具有可计算类型（computable type）。

    Args:
        P: the pair
        parallel: decide the vertices on a thread pool; the result order is
            still the vertex order
        workers: pool size when `parallel`; None lets the pool decide
        progress: show a tqdm progress bar over the vertices

    Returns:
        the Verdict; `Inapplicable` when A has interior in X or X has dimension
        3 or more
    """
    if not has_empty_interior(P):
        inside = sorted(t for t in P.X.maximal_simplices if t in P.A.simplices)
        reason = 'A contains the maximal simplex [%s] of X' % ','.join(
            P.label(v) for v in inside[0]
        )
        logger.warning('%s: %s', P.name, reason)
        return Verdict.inapplicable(Applicability.EMPTY_INTERIOR_VIOLATED, reason, name=P.name)
    if P.X.dimension >= 3:
        reason = 'X has dimension %d; links of dimension 2 or more are not decided' % P.X.dimension
        logger.warning('%s: %s', P.name, reason)
        return Verdict.inapplicable(Applicability.DIMENSION_UNSUPPORTED, reason, name=P.name)

    outside = free_vertices(P.X) - set(P.A.vertices)
    for v in sorted(outside):
        logger.warning('free vertex %s is not in A', P.label(v))

    def _decide(v: VertexId) -> LocalVerdict:
        notes = [Flags.FREE_VERTEX_OUTSIDE_A] if v in outside else []
        return decide_link(extract_marked_link(P, v), label=P.label(v), notes=notes)

    vertices = P.X.vertices
    if parallel:
        with ThreadPool(workers) as pool:
            locals = list(pool.imap(_decide, vertices))
    else:
        locals = [
            _decide(v)
            for v in tqdm(vertices, desc='vertices', disable=not progress, leave=False)
        ]

    passes = all(lv.passes for lv in locals)
    overall = Overall.COMPUTABLE if passes else Overall.NOT_COMPUTABLE
    verdict = Verdict(
        Applicability.APPLICABLE,
        overall,
        locals,
        _assumption_records(locals),
        name=P.name,
    )
    assert (verdict.overall == Overall.COMPUTABLE) == (not verdict.failing)
    logger.info(
        '%s: %s (%d vertices, %d failing)', P.name, overall, len(locals), len(verdict.failing)
    )
    return verdict


def _cone_tip(L: Complex) -> VertexId:
    return max(L.vertices, default=-1) + 1


def _check_cone_base(L: Complex, N: Iterable[VertexId]) -> frozenset:
    if L.dimension >= 2:
        raise DimensionUnsupported('the cone base must be a graph, got dimension %d' % L.dimension)
    N = frozenset(N)
    unknown = N - set(L.vertices)
    if unknown:
        raise UnknownVertexError('terminals %s are not vertices of the base' % sorted(unknown))
    return N


def cone_pair(L: Complex, N: Iterable[VertexId]) -> Pair:
    """The simplicial cone pair (cone L, L ∪ cone N) with a fresh tip."""
    N = _check_cone_base(L, N)
    tip = _cone_tip(L)
    X = cone(L, tip)
    A = L | cone(closure((n,) for n in N), tip) if N else L
    return Pair(X, A, name='cone')


def cone_pair_mode(
    L: Complex, N: Iterable[VertexId], tip_in_m: Optional[bool] = None
) -> Verdict:
    """Decide the cone pair over a graph L with terminals N directly at its tip.

    Args:
        L: the base, of dimension at most 1
        N: terminal vertices of L
        tip_in_m: whether the tip lies in M; defaults to `N != ∅`. Passing
            True with N empty requests the (B₁, S₀) reading of a one-branch star.
    """
    N = _check_cone_base(L, N)
    graph = make_graph(L.vertices, (s for s in L.simplices if len(s) == 2))
    M = MarkedLink(_cone_tip(L), graph, N, tip_in_m)
    local = decide_link(M, label='tip')
    overall = Overall.COMPUTABLE if local.passes else Overall.NOT_COMPUTABLE
    return Verdict(
        Applicability.APPLICABLE,
        overall,
        [local],
        _assumption_records([local]),
        name='cone',
    )


def is_ball_sphere_pair(P: Pair) -> bool:
    """X is a single closed simplex and A its boundary sphere."""
    tops = P.X.maximal_simplices
    if len(tops) != 1:
        return False
    (top,) = tops
    return P.A == simplex_boundary(top)


def union_check(P: Pair, D: Decomposition, **kwargs) -> Verdict:
    """Sufficient test: every piece has computable type.

    A piece that is a simplex with its boundary counts as computable at any
    dimension. The test is one-directional: when some piece is not decided
    computable the result is `Inapplicable` with applicability `Inconclusive`.

    Raises:
        CoverViolation: D does not cover P
    """
    D.validate(P)
    pieces, assumptions = [], []
    for i, piece in enumerate(D.pieces):
        if is_ball_sphere_pair(piece):
            verdict = Verdict(Applicability.APPLICABLE, Overall.COMPUTABLE, name=piece.name)
            verdict.assumptions.append({'flag': Flags.BALL_SPHERE_PAIR, 'piece': i})
        else:
            verdict = computable_type(piece, **kwargs)
        pieces.append(verdict)
        assumptions.extend(dict(a, piece=i) for a in verdict.assumptions)

    bad = [i for i, v in enumerate(pieces) if v.overall != Overall.COMPUTABLE]
    if not bad:
        logger.info('%s: all %d pieces have computable type', P.name, len(pieces))
        return Verdict(
            Applicability.APPLICABLE,
            Overall.COMPUTABLE,
            assumptions=assumptions,
            pieces=pieces,
            name=P.name,
        )
    reason = 'pieces %s are not decided computable; the union test is one-directional' % bad
    logger.warning('%s: %s', P.name, reason)
    return Verdict(
        Applicability.INCONCLUSIVE,
        Overall.INAPPLICABLE,
        assumptions=assumptions,
        reason=reason,
        pieces=pieces,
        name=P.name,
    )


def plus_boundary_pair(X: Complex) -> Tuple[Pair, Decomposition]:
    """(X, ∂₊X) with its decomposition into (M, ∂M) over the maximal simplices M."""
    P = Pair(X, boundary(X, 'plus'), name='plus-boundary')
    pieces = [
        Pair(closure([top]), simplex_boundary(top), name='[%s]' % ','.join(map(str, top)))
        for top in X.sorted_maximal
    ]
    return P, Decomposition(pieces)
