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
from collections import defaultdict
from functools import cached_property
from itertools import combinations
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Set,
    Tuple,
    Union,
)

import numpy as np

from .consts import MAX_SIMPLICES, BOUNDARY_KINDS
from .utils import SctypeError, Simplex, VertexId
from .utils.repr import NestedObject, brief

logger = logging.getLogger(__name__)

__all__ = [
    'ComplexError',
    'MalformedSimplexError',
    'NotDownwardClosedError',
    'UnknownVertexError',
    'SubcomplexError',
    'NonBijectiveError',
    'make_simplex',
    'Complex',
    'Pair',
    'closure',
    'star',
    'link',
    'boundary',
    'boundary_generators',
    'plus_boundary_from_maximal',
    'simplex_boundary',
    'skeleton',
    'cone',
    'free_simplices',
    'free_vertices',
    'has_empty_interior',
    'barycentric_subdivision',
    'euler_characteristic',
    'f_vector',
    'relabel',
]


class ComplexError(SctypeError, ValueError):
    pass


class MalformedSimplexError(ComplexError):
    pass


class NotDownwardClosedError(ComplexError):
    pass


class UnknownVertexError(ComplexError):
    pass


class SubcomplexError(ComplexError):
    pass


class NonBijectiveError(ComplexError):
    pass


def _is_vertex_id(v) -> bool:
    return isinstance(v, (int, np.integer)) and not isinstance(v, bool) and v >= 0


def make_simplex(vertices: Iterable[VertexId]) -> Simplex:
    """Canonical form of a simplex: the strictly increasing tuple of its vertex ids."""
    vertices = list(vertices)
    if not vertices:
        raise MalformedSimplexError('empty simplex')
    bad = [v for v in vertices if not _is_vertex_id(v)]
    if bad:
        raise MalformedSimplexError(
            'vertex ids must be non-negative integers, got %r in %r' % (bad[0], vertices)
        )
    simplex = tuple(sorted(int(v) for v in vertices))
    if len(set(simplex)) != len(simplex):
        raise MalformedSimplexError('repeated vertex in simplex %r' % (vertices,))
    return simplex


def _proper_faces(simplex: Simplex) -> Iterator[Simplex]:
    for k in range(1, len(simplex)):
        yield from combinations(simplex, k)


def _facets(simplex: Simplex) -> Iterator[Simplex]:
    if len(simplex) > 1:
        yield from combinations(simplex, len(simplex) - 1)


def _sort_key(simplex: Simplex):
    return len(simplex), simplex


class Complex(NestedObject):
    """An abstract finite simplicial complex.

    Immutable. The constructor canonicalizes every simplex and checks the
    downward-closure axiom; use `closure()` to build a complex from generators.

    Args:
        simplices: every simplex of the complex, as vertex-id sequences
    """

    def __init__(self, simplices: Iterable[Iterable[VertexId]] = ()):
        self._init(frozenset(make_simplex(s) for s in simplices))

    @classmethod
    def _trusted(cls, simplices: Iterable[Simplex]) -> 'Complex':
        # simplices already canonical; closure is still verified
        obj = cls.__new__(cls)
        obj._init(frozenset(simplices))
        return obj

    def _init(self, simplices: FrozenSet[Simplex]):
        if len(simplices) > MAX_SIMPLICES:
            raise ComplexError(
                'complex has %d simplices, more than the limit %d (SCTYPE_MAX_SIMPLICES)'
                % (len(simplices), MAX_SIMPLICES)
            )
        for simplex in simplices:
            for face in _facets(simplex):
                if face not in simplices:
                    raise NotDownwardClosedError(
                        'face %r of %r is missing' % (face, simplex)
                    )
        self._simplices = simplices

    def extra_repr(self) -> str:
        return f'dim={self.dimension}, f_vector={self.f_vector}, maximal={brief(self.sorted_maximal)}'

    @property
    def simplices(self) -> FrozenSet[Simplex]:
        return self._simplices

    @cached_property
    def sorted_simplices(self) -> Tuple[Simplex, ...]:
        """Simplices ordered by dimension, then lexicographically."""
        return tuple(sorted(self._simplices, key=_sort_key))

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted_simplices)

    def __len__(self) -> int:
        return len(self._simplices)

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._simplices

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __le__(self, other: 'Complex') -> bool:
        return self._simplices <= other._simplices

    def __or__(self, other: 'Complex') -> 'Complex':
        return Complex._trusted(self._simplices | other._simplices)

    def is_empty(self) -> bool:
        return not self._simplices

    @cached_property
    def vertices(self) -> Tuple[VertexId, ...]:
        return tuple(sorted(s[0] for s in self._simplices if len(s) == 1))

    @cached_property
    def dimension(self) -> int:
        """Largest simplex dimension; -1 for the empty complex."""
        return max((len(s) for s in self._simplices), default=0) - 1

    @cached_property
    def f_vector(self) -> List[int]:
        if not self._simplices:
            return []
        dims = np.fromiter((len(s) - 1 for s in self._simplices), dtype=np.int64)
        return np.bincount(dims).tolist()

    @cached_property
    def cofacets(self) -> Dict[Simplex, Tuple[Simplex, ...]]:
        """Simplices of the next dimension containing each simplex."""
        index = defaultdict(list)
        for simplex in self._simplices:
            for face in _facets(simplex):
                index[face].append(simplex)
        return {s: tuple(sorted(index.get(s, ()))) for s in self._simplices}

    @cached_property
    def _vertex_cofaces(self) -> Dict[VertexId, Tuple[Simplex, ...]]:
        index = defaultdict(list)
        for simplex in self.sorted_simplices:
            for v in simplex:
                index[v].append(simplex)
        return {v: tuple(faces) for v, faces in index.items()}

    def cofaces(self, v: VertexId) -> Tuple[Simplex, ...]:
        """All simplices containing vertex `v`, in canonical order."""
        try:
            return self._vertex_cofaces[v]
        except KeyError:
            raise UnknownVertexError('vertex %r is not in the complex' % (v,)) from None

    @cached_property
    def maximal_simplices(self) -> FrozenSet[Simplex]:
        return frozenset(s for s, up in self.cofacets.items() if not up)

    @property
    def sorted_maximal(self) -> Tuple[Simplex, ...]:
        return tuple(sorted(self.maximal_simplices, key=_sort_key))

    def proper_superset_count(self, simplex: Simplex) -> int:
        """Number of simplices strictly containing `simplex`, of any dimension."""
        members = set(simplex)
        return sum(
            1
            for other in self.cofaces(simplex[0])
            if len(other) > len(simplex) and members.issubset(other)
        )


class Pair(NestedObject):
    """A simplicial pair (X, A): a complex X and a subcomplex A.

    Args:
        X: the total complex
        A: a subcomplex of X; plain generator lists are closed first
        name: optional display name
        labels: optional display names of the vertices, `id -> name`
    """

    _children_names = ['X', 'A']

    def __init__(
        self,
        X: Complex,
        A: Union[Complex, Iterable[Iterable[VertexId]], None] = None,
        *,
        name: Optional[str] = None,
        labels: Optional[Mapping[VertexId, str]] = None,
    ):
        if A is None:
            A = Complex()
        elif not isinstance(A, Complex):
            A = closure(A)
        if not A <= X:
            extra = sorted(A.simplices - X.simplices, key=_sort_key)
            raise SubcomplexError(
                'A is not a subcomplex of X: %d simplices of A are missing from X, e.g. %r'
                % (len(extra), extra[0])
            )
        self.X = X
        self.A = A
        self.name = name
        self.labels = dict(labels) if labels else {}

    def extra_repr(self) -> str:
        return f'name={self.name!r}'

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pair):
            return NotImplemented
        return self.X == other.X and self.A == other.A

    def __hash__(self) -> int:
        return hash((self.X, self.A))

    def label(self, v: VertexId) -> str:
        return self.labels.get(v, str(v))

    def vertex_by_label(self, name: str) -> VertexId:
        for v, label in self.labels.items():
            if label == name:
                return v
        if name.isdigit() and int(name) in self.X.vertices:
            return int(name)
        raise UnknownVertexError('no vertex named %r' % name)

    def relabel(self, mapping: Union[Mapping[VertexId, VertexId], Callable]) -> 'Pair':
        mapping = _as_mapping(self.X, mapping)
        labels = {mapping[v]: lab for v, lab in self.labels.items() if v in mapping}
        return Pair(
            relabel(self.X, mapping),
            relabel(self.A, mapping),
            name=self.name,
            labels=labels,
        )

    def subdivide(self, iterations: int = 1) -> 'Pair':
        return barycentric_subdivision(self, iterations=iterations)


def closure(simplices: Iterable[Iterable[VertexId]]) -> Complex:
    """Smallest downward-closed set containing the given simplices.

    Example:
        >>> closure([(0, 1), (1, 2)]).sorted_simplices
        ((0,), (1,), (2,), (0, 1), (1, 2))
    """
    out: Set[Simplex] = set()
    for simplex in simplices:
        simplex = make_simplex(simplex)
        if simplex in out:
            continue
        # a generator on k vertices alone closes to 2^k - 1 simplices
        if (1 << len(simplex)) - 1 > MAX_SIMPLICES:
            raise ComplexError(
                'simplex on %d vertices has 2^%d - 1 faces, more than the limit %d '
                '(SCTYPE_MAX_SIMPLICES)' % (len(simplex), len(simplex), MAX_SIMPLICES)
            )
        out.add(simplex)
        out.update(_proper_faces(simplex))
        if len(out) > MAX_SIMPLICES:
            raise ComplexError(
                'closure has more than %d simplices (SCTYPE_MAX_SIMPLICES)' % MAX_SIMPLICES
            )
    return Complex._trusted(out)


def star(C: Complex, v: VertexId) -> Complex:
    return closure(C.cofaces(v))


def link(C: Complex, v: VertexId) -> Complex:
    """{σ ∈ C : v ∉ σ and σ ∪ {v} ∈ C}."""
    return Complex._trusted(
        tuple(u for u in s if u != v) for s in C.cofaces(v) if len(s) > 1
    )


_KIND_PREDICATES = {
    'one': lambda count: count == 1,
    'plus': lambda count: count >= 1,
    'odd': lambda count: count % 2 == 1,
}
assert set(_KIND_PREDICATES) == set(BOUNDARY_KINDS)


def boundary_generators(C: Complex, kind: str) -> FrozenSet[Simplex]:
    """Simplices whose number of next-dimension cofaces satisfies `kind`."""
    try:
        keep = _KIND_PREDICATES[kind]
    except KeyError:
        raise ComplexError(
            'unknown boundary kind %r, expected one of %s' % (kind, ', '.join(BOUNDARY_KINDS))
        ) from None
    return frozenset(s for s, up in C.cofacets.items() if keep(len(up)))


def boundary(C: Complex, kind: str = 'one') -> Complex:
    """The boundary ∂₁, ∂₊ or ∂_odd of a complex.

    Args:
        C: the complex
        kind: 'one' (exactly one coface of the next dimension), 'plus' (at
            least one) or 'odd' (an odd number)
    """
    return closure(boundary_generators(C, kind))


def simplex_boundary(simplex: Iterable[VertexId]) -> Complex:
    """All proper faces of a simplex; empty for a vertex."""
    return Complex._trusted(_proper_faces(make_simplex(simplex)))


def plus_boundary_from_maximal(C: Complex) -> Complex:
    """∂₊ computed as the union of the boundaries of the maximal simplices."""
    out: Set[Simplex] = set()
    for top in C.maximal_simplices:
        out.update(_proper_faces(top))
    return Complex._trusted(out)


def skeleton(C: Complex, k: int) -> Complex:
    return Complex._trusted(s for s in C.simplices if len(s) <= k + 1)


def cone(C: Complex, tip: VertexId) -> Complex:
    """The cone over C with a new vertex `tip`."""
    if tip in C.vertices:
        raise ComplexError('cone tip %r is already a vertex' % (tip,))
    make_simplex([tip])
    out = set(C.simplices)
    out.add((tip,))
    out.update(tuple(sorted(s + (tip,))) for s in C.simplices)
    return Complex._trusted(out)


def free_simplices(C: Complex) -> FrozenSet[Simplex]:
    """Simplices with exactly one proper superset (of any dimension)."""
    return frozenset(s for s in C.simplices if C.proper_superset_count(s) == 1)


def free_vertices(C: Complex) -> FrozenSet[VertexId]:
    """Vertices whose link is a single vertex."""
    return frozenset(v for v in C.vertices if len(C.cofaces(v)) == 2)


def has_empty_interior(P: Pair) -> bool:
    """Whether A has empty interior in X, i.e. A contains no maximal simplex of X."""
    return not any(top in P.A.simplices for top in P.X.maximal_simplices)


def euler_characteristic(C: Complex) -> int:
    counts = np.asarray(C.f_vector, dtype=np.int64)
    if counts.size == 0:
        return 0
    signs = np.where(np.arange(counts.size) % 2 == 0, 1, -1)
    return int(np.dot(signs, counts))


def f_vector(C: Complex) -> List[int]:
    return list(C.f_vector)


def _as_mapping(C: Complex, mapping) -> Dict[VertexId, VertexId]:
    if callable(mapping) and not isinstance(mapping, Mapping):
        mapping = {v: mapping(v) for v in C.vertices}
    missing = [v for v in C.vertices if v not in mapping]
    if missing:
        raise NonBijectiveError('relabeling is undefined on vertex %r' % (missing[0],))
    images = [mapping[v] for v in C.vertices]
    if len(set(images)) != len(images):
        raise NonBijectiveError('relabeling is not injective on the vertex set')
    bad = [w for w in images if not _is_vertex_id(w)]
    if bad:
        raise NonBijectiveError('relabeling produced an invalid vertex id %r' % (bad[0],))
    return {v: int(mapping[v]) for v in C.vertices}


def relabel(C: Complex, mapping: Union[Mapping[VertexId, VertexId], Callable]) -> Complex:
    """Image of C under a vertex renaming that is a bijection onto its image.

    Args:
        C: the complex
        mapping: dict or callable defined on every vertex of C
    Raises:
        NonBijectiveError: if two vertices share an image or one has none
    """
    mapping = _as_mapping(C, mapping)
    return Complex._trusted(
        tuple(sorted(mapping[v] for v in s)) for s in C.simplices
    )


def _chains(X: Complex, index: Mapping[Simplex, int]) -> Dict[Simplex, List[Tuple[int, ...]]]:
    # chains σ₀ ⊊ … ⊊ σ_k, grouped by their top simplex; ids increase along a chain
    by_top: Dict[Simplex, List[Tuple[int, ...]]] = {}
    for simplex in X.sorted_simplices:
        top = index[simplex]
        chains = [(top,)]
        for face in _proper_faces(simplex):
            chains.extend(c + (top,) for c in by_top[face])
        by_top[simplex] = chains
    return by_top


def _subdivide_once(P: Pair) -> Pair:
    order = P.X.sorted_simplices
    index = {s: i for i, s in enumerate(order)}
    by_top = _chains(P.X, index)
    X = Complex._trusted(c for chains in by_top.values() for c in chains)
    A = Complex._trusted(c for s in P.A.simplices for c in by_top[s])
    labels = {i: '-'.join(P.label(v) for v in s) for i, s in enumerate(order)}
    return Pair(X, A, name=P.name, labels=labels)


def barycentric_subdivision(P: Pair, iterations: int = 1) -> Pair:
    """Barycentric subdivision of a pair.

    The new vertices are the simplices of X, numbered in canonical order (by
    dimension, then lexicographically) and labelled by the dash-joined labels
    of their vertices. The new simplices are the chains of simplices of X;
    the image of A is the set of chains inside A.
    """
    if iterations < 0:
        raise ValueError('iterations must be non-negative, got %d' % iterations)
    for _ in range(iterations):
        P = _subdivide_once(P)
        logger.debug('subdivided pair %s: f_vector=%s', P.name, P.X.f_vector)
    return P
