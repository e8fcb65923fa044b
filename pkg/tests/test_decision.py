# coding: utf-8
import numpy as np
import pytest
from hypothesis import given, settings

from sctype.complex import (
    Complex,
    Pair,
    boundary,
    closure,
    euler_characteristic,
    free_simplices,
    simplex_boundary,
    skeleton,
)
from sctype.consts import ExitCode, Flags
from sctype.decision import (
    Applicability,
    CoverViolation,
    Decomposition,
    Overall,
    Verdict,
    computable_type,
    cone_pair,
    cone_pair_mode,
    cone_surjection_property,
    is_ball_sphere_pair,
    plus_boundary_pair,
    union_check,
)
from sctype.gallery import from_uri, generate, self_test_uris
from sctype.link_graph import DimensionUnsupported, MarkedLink, make_graph

from generators import (
    complexes,
    random_applicable_pair,
    random_complex,
    random_connected_graph,
    random_graph,
)

CYCLE = closure([(0, 1), (1, 2), (0, 2)])
DUMBBELL = closure([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])


def _graph_complex(G):
    return closure([(v,) for v in G.nodes] + [tuple(e) for e in G.edges])


def test_cone_surjection_property_examples():
    ok, cert = cone_surjection_property(MarkedLink(0, make_graph(edges=[(1, 2), (2, 3), (1, 3)])))
    assert ok and cert.only_cycles()
    assert cone_surjection_property(MarkedLink(0, make_graph([1]), tip_in_m=True))[0]
    ok, cert = cone_surjection_property(MarkedLink(0, make_graph([1])))
    assert not ok and cert.reason == 'isolated-link'


def test_cone_pair_mode_examples():
    star = closure([(v,) for v in range(5)])
    assert cone_pair_mode(star, []).overall == Overall.COMPUTABLE
    two_cycles = closure([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert cone_pair_mode(two_cycles, []).overall == Overall.COMPUTABLE

    verdict = cone_pair_mode(DUMBBELL, [])
    assert verdict.overall == Overall.NOT_COMPUTABLE
    assert verdict.failing[0].certificate.edge in {(2, 3), (3, 4), (4, 5)}
    assert cone_pair_mode(DUMBBELL, [2, 5]).overall == Overall.COMPUTABLE


def test_cone_pair_mode_single_vertex():
    point = closure([(0,)])
    verdict = cone_pair_mode(point, [], tip_in_m=True)
    assert verdict.overall == Overall.COMPUTABLE
    assert verdict.flags == [Flags.DERIVED_TIP_RULE]

    verdict = cone_pair_mode(point, [])
    assert verdict.overall == Overall.NOT_COMPUTABLE
    assert verdict.flags == [Flags.ISOLATED_LINK_EXCEPTION]
    assert verdict.exit_code == ExitCode.NOT_COMPUTABLE


def test_cone_pair_mode_errors():
    with pytest.raises(DimensionUnsupported):
        cone_pair_mode(closure([(0, 1, 2)]), [])
    with pytest.raises(ValueError):
        cone_pair_mode(CYCLE, [7])


def test_cone_pair():
    P = cone_pair(closure([(0, 1)]), [0, 1])
    assert P.X == closure([(0, 1, 2)])
    assert P.A == simplex_boundary((0, 1, 2))
    assert cone_pair(CYCLE, []).A == CYCLE


def test_cone_pair_agrees_with_cone_pair_mode():
    rng = np.random.default_rng(11)
    for _ in range(150):
        n = int(rng.integers(1, 8))
        L = _graph_complex(random_graph(rng, n, p=0.35))
        N = [v for v in L.vertices if rng.random() < 0.3]
        direct = computable_type(cone_pair(L, N))
        if direct.applicability != Applicability.APPLICABLE:
            # an isolated terminal makes its cone edge a maximal simplex inside A
            assert any(len(L.cofaces(n)) == 1 for n in N)
            continue
        assert direct.overall == cone_pair_mode(L, N).overall, (L, N)


def test_computable_type_graph_examples():
    P = generate('graph').pair
    assert computable_type(P).overall == Overall.COMPUTABLE
    P = generate('n_squares', 3).pair
    assert computable_type(P).overall == Overall.COMPUTABLE


def test_graph_specialization():
    rng = np.random.default_rng(5)
    for _ in range(200):
        G = random_connected_graph(rng, int(rng.integers(2, 31)), extra=0.05)
        X = _graph_complex(G)
        A = [(v,) for v in G.nodes if rng.random() < 0.5]
        leaves = {v for v, d in G.degree if d == 1}
        expected = leaves <= {a[0] for a in A}
        verdict = computable_type(Pair(X, A))
        assert (verdict.overall == Overall.COMPUTABLE) == expected


def test_graph_leaves_decide():
    rng = np.random.default_rng(29)
    for _ in range(200):
        G = random_connected_graph(rng, int(rng.integers(2, 31)), extra=0.05)
        X = _graph_complex(G)
        leaves = sorted(v for v, d in G.degree if d == 1)
        verdict = computable_type(Pair(X, [(v,) for v in leaves]))
        assert verdict.overall == Overall.COMPUTABLE, sorted(G.edges)
        if not leaves:
            continue
        dropped = leaves[int(rng.integers(len(leaves)))]
        inner = [v for v in G.nodes if v not in leaves and rng.random() < 0.5]
        A = [(v,) for v in leaves + inner if v != dropped]
        verdict = computable_type(Pair(X, A))
        assert verdict.overall == Overall.NOT_COMPUTABLE
        assert dropped in {lv.vertex for lv in verdict.failing}


def test_inapplicable():
    edge = closure([(0, 1)])
    verdict = computable_type(Pair(edge, edge))
    assert verdict.applicability == Applicability.EMPTY_INTERIOR_VIOLATED
    assert verdict.overall == Overall.INAPPLICABLE
    assert verdict.exit_code == ExitCode.INAPPLICABLE
    assert verdict.locals == []

    verdict = computable_type(Pair(closure([(0, 1, 2, 3)])))
    assert verdict.applicability == Applicability.DIMENSION_UNSUPPORTED


def test_free_vertex_flags():
    verdict = computable_type(generate('segment_bare').pair)
    assert verdict.overall == Overall.NOT_COMPUTABLE
    assert verdict.flags == [Flags.FREE_VERTEX_OUTSIDE_A, Flags.ISOLATED_LINK_EXCEPTION]
    assert {a['vertex'] for a in verdict.assumptions} == {'0', '1'}


def test_soundness_and_certificates():
    rng = np.random.default_rng(3)
    for _ in range(60):
        verdict = computable_type(random_applicable_pair(rng))
        assert verdict.applicability == Applicability.APPLICABLE
        assert (verdict.overall == Overall.COMPUTABLE) == all(lv.passes for lv in verdict.locals)
        assert all(lv.check() for lv in verdict.locals)


def test_parallel_matches_sequential():
    P = generate('n_squares', 4).pair
    assert computable_type(P, parallel=True, workers=3).to_dict() == computable_type(P).to_dict()
    P = generate('dunce_hat').pair
    assert computable_type(P, parallel=True).to_dict() == computable_type(P, progress=True).to_dict()


def test_verdict_dict_round_trip():
    verdict = computable_type(generate('dunce_hat').pair)
    again = Verdict.from_dict(verdict.to_dict())
    assert again.to_dict() == verdict.to_dict()
    assert all(lv.check() for lv in again.locals)


def test_plus_boundary_pair_examples():
    P, D = plus_boundary_pair(closure([(0, 1, 2)]))
    assert P.A == simplex_boundary((0, 1, 2))
    assert len(D.pieces) == 1

    X = generate('dunce_hat').pair.X
    P, D = plus_boundary_pair(X)
    assert P.A == skeleton(X, 1)
    assert len(D.pieces) == 27

    P, D = plus_boundary_pair(closure([(0,)]))
    assert P.A.is_empty()
    assert union_check(P, D).overall == Overall.COMPUTABLE


@settings(max_examples=100)
@given(complexes())
def test_plus_boundary_pairs_both_routes(X):
    P, D = plus_boundary_pair(X)
    by_union = union_check(P, D)
    assert by_union.overall == Overall.COMPUTABLE
    assert Flags.BALL_SPHERE_PAIR in by_union.flags
    direct = computable_type(P)
    if direct.applicability == Applicability.APPLICABLE:
        assert direct.overall == Overall.COMPUTABLE


def test_union_check_two_triangles():
    X = closure([(0, 1, 2), (1, 2, 3)])
    pieces = [
        Pair(closure([(0, 1, 2)]), simplex_boundary((0, 1, 2))),
        Pair(closure([(1, 2, 3)]), simplex_boundary((1, 2, 3))),
    ]
    A = pieces[0].A | pieces[1].A
    assert all(is_ball_sphere_pair(p) for p in pieces)
    verdict = union_check(Pair(X, A), Decomposition(pieces))
    assert verdict.overall == Overall.COMPUTABLE
    assert [a['piece'] for a in verdict.assumptions] == [0, 1]


def test_union_check_inconclusive():
    P = generate('segment_bare').pair
    verdict = union_check(P, Decomposition([P]))
    assert verdict.applicability == Applicability.INCONCLUSIVE
    assert verdict.overall == Overall.INAPPLICABLE
    assert verdict.exit_code == ExitCode.INAPPLICABLE
    assert verdict.pieces[0].overall == Overall.NOT_COMPUTABLE


def test_union_check_any_dimension():
    P, D = plus_boundary_pair(closure([(0, 1, 2, 3)]))
    assert computable_type(P).applicability == Applicability.DIMENSION_UNSUPPORTED
    assert union_check(P, D).overall == Overall.COMPUTABLE


def test_cover_violation():
    X = closure([(0, 1, 2), (1, 2, 3)])
    with pytest.raises(CoverViolation):
        union_check(Pair(X), Decomposition([Pair(closure([(0, 1, 2)]))]))
    with pytest.raises(CoverViolation):
        Decomposition([Pair(closure([(0, 5)]))]).validate(Pair(X))
    with pytest.raises(CoverViolation):
        Decomposition([Pair(X)]).validate(Pair(X, [(0,)]))


def test_union_check_consistent_with_direct():
    rng = np.random.default_rng(17)
    agreed = 0
    for _ in range(80):
        P = random_applicable_pair(rng, density=float(rng.choice([0.6, 1.0])))
        pieces = []
        for top in P.X.sorted_maximal:
            Xi = closure([top])
            pieces.append(Pair(Xi, Complex(P.A.simplices & Xi.simplices)))
        verdict = union_check(P, Decomposition(pieces))
        if verdict.overall == Overall.COMPUTABLE:
            agreed += 1
            assert computable_type(P).overall == Overall.COMPUTABLE
    assert agreed > 0


def test_boundary_one_is_necessary():
    rng = np.random.default_rng(23)
    seen = 0
    for _ in range(2000):
        if seen == 100:
            break
        P = random_applicable_pair(rng, density=0.5)
        missing = [s for s in free_simplices(P.X) if s not in P.A]
        if not missing:
            continue
        seen += 1
        assert not boundary(P.X, 'one') <= P.A
        verdict = computable_type(P)
        assert verdict.overall == Overall.NOT_COMPUTABLE
        ends = {v for s in missing for v in s}
        assert ends & {lv.vertex for lv in verdict.failing}
    assert seen == 100


@pytest.mark.parametrize('seed', range(50))
def test_subdivision_invariance(seed):
    rng = np.random.default_rng(seed)
    P = random_applicable_pair(rng, random_complex(rng, n_vertices=6, n_triangles=4))
    sd = P.subdivide()
    assert computable_type(P).overall == computable_type(sd).overall
    assert euler_characteristic(P.X) == euler_characteristic(sd.X)


@pytest.mark.parametrize('uri', self_test_uris())
def test_subdivision_invariance_gallery(uri):
    P = from_uri(uri).pair
    sd = P.subdivide()
    assert computable_type(P).overall == computable_type(sd).overall
    assert euler_characteristic(P.X) == euler_characteristic(sd.X)


@pytest.mark.parametrize('seed', range(10))
def test_relabel_invariance(seed):
    rng = np.random.default_rng(seed)
    P = random_applicable_pair(rng)
    vertices = list(P.X.vertices)
    images = rng.choice(100, size=len(vertices), replace=False).tolist()
    Q = P.relabel(dict(zip(vertices, images)))
    before, after = computable_type(P), computable_type(Q)
    assert before.overall == after.overall
    moved = {v: w for v, w in zip(vertices, images)}
    assert sorted(moved[lv.vertex] for lv in before.failing) == sorted(
        lv.vertex for lv in after.failing
    )
