import pytest

import oracles
from qcw.analysis import find_terminal, is_isofibration
from qcw.constructions import (CommaObject, FatJoin, Join, comparison_s, fat_join, fat_join_comparison,
                               fat_join_pushout, fat_slice_over, horn_join_iso, join, join_simplex_iso,
                               leibniz_fat_join, leibniz_join, leibniz_product, retraction_data, slice_comparison,
                               slice_over, slice_under)
from qcw.corpus import arrow_projection, homotopic_pair, iso_groupoid, monotone_nerve_map, square_category
from qcw.homotopy.categories import chain_category
from qcw.kernel import boundary, horn, identity_map, standard_simplex, vertex_map
from qcw.kernel.lifting import to_point
from qcw.kernel.maps import EMPTY, empty_map
from qcw.kernel.mapping import Exponential
from qcw.kernel.standard import boundary_inclusion, horn_inclusion, poset_nerve

D0, D1, D2 = standard_simplex(0), standard_simplex(1), standard_simplex(2)


def vertex(X, k):
    return vertex_map(X, X.cells(0)[k])


# joins

@pytest.mark.parametrize("n,m", [(0, 0), (1, 0), (0, 2), (1, 1), (2, 1)])
def test_join_of_simplices(n, m):
    J, iso = join_simplex_iso(n, m)
    assert iso.is_iso()
    assert oracles.isomorphic(J.sset, standard_simplex(n + m + 1))


def test_join_with_empty_is_the_other_factor():
    Y = horn(2, 1)
    assert oracles.isomorphic(join(EMPTY, Y), Y)
    assert oracles.isomorphic(join(Y, EMPTY), Y)


def test_join_boundary_with_point_is_outer_horn():
    assert oracles.isomorphic(join(boundary(1), D0), horn(2, 2))
    assert oracles.isomorphic(join(D0, boundary(1)), horn(2, 0))


def test_join_counts_are_pairs():
    X, Y = horn(2, 1), boundary(1)
    J = join(X, Y)
    cx, cy = X.counts(), Y.counts()
    expect = [0] * (len(cx) + len(cy))
    for i, a in enumerate(cx):
        expect[i] += a
        for j, b in enumerate(cy):
            expect[i + j + 1] += a * b
    for j, b in enumerate(cy):
        expect[j] += b
    assert J.counts() == tuple(expect)


def test_join_is_associative():
    X, Y, Z = boundary(1), D0, horn(2, 1)
    assert oracles.isomorphic(join(join(X, Y), Z), join(X, join(Y, Z)))


def test_join_inclusions_are_monos():
    J = Join(horn(2, 0), D1)
    assert all(i.is_mono() for i in J.inclusions)


# fat joins

def test_fat_join_with_empty():
    X = horn(2, 1)
    assert oracles.isomorphic(fat_join(X, EMPTY), X)
    assert oracles.isomorphic(fat_join(EMPTY, X), X)


def test_fat_join_of_points_is_interval():
    assert oracles.isomorphic(fat_join(D0, D0), D1)


@pytest.mark.parametrize("p,q", [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1)])
def test_fat_join_counts(p, q):
    assert fat_join(standard_simplex(p), standard_simplex(q)).counts() == oracles.fat_join_counts(p, q)


def test_fat_join_interval_point_counts():
    assert fat_join(D1, D0).counts() == (3, 4, 2)


@pytest.mark.parametrize("X,Y", [(D1, D0), (boundary(1), D1), (horn(2, 1), D0)])
def test_direct_fat_join_matches_pushout(X, Y):
    F = FatJoin(X, Y)
    P = fat_join_pushout(X, Y)
    assert fat_join_comparison(F, P).is_iso()


# Leibniz constructions

@pytest.mark.parametrize("n,k,m", [(2, 1, 0), (2, 1, 1), (3, 2, 0)])
def test_leibniz_join_of_horn_and_boundary(n, k, m):
    iso = horn_join_iso(n, k, m)
    assert iso.is_iso()
    assert oracles.isomorphic(iso.target, horn(n + m + 1, k))


@pytest.mark.parametrize("n,m,k", [(0, 2, 1), (1, 2, 0), (1, 1, 1)])
def test_leibniz_join_of_boundary_and_horn(n, m, k):
    iso = horn_join_iso(n, k, m, horn_first=False)
    assert iso.is_iso()
    assert oracles.isomorphic(iso.target, horn(n + m + 1, n + k + 1))


def test_leibniz_product_of_empty_inclusions():
    i = empty_map(D0)
    L = leibniz_product(i, i)
    assert len(L.map.source) == 0
    assert L.map.target.counts() == (1,)


def test_leibniz_rejects_non_monos():
    with pytest.raises(ValueError):
        leibniz_join(to_point(D1), boundary_inclusion(1))


def test_leibniz_maps_are_monos():
    for i, j in [(horn_inclusion(2, 1), boundary_inclusion(1)), (boundary_inclusion(1), horn_inclusion(2, 0))]:
        assert leibniz_join(i, j).is_mono()
        assert leibniz_fat_join(i, j).is_mono()
        assert leibniz_product(i, j).is_mono()


# comparison s and retraction data

def test_comparison_on_vertices():
    F = FatJoin(D1, D0)
    s = comparison_s(D1, D0)
    assert len(s.source.cells(0)) == 3 and len(s.target.cells(0)) == 3
    X_side = {s.images[F.inclusions[0].images[v].cell].cell for v in D1.cells(0)}
    Y_side = {s.images[F.inclusions[1].images[v].cell].cell for v in D0.cells(0)}
    assert len(X_side) == 2 and len(Y_side) == 1 and not X_side & Y_side


def test_comparison_with_empty_left_is_identity():
    Y = horn(2, 1)
    s = comparison_s(EMPTY, Y)
    assert s.is_iso()
    assert oracles.isomorphic(s.source, Y)


def test_comparison_is_surjective_onto_simplex():
    s = comparison_s(D1, D0)
    assert oracles.isomorphic(s.target, D2)
    assert s.is_surjective()


def test_retraction_data_small():
    R = retraction_data(0, 0)
    assert R.t.is_iso()
    assert all(R.checks.values())
    R = retraction_data(2, 0)
    assert all(R.checks.values())
    assert R.t.then(R.s).images == identity_map(R.join.sset).images


# slices

def test_slice_of_point_is_point():
    S = slice_over(identity_map(D0), 3)
    assert S.sset.counts() == (1,)


def test_slice_over_top_of_interval():
    S = slice_over(vertex(D1, 1), 2)
    assert len(S.sset.cells(0)) == len(oracles.arrows_into([0, 1], lambda a, b: a <= b, 1)) == 2


def test_slice_under_bottom_of_interval():
    S = slice_under(vertex(D1, 0), 2)
    assert len(S.sset.cells(0)) == 2


@pytest.mark.parametrize("A", [D2, homotopic_pair(4), iso_groupoid(4)])
def test_slice_projections_are_isofibrations(A):
    S = slice_over(vertex(A, len(A.cells(0)) - 1), 3)
    assert is_isofibration(S.pi, 3).status == "verified"


def test_fat_slice_of_point_is_point():
    assert fat_slice_over(identity_map(D0), 3).sset.counts() == (1,)


@pytest.mark.parametrize("A", [D2, homotopic_pair(4)])
def test_fat_slice_vertices_are_edges_into_the_vertex(A):
    for k, a in enumerate(A.cells(0)):
        S = fat_slice_over(vertex(A, k), 1)
        edges = [e for e in A.total(1) if A.act(e, (1,)).cell == a]
        assert len(S.sset.cells(0)) == len(edges)


def test_fat_slice_matches_comma_with_vertex():
    A = homotopic_pair(4)
    a = vertex(A, 1)
    F = fat_slice_over(a, 2)
    K = CommaObject(identity_map(A), a, 2)
    assert F.sset.counts() == K.sset.counts()


def test_slice_terminal_vertex_is_identity_cone():
    A = D2
    S = slice_over(vertex(A, 2), 3)
    found = find_terminal(S.sset, 3)
    t = found.witness.vertex
    assert S.pi.images[t].cell == A.cells(0)[2]


def test_slice_comparison_of_point_is_identity():
    g = slice_comparison(identity_map(D0), 2)
    assert g.is_iso()


def test_slice_comparison_bijective_over_poset():
    A = poset_nerve([0, 1, 2], lambda a, b: a <= b)
    for k in range(3):
        g = slice_comparison(vertex(A, k), 3)
        assert g.is_iso()


# comma objects

def test_comma_of_identities_is_arrow_object():
    A = horn(2, 1)
    K = CommaObject(identity_map(A), identity_map(A), 2)
    E = Exponential(D1, A, 2)
    assert oracles.isomorphic(K.sset, E.sset)


def test_comma_over_points_counts_edges():
    A = homotopic_pair(4)
    for a in range(len(A.cells(0))):
        for b in range(len(A.cells(0))):
            K = CommaObject(vertex(A, a), vertex(A, b), 0)
            hom = [e for e in A.total(1)
                   if A.act(e, (0,)).cell == A.cells(0)[a] and A.act(e, (1,)).cell == A.cells(0)[b]]
            assert len(K.sset.cells(0)) == len(hom)


@pytest.mark.parametrize("C", [chain_category(2), square_category()])
def test_comma_of_nerve_functors_is_nerve_of_comma(C):
    A, F, q = arrow_projection(C, 3)
    K = CommaObject(identity_map(A), identity_map(A), 3)
    assert oracles.isomorphic(K.sset, F)


def test_comma_level_zero_is_squares():
    A = poset_nerve([0, 1, 2], lambda a, b: a <= b)
    B = D1
    leq = lambda a, b: a <= b
    f = monotone_nerve_map(B, A, lambda v: v + 1)
    g = identity_map(A)
    K = CommaObject(f, g, 0)
    squares = [(b, c) for b in (0, 1) for c in (0, 1, 2) if leq(b + 1, c)]
    assert len(K.sset.cells(0)) == len(squares) == 3


def test_comma_projections_are_isofibrations():
    A = D2
    K = CommaObject(identity_map(A), identity_map(A), 3)
    assert is_isofibration(K.p0, 3).status == "verified"
    assert is_isofibration(K.p1, 3).status == "verified"


def test_comma_needs_a_cospan():
    with pytest.raises(ValueError):
        CommaObject(identity_map(D1), identity_map(D2), 1)
