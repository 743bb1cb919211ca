import pytest

import oracles
from qcw.analysis import is_quasicategory
from qcw.corpus import homotopic_pair, iso_groupoid, square_category
from qcw.homotopy import (CatFunctor, NotAQuasiCategory, canonical_comparison, contractible_groupoid,
                          discrete_category, flat, hom_category, homotopy_category, homotopy_relation,
                          identity_functor, is_marked_map, marked_edge_in_exponential, natural_marking, nerve,
                          poset_category, product_category, sharp, sliced_hom, smothering_check,
                          terminal_category)
from qcw.homotopy.categories import CategoryError, FiniteCategory, chain_category
from qcw.kernel import Product, horn, identity_map, standard_simplex, vertex_map
from qcw.kernel.mapping import Exponential
from qcw.kernel.standard import iso_interval, poset_nerve

D0, D1, D2 = standard_simplex(0), standard_simplex(1), standard_simplex(2)


def edges(A):
    return [A.simplex(c) for c in A.cells(1)]


# finite categories

def test_composition_table_is_checked():
    with pytest.raises(CategoryError):
        FiniteCategory([0, 1], {"i0": (0, 0), "i1": (1, 1), "f": (0, 1)}, {0: "i0", 1: "i1"},
                       {("i0", "i0"): "i0", ("i1", "i1"): "i1", ("f", "i0"): "f"})


def test_product_category_counts():
    P = product_category(chain_category(1), contractible_groupoid([0, 1]))
    assert len(P.objects) == 4 and len(P.arrows) == 3 * 4


# nerves

def test_nerve_of_terminal_category_is_point():
    assert oracles.isomorphic(nerve(terminal_category(), 3), D0)


def test_nerve_of_chain_is_simplex():
    assert oracles.isomorphic(nerve(chain_category(2), 4), D2)


def test_nerve_of_iso_groupoid_counts():
    N = nerve(contractible_groupoid([0, 1]), 3)
    assert N.counts() == tuple(len(oracles.groupoid_strings([0, 1], n)) for n in range(4)) == (2, 2, 2, 2)


def test_nerve_cells_are_identity_free_strings():
    C = square_category()
    N = nerve(C, 3)
    chains = oracles.chains(C.objects, lambda a, b: a[0] <= b[0] and a[1] <= b[1])
    assert N.counts() == tuple(len(chains[d]) for d in sorted(chains))


# homotopy relation and homotopy categories

def test_every_edge_is_homotopic_to_itself():
    A = homotopic_pair(4)
    assert all(homotopy_relation(A, e, e) for e in edges(A))


def test_homotopy_in_a_nerve_is_equality():
    A = nerve(square_category(), 3)
    es = edges(A)
    for e in es:
        for f in es:
            if A.boundary_of(e) == A.boundary_of(f):
                assert homotopy_relation(A, e, f) == (e == f)


def test_two_fillers_of_one_horn_are_homotopic():
    A = homotopic_pair(4)
    parallel = [(e, f) for e in edges(A) for f in edges(A) if e != f and A.boundary_of(e) == A.boundary_of(f)]
    assert parallel
    assert all(homotopy_relation(A, e, f) for e, f in parallel)


def test_homotopy_relation_needs_parallel_edges():
    A = D2
    e, f = edges(A)[0], edges(A)[1]
    with pytest.raises(ValueError):
        homotopy_relation(A, e, f)


def test_homotopy_category_of_nerve():
    C = square_category()
    H = homotopy_category(nerve(C, 3))
    assert len(H.objects) == len(C.objects) and len(H.arrows) == len(C.arrows)


def test_homotopy_category_of_simplex_is_poset():
    H = homotopy_category(D2)
    assert len(H.arrows) == 6
    assert all(not H.is_iso(a) or H.is_identity(a) for a in H.arrows)


def test_homotopy_category_of_iso_interval():
    H = homotopy_category(iso_interval(4))
    assert len(H.objects) == 2 and len(H.arrows) == 4 and H.is_groupoid()


def test_homotopic_pair_has_one_class():
    A = homotopic_pair(4)
    H = homotopy_category(A)
    assert len(H.arrows) < len(A.total(1))


def test_homotopy_category_refuses_non_quasicategories():
    with pytest.raises(NotAQuasiCategory):
        homotopy_category(horn(2, 1))


def test_composition_is_independent_of_filler():
    A = homotopic_pair(4)
    H = homotopy_category(A)
    for t in A.total(2):
        d0, d1, d2 = A.boundary_of(t)
        assert H.comp(H.cls(d0), H.cls(d2)) == H.cls(d1)


def test_homotopy_category_of_product():
    A, B = D1, iso_interval(4)
    P = Product(A, B).sset
    HP = homotopy_category(P)
    HA, HB = homotopy_category(A), homotopy_category(B)
    assert len(HP.objects) == len(HA.objects) * len(HB.objects)
    assert len(HP.arrows) == len(HA.arrows) * len(HB.arrows)


# markings

def preorder():
    rank = {0: 0, 1: 0, 2: 1, 3: 2}
    return poset_category([0, 1, 2, 3], lambda a, b: rank[a] <= rank[b], name="P")


def test_poset_nerve_is_flat():
    A = nerve(square_category(), 3)
    assert natural_marking(A).marked == flat(A).marked


def test_groupoid_nerve_is_sharp():
    A = iso_groupoid(3)
    assert natural_marking(A).marked == sharp(A).marked


def test_marking_picks_out_the_isomorphisms():
    C = preorder()
    A = nerve(C, 3)
    M = natural_marking(A)
    marked = {A.labels[e.cell] for e in M.marked if not A.is_degenerate(e)}
    assert marked == {((0, 1),), ((1, 0),)}
    assert all(A.simplex(v).degen == (0,) for v in A.cells(0))


def test_marked_edges_compose():
    A = iso_groupoid(3)
    M = natural_marking(A)
    for t in A.total(2):
        d0, d1, d2 = A.boundary_of(t)
        if d0 in M.marked and d2 in M.marked:
            assert d1 in M.marked


def test_identity_is_a_marked_map():
    A = iso_groupoid(3)
    assert is_marked_map(identity_map(A), natural_marking(A), natural_marking(A))
    assert not is_marked_map(identity_map(A), sharp(A), flat(A))


def test_marked_edge_from_a_point():
    for A, expect in ((iso_groupoid(3), True), (D1, False)):
        MA = natural_marking(A)
        E = Exponential(D0, A, 1)
        for e in E.sset.cells(1):
            k = E.map_of(E.sset.simplex(e))
            r = marked_edge_in_exponential(k, flat(D0), MA)
            assert r["marked_map"] == r["vertex_condition"] == expect
            assert r["consistent"]


def test_marked_edge_groupoid_valued():
    A = iso_groupoid(3)
    E = Exponential(D1, A, 1)
    for e in E.sset.cells(1):
        r = marked_edge_in_exponential(E.map_of(E.sset.simplex(e)), natural_marking(D1), natural_marking(A))
        assert r["marked_map"] and r["vertex_condition"] and r["edge_condition"]


# hom-categories

def test_hom_category_from_point():
    B = homotopic_pair(4)
    H, hB = hom_category(D0, B), homotopy_category(B)
    assert len(H.objects) == len(hB.objects) and len(H.arrows) == len(hB.arrows)


def test_hom_category_into_point_is_terminal():
    H = hom_category(nerve(square_category(), 3), D0)
    assert len(H.objects) == 1 and len(H.arrows) == 1


def test_hom_category_interval_into_interval():
    H = hom_category(D1, D1)
    assert len(H.objects) == 3


# smothering

def test_identity_functor_smothers():
    C = square_category()
    r = smothering_check(identity_functor(C))
    assert r.verdict and r.fibres_ok


def test_groupoid_to_point_smothers():
    I, one = contractible_groupoid([0, 1]), terminal_category()
    F = CatFunctor(I, one, {0: 0, 1: 0}, {a: (0, 0) for a in I.arrows})
    r = smothering_check(F)
    assert r.verdict and r.fibres_ok


def test_discrete_into_arrow_is_not_full():
    two, C = discrete_category([0, 1]), chain_category(1)
    F = CatFunctor(two, C, {0: 0, 1: 1}, {(0, 0): (0, 0), (1, 1): (1, 1)})
    r = smothering_check(F)
    assert r.surjective_on_objects and not r.full and not r.verdict
    assert r.unfilled_arrows


def test_inclusion_of_a_point_is_not_surjective():
    one, C = terminal_category(), chain_category(1)
    r = smothering_check(CatFunctor(one, C, {0: 0}, {(0, 0): (0, 0)}))
    assert not r.surjective_on_objects and r.missing_objects == [1]


def test_cotensor_of_nerve_is_iso():
    A = nerve(square_category(), 3)
    F = canonical_comparison("cotensor2", A)
    assert F.is_iso()


def test_comma_of_nerve_functors_is_iso():
    A = poset_nerve([0, 1, 2], lambda a, b: a <= b)
    F = canonical_comparison("comma", identity_map(A), identity_map(A))
    assert F.is_iso()


def test_homotopic_pair_comparison_is_not_injective_but_smothers():
    A = homotopic_pair(4)
    F = canonical_comparison("cotensor2", A)
    images = [F.on_objects[o] for o in F.source.objects]
    assert len(set(images)) < len(images)
    r = smothering_check(F)
    assert r.verdict and r.fibres_ok


def test_cotensor_with_iso_interval():
    A = iso_groupoid(4)
    r = smothering_check(canonical_comparison("cotensorI", A))
    assert r.verdict and r.fibres_ok


# sliced homs

def test_sliced_hom_into_identity_is_a_point():
    A = D2
    p = vertex_map(A, A.cells(0)[1])
    S = sliced_hom(p, identity_map(A), 3)
    assert S.sset.counts() == (1,)


def test_sliced_hom_of_identities_is_a_point():
    A = horn(2, 1)
    assert sliced_hom(identity_map(A), identity_map(A), 2).sset.counts() == (1,)


def test_sliced_hom_of_slice_projections():
    from qcw.constructions import slice_over
    A = D1
    p = slice_over(vertex_map(A, A.cells(0)[0]), 3).pi
    q = slice_over(vertex_map(A, A.cells(0)[1]), 3).pi
    S = sliced_hom(p, q, 2)
    # E = A/0 is the single vertex over 0; F = A/1 has two vertices, one over each end
    F = q.source
    over_zero = [v for v in F.cells(0) if q.images[v].cell == A.cells(0)[0]]
    assert len(S.sset.cells(0)) == len(over_zero) == 1
    assert is_quasicategory(S.sset, 2).status == "verified"


def test_sliced_hom_needs_a_common_target():
    with pytest.raises(ValueError):
        sliced_hom(identity_map(D1), identity_map(D2), 1)
