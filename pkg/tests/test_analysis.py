import pytest

import oracles
from qcw.analysis import (absolute_left_lifting_pointwise, absolute_right_lifting_pointwise, check_lifting_candidate,
                          find_colimit, find_initial, find_limit, find_terminal, has_rlp, induce_by_search,
                          is_initial_vertex, is_isofibration, is_kan, is_quasicategory, is_terminal_vertex,
                          is_trivial_fibration, isomorphic_over, marked_special_horn_check, one_cell_induction,
                          search_adjunction, verify_adjunction, verify_fibred_equivalence, verify_rari)
from qcw.analysis.adjunction import AdjunctionWitness, constant_homotopy, cylinder, homotopies
from qcw.analysis.induction import whiskered_cell
from qcw.constructions import CommaObject, slice_comparison, slice_over
from qcw.corpus import (corpus_adjunctions, divisor_lattice, homotopic_pair, iota_trunc, iso_groupoid,
                        monotone_nerve_map, square_nerve, vertex_named, vertexwise_map)
from qcw.homotopy import natural_marking
from qcw.kernel import Product, boundary, coproduct, horn, identity_map, standard_simplex, vertex_map
from qcw.kernel.extensions import Budget
from qcw.kernel.lifting import check_square_independently, squares, to_point
from qcw.kernel.maps import SimplicialMap
from qcw.kernel.sset import Simplex
from qcw.kernel.standard import horn_inclusion, iso_interval, poset_nerve

D0, D1, D2 = standard_simplex(0), standard_simplex(1), standard_simplex(2)


def vertex(X, k):
    return vertex_map(X, X.cells(0)[k])


# lifting properties

def test_everything_lifts_against_identities():
    p = to_point(horn(2, 1))
    assert has_rlp(p, identity_map(D1)).status == "verified"


def test_nerve_fills_inner_two_horns():
    assert has_rlp(to_point(square_nerve()), horn_inclusion(2, 1)).status == "verified"


def test_horn_does_not_fill_itself():
    H = horn(2, 1)
    v = has_rlp(to_point(H), horn_inclusion(2, 1))
    assert v.status == "refuted" and v.counterexample


def test_refutations_recheck_independently():
    H = horn(2, 1)
    p, i = to_point(H), horn_inclusion(2, 1)
    bad = [(u, w) for u, w in squares(p, i, Budget()) if not check_square_independently(p, i, u, w)]
    assert len(bad) == 1


@pytest.mark.parametrize("X", [D2, square_nerve(), iso_groupoid(4), poset_nerve([1, 2, 3, 6], lambda a, b: b % a == 0)])
def test_nerves_are_quasicategories(X):
    assert is_quasicategory(X, 4).status == "verified"


def test_horn_is_not_a_quasicategory():
    v = is_quasicategory(horn(2, 1), 2)
    assert v.status == "refuted" and v.depth_checked == 2


def test_groupoid_is_kan_and_chain_is_not():
    assert is_kan(iso_groupoid(4), 3).status == "verified"
    assert is_kan(D1, 2).status == "refuted"


def test_isofibration_between_nerves():
    A = iso_groupoid(4)
    assert is_isofibration(to_point(A), 3).status == "verified"
    P = Product(D1, A)
    assert is_isofibration(P.proj[0], 3).status == "verified"
    assert is_isofibration(P.proj[1], 3).status == "verified"


def test_discrete_objects_into_iso_interval_is_not_an_isofibration():
    I = iso_interval(3)
    p = vertexwise_map(boundary(1), I, lambda v: I.cells(0)[v])
    v = is_isofibration(p, 3)
    assert v.status == "refuted" and v.counterexample


def test_trivial_fibrations():
    A = iso_groupoid(4)
    assert is_trivial_fibration(identity_map(A), 3).status == "verified"
    _, trunc = iota_trunc()
    assert is_trivial_fibration(trunc, 3).status == "refuted"


def test_tiny_budget_is_inconclusive():
    v = is_quasicategory(iso_groupoid(4), 4, Budget(nodes=5))
    assert v.status == "inconclusive" and v.holds is None


def test_deeper_checks_agree_with_shallow_ones():
    for X in (D2, horn(2, 1), homotopic_pair(4)):
        a, b = is_quasicategory(X, 2).status, is_quasicategory(X, 3).status
        assert a == b or a == "inconclusive"


# marked horns

def test_groupoid_passes_marked_horns():
    A = iso_groupoid(4)
    assert marked_special_horn_check(natural_marking(A), 3).status == "verified"


def test_poset_passes_marked_horns():
    A = square_nerve()
    assert marked_special_horn_check(natural_marking(A), 3).status == "verified"


# terminal objects

def test_top_of_poset_is_terminal():
    A = poset_nerve([1, 2, 3, 6], lambda a, b: b % a == 0)
    top = vertex_named(A, 6)
    assert is_terminal_vertex(A, top, 3).status == "verified"
    found = find_terminal(A, 3)
    assert found.witness.vertex == top
    assert oracles.poset_terminal([1, 2, 3, 6], lambda a, b: b % a == 0) == [6]


def test_bottom_is_initial():
    A = D2
    assert is_initial_vertex(A, A.cells(0)[0], 3).status == "verified"
    assert find_initial(A, 3).witness.vertex == A.cells(0)[0]


def test_two_points_have_no_terminal_vertex():
    A = coproduct(D0, D0).sset
    found = find_terminal(A, 2)
    assert found.witness is None and len(found.failures) == 2


def test_identity_cone_is_terminal_in_the_slice():
    A = homotopic_pair(4)
    a = A.cells(0)[-1]
    S = slice_over(vertex_map(A, a), 3)
    found = find_terminal(S.sset, 3)
    assert found.witness is not None
    t = found.witness.vertex
    assert S.pi.images[t].cell == a


# adjunctions

def test_identity_adjunction_verifies():
    w = corpus_adjunctions()["identity-chain2"]
    assert verify_adjunction(w).status == "verified"


def test_inclusion_truncation_adjunction_verifies():
    w = corpus_adjunctions()["iota-trunc"]
    assert verify_adjunction(w).status == "verified"


def test_perturbed_beta_is_refuted_at_its_face():
    w = corpus_adjunctions()["iota-trunc"]
    PB2 = cylinder(w.f.source, 2)
    A = w.f.target
    top = A.cells(0)[-1]
    beta = SimplicialMap(PB2.sset, A, [A.act(Simplex(top, (0,)), (0,) * (PB2.sset.dims[c] + 1))
                                        for c in range(len(PB2.sset))])
    v = verify_adjunction(AdjunctionWitness(w.f, w.u, w.eta, w.epsilon, w.alpha, beta))
    assert v.status == "refuted"
    assert "beta.d1 = id_f" in v.failures
    assert all(name.startswith("beta") for name in v.failures)


def test_search_finds_identity_witness():
    v = search_adjunction(identity_map(D2), identity_map(D2))
    assert v.status == "verified"
    assert verify_adjunction(v.witness).status == "verified"


def test_search_recovers_inclusion_truncation():
    iota, trunc = iota_trunc()
    v = search_adjunction(iota, trunc)
    assert v.status == "verified"


def test_search_fails_without_right_adjoint():
    f = vertex(D1, 1)
    v = search_adjunction(f, to_point(D1))
    assert v.status == "refuted"


def test_search_respects_budget():
    iota, trunc = iota_trunc()
    assert search_adjunction(iota, trunc, Budget(nodes=3)).status == "inconclusive"


def test_adjunction_needs_matching_shapes():
    w = corpus_adjunctions()["iota-trunc"]
    with pytest.raises(ValueError):
        verify_adjunction(AdjunctionWitness(w.f, w.u, w.epsilon, w.eta, w.alpha, w.beta))


# right adjoint right inverses

def identity_section(K):
    """a ↦ the identity cone at a, as a map A → A↓A."""
    A = K.A
    images = []
    for c in range(len(A)):
        x = A.simplex(c)
        n = x.dim
        D = standard_simplex(n)
        Q = K.cylinder(n)
        k = []
        for z in range(len(Q.sset)):
            s, _ = Q.components(Q.sset.simplex(z))
            k.append(A.act(x, tuple(D.labels[s.cell][i] for i in s.degen)))
        images.append(K.simplex_of(x, x, k))
    return SimplicialMap(A, K.sset, images)


def test_identity_is_its_own_rari():
    assert verify_rari(identity_map(D2), identity_map(D2), 3).status == "verified"


def test_codomain_projection_has_identity_cone_as_rari():
    A = D2
    K = CommaObject(identity_map(A), identity_map(A), 3)
    u = identity_section(K)
    assert verify_rari(K.p1, u, 3).status == "verified"


def test_identity_cone_is_not_rari_for_the_domain_projection():
    A = D1
    K = CommaObject(identity_map(A), identity_map(A), 3)
    v = verify_rari(K.p0, identity_section(K), 3)
    assert v.status == "refuted" and v.failures


def test_rari_needs_a_section():
    assert verify_rari(to_point(D1), vertex(D1, 1), 2).status == "verified"
    collapse = vertexwise_map(D1, D1, lambda v: D1.cells(0)[0])
    with pytest.raises(ValueError):
        verify_rari(identity_map(D1), collapse, 2)


# 1-cell induction

def test_induction_from_a_vertex():
    A = homotopic_pair(4)
    K = CommaObject(identity_map(A), identity_map(A), 2)
    for v in K.sset.cells(0)[:3]:
        a = vertex_map(K.sset, v)
        alpha = whiskered_cell(K, a)
        got = one_cell_induction(K, a.then(K.p0), a.then(K.p1), alpha)
        assert got.then(K.p0).images == a.then(K.p0).images
        assert isomorphic_over(K, a, got)


def test_identity_cone_induces_the_degenerate_section():
    A = D1
    K = CommaObject(identity_map(A), identity_map(A), 3)
    P = cylinder(A, 1)
    got = one_cell_induction(K, identity_map(A), identity_map(A), constant_homotopy(identity_map(A), P))
    assert got.images == identity_section(K).images


def test_search_order_does_not_matter_up_to_iso():
    A = homotopic_pair(4)
    K = CommaObject(identity_map(A), identity_map(A), 2)
    a = vertex_map(K.sset, K.sset.cells(0)[-1])
    alpha = whiskered_cell(K, a)
    b, c = a.then(K.p0), a.then(K.p1)
    first = induce_by_search(K, b, c, alpha)
    last = induce_by_search(K, b, c, alpha, reverse=True)
    assert first is not None and last is not None
    assert isomorphic_over(K, first, last)


# pointwise absolute liftings

def test_pointwise_lifting_to_a_point_is_terminal_search():
    A = D2
    r = absolute_right_lifting_pointwise(to_point(A), identity_map(D0), 3)
    assert r.holds
    assert r.lifting[0].cell == find_terminal(A, 3).witness.vertex


def test_pointwise_right_adjoint_of_inclusion():
    iota, trunc = iota_trunc()
    r = absolute_right_lifting_pointwise(iota, identity_map(iota.target), 3)
    assert r.holds
    got = {c: r.lifting[c].cell for c in iota.target.cells(0)}
    oracle = oracles.poset_right_adjoint({0: 0, 1: 1}, [0, 1], [0, 1, 2], lambda a, b: a <= b,
                                         lambda a, b: a <= b)
    assert got == {iota.target.cells(0)[a]: iota.source.cells(0)[b] for a, b in oracle.items()}


def test_inclusion_has_no_pointwise_left_adjoint():
    iota, _ = iota_trunc()
    r = absolute_left_lifting_pointwise(iota, identity_map(iota.target), 3)
    assert r.holds is False
    assert [e["vertex"] for e in r.entries if not e["holds"]] == ["(2)"]


def test_global_candidate_checks_pointwise():
    iota, trunc = iota_trunc()
    A = iota.target
    P = Product(A, D1)
    lam = vertexwise_map(P.sset, A, lambda z: P.components(P.sset.simplex(z))[0].cell if
                         P.components(P.sset.simplex(z))[1].cell == 1 else
                         iota.images[trunc.images[P.components(P.sset.simplex(z))[0].cell].cell].cell)
    good = check_lifting_candidate(iota, identity_map(A), trunc, lam, 3)
    assert good.holds
    bad_ell = monotone_nerve_map(A, iota.source, lambda v: 0)
    bad = check_lifting_candidate(iota, identity_map(A), bad_ell, lam, 3)
    assert bad.holds is False


# limits

def test_limit_of_empty_diagram_is_terminal():
    from qcw.kernel.maps import EMPTY
    A = divisor_lattice(12)
    d = SimplicialMap(EMPTY, A, [])
    r = find_limit(d, 2)
    assert r.status == "verified"
    assert A.labels[r.vertex.cell] in (12, (12,))


def test_meet_and_join_of_two_divisors():
    A = divisor_lattice(12)
    S = boundary(1)
    d = vertexwise_map(S, A, lambda v: vertex_named(A, (4, 6)[v]))
    lim, colim = find_limit(d, 2), find_colimit(d, 2)
    assert A.labels[lim.vertex.cell] in (2, (2,))
    assert A.labels[colim.vertex.cell] in (12, (12,))
    assert oracles.lattice_meet(4, 6) == 2 and oracles.lattice_join(4, 6) == 12


def test_all_terminal_cones_are_reported():
    A = iso_groupoid(4)
    S = boundary(1)
    r = find_limit(SimplicialMap(S, A, [A.simplex(A.cells(0)[0])] * 2), 2)
    assert r.status == "verified" and len(r.all_vertices) >= 2


# fibred equivalences

def test_identity_fibred_equivalence():
    A = D2
    P = cylinder(A, 1)
    c = constant_homotopy(identity_map(A), P)
    v = verify_fibred_equivalence(identity_map(A), identity_map(A), c, c, identity_map(A), identity_map(A))
    assert v.status == "verified"


def inverse(g):
    images = [None] * len(g.target)
    for c, img in enumerate(g.images):
        images[img.cell] = Simplex(c, img.degen)
    return SimplicialMap(g.target, g.source, images)


def test_slice_comparison_is_a_fibred_equivalence():
    A = poset_nerve([0, 1, 2], lambda a, b: a <= b)
    f = vertex(A, 2)
    thin = slice_over(f, 3)
    from qcw.constructions import fat_slice_over
    fat = fat_slice_over(f, 3)
    w = slice_comparison(f, 3, thin=thin, fat=fat)
    w2 = inverse(w)
    E, F = thin.sset, fat.sset
    alpha = constant_homotopy(identity_map(E), cylinder(E, 1))
    beta = constant_homotopy(identity_map(F), cylinder(F, 1))
    v = verify_fibred_equivalence(w, w2, alpha, beta, thin.pi, fat.pi)
    assert v.status == "verified"


def test_homotopy_with_non_degenerate_image_is_refuted():
    A = homotopic_pair(4)
    ident = identity_map(A)
    P = cylinder(A, 1)
    const = constant_homotopy(ident, P)
    other = next(h for h in homotopies(P, ident, ident, Budget()) if h.images != const.images)
    v = verify_fibred_equivalence(ident, ident, other, const, ident, ident)
    assert v.status == "refuted"
    assert set(v.failures) == {"p·alpha degenerate"}
