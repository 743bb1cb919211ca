"""Invariants checked on generated inputs."""
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qcw.analysis import is_quasicategory
from qcw.constructions import join, leibniz_fat_join, leibniz_join, leibniz_product, retraction_data
from qcw.homotopy import homotopy_category, nerve, poset_category
from qcw.kernel import (SimplicialOperator, act, boundary, compose_operators, epi_mono_factor, horn,
                        standard_simplex)
from qcw.kernel.lifting import check_square_independently, has_rlp, squares, to_point
from qcw.kernel.extensions import Budget
from qcw.kernel.mapping import Exponential
from qcw.kernel.serialize import dump_set, load_set
from qcw.kernel.standard import boundary_inclusion, horn_inclusion, iso_interval, poset_nerve

SMALL = settings(max_examples=25)


@st.composite
def operators(draw, max_rank=4):
    n = draw(st.integers(0, max_rank))
    m = draw(st.integers(0, max_rank))
    values = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return SimplicialOperator(tuple(values), n)


@st.composite
def composable(draw):
    a = draw(operators())
    m = a.source_rank
    k = draw(st.integers(0, 4))
    values = sorted(draw(st.lists(st.integers(0, m), min_size=k + 1, max_size=k + 1)))
    return a, SimplicialOperator(tuple(values), m)


@st.composite
def posets(draw):
    """A random order on up to four points, as the transitive closure of random upward edges."""
    n = draw(st.integers(1, 4))
    up = {(i, j) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())}
    leq = {(i, i) for i in range(n)} | up
    changed = True
    while changed:
        extra = {(a, d) for a, b in leq for c, d in leq if b == c} - leq
        changed = bool(extra)
        leq |= extra
    return list(range(n)), leq


MONOS = [("boundary1", lambda: boundary_inclusion(1)), ("boundary2", lambda: boundary_inclusion(2)),
         ("horn20", lambda: horn_inclusion(2, 0)), ("horn21", lambda: horn_inclusion(2, 1))]
SETS = [lambda: standard_simplex(0), lambda: standard_simplex(1), lambda: boundary(1), lambda: horn(2, 1),
        lambda: iso_interval(2)]


@given(operators())
def test_epi_mono_factorisation_is_unique(alpha):
    e, m = epi_mono_factor(alpha)
    assert compose_operators(m, e) == alpha
    assert oracles.epi_mono_pairs(alpha.values, alpha.target_rank) == [(e.values, m.values)]


@given(operators())
def test_action_lands_in_normal_form(alpha):
    X = iso_interval(4)
    for c in X.cells(alpha.target_rank):
        y = act(X, X.simplex(c), alpha)
        assert not X.is_degenerate(X.simplex(y.cell))
        assert act(X, y, SimplicialOperator.identity(alpha.source_rank)) == y


@given(composable())
def test_action_is_functorial(pair):
    a, b = pair
    X = iso_interval(4)
    for c in X.cells(a.target_rank):
        x = X.simplex(c)
        assert act(X, act(X, x, a), b) == act(X, x, compose_operators(a, b))


@SMALL
@given(st.sampled_from(SETS), st.sampled_from(SETS), st.sampled_from(SETS))
def test_join_is_associative(a, b, c):
    X, Y, Z = a(), b(), c()
    assert oracles.isomorphic(join(join(X, Y), Z), join(X, join(Y, Z)))


@SMALL
@given(st.sampled_from(MONOS), st.sampled_from(MONOS))
def test_leibniz_constructions_preserve_monos(i, j):
    i, j = i[1](), j[1]()
    assert leibniz_join(i, j).is_mono()
    assert leibniz_fat_join(i, j).is_mono()
    assert leibniz_product(i, j).is_mono()


@settings(max_examples=8)
@given(st.integers(0, 2), st.integers(0, 1))
def test_comparison_has_a_section(n, m):
    R = retraction_data(n, m)
    assert R.t.then(R.s).images == [R.join.sset.simplex(c) for c in range(len(R.join.sset))]
    assert all(R.checks.values())


@SMALL
@given(posets())
def test_serialisation_is_deterministic(P):
    points, leq = P
    X = poset_nerve(points, lambda a, b: (a, b) in leq)
    text = dump_set(X)
    assert dump_set(load_set(text)) == text
    assert oracles.isomorphic(load_set(text), X)


@SMALL
@given(st.sampled_from(SETS[:4]), st.sampled_from(SETS[:4]))
def test_exponential_cells_are_maps(a, b):
    X, A = a(), b()
    E = Exponential(X, A, 1)
    for c in range(len(E.sset)):
        E.map_of(E.sset.simplex(c)).validate()


@SMALL
@given(st.sampled_from([standard_simplex(2), horn(2, 1), horn(3, 1), iso_interval(3), boundary(2)]),
       st.integers(2, 3))
def test_verdicts_are_monotone_in_depth(X, d):
    shallow, deep = is_quasicategory(X, d).status, is_quasicategory(X, d + 1).status
    if shallow == "refuted":
        assert deep == "refuted"
    if deep == "verified":
        assert shallow == "verified"


@SMALL
@given(st.sampled_from(SETS), st.sampled_from(MONOS))
def test_lifting_verdict_matches_independent_scan(x, i):
    p, i = to_point(x()), i[1]()
    v = has_rlp(p, i)
    every = all(check_square_independently(p, i, u, w) for u, w in squares(p, i, Budget()))
    assert (v.status == "verified") == every


@SMALL
@given(posets())
def test_homotopy_category_of_nerve_recovers_poset(P):
    points, leq = P
    C = poset_category(points, lambda a, b: (a, b) in leq)
    H = homotopy_category(nerve(C, 3))
    assert len(H.objects) == len(C.objects) and len(H.arrows) == len(C.arrows)
    assert sum(1 for a in H.arrows if not H.is_identity(a)) == len(leq) - len(points)


@SMALL
@given(posets())
def test_poset_nerve_counts_match_chains(P):
    points, leq = P
    X = poset_nerve(points, lambda a, b: (a, b) in leq)
    assert X.counts() == oracles.chain_counts(points, lambda a, b: (a, b) in leq)
