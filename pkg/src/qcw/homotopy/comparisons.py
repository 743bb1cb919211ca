"""Canonical comparison functors from homotopy categories of weak limits
to the corresponding limits of homotopy categories."""
from __future__ import annotations

from typing import Callable, Optional

from ..kernel.extensions import Budget
from ..kernel.limits import Pullback
from ..kernel.mapping import Exponential
from ..kernel.maps import SimplicialMap
from ..kernel.sset import FiniteSimplicialSet, Simplex
from ..kernel.standard import iso_interval, standard_simplex
from .categories import (CatFunctor, CategoryError, FiniteCategory, arrow_category, comma_category,
                         pullback_category)
from .hcat import HomotopyCategory, homotopy_category


def induced_functor(f: SimplicialMap, HX: HomotopyCategory, HY: HomotopyCategory) -> CatFunctor:
    """h(f): hX → hY."""
    return functor_from_h(HX, HY, lambda v: f(Simplex(v, (0,))).cell, lambda e: HY.cls(f(e)))


def functor_from_h(H: HomotopyCategory, T: FiniteCategory, on_vertex: Callable, on_edge: Callable) -> CatFunctor:
    """A functor out of hX given on vertices and edges; checked to respect homotopy classes."""
    objs = {v: on_vertex(v) for v in H.objects}
    arrows = {}
    for e, a in H._classes.items():
        img = on_edge(e)
        old = arrows.setdefault(a, img)
        if old != img:
            raise CategoryError(f"edge {H.sset.describe(e)} and its class representative have different images")
    return CatFunctor(H, T, objs, arrows)


def full_subcategory(C: FiniteCategory, keep) -> FiniteCategory:
    keep = [x for x in C.objects if x in set(keep)]
    ks = set(keep)
    arrows = {a: st for a, st in C.arrows.items() if st[0] in ks and st[1] in ks}
    comp = {k: v for k, v in C.compose.items() if k[0] in arrows and k[1] in arrows}
    return FiniteCategory(keep, arrows, {x: C.identities[x] for x in keep}, comp, name=C.name, check=False)


def cotensor_comparison(A: FiniteSimplicialSet, X: FiniteSimplicialSet, hA: Optional[HomotopyCategory] = None,
                        budget: Budget = None, isos_only: bool = False) -> CatFunctor:
    """h(A^X) → (hA)^𝟚 for X = Δ¹, or → (hA)^𝕀 for X a skeleton of 𝕀 (``isos_only``).

    Objects of the target are triples (a, b, arrow); a vertex of A^X goes to
    the class of its edge 0 → 1.
    """
    hA = hA or homotopy_category(A, budget=budget)
    E = Exponential(X, A, 2, budget)
    if E.level < 2:
        raise ValueError("target truncation too shallow for the exponential")
    H = homotopy_category(E.sset, cap=2, budget=budget, check=False)
    target = arrow_category(hA)
    edge01 = next(c for c in X.cells(1) if X.boundary_of(X.simplex(c)) == (Simplex(1, (0,)), Simplex(0, (0,))))
    e01 = Simplex(edge01, (0, 1))
    S = E.sset

    def on_vertex(v):
        e = E.evaluate(Simplex(v, (0,)), e01)
        return (A.boundary_of(e)[1].cell, A.boundary_of(e)[0].cell, hA.cls(e))

    def on_edge(k):
        d0, d1 = S.boundary_of(k)
        u = hA.cls(E.vertex_component(k, 0))
        w = hA.cls(E.vertex_component(k, 1))
        return (on_vertex(d1.cell), on_vertex(d0.cell), u, w)

    if isos_only:
        target = full_subcategory(target, [o for o in target.objects if hA.is_iso(o[2])])
    return functor_from_h(H, target, on_vertex, on_edge)


def pullback_comparison(f: SimplicialMap, g: SimplicialMap, budget: Budget = None) -> CatFunctor:
    """h(B ×_A C) → hB ×_{hA} hC."""
    B, C, A = f.source, g.source, f.target
    hA, hB, hC = _hcats(budget, A, B, C)
    P = Pullback(f, g)
    H = homotopy_category(P.sset, budget=budget)
    target = pullback_category(induced_functor(f, hB, hA), induced_functor(g, hC, hA))
    p0, p1 = P.proj
    return functor_from_h(H, target,
                          lambda v: (p0(Simplex(v, (0,))).cell, p1(Simplex(v, (0,))).cell),
                          lambda e: (hB.cls(p0(e)), hC.cls(p1(e))))


def _hcats(budget, *sets):
    """Homotopy categories of several sets, computing each distinct set once."""
    cache = {}
    for Z in sets:
        if id(Z) not in cache:
            cache[id(Z)] = homotopy_category(Z, budget=budget)
    return [cache[id(Z)] for Z in sets]


def comma_comparison(f: SimplicialMap, g: SimplicialMap, N: int = 2, budget: Budget = None,
                     comma_object=None) -> CatFunctor:
    """h(f↓g) → hf↓hg."""
    from ..constructions.comma import CommaObject
    B, C, A = f.source, g.source, f.target
    hA, hB, hC = _hcats(budget, A, B, C)
    K = comma_object or CommaObject(f, g, N, budget)
    H = homotopy_category(K.total, cap=K.level, budget=budget)
    target = comma_category(induced_functor(f, hB, hA), induced_functor(g, hC, hA))
    cyl0 = K.cylinder(0)
    top = cyl0.pair(Simplex(0, (0, 0)), Simplex(2, (0, 1)))

    def on_vertex(v):
        x = Simplex(v, (0,))
        psi = K.canonical_2cell(x)
        return (K.p0(x).cell, K.p1(x).cell, hA.cls(psi(top)))

    def on_edge(e):
        d0, d1 = K.total.boundary_of(e)
        return (on_vertex(d1.cell), on_vertex(d0.cell), hB.cls(K.p0(e)), hC.cls(K.p1(e)))

    return functor_from_h(H, target, on_vertex, on_edge)


def sliced_hom(p: SimplicialMap, q: SimplicialMap, N: int, budget: Budget = None) -> Exponential:
    """hom_A(p, q): maps E×Δⁿ → F lying over p∘π, for p: E → A and q: F → A."""
    if p.target is not q.target:
        raise ValueError("p and q need a common target")
    return Exponential(p.source, q.source, N, budget, name=f"hom_{p.target.name}(p,q)", over=(q, p))


def hom_prime(p: SimplicialMap, q: SimplicialMap, objects, budget: Budget = None):
    """hom'_A(p, q): classes in h(F^E) between maps over p whose image under q is the identity of p.

    Computed inside the full simplicial subsets of F^E and A^E spanned by the
    relevant vertices.  Returns the category together with the local F^E.
    """
    E, F, A = p.source, q.source, p.target
    local = Exponential(E, F, 2, budget, vertices=objects)
    if local.level < 2:
        raise ValueError("target truncation too shallow for the sliced hom")
    H1 = homotopy_category(local.sset, cap=2, budget=budget, check=False)
    base = Exponential(E, A, 2, budget, vertices=[tuple(p.images)])
    H2 = homotopy_category(base.sset, cap=2, budget=budget, check=False)
    p_vertex = base.sset.cells(0)[0]
    ident = H2.identities[p_vertex]

    def q_image(edge):
        imgs = tuple(q(z) for z in local.images_of(edge))
        return H2.cls(base.simplex_of(imgs, 1))

    keep = {a for a in H1.arrows if q_image(a) == ident}
    for e, a in H1._classes.items():
        if (q_image(e) == ident) != (a in keep):
            raise CategoryError("the image in h(A^E) is not constant on a homotopy class")
    arrows = {a: st for a, st in H1.arrows.items() if a in keep}
    comp = {k: v for k, v in H1.compose.items() if k[0] in keep and k[1] in keep}
    C = FiniteCategory(H1.objects, arrows, H1.identities, comp, name="hom'", check=True)
    return C, local, H1


def sliced_hom_comparison(p: SimplicialMap, q: SimplicialMap, budget: Budget = None) -> CatFunctor:
    """h(hom_A(p, q)) → hom'_A(p, q)."""
    S = sliced_hom(p, q, 2, budget)
    if S.level < 2:
        raise ValueError("target truncation too shallow for the sliced hom")
    H0 = homotopy_category(S.sset, cap=2, budget=budget, check=False)
    objects = [S.key_of_cell[v] for v in S.sset.cells(0)]
    target, local, H1 = hom_prime(p, q, objects, budget)
    return functor_from_h(H0, target,
                          lambda v: local.simplex_of(S.key_of_cell[v], 0).cell,
                          lambda e: H1.cls(local.simplex_of(S.images_of(e), 1)))


def canonical_comparison(kind: str, *data, budget: Budget = None, **options) -> CatFunctor:
    """Dispatch on kind ∈ {cotensor2, cotensorI, pullback, comma, sliced-hom}."""
    if kind == "cotensor2":
        (A,) = data
        return cotensor_comparison(A, standard_simplex(1), budget=budget)
    if kind == "cotensorI":
        (A,) = data
        depth = options.get("depth", 2)
        return cotensor_comparison(A, iso_interval(depth), budget=budget, isos_only=True)
    if kind == "pullback":
        f, g = data
        return pullback_comparison(f, g, budget)
    if kind == "comma":
        f, g = data
        return comma_comparison(f, g, options.get("N", 2), budget)
    if kind == "sliced-hom":
        p, q = data
        return sliced_hom_comparison(p, q, budget)
    raise ValueError(f"unknown comparison kind {kind!r}")
