"""1-cell induction into comma objects, and its uniqueness up to isomorphism.

A cone over the cospan B → A ← C with domain X is a triple (b, c, alpha)
where alpha: X×Δ¹ → A runs from f∘b to g∘c.  The induced map a: X → f↓g
lies over (b, c) and carries alpha as its whiskered canonical 2-cell.
"""
from __future__ import annotations

from typing import Iterator, Optional

from ..constructions.comma import CommaObject
from ..kernel.extensions import Budget, enumerate_lifts
from ..kernel.limits import Product
from ..kernel.maps import SimplicialMap
from ..kernel.sset import FiniteSimplicialSet, Simplex
from ..kernel.standard import standard_simplex
from .adjunction import constant_homotopy, cylinder, end_map, fill_triangle


class InductionError(ValueError):
    """No inducer: the cone is malformed or the comma is truncated too low."""


def cone_cylinder(X: FiniteSimplicialSet) -> Product:
    return cylinder(X, 1)


def _apply(X: FiniteSimplicialSet, x: Simplex, s: Simplex) -> Simplex:
    """x·s for a simplex s of Δⁿ, n = dim x."""
    D = standard_simplex(x.dim)
    return X.act(x, tuple(D.labels[s.cell][i] for i in s.degen))


def _component(K: CommaObject, P: Product, alpha: SimplicialMap, x: Simplex) -> tuple:
    """alpha∘(x×Δ¹) as images on the cylinder Δⁿ×Δ¹ of the comma."""
    Q = K.cylinder(x.dim)
    out = []
    for c in range(len(Q.sset)):
        s, e = Q.components(Q.sset.simplex(c))
        z = P.pair(_apply(P.X, x, s), e)
        img = alpha.images[z.cell]
        out.append(img if len(z.degen) == len(img.degen) else alpha.target.act(img, z.degen))
    return tuple(out)


def check_cone(K: CommaObject, b: SimplicialMap, c: SimplicialMap, alpha: SimplicialMap,
               P: Optional[Product] = None) -> Product:
    X = b.source
    P = P or cone_cylinder(X)
    if c.source is not X or len(alpha.source) != len(P.sset):
        raise InductionError("b, c and alpha must share the domain X")
    for e, want in ((0, b.then(K.f)), (1, c.then(K.g))):
        got = end_map(P, e).then(SimplicialMap(P.sset, K.A, alpha.images, check=False))
        if got.images != want.images:
            raise InductionError(f"alpha does not restrict to {'f∘b' if e == 0 else 'g∘c'} at {e}")
    if X.labels and X.dimension > K.level:
        raise InductionError(f"comma truncated at {K.level}, below dim X = {X.dimension}")
    return P


def one_cell_induction(K: CommaObject, b: SimplicialMap, c: SimplicialMap, alpha: SimplicialMap) -> SimplicialMap:
    """The map a: X → f↓g with p0∘a = b, p1∘a = c and canonical 2-cell alpha."""
    P = check_cone(K, b, c, alpha)
    X = b.source
    out = []
    for x in range(len(X)):
        xs = X.simplex(x)
        hit = K.lookup(b(xs), c(xs), _component(K, P, alpha, xs))
        if hit is None:
            raise InductionError(f"no simplex of the comma over {X.labels[x]!r}")
        out.append(hit)
    return SimplicialMap(X, K.total, out)


def whiskered_cell(K: CommaObject, a: SimplicialMap, P: Optional[Product] = None) -> SimplicialMap:
    """The 2-cell X×Δ¹ → A obtained by whiskering the canonical one along a."""
    X = a.source
    P = P or cone_cylinder(X)
    out = []
    for z in range(len(P.sset)):
        xs, e = P.components(P.sset.simplex(z))
        y = a(xs)
        Q = K.cylinder(y.dim)
        w = Q.pair(standard_simplex(y.dim).simplex(len(standard_simplex(y.dim)) - 1), e)
        img = K.canonical_2cell(y).images[w.cell]
        out.append(img if len(w.degen) == len(img.degen) else K.A.act(img, w.degen))
    return SimplicialMap(P.sset, K.A, out)


def _projection(K: CommaObject) -> tuple:
    L = K.level
    BC = Product(K.B, K.C, cell_ok=lambda x, y: x.dim <= L)
    return BC, BC.mediate(K.p0, K.p1)


def maps_over(K: CommaObject, b: SimplicialMap, c: SimplicialMap, budget: Budget = None,
              reverse: bool = False) -> Iterator[SimplicialMap]:
    """Every a: X → f↓g over (b, c); ``reverse`` runs the candidates in the opposite order."""
    X = b.source
    BC, q = _projection(K)
    v = BC.mediate(b, c)
    found = [SimplicialMap(X, K.total, imgs, check=False)
             for imgs in enumerate_lifts(X, K.total, None, (q, v), budget)]
    return iter(found[::-1] if reverse else found)


def isomorphic_over(K: CommaObject, a1: SimplicialMap, a2: SimplicialMap, budget: Budget = None) -> bool:
    """Edges a1 → a2 and a2 → a1 in (f↓g)^X lying over identities of C×B.

    Such edges are invertible because f↓g → C×B is conservative, so
    existence both ways settles isomorphism.
    """
    X = a1.source
    if X.labels and X.dimension + 1 > K.level:
        raise InductionError(f"comma truncated at {K.level}, too low for (f↓g)^X edges")
    P = cone_cylinder(X)
    BC, q = _projection(K)
    v = P.proj[0].then(BC.mediate(a1.then(K.p0), a1.then(K.p1)))
    for s, t in ((a1, a2), (a2, a1)):
        fixed = {}
        for e, g in ((0, s), (1, t)):
            for z, img in zip(end_map(P, e).images, g.images):
                fixed[z.cell] = img
        if next(enumerate_lifts(P.sset, K.total, fixed, (q, v), budget), None) is None:
            return False
    return True


def same_two_cell(K: CommaObject, alpha: SimplicialMap, other: SimplicialMap, c: SimplicialMap,
                  budget: Budget = None) -> bool:
    """Whether two cones with equal ends are homotopic: a triangle (alpha, other, id_{g∘c}) fills."""
    X = c.source
    P1, P2 = cylinder(X, 1), cylinder(X, 2)
    A = K.A
    al = SimplicialMap(P1.sset, A, alpha.images, check=False)
    ot = SimplicialMap(P1.sset, A, other.images, check=False)
    return fill_triangle(P1, P2, al, ot, constant_homotopy(c.then(K.g), P1), budget) is not None


def induce_by_search(K: CommaObject, b: SimplicialMap, c: SimplicialMap, alpha: SimplicialMap,
                     reverse: bool = False, budget: Budget = None) -> Optional[SimplicialMap]:
    """The first a over (b, c) whose whiskered 2-cell is homotopic to alpha."""
    check_cone(K, b, c, alpha)
    for a in maps_over(K, b, c, budget, reverse):
        if same_two_cell(K, alpha, whiskered_cell(K, a), c, budget):
            return a
    return None
