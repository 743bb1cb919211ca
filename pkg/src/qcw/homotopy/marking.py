"""Marked simplicial sets and the natural marking of a quasi-category."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional

from ..kernel.limits import Product
from ..kernel.maps import SimplicialMap
from ..kernel.sset import FiniteSimplicialSet, Simplex
from ..kernel.standard import standard_simplex
from .hcat import HomotopyCategory, homotopy_category


@dataclass(frozen=True)
class MarkedSimplicialSet:
    """A simplicial set with a set of marked 1-simplices containing the degenerate ones."""
    underlying: FiniteSimplicialSet
    marked: FrozenSet[Simplex]

    def __post_init__(self):
        X = self.underlying
        for v in X.cells(0):
            if Simplex(v, (0, 0)) not in self.marked:
                raise ValueError(f"degenerate edge on {X.labels[v]!r} is not marked")
        for e in self.marked:
            if e.dim != 1:
                raise ValueError("only 1-simplices can be marked")

    def is_marked(self, e: Simplex) -> bool:
        return e in self.marked

    def nondegenerate_marked(self):
        return sorted(e for e in self.marked if not self.underlying.is_degenerate(e))


def flat(X: FiniteSimplicialSet) -> MarkedSimplicialSet:
    return MarkedSimplicialSet(X, frozenset(Simplex(v, (0, 0)) for v in X.cells(0)))


def sharp(X: FiniteSimplicialSet) -> MarkedSimplicialSet:
    return MarkedSimplicialSet(X, frozenset(X.total(1)))


def natural_marking(A: FiniteSimplicialSet, hA: Optional[HomotopyCategory] = None) -> MarkedSimplicialSet:
    """Mark the edges whose class is invertible in hA."""
    hA = hA or homotopy_category(A)
    return MarkedSimplicialSet(A, frozenset(e for e in A.total(1) if hA.is_iso(hA.cls(e))))


def is_marked_map(f: SimplicialMap, X: MarkedSimplicialSet, Y: MarkedSimplicialSet) -> bool:
    return all(Y.is_marked(f(e)) for e in X.marked)


def marked_edge_in_exponential(k: SimplicialMap, X: MarkedSimplicialSet, A: MarkedSimplicialSet,
                               cylinder: Optional[Product] = None) -> dict:
    """Markedness of the edge of A^X named by k: X×Δ¹ → A.

    Three readings are computed: the edge condition (k(x, id) marked for each
    marked x), the vertex condition (each component k(v, id) marked) and the
    full marked-map condition on X×(Δ¹)♯.  When both ends of k preserve
    markings the last two must agree; ``consistent`` records that.
    """
    I = standard_simplex(1)
    P = cylinder or Product(X.underlying, I)
    if len(k.source) != len(P.sset):
        raise ValueError("k must be defined on X×Δ¹")
    Xs = X.underlying
    top = Simplex(I.index[(0, 1)], (0, 1))
    ends = [Simplex(I.index[(e,)], (0, 0)) for e in (0, 1)]

    def image(x, t):
        z = P.pair(x, t)
        img = k.images[z.cell]
        return img if len(z.degen) == len(img.degen) else k.target.act(img, z.degen)

    edge_condition = all(A.is_marked(image(x, top)) for x in X.marked)
    components = {v: image(Simplex(v, (0, 0)), top) for v in Xs.cells(0)}
    vertex_condition = all(A.is_marked(e) for e in components.values())
    marked_map = all(A.is_marked(image(x, t)) for x in X.marked for t in [top] + ends)
    ends_marked = all(A.is_marked(image(x, t)) for x in X.marked for t in ends)
    return {
        "edge_condition": edge_condition,
        "vertex_condition": vertex_condition,
        "marked_map": marked_map,
        "ends_marked": ends_marked,
        "consistent": (not ends_marked) or marked_map == vertex_condition,
        "unmarked_components": sorted(Xs.labels[v] for v, e in components.items() if not A.is_marked(e)),
    }
