"""Nerves, homotopy categories and hom-categories of quasi-categories."""
from __future__ import annotations

from typing import Dict, List, Optional

from ..kernel.extensions import Budget
from ..kernel.lifting import REFUTED, is_quasicategory
from ..kernel.limits import _UnionFind
from ..kernel.mapping import Exponential
from ..kernel.maps import SimplicialMap
from ..kernel.sset import FiniteSimplicialSet, Simplex, SSetBuilder, known_level
from .categories import CatFunctor, FiniteCategory


class NotAQuasiCategory(ValueError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


def nerve(C: FiniteCategory, N: int, name: str = "") -> FiniteSimplicialSet:
    """Composable strings of non-identity arrows, up to length N.

    Vertices are labelled by objects and higher cells by arrow tuples.  The
    result is marked complete when no nondegenerate string of length N+1 exists.
    """
    b = SSetBuilder(name or f"N({C.name})")
    for x in C.objects:
        b.add(x)
    vertex = {x: i for i, x in enumerate(C.objects)}
    ids = set(C.identities.values())
    plain = [a for a in C.arrows if a not in ids]
    level = [(a,) for a in plain]

    def normal(chain):
        """Normal form of a composable string that may contain identities."""
        kept, epi = [], [0]
        for a in chain:
            if a not in ids:
                kept.append(a)
            epi.append(len(kept))
        if not kept:
            return Simplex(vertex[C.src(chain[0])], tuple(epi))
        return Simplex(b.index[tuple(kept)], tuple(epi))

    n = 1
    while level and n <= N:
        for s in level:
            faces = []
            for j in range(n + 1):
                if n == 1:
                    v = C.tgt(s[0]) if j == 0 else C.src(s[0])
                    faces.append(Simplex(vertex[v], (0,)))
                    continue
                if j == 0:
                    f = s[1:]
                elif j == n:
                    f = s[:-1]
                else:
                    f = s[:j - 1] + (C.comp(s[j], s[j - 1]),) + s[j + 1:]
                faces.append(normal(f))
            b.add(s, faces)
        nxt = [s + (a,) for s in level for a in plain if C.src(a) == C.tgt(s[-1])]
        level = nxt
        n += 1
    return b.build(level=N, complete=not level)


class HomotopyCategory(FiniteCategory):
    """hA with arrows named by representative edges (Simplex values)."""

    def __init__(self, A: FiniteSimplicialSet, objects, arrows, identities, compose, classes):
        super().__init__(objects, arrows, identities, compose, name=f"h({A.name})", check=False)
        self.sset = A
        self._classes = classes

    def cls(self, edge: Simplex):
        """The arrow represented by a 1-simplex."""
        return self._classes[edge]

    def edges_of(self, arrow) -> List[Simplex]:
        return [e for e, a in self._classes.items() if a == arrow]


def _edges(A: FiniteSimplicialSet) -> List[Simplex]:
    return list(A.total(1))


def homotopy_relation(A: FiniteSimplicialSet, f: Simplex, g: Simplex) -> bool:
    """Whether two parallel edges are homotopic rel boundary (closure of the 2-simplex relation)."""
    if A.boundary_of(f) != A.boundary_of(g):
        raise ValueError("edges are not parallel")
    uf = _relation(A)
    return uf.find(f) == uf.find(g)


def _relation(A: FiniteSimplicialSet) -> _UnionFind:
    uf = _UnionFind()
    for t in A.total(2):
        d0, d1, d2 = A.boundary_of(t)
        if A.is_degenerate(d0) and A.boundary_of(d1) == A.boundary_of(d2):
            uf.union(d1, d2)
        if A.is_degenerate(d2) and A.boundary_of(d0) == A.boundary_of(d1):
            uf.union(d0, d1)
    return uf


def homotopy_category(A: FiniteSimplicialSet, cap: Optional[int] = None, budget: Budget = None,
                      check: bool = True) -> HomotopyCategory:
    """hA for a quasi-category A; refuses inputs that fail the inner horn check."""
    if known_level(A) < 2:
        raise ValueError("the homotopy category needs simplices up to dimension 2")
    if check:
        d = int(min(cap or 3, known_level(A)))
        verdict = is_quasicategory(A, max(d, 2), budget)
        if verdict.status == REFUTED:
            ce = verdict.counterexample
            raise NotAQuasiCategory(f"not a quasi-category: {ce['inclusion']} has no filler", ce)
    uf = _relation(A)
    edges = _edges(A)
    rep: Dict = {}
    for e in edges:
        r = uf.find(e)
        if r not in rep or e < rep[r]:
            rep[r] = e
    classes = {e: rep[uf.find(e)] for e in edges}
    arrows = {}
    for e in edges:
        a = classes[e]
        d0, d1 = A.boundary_of(a)
        arrows[a] = (d1.cell, d0.cell)
    objects = list(A.cells(0))
    identities = {v: classes[Simplex(v, (0, 0))] for v in objects}
    compose: Dict = {}
    for t in A.total(2):
        d0, d1, d2 = A.boundary_of(t)
        key = (classes[d0], classes[d2])
        val = classes[d1]
        old = compose.setdefault(key, val)
        if old != val:
            raise NotAQuasiCategory(f"composition is not well defined at {A.describe(t)}")
    for f, (s, t) in arrows.items():
        for g, (s2, _) in arrows.items():
            if s2 == t and (g, f) not in compose:
                raise NotAQuasiCategory(
                    f"no 2-simplex composes {A.describe(f)} and {A.describe(g)}: Λ2,1 has no filler")
    return HomotopyCategory(A, objects, arrows, identities, compose, classes)


def hom_category(A: FiniteSimplicialSet, B: FiniteSimplicialSet, budget: Budget = None,
                 exponential: Exponential = None) -> HomotopyCategory:
    """h(B^A) computed from the level-2 truncation of the exponential."""
    E = exponential or Exponential(A, B, 2, budget)
    if E.level < 2:
        raise ValueError("target truncation too shallow for a hom-category")
    H = homotopy_category(E.sset, cap=2, budget=budget)
    H.exponential = E
    return H


def nerve_simplex(N: FiniteSimplicialSet, C: FiniteCategory, string, start=None) -> Simplex:
    """The simplex of a nerve built by ``nerve`` named by a composable string of arrows.

    Identities in the string become degeneracies.  An empty string needs ``start``.
    """
    ids = set(C.identities.values())
    kept, epi = [], [0]
    for a in string:
        if a not in ids:
            kept.append(a)
        epi.append(len(kept))
    if not kept:
        obj = C.src(string[0]) if string else start
        return Simplex(C.objects.index(obj), tuple(epi))
    return Simplex(N.index[tuple(kept)], tuple(epi))


def nerve_map(F: CatFunctor, NC: FiniteSimplicialSet, ND: FiniteSimplicialSet) -> SimplicialMap:
    """N(F): the map of nerves induced by a functor."""
    D = F.target
    out = []
    for c in range(len(NC)):
        lab = NC.labels[c]
        if NC.dims[c] == 0:
            out.append(nerve_simplex(ND, D, (), start=F.on_objects[lab]))
        else:
            out.append(nerve_simplex(ND, D, tuple(F.on_arrows[a] for a in lab)))
    return SimplicialMap(NC, ND, out)
