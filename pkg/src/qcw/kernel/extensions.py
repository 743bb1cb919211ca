"""Backtracking search for extensions and lifts of simplicial maps.

Every lifting-property check in the package funnels through
``enumerate_lifts``: given a finite T, a partial assignment on a simplicial
subset of T, and optionally a map p: A → B with a prescribed composite
v: T → B, it emits every map T → A extending the assignment and lying over v.
"""
from __future__ import annotations

import os
from typing import Dict, Iterator, List, Optional

from .maps import SimplicialMap
from .sset import FiniteSimplicialSet, Simplex

DEFAULT_NODE_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    pass


class Budget:
    """Node-expansion and cell-count limits shared by a computation."""

    def __init__(self, nodes: Optional[int] = None, cells: Optional[int] = None):
        if nodes is None:
            nodes = int(os.environ.get("QCW_BUDGET", DEFAULT_NODE_BUDGET))
        if nodes <= 0:
            raise ValueError("budget must be positive")
        self.nodes = nodes
        self.cells = cells if cells is not None else nodes
        self.spent_nodes = 0
        self.spent_cells = 0

    def spend(self, k: int = 1):
        self.spent_nodes += k
        if self.spent_nodes > self.nodes:
            raise BudgetExceeded(f"node budget of {self.nodes} exhausted")

    def spend_cell(self):
        self.spent_cells += 1
        if self.spent_cells > self.cells:
            raise BudgetExceeded(f"cell budget of {self.cells} exhausted")


def _budget(b):
    return b if b is not None else Budget()


def search_order(T: FiniteSimplicialSet, skip) -> List[int]:
    """Cells of T not in ``skip``: each cell right after its last vertex.

    Vertices are taken in canonical order and a cell is scheduled as soon as
    all its vertices are, so face constraints prune the search early.
    """
    cache = T.__dict__.setdefault("_search_orders", {})
    key = frozenset(skip)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = _search_order(T, key)
    return hit


def _search_order(T: FiniteSimplicialSet, skip) -> List[int]:
    pos = {v: i for i, v in enumerate(T.cells(0))}
    keyed = []
    for c in range(len(T)):
        if c in skip:
            continue
        vs = T.vertices(T.simplex(c))
        keyed.append((max(pos[v] for v in vs), T.dims[c], c))
    keyed.sort()
    return [c for _, _, c in keyed]


def enumerate_lifts(T: FiniteSimplicialSet, A: FiniteSimplicialSet, fixed: Dict[int, Simplex] = None,
                    over=None, budget: Budget = None) -> Iterator[List[Simplex]]:
    """Yield image lists of every map T → A extending ``fixed``.

    ``fixed`` maps cells of a simplicial subset of T to simplices of A.
    ``over`` is an optional pair (p: A → B, v: T → B) requiring p∘g = v.
    """
    fixed = dict(fixed or {})
    budget = _budget(budget)
    p = v = None
    if over is not None:
        p, v = over
    if p is not None:
        for c, img in fixed.items():
            if p(img) != v.images[c]:
                raise ValueError(f"prescribed value on {T.labels[c]!r} does not lie over v")
    order = search_order(T, fixed)
    assign: List[Optional[Simplex]] = [None] * len(T)
    for c, img in fixed.items():
        assign[c] = img
    faces = T.faces
    act = A.act
    vertices = A.total(0)

    def candidates(c):
        n = T.dims[c]
        if n == 0:
            pool = vertices
        else:
            key = []
            for f in faces[c]:
                img = assign[f.cell]
                key.append(img if len(f.degen) == len(img.degen) else act(img, f.degen))
            pool = A.by_boundary(n).get(tuple(key), ())
        if p is None:
            return pool
        target = v.images[c]
        return [x for x in pool if p(x) == target]

    depth = len(order)
    if depth == 0:
        yield list(assign)
        return
    stack = [iter(candidates(order[0]))]
    i = 0
    while i >= 0:
        x = next(stack[i], None)
        if x is None:
            assign[order[i]] = None
            stack.pop()
            i -= 1
            continue
        budget.spend()
        assign[order[i]] = x
        if i == depth - 1:
            yield list(assign)
            continue
        i += 1
        stack.append(iter(candidates(order[i])))


def _fixed_from(i: SimplicialMap, u: SimplicialMap) -> Dict[int, Simplex]:
    if not i.is_mono():
        raise ValueError("extensions are only taken along monomorphisms")
    S = i.source
    return {i.images[c].cell: u.images[c] for c in range(len(S))}


def enumerate_extensions(i: SimplicialMap, u: SimplicialMap, budget: Budget = None,
                         over=None) -> Iterator[SimplicialMap]:
    """Every extension of u: S → A along the mono i: S ↪ T, in canonical order."""
    T, A = i.target, u.target
    for images in enumerate_lifts(T, A, _fixed_from(i, u), over, budget):
        yield SimplicialMap(T, A, images, check=False)


def first_lift(T, A, fixed=None, over=None, budget=None) -> Optional[List[Simplex]]:
    return next(enumerate_lifts(T, A, fixed, over, budget), None)


def collect_extensions(i: SimplicialMap, u: SimplicialMap, budget: Budget = None, over=None):
    """All extensions as a list plus a completeness flag (False if the budget ran out)."""
    out = []
    try:
        for g in enumerate_extensions(i, u, budget, over):
            out.append(g)
    except BudgetExceeded:
        return out, False
    return out, True


def lift_against(p: SimplicialMap, i: SimplicialMap, u: SimplicialMap, v: SimplicialMap,
                 budget: Budget = None) -> Optional[SimplicialMap]:
    """A diagonal for the square (u: S → E, v: T → B) with p∘u = v∘i, or None."""
    T, E = i.target, p.source
    images = first_lift(T, E, _fixed_from(i, u), (p, v), budget)
    return None if images is None else SimplicialMap(T, E, images, check=False)
