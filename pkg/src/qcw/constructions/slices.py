"""Slices and fat slices of a simplicial set over or under a diagram.

An n-simplex of the slice over f: X → A is a map Δⁿ⋆X → A restricting to f on
X; under-slices use X⋆Δⁿ, and the fat variants use ◇ in place of ⋆.  The
projection π to A restricts a simplex to its Δⁿ part.
"""
from __future__ import annotations

from typing import Optional

from ..kernel.extensions import Budget
from ..kernel.mapping import MappingObject, precompose, simplex_map
from ..kernel.maps import SimplicialMap, identity_map
from ..kernel.operators import degeneracy_values, face_values
from ..kernel.standard import standard_simplex
from .comparison import comparison_map
from .fatjoin import FatJoin, fat_join_map
from .join import Join, join_map


class SliceObject(MappingObject):
    """The (fat) slice of A over (``side='over'``) or under f."""

    def __init__(self, f: SimplicialMap, N: int, side: str = "over", fat: bool = False,
                 budget: Optional[Budget] = None):
        if side not in ("over", "under"):
            raise ValueError("side must be 'over' or 'under'")
        self.f = f
        self.side = side
        self.fat = fat
        X, A = f.source, f.target
        build, apply = (FatJoin, fat_join_map) if fat else (Join, join_map)
        self._tests = {}
        self._maps = {}
        over = side == "over"
        idX = identity_map(X)

        def obj(n):
            J = self._tests.get(n)
            if J is None:
                D = standard_simplex(n)
                J = build(D, X) if over else build(X, D)
                self._tests[n] = J
            return J

        def along(alpha, m, n):
            key = (alpha, m, n)
            g = self._maps.get(key)
            if g is None:
                a = simplex_map(alpha, m, n)
                g = apply(obj(m), obj(n), a, idX) if over else apply(obj(m), obj(n), idX, a)
                self._maps[key] = g
            return g

        def fixed(n):
            J = obj(n)
            inc = J.inclusions[1] if over else J.inclusions[0]
            return {inc.images[c].cell: f.images[c] for c in range(len(X))}

        self.objects = obj
        dim_x = X.dimension if X.labels else -1
        kind = ("fat " if fat else "") + "slice"
        super().__init__(
            A, N,
            test=lambda n: obj(n).sset,
            coface=lambda n, j: along(face_values(n, j), n - 1, n),
            codegeneracy=lambda n, j: along(degeneracy_values(n, j), n + 1, n),
            fixed=fixed, budget=budget,
            name=f"{A.name}/{kind} {side} {f.name or 'f'}",
            complete=False,
            test_dim=lambda n: n + dim_x + 1,
        )
        S = self.sset
        self.pi = SimplicialMap(S, A, [self._cone_part(c) for c in range(len(S))])

    def _cone_part(self, c):
        n = self.sset.dims[c]
        J = self.objects(n)
        inc = J.inclusions[0] if self.side == "over" else J.inclusions[1]
        top = inc.images[len(standard_simplex(n)) - 1]
        return self.key_of_cell[c][top.cell]


def slice_over(f: SimplicialMap, N: int, budget: Optional[Budget] = None) -> SliceObject:
    return SliceObject(f, N, "over", False, budget)


def slice_under(f: SimplicialMap, N: int, budget: Optional[Budget] = None) -> SliceObject:
    return SliceObject(f, N, "under", False, budget)


def fat_slice_over(f: SimplicialMap, N: int, budget: Optional[Budget] = None) -> SliceObject:
    return SliceObject(f, N, "over", True, budget)


def fat_slice_under(f: SimplicialMap, N: int, budget: Optional[Budget] = None) -> SliceObject:
    return SliceObject(f, N, "under", True, budget)


def slice_comparison(f: SimplicialMap, N: int, budget: Optional[Budget] = None,
                     thin: SliceObject = None, fat: SliceObject = None) -> SimplicialMap:
    """Precomposition with s: Δⁿ◇X → Δⁿ⋆X, from the slice to the fat slice.

    Both sides may be passed in if already built; they must share f and side.
    """
    thin = thin or slice_over(f, N, budget)
    fat = fat or SliceObject(f, thin.level, thin.side, True, budget)
    if thin.side != fat.side or thin.fat or not fat.fat:
        raise ValueError("need a slice and a fat slice on the same side")
    S = thin.sset
    out = []
    for c in range(len(S)):
        n = S.dims[c]
        s = comparison_map(fat.objects(n), thin.objects(n))
        out.append(fat.simplex_of(precompose(thin.A, thin.key_of_cell[c], s), n))
    g = SimplicialMap(S, fat.sset, out)
    if g.then(fat.pi).images != thin.pi.images:
        raise AssertionError("slice comparison does not commute with the projections")
    return g
