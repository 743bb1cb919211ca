"""Comma objects f↓g for f: B → A and g: C → A.

An n-simplex is a triple (b, c, k) with b an n-simplex of B, c one of C and
k: Δⁿ×Δ¹ → A restricting to f(b) at 0 and to g(c) at 1.  The maps k are the
components of the canonical 2-cell and are stored with every simplex.
"""
from __future__ import annotations

from typing import Dict, List, Optional

from ..kernel.extensions import Budget, enumerate_lifts
from ..kernel.limits import Product
from ..kernel.mapping import precompose, simplex_map
from ..kernel.maps import SimplicialMap
from ..kernel.operators import degeneracy_values, face_values
from ..kernel.sset import Simplex, known_level, realize
from ..kernel.standard import standard_simplex


class CommaObject:
    def __init__(self, f: SimplicialMap, g: SimplicialMap, N: int, budget: Optional[Budget] = None,
                 name: str = ""):
        if f.target is not g.target:
            raise ValueError("comma needs a cospan B → A ← C")
        B, C, A = f.source, g.source, f.target
        self.f, self.g, self.A, self.B, self.C = f, g, A, B, C
        budget = budget or Budget()
        N = int(min(N, known_level(A) - 1, known_level(B), known_level(C)))
        if N < 0:
            raise ValueError("target truncation too shallow for a comma object")
        self.level = N
        self.cyl: Dict[int, Product] = {}
        self._maps: Dict[tuple, SimplicialMap] = {}
        self._ends: Dict[tuple, List[int]] = {}
        fills: Dict[tuple, list] = {}

        def cyl(n):
            P = self.cyl.get(n)
            if P is None:
                P = Product(standard_simplex(n), standard_simplex(1))
                self.cyl[n] = P
            return P

        def along(alpha, m, n):
            key = (alpha, m, n)
            h = self._maps.get(key)
            if h is None:
                P, Q = cyl(m), cyl(n)
                a = simplex_map(alpha, m, n)
                S = P.sset
                imgs = []
                for c in range(len(S)):
                    x, e = P.components(S.simplex(c))
                    imgs.append(Q.pair(a(x), e))
                h = SimplicialMap(S, Q.sset, imgs, check=False)
                self._maps[key] = h
            return h

        def end_cells(n, e):
            key = (n, e)
            hit = self._ends.get(key)
            if hit is None:
                P = cyl(n)
                D = standard_simplex(n)
                hit = [P.pair(D.simplex(c), Simplex(e, (0,) * (D.dims[c] + 1))).cell for c in range(len(D))]
                self._ends[key] = hit
            return hit

        edges = {(A.act(e, (0,)), A.act(e, (1,))) for e in A.total(1)}

        def lifts(n, fb, gc):
            key = (n, fb, gc)
            hit = fills.get(key)
            if hit is None and any((A.act(fb, (i,)), A.act(gc, (i,))) not in edges for i in range(n + 1)):
                hit = fills[key] = []
            if hit is None:
                D = standard_simplex(n)
                fixed = {}
                for e, s in ((0, fb), (1, gc)):
                    for c, cell in enumerate(end_cells(n, e)):
                        fixed[cell] = simplex_map_image(A, s, D, c)
                hit = [tuple(im) for im in enumerate_lifts(cyl(n).sset, A, fixed, None, budget)]
                fills[key] = hit
            return hit

        def keys_at(n):
            for b in B.total(n):
                fb = f(b)
                for c in C.total(n):
                    for k in lifts(n, fb, g(c)):
                        yield (n, b, c, k)

        def face_key(key, j):
            n, b, c, k = key
            d = face_values(n, j)
            return (n - 1, B.act(b, d), C.act(c, d), precompose(A, k, along(d, n - 1, n)))

        def degen_key(key, j):
            n, b, c, k = key
            s = degeneracy_values(n, j)
            return (n + 1, B.act(b, s), C.act(c, s), precompose(A, k, along(s, n + 1, n)))

        self.along = along
        self.cylinder = cyl
        self.total, self.normal = realize(
            N, keys_at, face_key, degen_key, label=self._label,
            name=name or f"{f.name or 'f'}↓{g.name or 'g'}", budget=budget)
        T = self.total
        self.key_of_cell = [None] * len(T)
        for key, nf in self.normal.items():
            if len(nf.degen) == T.dims[nf.cell] + 1:
                self.key_of_cell[nf.cell] = key
        self.p0 = SimplicialMap(T, B, [k[1] for k in self.key_of_cell])
        self.p1 = SimplicialMap(T, C, [k[2] for k in self.key_of_cell])

    @property
    def sset(self):
        return self.total

    def _label(self, key):
        n, b, c, k = key
        return (self.B.labels[b.cell], b.degen, self.C.labels[c.cell], c.degen,
                tuple((s.cell, s.degen) for s in k))

    def canonical_2cell(self, x: Simplex) -> SimplicialMap:
        """The map Δⁿ×Δ¹ → A carried by the simplex x."""
        n = x.dim
        key = self.key_of_cell[x.cell]
        m = key[0]
        imgs = key[3] if n == m else precompose(self.A, key[3], self.along(x.degen, n, m))
        return SimplicialMap(self.cylinder(n).sset, self.A, list(imgs), check=False)

    def simplex_of(self, b: Simplex, c: Simplex, k) -> Simplex:
        return self.normal[(b.dim, b, c, tuple(k))]

    def lookup(self, b: Simplex, c: Simplex, k) -> Optional[Simplex]:
        return self.normal.get((b.dim, b, c, tuple(k)))

    def fibre_vertices(self, b_vertex: int, c_vertex: int) -> List[int]:
        return [v for v in self.total.cells(0)
                if self.key_of_cell[v][1].cell == b_vertex and self.key_of_cell[v][2].cell == c_vertex]


def simplex_map_image(A, s: Simplex, D, c: int) -> Simplex:
    """The image of cell c of Δⁿ under the map Δⁿ → A named by s."""
    return A.act(s, D.labels[c])


def comma(f: SimplicialMap, g: SimplicialMap, N: int, budget: Optional[Budget] = None) -> CommaObject:
    return CommaObject(f, g, N, budget)
