"""The join X⋆Y of simplicial sets.

Nondegenerate cells are ('L', x), ('R', y) and ('J', x, y); the last has
dimension dim x + dim y + 1.  An operator on a joined simplex splits uniquely
into a part landing in the X-block and a part landing in the Y-block.
"""
from __future__ import annotations

from typing import Optional, Tuple

from ..kernel.maps import SimplicialMap
from ..kernel.operators import face_values
from ..kernel.sset import FiniteSimplicialSet, Simplex, SSetBuilder, sequence_simplex
from ..kernel.standard import standard_simplex


class Join:
    def __init__(self, X: FiniteSimplicialSet, Y: FiniteSimplicialSet, name: str = ""):
        self.X, self.Y = X, Y
        entries = [(X.dims[x], 0, x, None) for x in range(len(X))]
        entries += [(X.dims[x] + Y.dims[y] + 1, 1, x, y) for x in range(len(X)) for y in range(len(Y))]
        entries += [(Y.dims[y], 2, None, y) for y in range(len(Y))]
        entries.sort(key=lambda e: e[0])
        self._cell = {}
        b = SSetBuilder(name or f"{X.name}⋆{Y.name}")
        for n, kind, x, y in entries:
            if kind == 0:
                key, label = ("L", x), ("L", X.labels[x])
                faces = X.faces[x]
                faces = [self.pair(f, None) for f in faces]
            elif kind == 2:
                key, label = ("R", y), ("R", Y.labels[y])
                faces = [self.pair(None, f) for f in Y.faces[y]]
            else:
                key, label = ("J", x, y), ("J", X.labels[x], Y.labels[y])
                faces = [self.pair(*self.split_face(x, y, j)) for j in range(n + 1)]
            self._cell[key] = b.add(label, faces)
        self.sset = b.build()
        J = self.sset
        self.inclusions = (
            SimplicialMap(X, J, [J.simplex(self._cell[("L", x)]) for x in range(len(X))], check=False),
            SimplicialMap(Y, J, [J.simplex(self._cell[("R", y)]) for y in range(len(Y))], check=False),
        )
        self._key = [None] * len(J)
        for k, c in self._cell.items():
            self._key[c] = k

    def split_face(self, x: int, y: int, j: int):
        X, Y = self.X, self.Y
        p, q = X.dims[x], Y.dims[y]
        s, t = X.simplex(x), Y.simplex(y)
        if j <= p:
            return (None if p == 0 else X.act(s, face_values(p, j))), t
        return s, (None if q == 0 else Y.act(t, face_values(q, j - p - 1)))

    def pair(self, s: Optional[Simplex], t: Optional[Simplex]) -> Simplex:
        """Normal form of the joined simplex (s, t); either side may be empty."""
        if s is None and t is None:
            raise ValueError("the join has no (-1)-simplices")
        if t is None:
            return Simplex(self._cell[("L", s.cell)], s.degen)
        if s is None:
            return Simplex(self._cell[("R", t.cell)], t.degen)
        shift = self.X.dims[s.cell] + 1
        return Simplex(self._cell[("J", s.cell, t.cell)], s.degen + tuple(v + shift for v in t.degen))

    def split(self, z: Simplex) -> Tuple[Optional[Simplex], Optional[Simplex]]:
        """Inverse of ``pair``."""
        key = self._key[z.cell]
        if key[0] == "L":
            return Simplex(key[1], z.degen), None
        if key[0] == "R":
            return None, Simplex(key[1], z.degen)
        _, x, y = key
        p = self.X.dims[x]
        a = sum(1 for v in z.degen if v <= p)
        return Simplex(x, z.degen[:a]), Simplex(y, tuple(v - p - 1 for v in z.degen[a:]))

    def kind(self, c: int) -> tuple:
        return self._key[c]


def join(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> FiniteSimplicialSet:
    return Join(X, Y).sset


def join_map(P: Join, Q: Join, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """f⋆g: P → Q for P = X⋆Y, Q = X'⋆Y'."""
    S = P.sset
    out = []
    for c in range(len(S)):
        s, t = P.split(S.simplex(c))
        out.append(Q.pair(None if s is None else f(s), None if t is None else g(t)))
    return SimplicialMap(S, Q.sset, out, check=False)


def join_vertices(J: Join, c: int) -> tuple:
    """Vertex sequence of a cell of Δⁿ⋆Δᵐ inside [n+m+1]."""
    key = J.kind(c)
    n = J.X.dimension
    if key[0] == "L":
        return J.X.labels[key[1]]
    if key[0] == "R":
        return tuple(v + n + 1 for v in J.Y.labels[key[1]])
    return J.X.labels[key[1]] + tuple(v + n + 1 for v in J.Y.labels[key[2]])


def join_simplex_iso(n: int, m: int) -> Tuple[Join, SimplicialMap]:
    """The isomorphism Δⁿ⋆Δᵐ → Δ^{n+m+1} given by the ordinal sum."""
    J = Join(standard_simplex(n), standard_simplex(m))
    return J, ordinal_sum_map(J)


def ordinal_sum_map(J: Join) -> SimplicialMap:
    """Δⁿ⋆Δᵐ → Δ^{n+m+1} for a join of two standard simplices."""
    D = standard_simplex(J.X.dimension + J.Y.dimension + 1)
    return SimplicialMap(J.sset, D, [sequence_simplex(D, join_vertices(J, c)) for c in range(len(J.sset))])
