"""The fat join X◇Y.

X◇Y is X ⊔ Y glued to X×Δ¹×Y along the two end-slices, with every
(x, 0, y) collapsed to x and every (x, 1, y) to y.  We build it directly: a
nondegenerate middle cell is a pair of cells x, y together with a chain in
[p]×[1]×[q] that is strictly increasing, hits every element of [p] and of [q],
and meets both ends of [1].  Simplices whose [1]-coordinate is constant fall
into X or Y.  ``fat_join_pushout`` computes the same object from the pushout
and is kept as an independent check.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

from ..kernel.limits import Coproduct, Product, Pushout
from ..kernel.maps import SimplicialMap
from ..kernel.operators import face_values
from ..kernel.sset import FiniteSimplicialSet, Simplex, SSetBuilder, sequence_simplex
from ..kernel.standard import standard_simplex


@lru_cache(maxsize=None)
def fat_chains(p: int, q: int) -> Tuple[tuple, ...]:
    """Chains in [p]×[1]×[q] from (0,0,0) to (p,1,q) with steps in {0,1}³ minus 0."""
    steps = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1) if a or b or c]
    out = []

    def walk(path):
        i, e, j = path[-1]
        if (i, e, j) == (p, 1, q):
            out.append(tuple(path))
            return
        for a, b, c in steps:
            nxt = (i + a, e + b, j + c)
            if nxt[0] <= p and nxt[1] <= 1 and nxt[2] <= q:
                path.append(nxt)
                walk(path)
                path.pop()

    walk([(0, 0, 0)])
    out.sort(key=len)
    return tuple(out)


def _collapse(points):
    chain, epi = [], []
    for pt in points:
        if not chain or chain[-1] != pt:
            chain.append(pt)
        epi.append(len(chain) - 1)
    return tuple(chain), tuple(epi)


class FatJoin:
    def __init__(self, X: FiniteSimplicialSet, Y: FiniteSimplicialSet, name: str = ""):
        self.X, self.Y = X, Y
        entries = [(X.dims[x], 0, x, None, None) for x in range(len(X))]
        entries += [(Y.dims[y], 2, None, y, None) for y in range(len(Y))]
        for x in range(len(X)):
            for y in range(len(Y)):
                for ch in fat_chains(X.dims[x], Y.dims[y]):
                    entries.append((len(ch) - 1, 1, x, y, ch))
        entries.sort(key=lambda e: (e[0], e[1]))
        self._cell = {}
        b = SSetBuilder(name or f"{X.name}◇{Y.name}")
        for n, kind, x, y, ch in entries:
            if kind == 0:
                key, label = ("L", x), ("L", X.labels[x])
                faces = [self.left(f) for f in X.faces[x]]
            elif kind == 2:
                key, label = ("R", y), ("R", Y.labels[y])
                faces = [self.right(f) for f in Y.faces[y]]
            else:
                key, label = ("M", x, y, ch), ("M", X.labels[x], Y.labels[y], ch)
                s = Simplex(x, tuple(a for a, _, _ in ch))
                beta = tuple(e for _, e, _ in ch)
                t = Simplex(y, tuple(c for _, _, c in ch))
                faces = []
                for j in range(n + 1):
                    d = face_values(n, j)
                    faces.append(self.triple(X.act(s, d), tuple(beta[i] for i in d), Y.act(t, d)))
            self._cell[key] = b.add(label, faces)
        self.sset = b.build()
        F = self.sset
        self._key = [None] * len(F)
        for k, c in self._cell.items():
            self._key[c] = k
        self.inclusions = (
            SimplicialMap(X, F, [F.simplex(self._cell[("L", x)]) for x in range(len(X))], check=False),
            SimplicialMap(Y, F, [F.simplex(self._cell[("R", y)]) for y in range(len(Y))], check=False),
        )

    def left(self, s: Simplex) -> Simplex:
        return Simplex(self._cell[("L", s.cell)], s.degen)

    def right(self, t: Simplex) -> Simplex:
        return Simplex(self._cell[("R", t.cell)], t.degen)

    def triple(self, s: Optional[Simplex], beta: tuple, t: Optional[Simplex]) -> Simplex:
        """The class of (s, beta, t), where beta: [n] → [1] is monotone."""
        if all(e == 0 for e in beta):
            return self.left(s)
        if all(e == 1 for e in beta):
            return self.right(t)
        chain, epi = _collapse(zip(s.degen, beta, t.degen))
        return Simplex(self._cell[("M", s.cell, t.cell, chain)], epi)

    def kind(self, c: int) -> tuple:
        return self._key[c]

    def split(self, z: Simplex):
        """(s, beta, t) for a simplex in the middle; (s, 0…0, None) or (None, 1…1, t) at the ends."""
        key = self._key[z.cell]
        n = len(z.degen)
        if key[0] == "L":
            return Simplex(key[1], z.degen), (0,) * n, None
        if key[0] == "R":
            return None, (1,) * n, Simplex(key[1], z.degen)
        _, x, y, ch = key
        pts = [ch[i] for i in z.degen]
        return (Simplex(x, tuple(a for a, _, _ in pts)), tuple(e for _, e, _ in pts),
                Simplex(y, tuple(c for _, _, c in pts)))


def fat_join(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> FiniteSimplicialSet:
    return FatJoin(X, Y).sset


def fat_join_map(P: FatJoin, Q: FatJoin, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """f◇g: P → Q."""
    S = P.sset
    out = []
    for c in range(len(S)):
        s, beta, t = P.split(S.simplex(c))
        out.append(Q.triple(None if s is None else f(s), beta, None if t is None else g(t)))
    return SimplicialMap(S, Q.sset, out, check=False)


class FatJoinPushout:
    """X◇Y as the pushout X⊔Y ← (X×Y)⊔(X×Y) → X×Δ¹×Y."""

    def __init__(self, X: FiniteSimplicialSet, Y: FiniteSimplicialSet):
        self.X, self.Y = X, Y
        I = standard_simplex(1)
        XY = Product(X, Y)
        self.XI = Product(X, I)
        self.cyl = Product(self.XI.sset, Y)
        both = Coproduct(XY.sset, XY.sset)
        sides = Coproduct(X, Y)
        to_sides = both.copair(XY.proj[0].then(sides.inclusions[0]), XY.proj[1].then(sides.inclusions[1]))
        ends = [self._end(XY, e) for e in (0, 1)]
        to_cyl = both.copair(*ends)
        self.pushout = Pushout(to_sides, to_cyl, name=f"{X.name}◇{Y.name}")
        self.sset = self.pushout.sset
        self.sides = sides
        self.inclusions = (sides.inclusions[0].then(self.pushout.inclusions[0]),
                           sides.inclusions[1].then(self.pushout.inclusions[0]))
        self.quotient = self.pushout.inclusions[1]

    def _end(self, XY: Product, e: int) -> SimplicialMap:
        out = []
        for c in range(len(XY.sset)):
            a, b = XY.components(XY.sset.simplex(c))
            v = Simplex(e, (0,) * len(a.degen))
            out.append(self.cyl.pair(self.XI.pair(a, v), b))
        return SimplicialMap(XY.sset, self.cyl.sset, out, check=False)

    def of_triple(self, s: Simplex, beta: tuple, t: Simplex) -> Simplex:
        return self.quotient(self.cyl.pair(self.XI.pair(s, sequence_simplex(standard_simplex(1), beta)), t))


def fat_join_pushout(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> FatJoinPushout:
    return FatJoinPushout(X, Y)


def fat_join_comparison(F: FatJoin, P: FatJoinPushout) -> SimplicialMap:
    """The map from the direct construction to the pushout; an isomorphism."""
    S = F.sset
    out = []
    for c in range(len(S)):
        s, beta, t = F.split(S.simplex(c))
        if t is None:
            out.append(P.inclusions[0](s))
        elif s is None:
            out.append(P.inclusions[1](t))
        else:
            out.append(P.of_triple(s, beta, t))
    return SimplicialMap(S, P.sset, out)
