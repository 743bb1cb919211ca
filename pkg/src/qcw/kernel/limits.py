"""Products, coproducts, pullbacks, pushouts and quotients, computed levelwise."""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .maps import SimplicialMap
from .operators import face_values, identity_values, monotone_maps
from .sset import FiniteSimplicialSet, Simplex, SSetBuilder


@lru_cache(maxsize=None)
def lattice_paths(p: int, q: int) -> Tuple[tuple, ...]:
    """Strictly increasing chains in [p]×[q] from (0,0) to (p,q) with unit steps."""
    out = []

    def walk(path):
        i, j = path[-1]
        if (i, j) == (p, q):
            out.append(tuple(path))
            return
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            a, b = i + di, j + dj
            if a <= p and b <= q:
                path.append((a, b))
                walk(path)
                path.pop()

    walk([(0, 0)])
    out.sort(key=len)
    return tuple(out)


def _collapse(points):
    chain = []
    epi = []
    for pt in points:
        if not chain or chain[-1] != pt:
            chain.append(pt)
        epi.append(len(chain) - 1)
    return tuple(chain), tuple(epi)


class Product:
    """X×Y with its projections.  Cells are triples (x, y, chain)."""

    def __init__(self, X: FiniteSimplicialSet, Y: FiniteSimplicialSet,
                 vertex_ok: Optional[Callable[[int, int], bool]] = None,
                 cell_ok: Optional[Callable[[Simplex, Simplex], bool]] = None, name: str = ""):
        self.X, self.Y = X, Y
        found = []
        for x in range(len(X)):
            p = X.dims[x]
            vx = X.vertices(X.simplex(x))
            for y in range(len(Y)):
                q = Y.dims[y]
                vy = Y.vertices(Y.simplex(y))
                for chain in lattice_paths(p, q):
                    if vertex_ok is not None and not all(vertex_ok(vx[i], vy[j]) for i, j in chain):
                        continue
                    a = Simplex(x, tuple(i for i, _ in chain))
                    b = Simplex(y, tuple(j for _, j in chain))
                    if cell_ok is not None and not cell_ok(a, b):
                        continue
                    found.append((len(chain) - 1, x, y, chain))
        found.sort(key=lambda t: t[0])
        self._cell: Dict[tuple, int] = {}
        b = SSetBuilder(name or f"{X.name}×{Y.name}")
        for n, x, y, chain in found:
            faces = []
            if n > 0:
                ea = tuple(i for i, _ in chain)
                eb = tuple(j for _, j in chain)
                for j in range(n + 1):
                    d = face_values(n, j)
                    faces.append(self.pair(X.act(Simplex(x, ea), d), Y.act(Simplex(y, eb), d)))
            self._cell[(x, y, chain)] = b.add((X.labels[x], Y.labels[y], chain), faces)
        self.sset = b.build()
        P = self.sset
        self.proj = (
            SimplicialMap(P, X, [Simplex(x, tuple(i for i, _ in ch)) for (x, y, ch) in self._cells()], check=False),
            SimplicialMap(P, Y, [Simplex(y, tuple(j for _, j in ch)) for (x, y, ch) in self._cells()], check=False),
        )

    def _cells(self):
        inv = [None] * len(self._cell)
        for k, c in self._cell.items():
            inv[c] = k
        return inv

    def pair(self, a: Simplex, b: Simplex) -> Simplex:
        """Normal form of the simplex (a, b) of X×Y."""
        if a.dim != b.dim:
            raise ValueError("components of a product simplex must have equal dimension")
        chain, epi = _collapse(zip(a.degen, b.degen))
        c = self._cell[(a.cell, b.cell, chain)]
        return Simplex(c, epi)

    def components(self, s: Simplex) -> Tuple[Simplex, Simplex]:
        return self.proj[0](s), self.proj[1](s)

    def mediate(self, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
        """The map (f, g): Z → X×Y."""
        Z = f.source
        return SimplicialMap(Z, self.sset, [self.pair(f(Z.simplex(c)), g(Z.simplex(c))) for c in range(len(Z))],
                             check=False)


def product(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> Product:
    return Product(X, Y)


def product_map(P: Product, Q: Product, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """f×g: P → Q where P = X×Y and Q = X'×Y'."""
    S = P.sset
    out = []
    for c in range(len(S)):
        a, b = P.components(S.simplex(c))
        out.append(Q.pair(f(a), g(b)))
    return SimplicialMap(S, Q.sset, out, check=False)


class Coproduct:
    def __init__(self, X: FiniteSimplicialSet, Y: FiniteSimplicialSet, name=""):
        self.X, self.Y = X, Y
        order = sorted([(X.dims[c], 0, c) for c in range(len(X))] + [(Y.dims[c], 1, c) for c in range(len(Y))])
        pos = {(side, c): i for i, (_, side, c) in enumerate(order)}
        labels, faces = [], []
        for _, side, c in order:
            S = X if side == 0 else Y
            labels.append((side, S.labels[c]))
            faces.append([Simplex(pos[(side, f.cell)], f.degen) for f in S.faces[c]])
        self.sset = FiniteSimplicialSet(labels, faces, name or f"{X.name}⊔{Y.name}")
        self.inclusions = (
            SimplicialMap(X, self.sset, [self.sset.simplex(pos[(0, c)]) for c in range(len(X))], check=False),
            SimplicialMap(Y, self.sset, [self.sset.simplex(pos[(1, c)]) for c in range(len(Y))], check=False),
        )
        self._side = [(side, c) for _, side, c in order]

    def copair(self, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
        out = []
        for side, c in self._side:
            h = f if side == 0 else g
            out.append(h.images[c])
        return SimplicialMap(self.sset, f.target, out, check=False)


def coproduct(X, Y) -> Coproduct:
    return Coproduct(X, Y)


class Pullback:
    """X ×_A Y as the simplicial subset of X×Y where both composites agree."""

    def __init__(self, f: SimplicialMap, g: SimplicialMap, name=""):
        if f.target is not g.target and f.target.labels != g.target.labels:
            raise ValueError("pullback needs a cospan")
        X, Y = f.source, g.source
        fv = {c: f(X.simplex(c)).cell for c in X.cells(0)}
        gv = {c: g(Y.simplex(c)).cell for c in Y.cells(0)}
        self.product = Product(X, Y, vertex_ok=lambda a, b: fv[a] == gv[b],
                               cell_ok=lambda a, b: f(a) == g(b), name=name or f"{X.name}×{Y.name}")
        self.sset = self.product.sset
        self.proj = self.product.proj
        self.f, self.g = f, g

    def pair(self, a: Simplex, b: Simplex) -> Simplex:
        return self.product.pair(a, b)

    def mediate(self, h: SimplicialMap, k: SimplicialMap) -> SimplicialMap:
        return self.product.mediate(h, k)


def pullback(f, g) -> Pullback:
    return Pullback(f, g)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        parent = self.parent
        root = a
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(a, a) != root:
            nxt = parent[a]
            parent[a] = root
            a = nxt
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class Quotient:
    """X modulo the simplicial congruence generated by pairs of simplices."""

    def __init__(self, X: FiniteSimplicialSet, pairs: Iterable[Tuple[Simplex, Simplex]], name=""):
        pairs = list(pairs)
        for a, b in pairs:
            if a.dim != b.dim:
                raise ValueError("quotient pairs must have equal dimension")
        self.X = X
        top = X.dimension
        uf = _UnionFind()
        for n in range(top + 1):
            for a, b in pairs:
                for alpha in monotone_maps(n, a.dim):
                    uf.union(X.act(a, alpha), X.act(b, alpha))
        self._uf = uf
        normal: Dict[Simplex, Simplex] = {}
        b = SSetBuilder(name or f"{X.name}/~")
        for n in range(top + 1):
            classes: Dict[Simplex, List[Simplex]] = {}
            for x in X.total(n):
                classes.setdefault(uf.find(x), []).append(x)
            for root, members in classes.items():
                degenerate = next((z for z in members if X.is_degenerate(z)), None)
                if degenerate is not None:
                    base = normal[uf.find(X.simplex(degenerate.cell))]
                    nf = Simplex(base.cell, tuple(base.degen[i] for i in degenerate.degen))
                else:
                    rep = members[0]
                    faces = [normal[uf.find(X.face(rep, j))] for j in range(n + 1)] if n else []
                    nf = Simplex(b.add(X.labels[rep.cell], faces), identity_values(n))
                normal[root] = nf
        self._normal = normal
        self.sset = b.build()
        self.map = SimplicialMap(X, self.sset, [normal[uf.find(X.simplex(c))] for c in range(len(X))],
                                 check=False)

    def of(self, x: Simplex) -> Simplex:
        return self.map(x)


def quotient(X, pairs) -> Quotient:
    return Quotient(X, pairs)


class Pushout:
    """X ⊔_S Y for a span X ← S → Y."""

    def __init__(self, f: SimplicialMap, g: SimplicialMap, name=""):
        if f.source is not g.source and f.source.labels != g.source.labels:
            raise ValueError("pushout needs a span")
        S = f.source
        self.coproduct = Coproduct(f.target, g.target)
        i0, i1 = self.coproduct.inclusions
        pairs = [(i0(f(S.simplex(c))), i1(g(S.simplex(c)))) for c in range(len(S))]
        self.quotient = Quotient(self.coproduct.sset, pairs, name=name)
        self.sset = self.quotient.sset
        q = self.quotient.map
        self.inclusions = (i0.then(q), i1.then(q))

    def copair(self, h: SimplicialMap, k: SimplicialMap) -> SimplicialMap:
        """The induced map out of the pushout, checked to be well defined."""
        mid = self.coproduct.copair(h, k)
        P = self.sset
        images: List[Optional[Simplex]] = [None] * len(P)
        Q = self.quotient
        C = self.coproduct.sset
        for c in range(len(C)):
            img = Q.map.images[c]
            value = mid.images[c]
            if Q.sset.is_degenerate(img):
                continue
            if images[img.cell] is None:
                images[img.cell] = value
            elif images[img.cell] != value:
                raise ValueError("maps do not agree on the glued part")
        out = SimplicialMap(P, h.target, images)
        for c in range(len(C)):
            if out(Q.map.images[c]) != mid.images[c]:
                raise ValueError("maps do not agree on the glued part")
        return out


def pushout(f, g) -> Pushout:
    return Pushout(f, g)
