"""Finite categories given by full composition tables, and functors between them."""
from __future__ import annotations

from itertools import product as iproduct
from typing import Dict, Hashable, List, Sequence, Tuple


class CategoryError(ValueError):
    pass


class FiniteCategory:
    """Objects, arrows with source and target, identities, and a total composition table.

    ``compose[(g, f)]`` is g∘f, defined exactly when target(f) = source(g).
    """

    def __init__(self, objects: Sequence[Hashable], arrows: Dict[Hashable, Tuple[Hashable, Hashable]],
                 identities: Dict[Hashable, Hashable], compose: Dict[Tuple[Hashable, Hashable], Hashable],
                 name: str = "", check: bool = True):
        self.objects = list(objects)
        self.arrows = dict(arrows)
        self.identities = dict(identities)
        self.compose = dict(compose)
        self.name = name
        self._hom: Dict[tuple, List] = {}
        for a, (s, t) in self.arrows.items():
            self._hom.setdefault((s, t), []).append(a)
        if check:
            self.validate()

    def src(self, a):
        return self.arrows[a][0]

    def tgt(self, a):
        return self.arrows[a][1]

    def hom(self, x, y) -> List:
        return self._hom.get((x, y), [])

    def comp(self, g, f):
        """g∘f."""
        return self.compose[(g, f)]

    def validate(self):
        obs = set(self.objects)
        if len(obs) != len(self.objects):
            raise CategoryError("repeated object")
        for a, (s, t) in self.arrows.items():
            if s not in obs or t not in obs:
                raise CategoryError(f"arrow {a!r} has an unknown endpoint")
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or self.arrows.get(i) != (x, x):
                raise CategoryError(f"object {x!r} lacks an identity")
        for f, (s, t) in self.arrows.items():
            for g in self.hom_from(t):
                gf = self.compose.get((g, f))
                if gf is None:
                    raise CategoryError(f"composite of {g!r} and {f!r} missing")
                if self.arrows.get(gf) != (s, self.tgt(g)):
                    raise CategoryError(f"composite of {g!r} and {f!r} has the wrong type")
            if self.compose[(self.identities[t], f)] != f or self.compose[(f, self.identities[s])] != f:
                raise CategoryError(f"identity law fails at {f!r}")
        for f in self.arrows:
            for g in self.hom_from(self.tgt(f)):
                for h in self.hom_from(self.tgt(g)):
                    if self.comp(h, self.comp(g, f)) != self.comp(self.comp(h, g), f):
                        raise CategoryError(f"associativity fails at ({h!r}, {g!r}, {f!r})")
        return self

    def hom_from(self, x) -> List:
        return [a for a, (s, _) in self.arrows.items() if s == x]

    def is_identity(self, a) -> bool:
        return self.identities[self.src(a)] == a

    def inverse(self, a):
        """An inverse of a, found by exhaustive search, or None."""
        s, t = self.arrows[a]
        for b in self.hom(t, s):
            if self.comp(b, a) == self.identities[s] and self.comp(a, b) == self.identities[t]:
                return b
        return None

    def is_iso(self, a) -> bool:
        return self.inverse(a) is not None

    def is_groupoid(self) -> bool:
        return all(self.is_iso(a) for a in self.arrows)

    def components(self) -> List[List]:
        """Connected components of the underlying graph."""
        parent = {x: x for x in self.objects}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, (s, t) in self.arrows.items():
            parent[find(s)] = find(t)
        groups: Dict = {}
        for x in self.objects:
            groups.setdefault(find(x), []).append(x)
        return list(groups.values())

    def non_identity_arrows(self) -> List:
        return [a for a in self.arrows if not self.is_identity(a)]

    def __repr__(self):
        return f"<FiniteCategory {self.name} |ob|={len(self.objects)} |ar|={len(self.arrows)}>"


class CatFunctor:
    def __init__(self, source: FiniteCategory, target: FiniteCategory, on_objects: Dict, on_arrows: Dict,
                 check: bool = True, name: str = ""):
        self.source, self.target = source, target
        self.on_objects = dict(on_objects)
        self.on_arrows = dict(on_arrows)
        self.name = name
        if check:
            self.validate()

    def validate(self):
        S, T = self.source, self.target
        for a, (s, t) in S.arrows.items():
            fa = self.on_arrows.get(a)
            if fa is None or T.arrows.get(fa) != (self.on_objects[s], self.on_objects[t]):
                raise CategoryError(f"functor misplaces arrow {a!r}")
        for x in S.objects:
            if self.on_arrows[S.identities[x]] != T.identities[self.on_objects[x]]:
                raise CategoryError(f"functor does not preserve the identity at {x!r}")
        for (g, f), gf in S.compose.items():
            if T.comp(self.on_arrows[g], self.on_arrows[f]) != self.on_arrows[gf]:
                raise CategoryError(f"functor does not preserve the composite of {g!r} and {f!r}")
        return self

    def __call__(self, a):
        return self.on_arrows[a]

    def is_iso(self) -> bool:
        return (len(set(self.on_objects.values())) == len(self.target.objects) == len(self.source.objects)
                and len(set(self.on_arrows.values())) == len(self.target.arrows) == len(self.source.arrows))


def identity_functor(C: FiniteCategory) -> CatFunctor:
    return CatFunctor(C, C, {x: x for x in C.objects}, {a: a for a in C.arrows}, check=False)


def compose_functors(F: CatFunctor, G: CatFunctor) -> CatFunctor:
    """G∘F."""
    return CatFunctor(F.source, G.target, {x: G.on_objects[F.on_objects[x]] for x in F.source.objects},
                      {a: G.on_arrows[F.on_arrows[a]] for a in F.source.arrows}, check=False)


def poset_category(elements: Sequence, leq, name: str = "") -> FiniteCategory:
    """A poset as a category; the arrow x ≤ y is the pair (x, y)."""
    elements = list(elements)
    arrows = {(x, y): (x, y) for x in elements for y in elements if leq(x, y)}
    ids = {x: (x, x) for x in elements}
    comp = {((y, z), (x, y2)): (x, z) for (x, y2) in arrows for (y, z) in arrows if y == y2}
    return FiniteCategory(elements, arrows, ids, comp, name)


def chain_category(n: int) -> FiniteCategory:
    return poset_category(range(n + 1), lambda a, b: a <= b, name=f"[{n}]")


def contractible_groupoid(objects: Sequence, name: str = "") -> FiniteCategory:
    """Exactly one arrow between any two objects."""
    return poset_category(objects, lambda a, b: True, name=name)


def discrete_category(objects: Sequence, name: str = "") -> FiniteCategory:
    return poset_category(objects, lambda a, b: a == b, name=name)


def terminal_category() -> FiniteCategory:
    return discrete_category([0], name="1")


def product_category(C: FiniteCategory, D: FiniteCategory, name: str = "") -> FiniteCategory:
    objs = list(iproduct(C.objects, D.objects))
    arrows = {(a, b): ((C.src(a), D.src(b)), (C.tgt(a), D.tgt(b))) for a in C.arrows for b in D.arrows}
    ids = {(x, y): (C.identities[x], D.identities[y]) for x, y in objs}
    comp = {}
    for (g, f) in C.compose:
        for (k, h) in D.compose:
            comp[((g, k), (f, h))] = (C.compose[(g, f)], D.compose[(k, h)])
    return FiniteCategory(objs, arrows, ids, comp, name or f"{C.name}×{D.name}")


def comma_category(F: CatFunctor, G: CatFunctor, name: str = "") -> FiniteCategory:
    """F↓G for F: B → A, G: C → A.

    Objects are (b, c, a) with a: Fb → Gc; arrows are pairs (u: b → b', v: c → c')
    making the square commute, recorded as (source, target, u, v).
    """
    A, B, C = F.target, F.source, G.source
    if G.target is not A:
        raise CategoryError("comma needs a cospan of functors")
    objs = []
    for b in B.objects:
        for c in C.objects:
            for a in A.hom(F.on_objects[b], G.on_objects[c]):
                objs.append((b, c, a))
    arrows, ids = {}, {}
    for o in objs:
        b, c, a = o
        for o2 in objs:
            b2, c2, a2 = o2
            for u in B.hom(b, b2):
                for v in C.hom(c, c2):
                    if A.comp(a2, F.on_arrows[u]) == A.comp(G.on_arrows[v], a):
                        arrows[(o, o2, u, v)] = (o, o2)
        ids[o] = (o, o, B.identities[b], C.identities[c])
    comp = {}
    for f in arrows:
        for g in arrows:
            if f[1] == g[0]:
                comp[(g, f)] = (f[0], g[1], B.comp(g[2], f[2]), C.comp(g[3], f[3]))
    return FiniteCategory(objs, arrows, ids, comp, name or "comma")


def arrow_category(A: FiniteCategory) -> FiniteCategory:
    """A^𝟚 as the comma of the identity with itself."""
    I = identity_functor(A)
    return comma_category(I, I, name=f"{A.name}^2")


def pullback_category(F: CatFunctor, G: CatFunctor, name: str = "") -> FiniteCategory:
    """B ×_A C, with objects (b, c) and arrows (u, v) such that Fu = Gv."""
    B, C = F.source, G.source
    objs = [(b, c) for b in B.objects for c in C.objects if F.on_objects[b] == G.on_objects[c]]
    arrows = {(u, v): ((B.src(u), C.src(v)), (B.tgt(u), C.tgt(v)))
              for u in B.arrows for v in C.arrows
              if F.on_arrows[u] == G.on_arrows[v]}
    arrows = {k: st for k, st in arrows.items() if st[0] in set(objs)}
    ids = {(b, c): (B.identities[b], C.identities[c]) for b, c in objs}
    comp = {}
    for f in arrows:
        for g in arrows:
            if arrows[f][1] == arrows[g][0]:
                comp[(g, f)] = (B.comp(g[0], f[0]), C.comp(g[1], f[1]))
    return FiniteCategory(objs, arrows, ids, comp, name or "pullback")


def fibre_category(F: CatFunctor, y) -> FiniteCategory:
    """Objects over y and arrows over its identity."""
    S, T = F.source, F.target
    objs = [x for x in S.objects if F.on_objects[x] == y]
    idy = T.identities[y]
    arrows = {a: st for a, st in S.arrows.items() if F.on_arrows[a] == idy}
    ids = {x: S.identities[x] for x in objs}
    comp = {(g, f): S.comp(g, f) for f in arrows for g in arrows if arrows[f][1] == arrows[g][0]}
    return FiniteCategory(objs, arrows, ids, comp, name=f"fibre over {y!r}")


def category_document(C: FiniteCategory) -> dict:
    """JSON form: object list, arrow triples, composition table, all by index."""
    oi = {x: i for i, x in enumerate(C.objects)}
    arrows = list(C.arrows)
    ai = {a: i for i, a in enumerate(arrows)}
    return {
        "objects": [repr(x) for x in C.objects],
        "arrows": [[repr(a), oi[C.src(a)], oi[C.tgt(a)]] for a in arrows],
        "identities": [ai[C.identities[x]] for x in C.objects],
        "composition": sorted([ai[g], ai[f], ai[gf]] for (g, f), gf in C.compose.items()),
    }
