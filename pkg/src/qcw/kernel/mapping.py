"""Mapping objects: truncated exponentials and their constrained relatives.

An n-simplex of a mapping object is a map out of a "test" simplicial set T_n
into A, possibly with a prescribed part and a prescribed composite to some B.
Faces and degeneracies come from precomposition with maps T_{n-1} → T_n and
T_{n+1} → T_n.  ``realize`` then sorts out which simplices are degenerate.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Callable, Dict, List, Optional

from .extensions import Budget, enumerate_lifts
from .limits import Product, product_map
from .maps import SimplicialMap, identity_map
from .operators import degeneracy_values, face_values
from .sset import FiniteSimplicialSet, Simplex, known_level, realize, sequence_simplex
from .standard import standard_simplex


def precompose(A: FiniteSimplicialSet, images, m: SimplicialMap) -> tuple:
    """Images of g∘m for g given by its images."""
    act = A.act
    out = []
    for s in m.images:
        img = images[s.cell]
        out.append(img if len(s.degen) == len(img.degen) else act(img, s.degen))
    return tuple(out)


def simplex_map(alpha, m: int, n: int) -> SimplicialMap:
    """The map Δᵐ → Δⁿ induced by a monotone alpha: [m] → [n]."""
    return _simplex_map(tuple(alpha), m, n)


@lru_cache(maxsize=None)
def _simplex_map(alpha, m, n):
    S, T = standard_simplex(m), standard_simplex(n)
    return SimplicialMap(S, T, [sequence_simplex(T, [alpha[i] for i in S.labels[c]]) for c in range(len(S))],
                         check=False)


class Cylinders:
    """The products X×Δⁿ and the maps X×α between them, built on demand."""

    def __init__(self, X: FiniteSimplicialSet):
        self.X = X
        self._products: Dict[int, Product] = {}
        self._maps: Dict[tuple, SimplicialMap] = {}

    def product(self, n: int) -> Product:
        P = self._products.get(n)
        if P is None:
            P = Product(self.X, standard_simplex(n), name=f"{self.X.name}×Δ{n}")
            self._products[n] = P
        return P

    def __getitem__(self, n: int) -> FiniteSimplicialSet:
        return self.product(n).sset

    def along(self, alpha, m: int, n: int) -> SimplicialMap:
        """X×alpha: X×Δᵐ → X×Δⁿ."""
        key = (tuple(alpha), m, n)
        hit = self._maps.get(key)
        if hit is None:
            P, Q = self.product(m), self.product(n)
            a = simplex_map(alpha, m, n)
            S = P.sset
            imgs = []
            for c in range(len(S)):
                x, y = P.components(S.simplex(c))
                imgs.append(Q.pair(x, a(y)))
            hit = SimplicialMap(S, Q.sset, imgs, check=False)
            self._maps[key] = hit
        return hit

    def end(self, n: int, e: int) -> SimplicialMap:
        """The inclusion X ≅ X×Δ⁰ → X×Δⁿ at the vertex e."""
        return self.along((e,), 0, n)

    def projection(self, n: int) -> SimplicialMap:
        return self.product(n).proj[0]


class MappingObject:
    """A truncated simplicial set whose n-simplices are maps out of T_n.

    ``test(n)`` gives T_n, ``coface(n, j)`` the map T_{n-1} → T_n and
    ``codegeneracy(n, j)`` the map T_{n+1} → T_n.  ``fixed(n)`` prescribes
    images on part of T_n; ``over(n)`` optionally returns (p, v_n).
    ``fixings(n)``, if given, replaces ``fixed`` by a sequence of alternative
    prescriptions whose solution sets are disjoint.
    """

    def __init__(self, A: FiniteSimplicialSet, N: int, test: Callable, coface: Callable,
                 codegeneracy: Callable, fixed: Callable = None, over: Callable = None,
                 budget: Optional[Budget] = None, name: str = "", complete: bool = False,
                 test_dim: Callable = None, fixings: Callable = None):
        self.A = A
        self.test = test
        self.coface = coface
        self.codegeneracy = codegeneracy
        budget = budget or Budget()
        depth = known_level(A)
        if test_dim is not None:
            while N > 0 and test_dim(N) > depth:
                N -= 1
            if test_dim(N) > depth:
                raise ValueError("target truncation too shallow for this mapping object")
        self.level = N

        def keys_at(n):
            ov = over(n) if over else None
            options = fixings(n) if fixings else [fixed(n) if fixed else None]
            for fx in options:
                for imgs in enumerate_lifts(test(n), A, fx, ov, budget):
                    yield n, tuple(imgs)

        def face_key(key, j):
            n, imgs = key
            return n - 1, precompose(A, imgs, coface(n, j))

        def degen_key(key, j):
            n, imgs = key
            return n + 1, precompose(A, imgs, codegeneracy(n, j))

        self.sset, self.normal = realize(N, keys_at, face_key, degen_key, label=self._label,
                                         name=name, complete=complete, budget=budget)
        self.key_of_cell: List[tuple] = [None] * len(self.sset)
        for key, nf in self.normal.items():
            if len(nf.degen) == self.sset.dims[nf.cell] + 1:
                self.key_of_cell[nf.cell] = key[1]

    @staticmethod
    def _label(key):
        return tuple((s.cell, s.degen) for s in key[1])

    def images_of(self, x: Simplex) -> tuple:
        """The map T_n → A represented by the simplex x."""
        key = self.key_of_cell[x.cell]
        k = self.sset.dims[x.cell]
        if x.dim == k:
            return key
        return precompose(self.A, key, self._operator_map(x.degen, x.dim, k))

    def _operator_map(self, alpha, n, k):
        """The map T_n → T_k induced by a surjection alpha: [n] → [k]."""
        result = None
        current = tuple(alpha)
        level = n
        while level > k:
            j = next(i for i in range(level) if current[i] == current[i + 1])
            m = self.codegeneracy(level - 1, j)
            result = m if result is None else result.then(m)
            current = current[:j + 1] + current[j + 2:]
            level -= 1
        return result

    def map_of(self, x: Simplex) -> SimplicialMap:
        return SimplicialMap(self.test(x.dim), self.A, list(self.images_of(x)), check=False)

    def simplex_of(self, images, n: int) -> Simplex:
        """Normal form of the n-simplex given by a map T_n → A."""
        return self.normal[(n, tuple(images))]

    def lookup(self, images, n: int) -> Optional[Simplex]:
        return self.normal.get((n, tuple(images)))


class Exponential(MappingObject):
    """A^X truncated at level N: n-simplices are maps X×Δⁿ → A.

    With ``vertices`` given (a list of image tuples of maps X → A), only the
    simplices all of whose vertices are in the list are built: the full
    simplicial subset on those vertices.  With ``over = (q, p)`` for
    q: A → C and p: X → C, only maps k with q∘k = p∘π are kept.
    """

    def __init__(self, X: FiniteSimplicialSet, A: FiniteSimplicialSet, N: int,
                 budget: Optional[Budget] = None, name: str = "", vertices=None, over=None):
        self.X = X
        self.cyl = Cylinders(X)
        cyl = self.cyl
        fixings = None
        if vertices is not None:
            vertices = [tuple(v) for v in vertices]

            def fixings(n):
                ends = [cyl.end(n, e) for e in range(n + 1)]
                for choice in product(vertices, repeat=n + 1):
                    fx = {}
                    for e, v in enumerate(choice):
                        for c, z in enumerate(ends[e].images):
                            fx[z.cell] = v[c]
                    yield fx
        super().__init__(
            A, N,
            test=lambda n: cyl[n],
            coface=lambda n, j: cyl.along(face_values(n, j), n - 1, n),
            codegeneracy=lambda n, j: cyl.along(degeneracy_values(n, j), n + 1, n),
            budget=budget, name=name or f"{A.name}^{X.name}",
            complete=not X.labels,
            test_dim=lambda n: (X.dimension + n) if X.labels else 0,
            fixings=fixings,
            over=None if over is None else (lambda n: (over[0], cyl.projection(n).then(over[1]))),
        )

    def evaluate(self, x: Simplex, s: Simplex, t: Optional[Simplex] = None) -> Simplex:
        """k(s, t) for the map k: X×Δⁿ → A named by x.

        ``t`` defaults to the top simplex of Δⁿ when s has dimension n, and to
        the degenerate vertex when x is a vertex.
        """
        n = x.dim
        D = standard_simplex(n)
        if t is None:
            if s.dim == n:
                t = D.simplex(len(D) - 1)
            elif n == 0:
                t = Simplex(0, (0,) * (s.dim + 1))
            else:
                raise ValueError("give the Δⁿ component explicitly")
        z = self.cyl.product(n).pair(s, t)
        img = self.images_of(x)[z.cell]
        return img if len(z.degen) == len(img.degen) else self.A.act(img, z.degen)

    def vertex_component(self, x: Simplex, v: int) -> Simplex:
        """The simplex of A obtained by evaluating x at the vertex v of X."""
        return self.evaluate(x, Simplex(v, (0,) * (x.dim + 1)))

    def restriction(self, i: SimplicialMap, other: "Exponential") -> SimplicialMap:
        """A^i: A^Y → A^X for i: X → Y, where self is A^Y and other is A^X."""
        S = self.sset
        out = []
        for c in range(len(S)):
            n = S.dims[c]
            m = product_map(other.cyl.product(n), self.cyl.product(n), i, identity_map(standard_simplex(n)))
            out.append(other.simplex_of(precompose(self.A, self.key_of_cell[c], m), n))
        return SimplicialMap(S, other.sset, out, check=False)


def exponential_truncated(X: FiniteSimplicialSet, A: FiniteSimplicialSet, N: int,
                          budget: Optional[Budget] = None) -> Exponential:
    return Exponential(X, A, N, budget)
