"""Standard simplices, boundaries, horns, skeleta and nerves of finite posets."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Hashable, Sequence

from .maps import SimplicialMap
from .sset import FiniteSimplicialSet, ordered_complex, subcomplex


@lru_cache(maxsize=None)
def standard_simplex(n: int) -> FiniteSimplicialSet:
    if n < 0:
        raise ValueError("Δⁿ needs n ≥ 0")
    faces = [s for k in range(n + 1) for s in combinations(range(n + 1), k + 1)]
    return ordered_complex(faces, name=f"Δ{n}")


@lru_cache(maxsize=None)
def boundary_inclusion(n: int) -> SimplicialMap:
    D = standard_simplex(n)
    Y, inc = subcomplex(D, [c for c in range(len(D)) if D.dims[c] < n], name=f"∂Δ{n}")
    return inc


def boundary(n: int) -> FiniteSimplicialSet:
    return boundary_inclusion(n).source


@lru_cache(maxsize=None)
def horn_inclusion(n: int, k: int) -> SimplicialMap:
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} out of range for Δ{n}")
    D = standard_simplex(n)
    full = set(range(n + 1))
    keep = [c for c in range(len(D)) if set(D.labels[c]) | {k} != full]
    Y, inc = subcomplex(D, keep, name=f"Λ{n},{k}")
    return inc


def horn(n: int, k: int) -> FiniteSimplicialSet:
    return horn_inclusion(n, k).source


def is_inner(n: int, k: int) -> bool:
    return 0 < k < n


def skeleton_inclusion(X: FiniteSimplicialSet, k: int) -> SimplicialMap:
    Y, inc = subcomplex(X, [c for c in range(len(X)) if X.dims[c] <= k], name=f"sk{k}({X.name})")
    return inc


def poset_nerve(elements: Sequence[Hashable], leq: Callable, name="") -> FiniteSimplicialSet:
    """Nerve of a finite poset: cells are strict chains, labelled by the chain."""
    elements = list(elements)
    less = {a: [b for b in elements if b != a and leq(a, b)] for a in elements}
    chains = []

    def grow(chain):
        chains.append(tuple(chain))
        for b in less[chain[-1]]:
            grow(chain + [b])

    for a in elements:
        grow([a])
    return ordered_complex(chains, name=name)


def chain_nerve(n: int) -> FiniteSimplicialSet:
    """Nerve of the ordinal [n] with integer vertices; this is Δⁿ."""
    return standard_simplex(n)


def codiscrete_nerve(objects: Sequence[Hashable], N: int, name: str = ""):
    """Nerve of the category with exactly one arrow between any two objects, up to level N.

    An n-simplex is any sequence of n+1 objects; it is nondegenerate when no
    two neighbours agree.
    """
    from .sset import Simplex, SSetBuilder
    objects = list(objects)
    b = SSetBuilder(name or f"coskeletal({len(objects)}) up to {N}")
    level = [(x,) for x in objects]
    for x in level:
        b.add(x)
    for n in range(1, N + 1):
        nxt = []
        for s in level:
            for x in objects:
                if x != s[-1]:
                    nxt.append(s + (x,))
        for s in nxt:
            faces = []
            for j in range(n + 1):
                f = s[:j] + s[j + 1:]
                chain, epi = [], []
                for v in f:
                    if not chain or chain[-1] != v:
                        chain.append(v)
                    epi.append(len(chain) - 1)
                faces.append(Simplex(b.index[tuple(chain)], tuple(epi)))
            b.add(s, faces)
        level = nxt
    return b.build(level=N, complete=len(objects) <= 1)


def iso_interval(N: int):
    """The free-living isomorphism 𝕀 up to level N; vertex 0 is the chosen endpoint."""
    return codiscrete_nerve((0, 1), N, name=f"sk{N} I")
