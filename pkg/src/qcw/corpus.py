"""Named example simplicial sets, categories, maps and adjunctions.

Everything here is deterministic; the CLI ``corpus`` command and the tests
draw on the same constructors.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Dict, List, Tuple

from .kernel.extensions import enumerate_lifts, first_lift
from .kernel.maps import SimplicialMap
from .kernel.sset import FiniteSimplicialSet, Simplex, SSetBuilder, TruncatedSSet, sequence_simplex
from .kernel.standard import horn_inclusion, poset_nerve, standard_simplex
from .homotopy.categories import FiniteCategory, contractible_groupoid, poset_category
from .homotopy.hcat import nerve


def free_inner_completion(cells: Dict[int, List[Tuple[str, List[Tuple[str, tuple]]]]], N: int,
                          name: str = "K") -> TruncatedSSet:
    """Add fillers for inner horns of dimension ≤ N until every such horn fills.

    ``cells[n]`` lists (label, faces) with faces as (label, epi) pairs.  A
    missing face is reused from an existing simplex with the right boundary
    when there is one, so each round adds finitely many cells.
    """
    cells = {n: list(v) for n, v in cells.items()}
    counter = [0]

    def build():
        b = SSetBuilder(name)
        for n in sorted(cells):
            for label, faces in cells[n]:
                b.add(label, [Simplex(b.index[f], tuple(e)) for f, e in faces])
        return b.build(level=N)

    def as_pair(X, s):
        return (X.labels[s.cell], s.degen)

    while True:
        X = build()
        added = False
        for n in range(2, N + 1):
            for k in range(1, n):
                inc = horn_inclusion(n, k)
                H = inc.source
                face_cell = {H.labels[c]: c for c in range(len(H))}
                for u in enumerate_lifts(H, X):
                    fixed = {inc.images[c].cell: u[c] for c in range(len(H))}
                    if first_lift(standard_simplex(n), X, fixed) is not None:
                        continue
                    top = tuple(range(n + 1))
                    faces = {j: u[face_cell[top[:j] + top[j + 1:]]] for j in range(n + 1) if j != k}
                    if n == 2:
                        bd = (X.face(faces[2], 0), X.face(faces[0], 1))
                    else:
                        bd = tuple(X.face(faces[i], k - 1) if i < k else X.face(faces[i + 1], k)
                                   for i in range(n))
                    pool = X.by_boundary(n - 1).get(bd, ())
                    if pool:
                        missing = as_pair(X, pool[0])
                    else:
                        counter[0] += 1
                        lab = f"{name}{n - 1}_{counter[0]}"
                        cells.setdefault(n - 1, []).append((lab, [as_pair(X, s) for s in bd]))
                        missing = (lab, tuple(range(n)))
                    counter[0] += 1
                    row = [as_pair(X, faces[j]) if j != k else missing for j in range(n + 1)]
                    cells.setdefault(n, []).append((f"{name}{n}_{counter[0]}", row))
                    added = True
                    break
                if added:
                    break
            if added:
                break
        if not added:
            return X


@lru_cache(maxsize=None)
def homotopic_pair(N: int = 4) -> TruncatedSSet:
    """A quasi-category (up to level N) with parallel edges f, g: x → y made homotopic
    by a 2-simplex with faces (id_y, g, f).  Distinct homotopic edges mean it is not a nerve."""
    seed = {
        0: [("x", []), ("y", [])],
        1: [("f", [("y", (0,)), ("x", (0,))]), ("g", [("y", (0,)), ("x", (0,))])],
        2: [("t", [("y", (0, 0)), ("g", (0, 1)), ("f", (0, 1))])],
    }
    return free_inner_completion(seed, N, name="K")


def poset_chain(n: int) -> FiniteSimplicialSet:
    """Nerve of [n]; identical to Δⁿ."""
    return standard_simplex(n)


def square_category() -> FiniteCategory:
    pts = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return poset_category(pts, lambda a, b: a[0] <= b[0] and a[1] <= b[1], name="[1]x[1]")


def square_poset() -> FiniteSimplicialSet:
    return nerve(square_category(), 3, name="N([1]x[1])")


def iso_groupoid(cap: int = 3) -> FiniteSimplicialSet:
    """The nerve of the two-object contractible groupoid up to level ``cap``."""
    return nerve(contractible_groupoid([0, 1], name="I"), cap, name=f"sk{cap} N(I)")


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def divisor_category(n: int = 12) -> FiniteCategory:
    return poset_category(divisors(n), lambda a, b: b % a == 0, name=f"Div({n})")


def divisor_lattice(n: int = 12) -> FiniteSimplicialSet:
    """Nerve of the divisibility order on the divisors of n; vertices are labelled by divisors."""
    return poset_nerve(divisors(n), lambda a, b: b % a == 0, name=f"N(Div({n}))")


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def smothering_corpus(groupoid_cap: int = 4, pair_level: int = 4) -> Dict[str, FiniteSimplicialSet]:
    """Six quasi-categories: three chains, a square, a groupoid and a non-nerve example."""
    return {
        "chain1": poset_chain(1),
        "chain2": poset_chain(2),
        "chain3": poset_chain(3),
        "square": square_poset(),
        "groupoid": iso_groupoid(groupoid_cap),
        "homotopic-pair": homotopic_pair(pair_level),
    }


def vertex_named(X: FiniteSimplicialSet, label) -> int:
    for v in X.cells(0):
        if X.labels[v] == label or X.labels[v] == (label,):
            return v
    raise KeyError(label)


def monotone_nerve_map(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, on_vertices) -> SimplicialMap:
    """The map between ordered complexes (or poset nerves) induced by a vertex function."""
    return SimplicialMap(X, Y, [sequence_simplex(Y, [on_vertices(v) for v in X.labels[c]])
                                for c in range(len(X))])


def vertexwise_map(S: FiniteSimplicialSet, Y: FiniteSimplicialSet, on_vertices) -> SimplicialMap:
    """The map S → Y determined by a vertex function, for Y a poset nerve or codiscrete nerve.

    ``on_vertices`` sends a vertex cell of S to a vertex cell of Y; every
    simplex of Y is then fixed by its vertex sequence.
    """
    out = []
    for c in range(len(S)):
        vs = S.vertices(S.simplex(c))
        out.append(sequence_simplex(Y, [Y.labels[on_vertices(v)][0] for v in vs]))
    return SimplicialMap(S, Y, out)


def vertexwise_witness(f: SimplicialMap, u: SimplicialMap):
    """Unit, counit and triangle witnesses for f ⊣ u between vertex-determined quasi-categories.

    The unit runs b → u f b and the counit f u a → a; both triangles are
    degenerate on their outer faces, so each witness is fixed by its vertices.
    Raises if the vertex data do not form monotone maps, that is if f is not
    left adjoint to u.
    """
    from .analysis.adjunction import AdjunctionWitness, cylinder
    B, A = f.source, f.target
    fv = lambda b: f(Simplex(b, (0,))).cell
    uv = lambda a: u(Simplex(a, (0,))).cell

    def along(X, target, ends):
        """The map X×Δⁿ → target sending (x, i) to ends[i](x) on vertices."""
        P = cylinder(X, len(ends) - 1)

        def on(z):
            x, t = P.components(P.sset.simplex(z))
            return ends[P.Y.labels[t.cell][0]](x.cell)
        return vertexwise_map(P.sset, target, on)

    eta = along(B, B, [lambda b: b, lambda b: uv(fv(b))])
    eps = along(A, A, [lambda a: fv(uv(a)), lambda a: a])
    alpha = along(A, B, [uv, lambda a: uv(fv(uv(a))), uv])
    beta = along(B, A, [fv, lambda b: fv(uv(fv(b))), fv])
    return AdjunctionWitness(f, u, eta, eps, alpha, beta)


def iota_trunc():
    """ι: [1] → [2] and its right adjoint y ↦ min(y, 1), as maps of nerves."""
    B, A = poset_chain(1), poset_chain(2)
    iota = monotone_nerve_map(B, A, lambda v: v)
    trunc = monotone_nerve_map(A, B, lambda v: min(v, 1))
    return iota, trunc


def corpus_adjunctions(groupoid_cap: int = 3) -> Dict[str, object]:
    """Adjunction witnesses: identities, ι ⊣ trunc, and ! ⊣ t for terminal t."""
    from .kernel.maps import identity_map, vertex_map
    from .kernel.lifting import to_point
    out = {}
    D2 = poset_chain(2)
    out["identity-chain2"] = vertexwise_witness(identity_map(D2), identity_map(D2))
    out["iota-trunc"] = vertexwise_witness(*iota_trunc())
    out["point-top-chain2"] = vertexwise_witness(to_point(D2), vertex_map(D2, 2))
    I = iso_groupoid_coskeletal(groupoid_cap)
    out["point-groupoid"] = vertexwise_witness(to_point(I), vertex_map(I, 0))
    S = square_nerve()
    out["point-top-square"] = vertexwise_witness(to_point(S), vertex_map(S, vertex_named(S, (1, 1))))
    return out


def iso_groupoid_coskeletal(cap: int = 3) -> FiniteSimplicialSet:
    """The contractible two-object groupoid as a codiscrete nerve (vertex-determined simplices)."""
    from .kernel.standard import iso_interval
    return iso_interval(cap)


def square_nerve() -> FiniteSimplicialSet:
    """[1]×[1] as a poset nerve with vertices labelled by pairs."""
    pts = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return poset_nerve(pts, lambda a, b: a[0] <= b[0] and a[1] <= b[1], name="N([1]x[1])")


def arrow_projection(C: FiniteCategory, N: int, base_level: int = None):
    """(N C, N(C^2), domain projection) for a finite category C.

    For a nerve the comma A↓A is the nerve of the arrow category, so this is a
    cheap stand-in for the domain projection of A↓A at high levels.
    """
    from .homotopy.categories import CatFunctor, arrow_category
    from .homotopy.hcat import nerve_map
    C2 = arrow_category(C)
    dom = CatFunctor(C2, C, {o: o[0] for o in C2.objects}, {a: a[2] for a in C2.arrows}, name="dom")
    A = nerve(C, N if base_level is None else base_level)
    F = nerve(C2, N, name=f"N({C.name}^2)")
    return A, F, nerve_map(dom, F, A)
