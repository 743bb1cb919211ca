"""Adjunctions between quasi-categories, witnessed by unit, counit and two 2-simplices.

For f: B → A and u: A → B the data are

    eta:     B×Δ¹ → B   from id_B to u∘f
    epsilon: A×Δ¹ → A   from f∘u to id_A
    alpha:   A×Δ² → B   with faces d2 = eta·u, d1 = id_u, d0 = u·epsilon
    beta:    B×Δ² → A   with faces d2 = f·eta, d1 = id_f, d0 = epsilon·f

For truncated inputs every cylinder X×Δⁿ is cut down to the known levels of X.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional

from ..kernel.extensions import Budget, BudgetExceeded, enumerate_lifts, first_lift
from ..kernel.lifting import INCONCLUSIVE, REFUTED, VERIFIED
from ..kernel.limits import Product
from ..kernel.mapping import simplex_map
from ..kernel.maps import SimplicialMap, identity_map
from ..kernel.operators import face_values
from ..kernel.sset import FiniteSimplicialSet, Simplex, known_level
from ..kernel.standard import standard_simplex

_CYLINDERS: Dict[tuple, tuple] = {}


def cylinder(X: FiniteSimplicialSet, n: int) -> Product:
    """X×Δⁿ, restricted to cells whose X-part lies in the known levels of X."""
    key = (id(X), n)
    hit = _CYLINDERS.get(key)
    if hit is None or hit[0] is not X:
        level = known_level(X)
        ok = None if level == float("inf") else (lambda a, b: a.dim <= level)
        hit = (X, Product(X, standard_simplex(n), cell_ok=ok, name=f"{X.name}×Δ{n}"))
        _CYLINDERS[key] = hit
    return hit[1]


def _section(P: Product, e: int, x: Simplex) -> Simplex:
    """(x, e) in X×Δⁿ for a vertex e of Δⁿ."""
    D = P.Y
    return P.pair(x, Simplex(D.index[(e,)], (0,) * (x.dim + 1)))


def end_map(P: Product, e: int) -> SimplicialMap:
    X = P.X
    return SimplicialMap(X, P.sset, [_section(P, e, X.simplex(c)) for c in range(len(X))], check=False)


def face_map(P1: Product, P2: Product, j: int) -> SimplicialMap:
    """X×δʲ: X×Δ¹ → X×Δ²."""
    d = simplex_map(face_values(2, j), 1, 2)
    S = P1.sset
    out = []
    for c in range(len(S)):
        x, t = P1.components(S.simplex(c))
        out.append(P2.pair(x, d(t)))
    return SimplicialMap(S, P2.sset, out, check=False)


def whisker_before(k: SimplicialMap, g: SimplicialMap, Pk: Product, Pg: Product) -> SimplicialMap:
    """k·g: the composite Z×Δⁿ → X×Δⁿ → A of g×Δⁿ with k."""
    S = Pg.sset
    out = []
    for c in range(len(S)):
        z, t = Pg.components(S.simplex(c))
        out.append(k(Pk.pair(g(z), t)))
    return SimplicialMap(S, k.target, out, check=False)


def constant_homotopy(g: SimplicialMap, P: Product) -> SimplicialMap:
    """g∘π: the degenerate homotopy on g."""
    return P.proj[0].then(g)


@dataclass
class AdjunctionWitness:
    f: SimplicialMap
    u: SimplicialMap
    eta: SimplicialMap
    epsilon: SimplicialMap
    alpha: SimplicialMap
    beta: SimplicialMap

    @property
    def B(self):
        return self.f.source

    @property
    def A(self):
        return self.f.target


@dataclass
class AdjunctionVerdict:
    status: str
    equations: Dict[str, bool] = field(default_factory=dict)
    failures: Dict[str, str] = field(default_factory=dict)
    note: str = ""
    witness: Optional[AdjunctionWitness] = None
    candidates_tried: int = 0

    @property
    def holds(self) -> Optional[bool]:
        return {VERIFIED: True, REFUTED: False}.get(self.status)

    def to_json(self) -> dict:
        out = {"status": self.status, "equations": dict(self.equations)}
        if self.failures:
            out["failures"] = dict(self.failures)
        if self.candidates_tried:
            out["candidates_tried"] = self.candidates_tried
        if self.note:
            out["note"] = self.note
        return out


def _compare(got: SimplicialMap, want: SimplicialMap) -> Optional[str]:
    S = got.source
    for c in range(len(S)):
        if got.images[c] != want.images[c]:
            return f"differs on {S.labels[c]!r}: {got.target.describe(got.images[c])} vs {want.target.describe(want.images[c])}"
    return None


def adjunction_equations(f: SimplicialMap, u: SimplicialMap):
    """Cylinders on both sides and the composites u∘f, f∘u."""
    B, A = f.source, f.target
    PB1, PA1 = cylinder(B, 1), cylinder(A, 1)
    PB2, PA2 = cylinder(B, 2), cylinder(A, 2)
    uf, fu = f.then(u), u.then(f)
    return B, A, PB1, PA1, PB2, PA2, uf, fu


def verify_adjunction(w: AdjunctionWitness) -> AdjunctionVerdict:
    """Check the end conditions on eta, epsilon and the face conditions on alpha, beta."""
    f, u = w.f, w.u
    B, A, PB1, PA1, PB2, PA2, uf, fu = adjunction_equations(f, u)
    shapes = {"eta": (w.eta, PB1, B), "epsilon": (w.epsilon, PA1, A),
              "alpha": (w.alpha, PA2, B), "beta": (w.beta, PB2, A)}
    for name, (m, P, T) in shapes.items():
        if len(m.source) != len(P.sset) or m.target is not T:
            raise ValueError(f"{name} has the wrong source or target")
    eta = SimplicialMap(PB1.sset, B, w.eta.images, check=False)
    eps = SimplicialMap(PA1.sset, A, w.epsilon.images, check=False)
    alpha = SimplicialMap(PA2.sset, B, w.alpha.images, check=False)
    beta = SimplicialMap(PB2.sset, A, w.beta.images, check=False)
    checks = [
        ("eta|0 = id_B", end_map(PB1, 0).then(eta), identity_map(B)),
        ("eta|1 = u∘f", end_map(PB1, 1).then(eta), uf),
        ("epsilon|0 = f∘u", end_map(PA1, 0).then(eps), fu),
        ("epsilon|1 = id_A", end_map(PA1, 1).then(eps), identity_map(A)),
        ("alpha.d2 = eta·u", face_map(PA1, PA2, 2).then(alpha), whisker_before(eta, u, PB1, PA1)),
        ("alpha.d1 = id_u", face_map(PA1, PA2, 1).then(alpha), constant_homotopy(u, PA1)),
        ("alpha.d0 = u·epsilon", face_map(PA1, PA2, 0).then(alpha), eps.then(u)),
        ("beta.d2 = f·eta", face_map(PB1, PB2, 2).then(beta), eta.then(f)),
        ("beta.d1 = id_f", face_map(PB1, PB2, 1).then(beta), constant_homotopy(f, PB1)),
        ("beta.d0 = epsilon·f", face_map(PB1, PB2, 0).then(beta), whisker_before(eps, f, PA1, PB1)),
    ]
    equations, failures = {}, {}
    for name, got, want in checks:
        why = _compare(got, want)
        equations[name] = why is None
        if why is not None:
            failures[name] = why
    return AdjunctionVerdict(VERIFIED if not failures else REFUTED, equations, failures, witness=w)


def _ends_fixed(P: Product, left: SimplicialMap, right: SimplicialMap) -> Dict[int, Simplex]:
    fixed = {}
    for e, g in ((0, left), (1, right)):
        for z, img in zip(end_map(P, e).images, g.images):
            fixed[z.cell] = img
    return fixed


def _boundary_fixed(P1: Product, P2: Product, faces: Dict[int, SimplicialMap]) -> Optional[Dict[int, Simplex]]:
    fixed = {}
    for j, g in faces.items():
        for z, img in zip(face_map(P1, P2, j).images, g.images):
            old = fixed.setdefault(z.cell, img)
            if old != img:
                return None
    return fixed


def homotopies(P: Product, start: SimplicialMap, end: SimplicialMap, budget: Budget) -> Iterator[SimplicialMap]:
    """Every map X×Δ¹ → A restricting to ``start`` and ``end``, in canonical order."""
    A = start.target
    for imgs in enumerate_lifts(P.sset, A, _ends_fixed(P, start, end), None, budget):
        yield SimplicialMap(P.sset, A, imgs, check=False)


def fill_triangle(P1: Product, P2: Product, d2: SimplicialMap, d1: SimplicialMap, d0: SimplicialMap,
                  budget: Budget) -> Optional[SimplicialMap]:
    fixed = _boundary_fixed(P1, P2, {0: d0, 1: d1, 2: d2})
    if fixed is None:
        return None
    A = d0.target
    imgs = first_lift(P2.sset, A, fixed, None, budget)
    return None if imgs is None else SimplicialMap(P2.sset, A, imgs, check=False)


def search_adjunction(f: SimplicialMap, u: SimplicialMap, budget: Budget = None) -> AdjunctionVerdict:
    """Look for eta, then epsilon, then alpha and beta; the first complete witness wins."""
    budget = budget or Budget()
    B, A, PB1, PA1, PB2, PA2, uf, fu = adjunction_equations(f, u)
    tried = 0
    try:
        epsilons = None
        for eta in homotopies(PB1, identity_map(B), uf, budget):
            if epsilons is None:
                epsilons = list(homotopies(PA1, fu, identity_map(A), budget))
                if not epsilons:
                    break
            eta_u = whisker_before(eta, u, PB1, PA1)
            f_eta = eta.then(f)
            for eps in epsilons:
                tried += 1
                alpha = fill_triangle(PA1, PA2, eta_u, constant_homotopy(u, PA1), eps.then(u), budget)
                if alpha is None:
                    continue
                beta = fill_triangle(PB1, PB2, f_eta, constant_homotopy(f, PB1),
                                     whisker_before(eps, f, PA1, PB1), budget)
                if beta is None:
                    continue
                w = AdjunctionWitness(f, u, eta, eps, alpha, beta)
                v = verify_adjunction(w)
                v.candidates_tried = tried
                return v
    except BudgetExceeded as e:
        return AdjunctionVerdict(INCONCLUSIVE, note=str(e), candidates_tried=tried)
    return AdjunctionVerdict(REFUTED, note="no unit, counit and triangle witnesses exist", candidates_tried=tried)


def verify_rari(f: SimplicialMap, u: SimplicialMap, cap: int, budget: Budget = None,
                check_isofibration: bool = True) -> AdjunctionVerdict:
    """Whether the section u of f is a right adjoint right inverse.

    For each vertex a and 1 ≤ n ≤ cap, every sphere ∂Δⁿ → B ending at u(a)
    that lies over a simplex Δⁿ → A must fill over that simplex.
    """
    from ..kernel.lifting import clamp_cap, is_isofibration
    from ..kernel.standard import boundary_inclusion
    budget = budget or Budget()
    B, A = f.source, f.target
    if u.source is not A or u.target is not B:
        raise ValueError("u must go from the codomain of f to its domain")
    fu = u.then(f)
    if any(fu.images[c] != A.simplex(c) for c in range(len(A))):
        raise ValueError("f∘u is not the identity")
    equations = {}
    try:
        if check_isofibration:
            iso = is_isofibration(f, cap, budget)
            equations["f is an isofibration"] = iso.holds is True
            if iso.holds is None:
                return AdjunctionVerdict(INCONCLUSIVE, equations, note=iso.note)
            if not iso.holds:
                return AdjunctionVerdict(REFUTED, equations, {"f is an isofibration": str(iso.counterexample)})
        d = clamp_cap(cap, A, B)
        squares = 0
        for a in A.cells(0):
            ua = u(Simplex(a, (0,)))
            for n in range(1, d + 1):
                inc = boundary_inclusion(n)
                S, D = inc.source, inc.target
                top = D.index[(n,)]
                for y in enumerate_lifts(D, A, {top: Simplex(a, (0,))}, None, budget):
                    ym = SimplicialMap(D, A, y, check=False)
                    yb = inc.then(ym)
                    for x in enumerate_lifts(S, B, {S.index[(n,)]: ua}, (f, yb), budget):
                        squares += 1
                        fixed = {inc.images[c].cell: x[c] for c in range(len(S))}
                        if first_lift(D, B, fixed, (f, ym), budget) is None:
                            equations["spheres at u(a) fill over A"] = False
                            return AdjunctionVerdict(REFUTED, equations, {
                                "spheres at u(a) fill over A":
                                    f"vertex {A.labels[a]!r}, dimension {n}: "
                                    + ", ".join(B.describe(s) for s in x)})
        equations["spheres at u(a) fill over A"] = True
    except BudgetExceeded as e:
        return AdjunctionVerdict(INCONCLUSIVE, equations, note=str(e))
    return AdjunctionVerdict(VERIFIED, equations, note=f"{squares} squares at depth {d}")
