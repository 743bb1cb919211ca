"""Fibred equivalences between isofibrations p: E → A and q: F → A."""
from __future__ import annotations

from typing import Optional

from ..homotopy.hcat import HomotopyCategory, hom_category, homotopy_category
from ..kernel.extensions import Budget, BudgetExceeded
from ..kernel.lifting import INCONCLUSIVE, REFUTED, VERIFIED, is_isofibration
from ..kernel.limits import Product
from ..kernel.mapping import Exponential
from ..kernel.maps import SimplicialMap, identity_map
from ..kernel.sset import Simplex
from .adjunction import AdjunctionVerdict, _compare, constant_homotopy, cylinder, end_map


def transport(k: SimplicialMap, src: Product, dst: Product) -> tuple:
    """Images of k (defined on src) on the cells of dst; both are products with the same factors."""
    out = []
    for c in range(len(dst.sset)):
        x, t = dst.components(dst.sset.simplex(c))
        z = src.pair(x, t)
        img = k.images[z.cell]
        out.append(img if len(z.degen) == len(img.degen) else k.target.act(img, z.degen))
    return tuple(out)


def components_invertible(k: SimplicialMap, P: Product, hX: HomotopyCategory) -> bool:
    """Every vertex component k(v, 0→1) is invertible in hX."""
    I = P.Y
    top = Simplex(I.index[(0, 1)], (0, 1))
    for v in P.X.cells(0):
        e = k(P.pair(Simplex(v, (0, 0)), top))
        if not hX.is_iso(hX.cls(e)):
            return False
    return True


def edge_invertible(k: SimplicialMap, P: Product, budget: Budget = None) -> Optional[bool]:
    """Invertibility of k as an edge of the level-2 truncation of X^X.

    None when that truncation cannot be formed: past the budget, or when X
    itself is truncated too low for X×Δ².
    """
    X = P.X
    try:
        E = Exponential(X, k.target, 2, budget)
        H = hom_category(X, k.target, budget, exponential=E)
    except (BudgetExceeded, ValueError):
        return None
    edge = E.lookup(transport(k, P, E.cyl.product(1)), 1)
    return H.is_iso(H.cls(edge))


def verify_fibred_equivalence(w: SimplicialMap, w2: SimplicialMap, alpha: SimplicialMap, beta: SimplicialMap,
                              p: SimplicialMap, q: SimplicialMap, cap: int = 2, budget: Budget = None,
                              exponential_route: bool = True) -> AdjunctionVerdict:
    """alpha: w2∘w ⇒ id_E and beta: id_F ⇒ w∘w2, invertible and lying over identities of A.

    Invertibility is decided twice when ``exponential_route`` is set: from the
    vertex components in hE, hF and from the class of the edge in h(E^E), h(F^F).
    """
    E, F = w.source, w.target
    if w2.source is not F or w2.target is not E or p.source is not E or q.source is not F:
        raise ValueError("w: E → F, w2: F → E, p: E → A, q: F → A are required")
    budget = budget or Budget()
    PE, PF = cylinder(E, 1), cylinder(F, 1)
    al = SimplicialMap(PE.sset, E, alpha.images, check=False)
    be = SimplicialMap(PF.sset, F, beta.images, check=False)
    checks = [
        ("q∘w = p", w.then(q), p),
        ("p∘w2 = q", w2.then(p), q),
        ("alpha|0 = w2∘w", end_map(PE, 0).then(al), w.then(w2)),
        ("alpha|1 = id_E", end_map(PE, 1).then(al), identity_map(E)),
        ("beta|0 = id_F", end_map(PF, 0).then(be), identity_map(F)),
        ("beta|1 = w∘w2", end_map(PF, 1).then(be), w2.then(w)),
        ("p·alpha degenerate", al.then(p), constant_homotopy(p, PE)),
        ("q·beta degenerate", be.then(q), constant_homotopy(q, PF)),
    ]
    equations, failures = {}, {}
    for name, got, want in checks:
        why = _compare(got, want)
        equations[name] = why is None
        if why:
            failures[name] = why
    if failures:
        return AdjunctionVerdict(REFUTED, equations, failures)
    try:
        for name, m in (("p", p), ("q", q)):
            v = is_isofibration(m, cap, budget)
            equations[f"{name} is an isofibration"] = v.holds is True
            if v.holds is None:
                return AdjunctionVerdict(INCONCLUSIVE, equations, note=v.note)
            if not v.holds:
                failures[f"{name} is an isofibration"] = str(v.counterexample)
        skipped = []
        hE, hF = homotopy_category(E, budget=budget), homotopy_category(F, budget=budget)
        for name, k, P, h in (("alpha", al, PE, hE), ("beta", be, PF, hF)):
            ok = components_invertible(k, P, h)
            equations[f"{name} invertible (components)"] = ok
            if not ok:
                failures[f"{name} invertible (components)"] = "a vertex component is not invertible"
            if exponential_route:
                whole = edge_invertible(k, P, budget)
                if whole is None:
                    skipped.append(name)
                    continue
                equations[f"{name} invertible (exponential)"] = whole
                if whole != ok:
                    failures[f"{name} invertible (exponential)"] = "the two invertibility routes disagree"
    except BudgetExceeded as e:
        return AdjunctionVerdict(INCONCLUSIVE, equations, failures, note=str(e))
    note = f"exponential route unavailable for {', '.join(skipped)}" if skipped else ""
    return AdjunctionVerdict(REFUTED if failures else VERIFIED, equations, failures, note=note)
