"""Absolute lifting diagrams detected one vertex at a time.

A right lifting of g: C → A through f: B → A exists pointwise when, for each
vertex c, the comma f↓gc has a terminal vertex; that vertex gives ℓ(c) and
the component λ_c: fℓc → gc.  Left liftings use gc↓f and initial vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..constructions.comma import CommaObject
from ..kernel.extensions import Budget
from ..kernel.lifting import INCONCLUSIVE, REFUTED, VERIFIED
from ..kernel.limits import Product
from ..kernel.maps import SimplicialMap, vertex_map
from ..kernel.sset import Simplex, render_label
from ..kernel.standard import standard_simplex
from .terminal import find_initial, find_terminal, is_initial_vertex, is_terminal_vertex


@dataclass
class AbsoluteLiftingReport:
    side: str
    depth: int
    entries: List[dict] = field(default_factory=list)
    lifting: Dict[int, Simplex] = field(default_factory=dict)
    components: Dict[int, Simplex] = field(default_factory=dict)

    @property
    def holds(self) -> Optional[bool]:
        flags = [e["holds"] for e in self.entries]
        if all(f is True for f in flags):
            return True
        if any(f is False for f in flags):
            return False
        return None

    @property
    def status(self) -> str:
        return {True: VERIFIED, False: REFUTED, None: INCONCLUSIVE}[self.holds]

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "side": self.side,
            "depth": self.depth,
            "vertices": [{k: v for k, v in e.items() if k != "holds"} | {"status": {
                True: VERIFIED, False: REFUTED, None: INCONCLUSIVE}[e["holds"]]} for e in self.entries],
        }


def _vertex_comma(f: SimplicialMap, g: SimplicialMap, c: int, depth: int, side: str,
                  budget: Budget) -> CommaObject:
    A = f.target
    gc = vertex_map(A, g(Simplex(c, (0,))).cell)
    if side == "right":
        return CommaObject(f, gc, depth, budget)
    return CommaObject(gc, f, depth, budget)


def _pointwise(f: SimplicialMap, g: SimplicialMap, depth: int, side: str,
               budget: Optional[Budget]) -> AbsoluteLiftingReport:
    if f.target is not g.target:
        raise ValueError("f and g must share a codomain")
    budget = budget or Budget()
    B, C, A = f.source, g.source, f.target
    report = AbsoluteLiftingReport(side, depth)
    for c in C.cells(0):
        K = _vertex_comma(f, g, c, depth, side, budget)
        T = K.total
        d = min(depth, K.level)
        found = (find_terminal if side == "right" else find_initial)(T, d, budget)
        entry = {"vertex": render_label(C.labels[c]), "comma_counts": list(T.counts()), "depth": d,
                 "holds": found.holds}
        if found.holds:
            v = Simplex(found.vertex, (0,))
            b = (K.p0 if side == "right" else K.p1)(v)
            edge = K.canonical_2cell(v).images[-1]
            report.lifting[c] = b
            report.components[c] = edge
            entry["lift"] = render_label(B.labels[b.cell])
            entry["component"] = A.describe(edge)
            entry["spheres_filled"] = found.witness.spheres_filled
        else:
            entry["rejected"] = len(found.failures)
        report.entries.append(entry)
    return report


def absolute_right_lifting_pointwise(f: SimplicialMap, g: SimplicialMap, depth: int = 2,
                                     budget: Budget = None) -> AbsoluteLiftingReport:
    """For every vertex c of C, a terminal vertex of f↓gc."""
    return _pointwise(f, g, depth, "right", budget)


def absolute_left_lifting_pointwise(f: SimplicialMap, g: SimplicialMap, depth: int = 2,
                                    budget: Budget = None) -> AbsoluteLiftingReport:
    """For every vertex c of C, an initial vertex of gc↓f."""
    return _pointwise(f, g, depth, "left", budget)


def check_lifting_candidate(f: SimplicialMap, g: SimplicialMap, ell: SimplicialMap, lam: SimplicialMap,
                            depth: int = 2, side: str = "right", budget: Budget = None) -> AbsoluteLiftingReport:
    """Test a global candidate (ℓ: C → B, λ: C×Δ¹ → A) one vertex at a time.

    For the right side λ runs from f∘ℓ to g, and each (ℓc, λ_c) must be
    terminal in f↓gc; the left side is dual.
    """
    budget = budget or Budget()
    B, C, A = f.source, g.source, f.target
    P = Product(C, standard_simplex(1))
    if len(lam.source) != len(P.sset):
        raise ValueError("λ must be defined on C×Δ¹")
    report = AbsoluteLiftingReport(side, depth)
    for c in C.cells(0):
        K = _vertex_comma(f, g, c, depth, side, budget)
        P0 = K.cylinder(0)
        k = []
        for z in range(len(P0.sset)):
            _, e = P0.components(P0.sset.simplex(z))
            w = P.pair(Simplex(c, (0,) * len(e.degen)), e)
            img = lam.images[w.cell]
            k.append(img if len(w.degen) == len(img.degen) else A.act(img, w.degen))
        pt = Simplex(0, (0,))
        lc = ell(Simplex(c, (0,)))
        v = K.lookup(lc, pt, tuple(k)) if side == "right" else K.lookup(pt, lc, tuple(k))
        d = min(depth, K.level)
        entry = {"vertex": render_label(C.labels[c]), "comma_counts": list(K.total.counts()), "depth": d}
        if v is None:
            entry["holds"] = False
            entry["reason"] = "λ_c is not a cone in the comma"
        else:
            check = is_terminal_vertex if side == "right" else is_initial_vertex
            r = check(K.total, v.cell, d, budget)
            entry["holds"] = r.holds
            entry["lift"] = render_label(B.labels[lc.cell])
            report.lifting[c] = lc
        report.entries.append(entry)
    return report
