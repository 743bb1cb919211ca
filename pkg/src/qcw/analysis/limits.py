"""Limits and colimits as terminal and initial vertices of fat slices.

A vertex of the fat slice over d: X → A is a map Δ⁰◇X → A extending d,
that is, a cone over d with a summit.  A limit is a terminal such vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from ..constructions.slices import SliceObject, fat_slice_over, fat_slice_under
from ..kernel.extensions import Budget
from ..kernel.limits import Product
from ..kernel.lifting import INCONCLUSIVE, REFUTED, VERIFIED
from ..kernel.maps import SimplicialMap
from ..kernel.sset import Simplex, render_label
from ..kernel.standard import standard_simplex
from .terminal import TerminalWitness, VertexSearch, find_initial, find_terminal

DEFAULT_DEPTH = 3


@dataclass
class LimitResult:
    status: str
    kind: str
    vertex: Optional[Simplex] = None
    cone: Optional[SimplicialMap] = None
    witness: Optional[TerminalWitness] = None
    all_vertices: List[Simplex] = field(default_factory=list)
    search: Optional[VertexSearch] = None
    cones: Optional[SliceObject] = None

    @property
    def holds(self) -> Optional[bool]:
        return {VERIFIED: True, REFUTED: False}.get(self.status)

    def to_json(self) -> dict:
        A = None if self.cones is None else self.cones.A
        name = (lambda s: render_label(A.labels[s.cell])) if A is not None else (lambda s: s.cell)
        out = {"status": self.status, "kind": self.kind, "depth": self.search.to_json()["witness"]["depth"]
               if self.witness else None}
        if self.vertex is not None:
            out["vertex"] = name(self.vertex)
            out["all_vertices"] = [name(v) for v in self.all_vertices]
            X = self.cone.source
            out["cone"] = {render_label(X.labels[c]): A.describe(self.cone.images[c]) for c in range(len(X))}
        out["cone_quasicategory_counts"] = list(self.cones.sset.counts()) if self.cones else None
        return out


def cone_map(F: SliceObject, vertex: int) -> SimplicialMap:
    """The cone X×Δ¹ → A carried by a vertex of a fat slice.

    Over d the summit sits at 0 and d at 1; under d the other way round.
    """
    J = F.objects(0)
    X = F.f.source
    I = standard_simplex(1)
    P = Product(X, I, name=f"{X.name}×Δ1")
    images = F.images_of(Simplex(vertex, (0,)))
    A = F.A
    out = []
    for c in range(len(P.sset)):
        x, e = P.components(P.sset.simplex(c))
        beta = tuple(I.labels[v][0] for v in I.vertices(e))
        pt = Simplex(0, (0,) * len(beta))
        z = J.triple(pt, beta, x) if F.side == "over" else J.triple(x, beta, pt)
        img = images[z.cell]
        out.append(img if len(z.degen) == len(img.degen) else A.act(img, z.degen))
    return SimplicialMap(P.sset, A, out)


def _search(d: SimplicialMap, depth: int, budget: Optional[Budget], colimit: bool) -> LimitResult:
    budget = budget or Budget()
    F = (fat_slice_under if colimit else fat_slice_over)(d, depth, budget)
    S = F.sset
    depth = min(depth, F.level)
    found = (find_initial if colimit else find_terminal)(S, depth, budget)
    kind = "colimit" if colimit else "limit"
    if found.holds is None:
        return LimitResult(INCONCLUSIVE, kind, search=found, cones=F)
    if not found.holds:
        return LimitResult(REFUTED, kind, search=found, cones=F)
    v = found.witness.vertex
    summits = []
    for w in found.all_witnesses:
        s = F.pi(Simplex(w.vertex, (0,)))
        if s not in summits:
            summits.append(s)
    return LimitResult(VERIFIED, kind, F.pi(Simplex(v, (0,))), cone_map(F, v), found.witness,
                       summits, found, F)


def find_limit(d: SimplicialMap, depth: int = DEFAULT_DEPTH, budget: Budget = None) -> LimitResult:
    """A terminal cone over d: its summit, its cone X×Δ¹ → A and the witness."""
    return _search(d, depth, budget, False)


def find_colimit(d: SimplicialMap, depth: int = DEFAULT_DEPTH, budget: Budget = None) -> LimitResult:
    return _search(d, depth, budget, True)
