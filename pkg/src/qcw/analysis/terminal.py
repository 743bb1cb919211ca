"""Terminal and initial vertices, tested by filling spheres."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from ..kernel.extensions import Budget, BudgetExceeded, enumerate_lifts, first_lift
from ..kernel.lifting import INCONCLUSIVE, REFUTED, VERIFIED, clamp_cap
from ..kernel.sset import FiniteSimplicialSet, Simplex, render_label
from ..kernel.standard import boundary_inclusion, standard_simplex


@dataclass
class TerminalWitness:
    """Every sphere up to ``depth`` with the chosen end vertex has a filler."""
    vertex: int
    depth: int
    spheres_filled: int
    initial: bool = False
    fillers: List = field(default_factory=list, repr=False)
    status: str = VERIFIED

    holds = True

    def to_json(self, X: Optional[FiniteSimplicialSet] = None) -> dict:
        return {
            "status": self.status,
            "kind": "initial" if self.initial else "terminal",
            "vertex": self.vertex if X is None else render_label(X.labels[self.vertex]),
            "depth": self.depth,
            "spheres_filled": self.spheres_filled,
        }


@dataclass
class Refutation:
    """A failed (or unfinished) check with the offending data."""
    status: str
    depth: int
    vertex: Optional[int] = None
    counterexample: Optional[dict] = None
    note: str = ""

    @property
    def holds(self) -> Optional[bool]:
        return False if self.status == REFUTED else None

    def to_json(self, X: Optional[FiniteSimplicialSet] = None) -> dict:
        out = {"status": self.status, "depth": self.depth}
        if self.vertex is not None:
            out["vertex"] = self.vertex if X is None else render_label(X.labels[self.vertex])
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note:
            out["note"] = self.note
        return out


def exit_code(result) -> int:
    return {True: 0, False: 1}.get(result.holds, 2)


def spheres(A: FiniteSimplicialSet, n: int, vertex: int, position: int, budget: Budget):
    """Maps ∂Δⁿ → A sending the given vertex of ∂Δⁿ to ``vertex``."""
    inc = boundary_inclusion(n)
    S = inc.source
    v = S.index[(position,)]
    return enumerate_lifts(S, A, {v: Simplex(vertex, (0,))}, None, budget)


def _sphere_check(A: FiniteSimplicialSet, t: int, depth: int, initial: bool, budget: Budget,
                  keep_fillers: bool):
    depth = clamp_cap(depth, A)
    filled = 0
    fillers = []
    try:
        for n in range(1, depth + 1):
            inc = boundary_inclusion(n)
            D = standard_simplex(n)
            for sph in spheres(A, n, t, 0 if initial else n, budget):
                fixed = {inc.images[c].cell: sph[c] for c in range(len(sph))}
                fill = first_lift(D, A, fixed, None, budget)
                if fill is None:
                    return Refutation(REFUTED, depth, t, {
                        "dimension": n,
                        "sphere": {render_label(inc.source.labels[c]): A.describe(sph[c]) for c in range(len(sph))},
                    })
                filled += 1
                if keep_fillers:
                    fillers.append((n, tuple(sph), fill[-1]))
    except BudgetExceeded as e:
        return Refutation(INCONCLUSIVE, depth, t, note=str(e))
    return TerminalWitness(t, depth, filled, initial, fillers)


def is_terminal_vertex(A: FiniteSimplicialSet, t: int, depth: int, budget: Budget = None,
                       keep_fillers: bool = False):
    """TerminalWitness if every sphere ∂Δⁿ → A ending at t fills for 1 ≤ n ≤ depth."""
    return _sphere_check(A, t, depth, False, budget or Budget(), keep_fillers)


def is_initial_vertex(A: FiniteSimplicialSet, t: int, depth: int, budget: Budget = None,
                      keep_fillers: bool = False):
    return _sphere_check(A, t, depth, True, budget or Budget(), keep_fillers)


@dataclass
class VertexSearch:
    """Outcome of scanning every vertex: the first witness plus all of them."""
    witness: Optional[TerminalWitness]
    all_witnesses: List[TerminalWitness]
    failures: List[Refutation]

    @property
    def holds(self) -> Optional[bool]:
        if self.witness is not None:
            return True
        if any(f.status == INCONCLUSIVE for f in self.failures):
            return None
        return False

    @property
    def vertex(self) -> Optional[int]:
        return None if self.witness is None else self.witness.vertex

    def to_json(self, X: Optional[FiniteSimplicialSet] = None) -> dict:
        label = (lambda v: v) if X is None else (lambda v: render_label(X.labels[v]))
        status = {True: VERIFIED, False: REFUTED, None: INCONCLUSIVE}[self.holds]
        return {
            "status": status,
            "vertex": None if self.witness is None else label(self.witness.vertex),
            "witness": None if self.witness is None else self.witness.to_json(X),
            "all": [label(w.vertex) for w in self.all_witnesses],
            "rejected": [f.to_json(X) for f in self.failures],
        }


def _scan(A: FiniteSimplicialSet, depth: int, check, budget: Budget) -> VertexSearch:
    good, bad = [], []
    for v in A.cells(0):
        r = check(A, v, depth, budget)
        (good if r.holds else bad).append(r)
    return VertexSearch(good[0] if good else None, good, bad)


def find_terminal(A: FiniteSimplicialSet, depth: int, budget: Budget = None) -> VertexSearch:
    return _scan(A, depth, is_terminal_vertex, budget or Budget())


def find_initial(A: FiniteSimplicialSet, depth: int, budget: Budget = None) -> VertexSearch:
    return _scan(A, depth, is_initial_vertex, budget or Budget())
