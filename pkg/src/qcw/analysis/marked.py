"""Lifting against the specially marked outer horns."""
from __future__ import annotations

from ..homotopy.marking import MarkedSimplicialSet
from ..kernel.extensions import Budget, BudgetExceeded, enumerate_lifts, first_lift
from ..kernel.lifting import INCONCLUSIVE, REFUTED, VERIFIED, LiftingVerdict, clamp_cap
from ..kernel.sset import render_label
from ..kernel.standard import horn_inclusion


def special_edge(n: int, k: int) -> tuple:
    """The marked edge of the horn Λⁿ,ᵏ: ⟨0,1⟩ for k = 0 and ⟨n-1,n⟩ for k = n."""
    return (0, 1) if k == 0 else (n - 1, n)


def marked_special_horn_check(M: MarkedSimplicialSet, cap: int, budget: Budget = None) -> LiftingVerdict:
    """Outer horns Λⁿ,⁰ and Λⁿ,ⁿ (2 ≤ n ≤ cap) whose special edge lands on a marked edge must fill.

    The special edge lies in the horn, so any filler respects the marking.
    """
    if cap < 2:
        raise ValueError("cap must be at least 2")
    A = M.underlying
    budget = budget or Budget()
    d = clamp_cap(cap, A)
    count = skipped = 0
    try:
        for n in range(2, d + 1):
            for k in (0, n):
                inc = horn_inclusion(n, k)
                H, D = inc.source, inc.target
                e = H.index[special_edge(n, k)]
                for u in enumerate_lifts(H, A, None, None, budget):
                    if not M.is_marked(u[e]):
                        skipped += 1
                        continue
                    count += 1
                    fixed = {inc.images[c].cell: u[c] for c in range(len(H))}
                    if first_lift(D, A, fixed, None, budget) is None:
                        return LiftingVerdict(REFUTED, d, {
                            "inclusion": f"Λ{n},{k}",
                            "top": {render_label(H.labels[c]): A.describe(u[c]) for c in range(len(H))},
                            "u": [tuple(x) for x in u],
                        }, count)
    except BudgetExceeded as ex:
        return LiftingVerdict(INCONCLUSIVE, d, None, count, str(ex))
    return LiftingVerdict(VERIFIED, d, None, count, f"{skipped} horns with an unmarked special edge skipped")
