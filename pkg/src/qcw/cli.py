"""The ``qcw`` command line.

Every command reads workspaces given with ``--in`` and writes one JSON
document (to ``--out`` or standard output).  Checks carry a ``status`` of
verified, refuted or inconclusive and exit 0, 1 or 2; constructions carry
``built`` and exit 0.  Unknown names and bad arguments exit 64, malformed
input files 65.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import corpus as corpus_mod
from .analysis import (
    AdjunctionWitness, absolute_left_lifting_pointwise, absolute_right_lifting_pointwise, check_lifting_candidate,
    find_colimit, find_initial, find_limit, find_terminal, is_initial_vertex, is_isofibration, is_kan,
    is_quasicategory, is_terminal_vertex, is_trivial_fibration, marked_special_horn_check, search_adjunction,
    verify_adjunction, verify_fibred_equivalence, verify_rari,
)
from .analysis.adjunction import cylinder
from .constructions import FatJoin, Join, comma, comparison_s, retraction_data
from .constructions.slices import SliceObject
from .homotopy import canonical_comparison, hom_category, homotopy_category, natural_marking, nerve
from .homotopy.hcat import NotAQuasiCategory
from .homotopy.smothering import smothering_check
from .kernel.extensions import Budget, BudgetExceeded
from .kernel.lifting import INCONCLUSIVE, REFUTED, VERIFIED
from .kernel.limits import Product
from .kernel.maps import SimplicialMap, identity_map
from .kernel.serialize import FORMAT, SchemaError, cell_names
from .kernel.sset import FiniteSimplicialSet, Simplex, known_level
from .kernel.standard import boundary, horn_inclusion, iso_interval, standard_simplex
from .workspace import Emitter, UsageError, Workspace, document_text, write_atomic

BUILT = "built"
EXIT = {VERIFIED: 0, BUILT: 0, REFUTED: 1, INCONCLUSIVE: 2}
EX_USAGE, EX_DATAERR = 64, 65
MAX_PARAM = 8


@dataclass
class Outcome:
    status: str
    result: dict = field(default_factory=dict)
    out: Emitter = field(default_factory=Emitter)


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Run:
    args: argparse.Namespace
    ws: Workspace

    @property
    def budget(self) -> Budget:
        return Budget(self.args.budget) if self.args.budget else Budget()

    def cap(self, *sets, default: Optional[int] = None) -> int:
        if self.args.cap is not None:
            if self.args.cap < 1:
                raise UsageError("--cap must be positive")
            return self.args.cap
        if default is not None:
            return default
        dims = [X.dimension for X in sets if X.labels]
        return max(dims, default=0) + 2


def status_of(holds) -> str:
    return {True: VERIFIED, False: REFUTED}.get(holds, INCONCLUSIVE)


def names_of(X: FiniteSimplicialSet) -> List[str]:
    return cell_names(X)


def simplex_text(X: FiniteSimplicialSet, s: Simplex) -> str:
    return X.describe(s)


def vertex_by_name(X: FiniteSimplicialSet, name: str) -> int:
    names = names_of(X)
    for v in X.cells(0):
        if names[v] == name:
            return v
    raise UsageError(f"no vertex named {name!r}")


def on_product(f: SimplicialMap, P: Product, what: str) -> SimplicialMap:
    """Re-read a stored map out of a product onto the product built here, matching cells by name."""
    stored = names_of(f.source)
    here = names_of(P.sset)
    if sorted(stored) != sorted(here):
        raise UsageError(f"{what} is not defined on {P.sset.name}")
    index = {n: i for i, n in enumerate(stored)}
    return SimplicialMap(P.sset, f.target, [f.images[index[n]] for n in here])


def as_standard_simplex(X: FiniteSimplicialSet) -> Optional[int]:
    """n when X is isomorphic to Δⁿ through its unique top cell, else None."""
    if not X.labels:
        return None
    n = X.dimension
    top = X.cells(n)
    if len(top) != 1 or len(X) != 2 ** (n + 1) - 1 or known_level(X) < n:
        return None
    D = standard_simplex(n)
    try:
        m = SimplicialMap(D, X, [X.act(Simplex(top[0], tuple(range(n + 1))), D.labels[c]) for c in range(len(D))])
    except ValueError:
        return None
    return n if sorted(s.cell for s in m.images) == list(range(len(X))) else None


# corpus

def _param(args, key, default=None, low=0, high=MAX_PARAM):
    v = getattr(args, key)
    if v is None:
        if default is None:
            raise UsageError(f"--{key} is required for this corpus kind")
        v = default
    if not low <= v <= high:
        raise UsageError(f"--{key} must lie in [{low}, {high}]")
    return v


def cmd_corpus(run: Run) -> Outcome:
    a = run.args
    out = Emitter()
    kind = a.kind
    name = a.name
    if kind in ("poset-chain", "simplex"):
        n = _param(a, "n")
        out.add_set(name or f"chain{n}", corpus_mod.poset_chain(n))
    elif kind == "boundary":
        n = _param(a, "n", low=1)
        out.add_set(name or f"boundary{n}", boundary(n))
    elif kind == "horn":
        n, k = _param(a, "n", low=1), _param(a, "k")
        if k > n:
            raise UsageError("--k must not exceed --n")
        inc = horn_inclusion(n, k)
        s = out.add_set(name or f"horn{n}_{k}", inc.source)
        out.add_map("inclusion", inc, source=s, target=f"chain{n}")
    elif kind == "iso-groupoid":
        cap = a.cap if a.cap is not None else 3
        if not 1 <= cap <= MAX_PARAM:
            raise UsageError(f"--cap must lie in [1, {MAX_PARAM}]")
        out.add_set(name or f"iso{cap}", iso_interval(cap))
    elif kind == "square":
        out.add_set(name or "square", corpus_mod.square_nerve())
    elif kind == "divisor-lattice":
        n = _param(a, "n", default=12, low=1, high=360)
        out.add_set(name or f"div{n}", corpus_mod.divisor_lattice(n))
    elif kind == "homotopic-pair":
        cap = a.cap if a.cap is not None else 4
        if not 2 <= cap <= 5:
            raise UsageError("--cap must lie in [2, 5]")
        out.add_set(name or "pair", corpus_mod.homotopic_pair(cap))
    elif kind == "iota-trunc":
        iota, trunc = corpus_mod.iota_trunc()
        out.add_set("chain1", iota.source)
        out.add_set("chain2", iota.target)
        out.add_map("iota", iota)
        out.add_map("trunc", trunc)
        out.add_map("id", identity_map(iota.target))
    elif kind == "divisor-diagram":
        n = _param(a, "n", default=12, low=1, high=360)
        emit_divisor_diagram(out, n, a.shape, a.objects)
    elif kind == "adjunction":
        table = corpus_mod.corpus_adjunctions()
        key = name or "iota-trunc"
        if key not in table:
            raise UsageError(f"unknown corpus adjunction {key!r}; one of {', '.join(sorted(table))}")
        emit_witness(out, table[key])
    elif kind == "comma-demo":
        f, g = run.ws.map(a.f), run.ws.map(a.g)
        K = comma(f, g, run.cap(default=2), run.budget)
        emit_comma(out, K, name or "comma", a.f or "f", a.g or "g")
    else:
        raise UsageError(f"unknown corpus kind {kind!r}")
    return Outcome(BUILT, {"kind": kind}, out)


def emit_divisor_diagram(out: Emitter, n: int, shape: str, objects: Optional[str]):
    """A discrete pair or a cospan a → c ← b in the divisor lattice of n."""
    try:
        picked = [int(x) for x in (objects or "").split(",") if x]
    except ValueError:
        raise UsageError("--objects takes comma-separated divisors") from None
    L = corpus_mod.divisor_lattice(n)
    want = 3 if shape == "cospan" else 2
    if len(picked) != want or any(n % x for x in picked):
        raise UsageError(f"--objects needs {want} divisors of {n}")
    if shape == "cospan":
        a_, b_, c_ = picked
        if c_ % a_ or c_ % b_:
            raise UsageError("a cospan needs a and b to divide c")
        S = horn_inclusion(2, 2).source
        on = {(0,): a_, (1,): b_, (2,): c_}
    else:
        S = boundary(1)
        on = {(0,): picked[0], (1,): picked[1]}
    d = corpus_mod.vertexwise_map(S, L, lambda v: L.index[(on[S.labels[v]],)])
    out.add_set(f"div{n}", L)
    out.add_map("diagram", d, "shape", f"div{n}")


def emit_witness(out: Emitter, w: AdjunctionWitness):
    B, A = w.B, w.A
    b = out.add_set("B", B)
    a = out.add_set("A", A) if A is not B else b
    out.add_map("f", w.f, b, a)
    out.add_map("u", w.u, a, b)
    for key, k, X, n, tgt in (("eta", w.eta, B, 1, b), ("epsilon", w.epsilon, A, 1, a),
                              ("alpha", w.alpha, A, 2, b), ("beta", w.beta, B, 2, a)):
        src = out.add_set(f"{'B' if X is B else 'A'}×Δ{n}", cylinder(X, n).sset)
        out.add_map(key, SimplicialMap(cylinder(X, n).sset, k.target, k.images, check=False), src, tgt)


def emit_comma(out: Emitter, K, name: str, fname: str, gname: str):
    s = out.add_set(name, K.total)
    out.add_map("p0", K.p0, s, K.B.name or f"{fname}.source")
    out.add_map("p1", K.p1, s, K.C.name or f"{gname}.source")


# constructions

def cmd_join(run: Run, fat: bool = False) -> Outcome:
    X, Y = run.ws.set(run.args.x), run.ws.set(run.args.y)
    J = (FatJoin if fat else Join)(X, Y)
    out = Emitter()
    s = out.add_set("fatjoin" if fat else "join", J.sset)
    out.add_map("incl.x", J.inclusions[0], run.args.x or X.name, s)
    out.add_map("incl.y", J.inclusions[1], run.args.y or Y.name, s)
    return Outcome(BUILT, {"counts": list(J.sset.counts())}, out)


def cmd_slice(run: Run, fat: bool = False) -> Outcome:
    f = run.ws.map(run.args.map)
    side = "under" if run.args.under else "over"
    S = SliceObject(f, run.cap(default=2), side, fat or run.args.fat, run.budget)
    out = Emitter()
    s = out.add_set("slice", S.sset)
    out.add_map("pi", S.pi, s, f.target.name or "A")
    return Outcome(BUILT, {"side": side, "fat": S.fat, "level": S.level, "counts": list(S.sset.counts())}, out)


def cmd_comma(run: Run) -> Outcome:
    f, g = run.ws.map(run.args.f), run.ws.map(run.args.g)
    K = comma(f, g, run.cap(default=2), run.budget)
    out = Emitter()
    emit_comma(out, K, "comma", run.args.f or "f", run.args.g or "g")
    return Outcome(BUILT, {"level": K.level, "counts": list(K.total.counts())}, out)


def retraction_result(n: int, m: int) -> Outcome:
    R = retraction_data(n, m)
    out = Emitter()
    s = out.add_set("fatjoin", R.fat.sset)
    j = out.add_set("join", R.join.sset)
    out.add_map("s", R.s, s, j)
    out.add_map("t", R.t, j, s)
    return Outcome(VERIFIED if R.ok else REFUTED, {"n": n, "m": m, "checks": dict(R.checks)}, out)


def cmd_compare_s(run: Run) -> Outcome:
    X, Y = run.ws.set(run.args.x), run.ws.set(run.args.y)
    n, m = as_standard_simplex(X), as_standard_simplex(Y)
    if n is not None and m is not None:
        return retraction_result(n, m)
    s = comparison_s(X, Y)
    out = Emitter()
    out.add_map("s", s, "fatjoin", "join")
    return Outcome(BUILT, {"counts": [list(s.source.counts()), list(s.target.counts())]}, out)


def cmd_retraction(run: Run) -> Outcome:
    n, m = _param(run.args, "n", high=5), _param(run.args, "m", high=5)
    if n + m > 5:
        raise UsageError("n + m must be at most 5")
    return retraction_result(n, m)


# homotopy categories

def category_summary(H) -> dict:
    A = H.sset
    return {
        "objects": [simplex_text(A, Simplex(v, (0,))) for v in H.objects],
        "arrows": sorted([simplex_text(A, a), simplex_text(A, Simplex(s, (0,))), simplex_text(A, Simplex(t, (0,)))]
                         for a, (s, t) in H.arrows.items()),
        "isomorphisms": sorted(simplex_text(A, a) for a in H.arrows if H.is_iso(a)),
    }


def cmd_hcat(run: Run) -> Outcome:
    X = run.ws.set(run.args.set)
    try:
        H = homotopy_category(X, cap=run.cap(X, default=3), budget=run.budget)
    except NotAQuasiCategory as e:
        return Outcome(REFUTED, {"reason": str(e), "counterexample": e.counterexample})
    return Outcome(VERIFIED, category_summary(H))


def cmd_nerve(run: Run) -> Outcome:
    C = run.ws.category(run.args.category)
    N = nerve(C, run.cap(default=3), name=f"N({run.args.category or C.name})")
    out = Emitter()
    out.add_set("nerve", N)
    return Outcome(BUILT, {"counts": list(N.counts())}, out)


def cmd_mark(run: Run) -> Outcome:
    X = run.ws.set(run.args.set)
    try:
        M = natural_marking(X, homotopy_category(X, cap=run.cap(X, default=3), budget=run.budget))
    except NotAQuasiCategory as e:
        return Outcome(REFUTED, {"reason": str(e), "counterexample": e.counterexample})
    out = Emitter()
    out.add_marking("natural", M, run.args.set or X.name)
    return Outcome(BUILT, {"marked": [simplex_text(X, e) for e in M.nondegenerate_marked()]}, out)


def cmd_homcat(run: Run) -> Outcome:
    X, A = run.ws.set(run.args.x), run.ws.set(run.args.a)
    try:
        H = hom_category(X, A, run.budget)
    except NotAQuasiCategory as e:
        return Outcome(REFUTED, {"reason": str(e)})
    return Outcome(VERIFIED, category_summary(H))


def cmd_smother(run: Run) -> Outcome:
    a = run.args
    if a.kind in ("cotensor2", "cotensorI"):
        data = (run.ws.set(a.set),)
        opts = {"depth": run.cap(default=2)} if a.kind == "cotensorI" else {}
    elif a.kind == "comma":
        data = (run.ws.map(a.f), run.ws.map(a.g))
        opts = {"N": run.cap(default=2)}
    else:
        data = (run.ws.map(a.f), run.ws.map(a.g))
        opts = {}
    F = canonical_comparison(a.kind, *data, budget=run.budget, **opts)
    R = smothering_check(F)
    result = R.to_json()
    result["fibres_ok"] = R.fibres_ok
    result["counts"] = {"source": [len(F.source.objects), len(F.source.arrows)],
                        "target": [len(F.target.objects), len(F.target.arrows)]}
    return Outcome(VERIFIED if R.verdict else REFUTED, result)


# checks

def cmd_check(run: Run) -> Outcome:
    a = run.args
    if a.what in ("qcat", "kan"):
        X = run.ws.set(a.set)
        v = (is_quasicategory if a.what == "qcat" else is_kan)(X, max(run.cap(X), 2), run.budget)
    elif a.what in ("isofib", "trivfib"):
        p = run.ws.map(a.map)
        v = (is_isofibration if a.what == "isofib" else is_trivial_fibration)(
            p, max(run.cap(p.source, p.target), 2), run.budget)
    else:
        M = run.ws.marking(a.marking)
        v = marked_special_horn_check(M, max(run.cap(M.underlying), 2), run.budget)
    return Outcome(v.status, v.to_json())


def cmd_terminal(run: Run) -> Outcome:
    a = run.args
    X = run.ws.set(a.set)
    depth = run.cap(X)
    names = names_of(X)
    budget = run.budget
    if a.vertex is not None:
        v = vertex_by_name(X, a.vertex)
        r = (is_initial_vertex if a.initial else is_terminal_vertex)(X, v, depth, budget)
        result = r.to_json()
        result["vertex"] = names[v]
        return Outcome(status_of(r.holds), result)
    found = (find_initial if a.initial else find_terminal)(X, depth, budget)
    result = found.to_json()
    result["vertex"] = None if found.witness is None else names[found.witness.vertex]
    result["all"] = [names[w.vertex] for w in found.all_witnesses]
    if found.witness is not None:
        result["witness"]["vertex"] = names[found.witness.vertex]
    for entry, f in zip(result["rejected"], found.failures):
        entry["vertex"] = names[f.vertex]
    result["kind"] = "initial" if a.initial else "terminal"
    return Outcome(status_of(found.holds), result)


def load_witness(run: Run) -> AdjunctionWitness:
    a = run.args
    f, u = run.ws.map(a.f), run.ws.map(a.u)
    B, A = f.source, f.target
    maps = {}
    for key, X, n in (("eta", B, 1), ("epsilon", A, 1), ("alpha", A, 2), ("beta", B, 2)):
        maps[key] = on_product(run.ws.map(getattr(a, key)), cylinder(X, n), key)
    return AdjunctionWitness(f, u, maps["eta"], maps["epsilon"], maps["alpha"], maps["beta"])


def cmd_adjoint(run: Run) -> Outcome:
    a = run.args
    if a.mode == "verify":
        v = verify_adjunction(load_witness(run))
        return Outcome(v.status, v.to_json())
    f, u = run.ws.map(a.f), run.ws.map(a.u)
    if a.mode == "rari":
        v = verify_rari(f, u, max(run.cap(f.source, f.target), 2), run.budget)
        return Outcome(v.status, v.to_json())
    v = search_adjunction(f, u, run.budget)
    out = Emitter()
    if v.witness is not None:
        emit_witness(out, v.witness)
    return Outcome(v.status, v.to_json(), out)


def cmd_lifting(run: Run) -> Outcome:
    a = run.args
    f, g = run.ws.map(a.f), run.ws.map(a.g)
    depth = run.cap(default=2)
    side = "left" if a.left else "right"
    if a.ell is not None:
        ell = run.ws.map(a.ell)
        lam = on_product(run.ws.map(a.lam), Product(g.source, standard_simplex(1)), "lambda")
        r = check_lifting_candidate(f, g, ell, lam, depth, side, run.budget)
    else:
        r = (absolute_left_lifting_pointwise if a.left else absolute_right_lifting_pointwise)(
            f, g, depth, run.budget)
    return Outcome(r.status, r.to_json())


def cmd_limit(run: Run, colimit: bool = False) -> Outcome:
    d = run.ws.map(run.args.map)
    depth = run.cap(default=3)
    r = (find_colimit if colimit else find_limit)(d, depth, run.budget)
    return Outcome(r.status, r.to_json())


def cmd_fibred(run: Run) -> Outcome:
    a = run.args
    w, w2, p, q = (run.ws.map(x) for x in (a.w, a.w2, a.p, a.q))
    alpha = on_product(run.ws.map(a.alpha), cylinder(w.source, 1), "alpha")
    beta = on_product(run.ws.map(a.beta), cylinder(w.target, 1), "beta")
    v = verify_fibred_equivalence(w, w2, alpha, beta, p, q, max(run.cap(default=2), 2), run.budget)
    return Outcome(v.status, v.to_json())


# replay and certificate suites

def cmd_replay(run: Run) -> Outcome:
    if len(run.args.inputs or []) != 1:
        raise UsageError("replay takes exactly one --in certificate")
    with open(run.args.inputs[0], encoding="utf-8") as fh:
        cert = json.load(fh)
    if "command" not in cert or "status" not in cert:
        raise SchemaError("not a certificate: missing command or status")
    ws = Workspace()
    ws.load_document(dict(cert.get("inputs", {}), format=FORMAT))
    argv = list(cert["command"])
    if "budget" in cert and "--budget" not in argv:
        argv += ["--budget", str(cert["budget"])]
    args = build_parser().parse_args(argv)
    again = dispatch(args, ws)
    same = again.status == cert["status"]
    identical = json.loads(document_text(again.result)) == cert.get("result")
    return Outcome(VERIFIED if same and identical else REFUTED,
                   {"original": cert["status"], "replayed": again.status,
                    "status_reproduced": same, "result_identical": identical})


def cmd_certify(run: Run) -> Outcome:
    from .certificates import write_suite
    if not run.args.out:
        raise UsageError("certify needs --out DIRECTORY")
    files = write_suite(run.args.out)
    bad = sorted(k for k, v in files.items() if "expected" in v or v == "missing"
                 or (k.startswith("replay/") and v != VERIFIED))
    return Outcome(REFUTED if bad else VERIFIED, {"certificates": files, "unexpected": bad})


COMMANDS: Dict[str, Callable[[Run], Outcome]] = {
    "corpus": cmd_corpus,
    "join": cmd_join,
    "fatjoin": lambda r: cmd_join(r, fat=True),
    "slice": cmd_slice,
    "fatslice": lambda r: cmd_slice(r, fat=True),
    "comma": cmd_comma,
    "compare-s": cmd_compare_s,
    "retraction": cmd_retraction,
    "hcat": cmd_hcat,
    "nerve": cmd_nerve,
    "mark": cmd_mark,
    "homcat": cmd_homcat,
    "smother": cmd_smother,
    "check": cmd_check,
    "terminal": cmd_terminal,
    "adjoint": cmd_adjoint,
    "lifting": cmd_lifting,
    "limit": cmd_limit,
    "colimit": lambda r: cmd_limit(r, colimit=True),
    "fibred-equiv": cmd_fibred,
    "replay": cmd_replay,
    "certify": cmd_certify,
}


def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--in", dest="inputs", action="append", metavar="FILE", help="workspace or set file")
    common.add_argument("--cap", type=int, help="depth cap (default: largest input dimension + 2)")
    common.add_argument("--budget", type=int, help="node budget (default: $QCW_BUDGET or 5000000)")
    common.add_argument("--out", help="output file (default: standard output)")

    p = Parser(prog="qcw", description="Finite simplicial sets, quasi-categories and their universal properties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    def add(name, help_, **kw):
        return sub.add_parser(name, parents=[common], help=help_, **kw)

    c = add("corpus", "build a named example")
    c.add_argument("kind", choices=["poset-chain", "simplex", "boundary", "horn", "iso-groupoid", "square",
                                    "divisor-lattice", "homotopic-pair", "iota-trunc", "adjunction", "comma-demo",
                                    "divisor-diagram"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--f")
    c.add_argument("--g")
    c.add_argument("--name", help="output name, or the adjunction to emit")
    c.add_argument("--shape", choices=["discrete", "cospan"], default="discrete")
    c.add_argument("--objects", help="divisors for divisor-diagram, comma separated")
    for name in ("join", "fatjoin"):
        j = add(name, f"the {name} of two sets")
        j.add_argument("--x")
        j.add_argument("--y")
    for name in ("slice", "fatslice"):
        s = add(name, f"the {name} over (or under) a map")
        s.add_argument("--map")
        s.add_argument("--under", action="store_true")
        s.add_argument("--fat", action="store_true", help=argparse.SUPPRESS)
    k = add("comma", "the comma object of a cospan")
    k.add_argument("--f")
    k.add_argument("--g")
    cs = add("compare-s", "the comparison from the fat join to the join")
    cs.add_argument("--x")
    cs.add_argument("--y")
    r = add("retraction", "deformation retraction data for simplices")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    for name, what in (("hcat", "homotopy category"), ("mark", "natural marking")):
        h = add(name, f"the {what} of a quasi-category")
        h.add_argument("--set")
    n = add("nerve", "the nerve of a stored category")
    n.add_argument("--category")
    hc = add("homcat", "the homotopy category of a functor quasi-category")
    hc.add_argument("--x")
    hc.add_argument("--a")
    sm = add("smother", "check that a canonical comparison functor is smothering")
    sm.add_argument("kind", choices=["cotensor2", "cotensorI", "pullback", "comma", "sliced-hom"])
    sm.add_argument("--set")
    sm.add_argument("--f")
    sm.add_argument("--g")
    ch = add("check", "bounded lifting checks")
    ch.add_argument("what", choices=["qcat", "kan", "isofib", "trivfib", "marked"])
    ch.add_argument("--set")
    ch.add_argument("--map")
    ch.add_argument("--marking")
    t = add("terminal", "find or test a terminal (or initial) vertex")
    t.add_argument("--set")
    t.add_argument("--vertex")
    t.add_argument("--initial", action="store_true")
    ad = add("adjoint", "verify or search adjunction data")
    ad.add_argument("mode", choices=["verify", "search", "rari"])
    for key in ("f", "u", "eta", "epsilon", "alpha", "beta"):
        ad.add_argument(f"--{key}", default=key if key not in ("f", "u") else None)
    li = add("lifting", "pointwise absolute lifting of g through f")
    li.add_argument("--f")
    li.add_argument("--g")
    li.add_argument("--left", action="store_true")
    li.add_argument("--ell")
    li.add_argument("--lam")
    for name in ("limit", "colimit"):
        lm = add(name, f"find a {name} of a diagram")
        lm.add_argument("--map")
    fe = add("fibred-equiv", "verify a fibred equivalence over a common base")
    for key in ("w", "w2", "alpha", "beta", "p", "q"):
        fe.add_argument(f"--{key}", default=key)
    add("replay", "re-run the check recorded in a certificate")
    add("certify", "write the deterministic certificate suite into --out")
    return p


def recorded_command(argv: List[str]) -> List[str]:
    """argv without the file arguments, so a certificate replays from its own inputs."""
    out, skip = [], False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok in ("--in", "--out"):
            skip = True
            continue
        if tok.startswith(("--in=", "--out=")):
            continue
        out.append(tok)
    return out


def dispatch(args: argparse.Namespace, ws: Workspace) -> Outcome:
    run = Run(args, ws)
    try:
        return COMMANDS[args.command](run)
    except BudgetExceeded as e:
        return Outcome(INCONCLUSIVE, {"note": str(e)})


def certificate(argv: List[str], args: argparse.Namespace, ws: Workspace, outcome: Outcome) -> dict:
    doc = {"format": FORMAT, "command": recorded_command(argv), "status": outcome.status,
           "result": outcome.result, "budget": args.budget or Budget().nodes}
    doc.update(outcome.out.doc)
    used = ws.used_document()
    if used:
        doc["inputs"] = used
    return doc


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        ws = Workspace()
        if args.command != "replay":
            for path in args.inputs or []:
                ws.load_file(path)
        outcome = dispatch(args, ws)
    except UsageError as e:
        print(f"qcw: usage: {e}", file=sys.stderr)
        return EX_USAGE
    except SchemaError as e:
        print(f"qcw: invalid input: {e}", file=sys.stderr)
        return EX_DATAERR
    except (ValueError, KeyError) as e:
        print(f"qcw: {e}", file=sys.stderr)
        return EX_USAGE
    text = document_text(certificate(argv, args, ws, outcome))
    if args.command == "certify":
        sys.stdout.write(document_text({"status": outcome.status, **outcome.result}))
    elif args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT.get(outcome.status, 2)


if __name__ == "__main__":
    sys.exit(main())
