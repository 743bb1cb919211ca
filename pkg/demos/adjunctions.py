"""Search for adjunction data between small nerves, then check each witness equation by equation."""
from qcw.analysis import search_adjunction, verify_adjunction
from qcw.corpus import corpus_adjunctions, iota_trunc
from qcw.kernel import standard_simplex, vertex_map
from qcw.kernel.lifting import to_point


def show(label, verdict):
    print(f"{label}: {verdict.status}")
    for name in verdict.failures or ():
        print(f"    failed: {name}")


if __name__ == "__main__":
    for name, w in corpus_adjunctions().items():
        show(f"stored witness {name}", verify_adjunction(w))

    iota, trunc = iota_trunc()
    show("search [1] ⇄ [2]", search_adjunction(iota, trunc))

    D1 = standard_simplex(1)
    show("search top vertex ⊣ Δ¹ → Δ⁰", search_adjunction(vertex_map(D1, D1.cells(0)[1]), to_point(D1)))
    show("search bottom vertex ⊣ Δ¹ → Δ⁰", search_adjunction(vertex_map(D1, D1.cells(0)[0]), to_point(D1)))
