"""Which small simplicial sets fill their inner horns, and where the first gap shows up."""
from qcw.analysis import is_kan, is_quasicategory
from qcw.corpus import homotopic_pair, iso_groupoid, square_nerve
from qcw.kernel import boundary, horn, standard_simplex

CASES = {
    "Δ²": standard_simplex(2),
    "Λ²,¹": horn(2, 1),
    "∂Δ²": boundary(2),
    "square poset": square_nerve(),
    "two parallel homotopic edges": homotopic_pair(4),
    "free-living iso (level 4)": iso_groupoid(4),
}

if __name__ == "__main__":
    for name, X in CASES.items():
        q, k = is_quasicategory(X, 3), is_kan(X, 3)
        print(f"{name:32} counts={X.counts()}  qcat={q.status:9} kan={k.status}")
        if q.status == "refuted":
            print(f"{'':32} unfilled horn: {q.counterexample['inclusion']}")
