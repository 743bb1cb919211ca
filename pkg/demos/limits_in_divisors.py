"""Limits and colimits in the nerve of the divisor lattice of 36 agree with gcd and lcm."""
from math import gcd

from qcw.analysis import find_colimit, find_limit
from qcw.corpus import divisor_lattice, vertex_named, vertexwise_map
from qcw.kernel import boundary
from qcw.kernel.sset import render_label

A = divisor_lattice(36)
S = boundary(1)

if __name__ == "__main__":
    for a, b in [(4, 6), (9, 12), (2, 3), (18, 12)]:
        d = vertexwise_map(S, A, lambda v: vertex_named(A, (a, b)[v]))
        lim, colim = find_limit(d, 2), find_colimit(d, 2)
        got = render_label(A.labels[lim.vertex.cell]), render_label(A.labels[colim.vertex.cell])
        print(f"{a:>2} {b:>2}  limit={got[0]:>5} (gcd {gcd(a, b)})  colimit={got[1]:>5} (lcm {a * b // gcd(a, b)})")
