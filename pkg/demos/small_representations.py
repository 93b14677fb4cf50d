# Vector labelings of the 15-atom logic: a heuristic one and the analytic family.
from math import pi, sqrt

import numpy as np

from pseudoctx.fixtures import small_graph, vector_table
from pseudoctx.geometry import (
    DegenerateConstructionError,
    construct_small_for,
    eigen_sym3,
    find_degenerate_alpha,
    projector_sum,
    quantum_bounds,
    verify_for,
)

h = small_graph()
heur = vector_table("small-for-heuristic")
print("heuristic labeling faithful:", verify_for(h, heur).ok)

m = projector_sum(heur, [1, 6, 11])
dec = eigen_sym3(m)
print("eigenvalues of P1+P6+P11:", dec.eigenvalues)
print("  expected:", sorted([(7 - sqrt(21)) / 14, (7 + sqrt(21)) / 14, 2]))
print("top eigenvector:", dec.eigenvectors[:, 2])
print("same operator for {5,10,15}:", np.allclose(m, projector_sum(heur, [5, 10, 15])))
print("quantum range:", quantum_bounds(heur, [1, 6, 11]), "vs classical [0, 2]")

# analytic family: bases on a cone, one turned by alpha
for alpha in (pi / 3, 1.5, pi):
    lab = construct_small_for(alpha)
    ev = eigen_sym3(projector_sum(lab, [1, 6, 11])).eigenvalues
    print(f"\nalpha={alpha:.4f}: faithful={verify_for(h, lab).ok}, eigenvalues {np.round(ev, 6)}")

a0 = find_degenerate_alpha()
print(f"\nalpha0 = {a0:.12f}")
for alpha in (0.0, a0, 2 * pi / 3):
    try:
        construct_small_for(alpha)
    except DegenerateConstructionError as exc:
        print(" ", exc)
