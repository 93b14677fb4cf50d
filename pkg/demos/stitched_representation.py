# The 36-atom logic: two mirrored halves stitched together by a rotation beta(alpha).
from math import pi

import numpy as np

from pseudoctx.fixtures import combo_graph, vector_table
from pseudoctx.geometry import (
    ALPHA_MAX,
    aperture_of_alpha,
    beta_of_alpha,
    born_probabilities,
    construct_combo_for,
    gram_equivalent,
    pairwise_overlaps,
    projector_sum,
    quantum_bounds,
    verify_for,
)

h = combo_graph()
alpha = pi / 3
lab = construct_combo_for(alpha)
print(f"alpha = pi/3, beta = {beta_of_alpha(alpha):.12f}, aperture = {aperture_of_alpha(alpha):.12f}")
print("faithful:", verify_for(h, lab).ok)
print("same geometry as the tabulated labeling:", gram_equivalent(lab, vector_table("combo-for-alpha-pi3")))

A, B = [4, 16, 28], [10, 22, 34]
print("overlaps within A:", np.round(pairwise_overlaps(lab, A), 12))
print("P_A =\n", np.round(projector_sum(lab, A), 12))
print("quantum range:", quantum_bounds(lab, A), "vs classical [0, 3]")

rng = np.random.default_rng(0)
psi = rng.normal(size=3)
p = born_probabilities(lab, psi / np.linalg.norm(psi))
print(f"random state: sum_A = {sum(p[v] for v in A):.15f}, sum_B = {sum(p[v] for v in B):.15f}")

print("\nalpha      beta       aperture   lambda_min lambda_max")
for a in np.linspace(0.1, ALPHA_MAX, 8):
    try:
        lo, hi = quantum_bounds(construct_combo_for(a), A)
    except ValueError as exc:
        print(f"{a:.6f} skipped: {exc}")
        continue
    print(f"{a:.6f}   {beta_of_alpha(a):.6f}   {aperture_of_alpha(a):.6f}   {lo:.6f}   {hi:.6f}")

# the pi/2 table turns the second half the other way round
lab2 = construct_combo_for(pi / 2, handedness=-1)
print("\npi/2 (reversed sense) matches its table:", gram_equivalent(lab2, vector_table("combo-for-alpha-pi2")))
print("quantum range at pi/2:", quantum_bounds(lab2, A))
