# Certify that p(1)+p(6)+p(11) == p(5)+p(10)+p(15) for every admissible p.
from pseudoctx.fixtures import combo_graph, small_graph
from pseudoctx.pseudocontext import (
    certificate_from_coverings,
    classical_bounds,
    classify_gadget,
    find_coverings,
    find_pseudocontext_pairs,
    verify_pseudocontext_pair,
)
from pseudoctx.states import enumerate_two_valued_states

h = small_graph()
A, B = {1, 6, 11}, {5, 10, 15}

cert = verify_pseudocontext_pair(h, A, B)
print("certificate coefficients:")
for e, c in cert.support().items():
    print(f"  {e}: {c}")
print("sound:", cert.is_sound(h.n))

# the same identity from two coverings of the complements
cov_a, cov_b = find_coverings(h, A)[0], find_coverings(h, B)[0]
print("\ncovering without A:", cov_a.edges)
print("covering without B:", cov_b.edges)
print("unit certificate sound:", certificate_from_coverings(cov_a, cov_b).is_sound(h.n))

# a near miss: swapping 15 for 14 breaks the identity
print("\n{1,6,11} vs {5,10,14}:", verify_pseudocontext_pair(h, A, {5, 10, 14}))

states = enumerate_two_valued_states(h)
b = classical_bounds(states, A)
print(f"\nclassical range of p(1)+p(6)+p(11): [{b.lo}, {b.hi}]")
g = classify_gadget(states, A, B)
print("joint (sum_A, sum_B) counts:", g.joint, "FIF:", g.fif)

pairs = find_pseudocontext_pairs(h, 3)
print(f"\nall {len(pairs)} certified pairs of triples:")
for X, Y in pairs:
    print("  ", sorted(X), sorted(Y))

# the combined logic needs 11 contexts per covering
c = combo_graph()
cov = find_coverings(c, {10, 22, 34})
print(f"\ncombined logic: {len(cov)} covering(s) of size {len(cov[0])}")
print("classical range:", classical_bounds(enumerate_two_valued_states(c), {4, 16, 28}))
