# Two-valued states of the 15-atom logic and its Boolean set representation.
import numpy as np

from pseudoctx.fixtures import small_graph
from pseudoctx.states import (
    edges_from_partition,
    enumerate_two_valued_states,
    is_separating,
    partition_representation,
)

h = small_graph()
print(f"{h.n} atoms, {len(h)} contexts")
for e in h.sorted_edges():
    print("  context", e)

states = enumerate_two_valued_states(h)
print(f"\n{len(states)} two-valued states (first five):")
for s in states.states[:5]:
    print("  " + "".join(map(str, s)))

ok, pair = is_separating(states, h)
print("\nseparating:", ok)

# each atom becomes the set of states that make it true
p = partition_representation(states)
for v in (1, 2, 3):
    print(f"b{v} = {sorted(p[v])}")

# contexts are exactly the triples whose sets partition 1..24
print("\nrecovered contexts match:", edges_from_partition(p) == set(h.edges))

m = states.matrix
print("how often each atom is true:", dict(zip(h.vertices, m.sum(axis=0).tolist())))
print("states per count of true atoms among {1,6,11}:", np.bincount(states.sums([1, 6, 11])).tolist())
