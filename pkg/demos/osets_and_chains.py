"""
O-sets and linkage chains
=========================

A vanishing O-set hands back a chain of simple odd links.
"""

from odd_linkage import (
    MultiIndex,
    Weight,
    chain_from_collection,
    collections_and_osets,
    factor_candidate,
    odd_linked,
)

# symbolic O-sets
for pair in ("123|123", "113|123", "113|121", "123|111"):
    for o in collections_and_osets(None, MultiIndex.parse(pair)):
        print(o)
    print()

# w33 = 0, w12 = 1, w11 = 0 kills the first O-set of 113|123
w = Weight((0, 0, 2), (-2, 0, 0))
chain = chain_from_collection(w, (1, 1, 3), (1, 2, 3))
print(chain.render(), chain.verify())
for step in chain.steps:
    print("  ", step.weight)

# verdicts at the two reference weights
for w in (Weight((5, 4, 3), (3, 2, 1)), Weight((2, 1, 0), (0, -1, -2))):
    v = factor_candidate(w, MultiIndex.parse("123|123"))
    print(w, v.verdict, "rank", v.rank, "of", v.rows)
    if v.chain:
        print("  ", v.chain.render())

# breadth-first search between two weights
found = odd_linked(Weight((2, 1, 0), (0, -1, -2)), Weight((1, 0, -1), (1, 0, -1)))
print(found.render() if found else "not linked")
