"""
The same pattern at p = 7
=========================

G now has 2,470,629 elements. The whole group still fits in memory as rank
arrays, so the partition is computed directly rather than by formula.
"""

import time

from conjsizes import core
from conjsizes.construction import FamilyParams, build_G
from conjsizes.verifier import expected_sizes

params = FamilyParams.create(7)
start = time.perf_counter()
G = build_G(params)
sizes = core.class_size_set(G)
print(f"|G| = {G.order}, partitioned in {time.perf_counter() - start:.1f}s")
print("observed:", sizes.distinct_sizes)
print("formula: ", expected_sizes(params.p, params.q))
print("|Z(G)| =", len(core.center(G)))

# p = 11 would need about 11^11 * 5 elements; the budget refuses it up front
try:
    build_G(FamilyParams.create(11))
except core.BudgetExceeded as exc:
    print("p=11:", exc)
