"""
A non-nilpotent group and its class sizes
=========================================

Build G for p = 5 (6250 elements), partition it into conjugacy classes and
compare with the nilpotent group L = P x Q of a different order.
"""

from conjsizes import core
from conjsizes.construction import FamilyParams, build_G, build_L, build_P, build_Q, describe

params = FamilyParams.create(5)
G = build_G(params)
classes = core.class_size_set(G)
print(f"|G| = {G.order}")
print("size  count")
for size in classes.distinct_sizes:
    print(f"{size:5d} {classes.multiplicity[size]:5d}")

# only the identity commutes with everything
print("Z(G) =", [describe(G, z) for z in core.center(G)])

###############################################################################
# The nilpotent twin
# ------------------
# P has class sizes {1, 5, 125} and Q has {1, 2}; their direct product hits
# exactly the same set as G.

P, Q = build_P(params), build_Q(params.q)
L = build_L(params)
for X in (P, Q, L):
    print(f"{X.label:>12}: order {X.order:6d} sizes {core.class_size_set(X).distinct_sizes}")

print("nilpotent:", {"G": core.is_nilpotent(G), "L": core.is_nilpotent(L)})
print("|Z(L)| =", len(core.center(L)))
