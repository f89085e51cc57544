"""
Which primes can host the construction
======================================

The family needs a prime q with p = 2q + 1 prime as well. This walks the small
pairs and shows the twist exponent r picked for each one.
"""

from conjsizes.construction import FamilyParams, sophie_germain_pairs

# pairs with p up to 200; bounding q instead keeps going up to q = 191
pairs = sophie_germain_pairs(200, bound="p")
print(f"{len(pairs)} pairs with p <= 200")

for q, p in pairs[:6]:
    params = FamilyParams.create(p)
    print(f"q={q:3d} p={p:3d} r={params.r:3d} beta={params.beta_cycles()}")

# the parameters serialize to a small JSON document and come back validated
print(FamilyParams.create(7).to_json())
