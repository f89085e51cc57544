"""
Two centralizer facts, tested at random
=======================================

Coprime powers keep the centralizer, and in a coprime action every element of
the coset H a has the same number of H-conjugates.
"""

from conjsizes import core
from conjsizes.smallgroups import coprime_semidirect
from conjsizes.verifier import lemma_report

# the Frobenius group of order 20: every h a has exactly 5 conjugates under H
inst = coprime_semidirect(5, 1, (0,), 2)
G = inst.group
print("F20 indices over the coset:", sorted({core.index_of(G, core.product_of(G, h, inst.a_rank)) for h in inst.h_ranks.tolist()}))

# a 3-cycle permuting the coordinates of (Z/5)^3
cube = coprime_semidirect(5, 3, (1, 2, 0), 1)
print("|C_H(a)| =", len(core.centralizer_in(cube.group, cube.h_ranks, cube.a_rank)))

report = lemma_report(200, seed=42)
print(report.to_text())
