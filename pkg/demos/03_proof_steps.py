"""
Class sizes, one family at a time
=================================

Every element of G sits in one of a few cosets of H, and each coset has a
single class size. The verifier checks each family by comparing the orbit
partition against centralizers computed directly.
"""

from conjsizes.construction import FamilyParams
from conjsizes.verifier import STEPS, FamilyContext, check_case_analysis

ctx = FamilyContext(FamilyParams.create(5))

for number in sorted(STEPS):
    for check in STEPS[number](ctx):
        mark = "ok " if check.passed else "BAD"
        print(f"{mark} {check.name}: {check.actual}")

# the families together cover all 6250 elements
for check in check_case_analysis(ctx):
    print(f"{'ok ' if check.passed else 'BAD'} {check.name}: {check.actual}")
