"""
Globally generated bundles with c_1 = 3
=======================================

The catalog of bundles with small c_2, checked one invariant at a time, and
the kernel map c_2 -> c_1^2 - c_2 that swaps the two halves of the list.
"""

from chernpn import catalog, enumerate_candidates, second_reduction, verify_catalog
from chernpn.constraints import second_reduction_pair

for e in catalog():
    print(f"{e.id:<9} c2 = {e.expected_c2}  {e.dims_label():<8} {e.build(4) if e.valid_at(4) else e.build(3)}")

report = verify_catalog(4)
for row in report.rows:
    if row.status != "pass":
        print(row.status, row.entry, row.detail)
print("all checks pass on P^4:", report.passed)

# direct sums of the basic atoms with c_1 = 3
for cand in enumerate_candidates(4, 6):
    print(cand.chern.c2, cand.expression)

# c_2 -> 9 - c_2 pairs the low list with the high list
print(sorted({c2: second_reduction_pair(3, c2)[1] for c2 in (0, 2, 3, 4)}.items()))

# kernel of the evaluation map for O(3) on P^3
e = catalog()[0].chern(3)
print(second_reduction(e, 10).polynomial())
