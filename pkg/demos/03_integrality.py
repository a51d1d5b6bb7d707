"""
Integrality of chi(E(j))
========================

An honest vector bundle has an integer-valued Hilbert polynomial. Chern data
that fails this cannot come from any bundle, whatever the rank.
"""

from chernpn import ChernData, hilbert_polynomial, schwarzenberger_check

# rank 3 on P^4 with c_t = 1 + 3t + 4t^2 + 2t^3
c = ChernData.from_classes(4, 3, [3, 4, 2, 0])
print(hilbert_polynomial(c))
print(schwarzenberger_check(c))

# the same polynomial with c_4 = 1 on P^5, rank 4
print(schwarzenberger_check(ChernData.from_classes(5, 4, [3, 4, 2, 1, 0])))

# on P^3 with c = (3, 3, c3), integrality forces c3 odd
for c3 in range(-3, 4):
    r = schwarzenberger_check(ChernData.from_classes(3, 3, [3, 3, c3]))
    print(c3, r.passed, r.value)

# the verdict does not depend on the rank
for rank in (3, 4, 10):
    print(rank, schwarzenberger_check(ChernData.from_classes(4, rank, [3, 4, 2, 0])).passed)
