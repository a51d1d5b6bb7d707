"""
Chern classes on projective space
=================================

Total Chern classes live in Q[h]/(h^{n+1}). Bundles are written in a small
expression language and reduced to exact arithmetic there.
"""

from chernpn import ChowClass, chern, chern_character, parse

# the hyperplane class and a Whitney product on P^3
h = ChowClass.hyperplane(3)
print((1 + h) * (1 + 2 * h + 2 * h ** 2))

# c(T_{P^n}) = (1 + h)^{n+1}
for n in range(1, 5):
    print(n, chern("T", n).polynomial())

# expressions parse into a small tree
e = parse("O(2)+T(-1)")
print(repr(e))
print(chern(e, 3).polynomial(), "rank", chern(e, 3).rank)

# Chern characters are exact rationals
print(chern_character("T", 2).value)

# Omega^2(2)^* on P^4 and the rank 3 quotient O^7 / T(-2) share their Chern class
print(chern("Omega^2(2)*", 4).polynomial())
print(chern("quot(Triv(7), T(-2))", 4).polynomial())
