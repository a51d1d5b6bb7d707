"""
Cohomology tables and Riemann-Roch
==================================

Bott's formula gives h^q(Omega^p(k)); the alternating sum must agree with the
Euler characteristic computed from Chern classes and the Todd class.
"""

from chernpn import bott, chern, cohomology_table, euler_char, hilbert_polynomial, todd

# h^0(Omega^1_{P^3}(2)) is the dimension of the exterior square of C^4
print(bott(3, 1, 2, 0))

for n in (2, 3, 4):
    print(f"td(P^{n}) =", todd(n))

# a small table: h^q(P^3, Omega(k))
for k in range(-3, 4):
    print(k, [bott(3, 1, k, q) for q in range(4)])

for text in ("O(1)+Omega(2)", "T(-1)+T(-1)", "Omega^2(2)*"):
    n = 4 if "Omega^2" in text else 3
    t = cohomology_table(text, n)
    print(f"{text:<14} P^{n}  {t}  chi = {euler_char(chern(text, n))}")

P = hilbert_polynomial(chern("T", 2))
print("chi(T_{P^2}(j)) =", P)
print(", ".join(str(P(j)) for j in range(-3, 4)))
