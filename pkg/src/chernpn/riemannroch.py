"""Todd classes and Hirzebruch-Riemann-Roch on P^n.

``chi(E) = deg_n (ch(E) * td(P^n))`` with ``td(P^n) = (h / (1 - e^{-h}))^{n+1}``.
Euler characteristics are returned as exact rationals: a non-integral value
is information (see :mod:`chernpn.constraints`), not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bundles import ChernData, chern_character
from .chowring import ChowClass, check_dim, format_poly
from .errors import AmbientMismatch


@lru_cache(maxsize=None)
def todd(n: int) -> ChowClass:
    """Todd class of ``P^n``.

    ``(1 - e^{-h})/h = sum_m (-1)^m h^m / (m+1)!`` has unit constant term, so
    it is inverted as a series and then raised to the power ``n + 1``.
    """
    check_dim(n)
    series = ChowClass(n, (Fraction((-1) ** m, factorial(m + 1)) for m in range(n + 1)))
    return series.invert() ** (n + 1)


def _resolve(c: ChernData, n):
    if n is not None and n != c.n:
        raise AmbientMismatch(f"Chern data on P^{c.n}, requested P^{n}")
    return c.n


def euler_char(c: ChernData, n: int | None = None) -> Fraction:
    """Exact ``chi(E)`` from rank and Chern classes."""
    n = _resolve(c, n)
    return (chern_character(c).value * todd(n)).top()


def euler_char_p2(rank: int, c1, c2) -> Fraction:
    """Closed form on P^2: ``(c1^2 - 2 c2 + 3 c1)/2 + rank``."""
    return Fraction(c1 * c1 - 2 * c2 + 3 * c1, 2) + rank


def euler_char_p3(rank: int, c1, c2, c3) -> Fraction:
    """Closed form on P^3: ``(c1^3 - 3c1c2 + 3c3)/6 + c1^2 - 2c2 + (11/6)c1 + rank``."""
    return (Fraction(c1 ** 3 - 3 * c1 * c2 + 3 * c3, 6)
            + c1 * c1 - 2 * c2 + Fraction(11, 6) * c1 + rank)


@dataclass(frozen=True)
class RRPolynomial:
    """``P(j) = chi(E(j))`` as a polynomial in ``j`` of degree at most ``n``.

    ``coeffs[m]`` is the coefficient of ``j**m``.
    """

    n: int
    coeffs: tuple

    def __call__(self, j) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * j + a
        return acc

    @property
    def degree(self) -> int:
        for m in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[m]:
                return m
        return -1

    def values(self, js) -> list:
        return [self(j) for j in js]

    def __str__(self):
        return format_poly(self.coeffs, "j")


def hilbert_polynomial(c: ChernData, n: int | None = None) -> RRPolynomial:
    """Symbolic ``chi(E(j))``.

    Since ``ch(E(j)) = ch(E) e^{jh}``, the coefficient of ``j^m`` is
    ``deg_{n-m}(ch(E) td) / m!``.
    """
    n = _resolve(c, n)
    prod = chern_character(c).value * todd(n)
    return RRPolynomial(n, tuple(prod[n - m] / factorial(m) for m in range(n + 1)))
