"""Truncated polynomial arithmetic in the Chow ring Q[h]/(h^{n+1}) of P^n.

Every coefficient is a :class:`fractions.Fraction`; nothing in this module
ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import AmbientMismatch, DegreeOutOfRange, DomainError, NotAUnit

#: Largest supported ambient dimension.
MAX_DIM = 8

Rat = Fraction
Scalar = Union[int, Fraction]


def check_dim(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"ambient dimension must be an integer, got {n!r}")
    if not 1 <= n <= MAX_DIM:
        raise DomainError(f"ambient dimension must lie in [1, {MAX_DIM}], got {n}")
    return n


def _rat(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact coefficient")


@dataclass(frozen=True)
class ChowClass:
    """A class ``sum_i coeffs[i] * h^i`` in the Chow ring of ``P^n``.

    Instances are immutable. The coefficient tuple always has length ``n + 1``;
    shorter inputs are zero padded, longer ones are rejected unless the excess
    terms vanish.
    """

    n: int
    coeffs: tuple

    def __init__(self, n: int, coeffs: Iterable = (1,)):
        check_dim(n)
        cs = [_rat(c) for c in coeffs]
        if len(cs) > n + 1:
            if any(cs[n + 1:]):
                raise DegreeOutOfRange(
                    f"nonzero coefficient above degree {n} on P^{n}")
            cs = cs[:n + 1]
        cs += [Fraction(0)] * (n + 1 - len(cs))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -----------------------------------------------------

    @classmethod
    def one(cls, n: int) -> "ChowClass":
        return cls(n, (1,))

    @classmethod
    def zero(cls, n: int) -> "ChowClass":
        return cls(n, ())

    @classmethod
    def hyperplane(cls, n: int, a: Scalar = 1) -> "ChowClass":
        """The linear class ``a*h``."""
        return cls(n, (0, a))

    @classmethod
    def linear(cls, n: int, a: Scalar) -> "ChowClass":
        """``1 + a*h``, the total Chern class of O(a)."""
        return cls(n, (1, a))

    # -- access -----------------------------------------------------------

    def coeff(self, i: int) -> Fraction:
        if not 0 <= i <= self.n:
            raise DegreeOutOfRange(f"degree {i} outside 0..{self.n}")
        return self.coeffs[i]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeff(i)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self.n + 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple:
        return tuple(int(c) for c in self.coeffs)

    def degree(self) -> int:
        """Largest ``i`` with a nonzero coefficient, or -1 for the zero class."""
        for i in range(self.n, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "ChowClass":
        if isinstance(other, ChowClass):
            if other.n != self.n:
                raise AmbientMismatch(
                    f"cannot combine classes on P^{self.n} and P^{other.n}")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return ChowClass(self.n, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ChowClass(self.n, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.n, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.n
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return ChowClass(n, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert() ** (-e)
        result = ChowClass.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> "ChowClass":
        """Multiplicative inverse in the truncated ring."""
        a = self.coeffs
        if a[0] == 0:
            raise NotAUnit(f"constant term of {self} is zero")
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, self.n + 1):
            s = sum(a[i] * b[k - i] for i in range(1, k + 1))
            b.append(-s * inv0)
        return ChowClass(self.n, b)

    def scale_degrees(self, base: Scalar) -> "ChowClass":
        """Multiply the degree-k part by ``base**k`` (the Adams operation for base 2)."""
        base = _rat(base)
        return ChowClass(self.n, (c * base ** k for k, c in enumerate(self.coeffs)))

    def top(self) -> Fraction:
        """Degree-n coefficient, i.e. the degree of the zero-cycle part."""
        return self.coeffs[self.n]

    # -- display ----------------------------------------------------------

    def __str__(self):
        return format_poly(self.coeffs, "h")

    def __repr__(self):
        return f"ChowClass(n={self.n}, {format_poly(self.coeffs, 'h')})"


def format_poly(coeffs, var: str = "t") -> str:
    """Render a coefficient list as ``1 + 3t + 4t^2``; zero terms are dropped."""
    parts = []
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}{mono}"
            else:
                body = f"({mag}){mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def mul(a: ChowClass, b: ChowClass) -> ChowClass:
    return a * b


def invert(a: ChowClass) -> ChowClass:
    return a.invert()


def coeff(a: ChowClass, i: int) -> Fraction:
    return a.coeff(i)


def exp_series(n: int, a: Scalar = 1) -> ChowClass:
    """Truncated ``exp(a*h)``."""
    a = _rat(a)
    terms = []
    term = Fraction(1)
    for k in range(n + 1):
        terms.append(term)
        term = term * a / (k + 1)
    return ChowClass(n, terms)
