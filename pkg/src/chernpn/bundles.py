"""Chern classes and Chern characters of symbolic bundle expressions on P^n.

Reduction chain for the cotangent powers
----------------------------------------
``Omega^p`` is never expanded through a splitting principle. Instead the
exterior powers of the Euler sequence give, for ``1 <= p <= n``,

    0 -> Omega^p -> O(-p)^{C(n+1, p)} -> Omega^{p-1} -> 0,

so ``c(Omega^p) = (1 - p h)^{C(n+1, p)} / c(Omega^{p-1})`` with
``Omega^0 = O``. Duals and twists are then handled by :func:`dual_chern`
and :func:`twist_chern`; the isomorphism ``Omega^p* = Omega^{n-p}(n+1)`` is
not used for computation, only checked in the test suite, together with the
quotient presentations ``T(-1) = O^{n+1}/O(-1)`` and
``wedge2 T(-2) = O^{10}/T(-2)`` on P^4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .chowring import ChowClass, check_dim, format_poly
from .errors import (AmbientMismatch, InvalidAtDimension, NonIntegralChern,
                     RankTooSmall, RankViolation, UnsupportedOperation)
from .expr import (CotangentPower, Dual, LineBundle, Quot, Sum, Tangent,
                   Trivial, Twist, Wedge2, as_expr)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class ChernData:
    """Rank and total Chern class of a bundle on ``P^n``.

    The total class must have integer coefficients, constant term 1 and no
    nonzero ``c_i`` with ``i > rank``.
    """

    n: int
    rank: int
    total: ChowClass

    def __post_init__(self):
        check_dim(self.n)
        if self.total.n != self.n:
            raise AmbientMismatch(f"total class lives on P^{self.total.n}, not P^{self.n}")
        if self.rank < 0:
            raise RankViolation(f"negative rank {self.rank}")
        if not self.total.is_integral():
            raise NonIntegralChern(f"non-integral Chern class {self.total}")
        if self.total[0] != 1:
            raise NonIntegralChern(f"c_0 must be 1, got {self.total[0]}")
        bad = [i for i in range(self.rank + 1, self.n + 1) if self.total[i]]
        if bad:
            raise RankViolation(
                f"c_{bad[0]} = {self.total[bad[0]]} is nonzero but rank is {self.rank}")

    @classmethod
    def from_classes(cls, n: int, rank: int, classes: Sequence[int]) -> "ChernData":
        """Build from ``[c_1, c_2, ...]``; missing trailing classes are 0."""
        return cls(n, rank, ChowClass(n, (1, *classes)))

    @classmethod
    def trivial(cls, n: int, rank: int) -> "ChernData":
        return cls(n, rank, ChowClass.one(n))

    def c(self, i: int) -> int:
        return int(self.total[i])

    @property
    def classes(self) -> tuple:
        """``(c_1, ..., c_n)`` as Python ints."""
        return self.total.int_coeffs()[1:]

    @property
    def c1(self) -> int:
        return self.c(1)

    @property
    def c2(self) -> int:
        return self.c(2) if self.n >= 2 else 0

    def polynomial(self, var: str = "t") -> str:
        return format_poly(self.total.coeffs, var)

    def __str__(self):
        return f"rank {self.rank} on P^{self.n}: c_t = {self.polynomial()}"


@dataclass(frozen=True)
class ChernCharacter:
    n: int
    value: ChowClass

    def __post_init__(self):
        r = self.value[0]
        if r.denominator != 1 or r < 0:
            raise RankViolation(f"ch_0 must be a nonnegative integer, got {r}")

    @property
    def rank(self) -> int:
        return int(self.value[0])

    def __getitem__(self, k: int) -> Fraction:
        return self.value[k]


# -- elementary operations on ChernData -------------------------------------

def _same_ambient(a: ChernData, b: ChernData):
    if a.n != b.n:
        raise AmbientMismatch(f"P^{a.n} versus P^{b.n}")


def whitney_sum(a: ChernData, b: ChernData) -> ChernData:
    _same_ambient(a, b)
    return ChernData(a.n, a.rank + b.rank, a.total * b.total)


def twist_chern(c: ChernData, t: int) -> ChernData:
    """Chern classes of ``E(t)``: ``c_k(E(t)) = sum_i C(r-i, k-i) c_i t^(k-i)``."""
    r, n = c.rank, c.n
    out = [1]
    for k in range(1, n + 1):
        s = 0
        for i in range(0, k + 1):
            ci = c.c(i)
            if ci:
                s += binom(r - i, k - i) * ci * t ** (k - i)
        out.append(s)
    return ChernData(n, r, ChowClass(n, out))


def dual_chern(c: ChernData) -> ChernData:
    return ChernData(c.n, c.rank, c.total.scale_degrees(-1))


def quot_chern(total: ChernData, sub: ChernData) -> ChernData:
    """Chern data of ``E`` in ``0 -> sub -> total -> E -> 0``.

    Only a numerical check: there is no test that a monomorphism exists. A
    nonzero class above the resulting rank raises :class:`RankViolation`.
    """
    _same_ambient(total, sub)
    if total.rank <= sub.rank:
        raise RankViolation(
            f"quotient needs rank(total) > rank(sub), got {total.rank} <= {sub.rank}")
    return ChernData(total.n, total.rank - sub.rank, total.total / sub.total)


# -- characters -------------------------------------------------------------

def _power_sums(rank: int, e: Sequence) -> list:
    # Newton: p_k = sum_{i<k} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k
    n = len(e) - 1
    p = [Fraction(rank)]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k):
            s += (-1) ** (i - 1) * e[i] * p[k - i]
        s += (-1) ** (k - 1) * k * e[k]
        p.append(s)
    return p


def chern_character(e_or_c, n: int | None = None) -> ChernCharacter:
    """Chern character of an expression or of :class:`ChernData`.

    ``ch_k = p_k / k!`` where the power sums ``p_k`` of the Chern roots come
    from the Newton identities.
    """
    c = e_or_c if isinstance(e_or_c, ChernData) else chern(e_or_c, n)
    if n is not None and c.n != n:
        raise AmbientMismatch(f"Chern data on P^{c.n}, requested P^{n}")
    p = _power_sums(c.rank, c.total.coeffs)
    return ChernCharacter(c.n, ChowClass(c.n, (pk / factorial(k) for k, pk in enumerate(p))))


def character_to_chern(ch: ChernCharacter) -> ChernData:
    """Inverse of :func:`chern_character`.

    Raises :class:`NonIntegralChern` when the recovered classes are not
    integers, and :class:`RankViolation` when they do not vanish above the
    rank.
    """
    n = ch.n
    p = [ch[k] * factorial(k) for k in range(n + 1)]
    e = [Fraction(1)]
    for k in range(1, n + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1))
        e.append(s / k)
    bad = [(k, v) for k, v in enumerate(e) if v.denominator != 1]
    if bad:
        k, v = bad[0]
        raise NonIntegralChern(f"c_{k} = {v} recovered from character is not an integer")
    return ChernData(n, ch.rank, ChowClass(n, e))


def adams2(ch: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(ch.n, ch.value.scale_degrees(2))


def wedge2_character(ch: ChernCharacter) -> ChernCharacter:
    """Character of the second exterior power: ``(ch^2 - psi^2 ch) / 2``."""
    if ch.rank < 2:
        raise RankTooSmall(f"wedge2 needs rank >= 2, got {ch.rank}")
    v = (ch.value * ch.value - adams2(ch).value) * Fraction(1, 2)
    return ChernCharacter(ch.n, v)


def wedge_character(ch: ChernCharacter, p: int) -> ChernCharacter:
    if p == 0:
        return ChernCharacter(ch.n, ChowClass.one(ch.n))
    if p == 1:
        return ch
    if p == 2:
        return wedge2_character(ch)
    raise UnsupportedOperation(f"exterior power {p} is not supported (only 0, 1, 2)")


# -- expressions ------------------------------------------------------------

def rank(e, n: int) -> int:
    """Rank of the bundle described by ``e`` on ``P^n``."""
    check_dim(n)
    e = as_expr(e)
    if isinstance(e, LineBundle):
        return 1
    if isinstance(e, Tangent):
        return n
    if isinstance(e, CotangentPower):
        _check_cotangent(e.p, n)
        return comb(n, e.p)
    if isinstance(e, Trivial):
        return e.r
    if isinstance(e, (Twist, Dual)):
        return rank(e.e, n)
    if isinstance(e, Sum):
        return rank(e.left, n) + rank(e.right, n)
    if isinstance(e, Wedge2):
        return comb(rank(e.e, n), 2)
    if isinstance(e, Quot):
        rt, rs = rank(e.total, n), rank(e.sub, n)
        if rt <= rs:
            raise RankViolation(f"quotient of rank {rt} by rank {rs}")
        return rt - rs
    raise TypeError(f"not a bundle expression: {e!r}")


def _check_cotangent(p: int, n: int):
    if not 1 <= p <= n:
        raise InvalidAtDimension(f"Omega^{p} does not exist on P^{n}")


@lru_cache(maxsize=None)
def cotangent_power_chern(n: int, p: int) -> ChernData:
    """``c(Omega^p)`` on ``P^n`` through the Euler-sequence recursion."""
    check_dim(n)
    if p == 0:
        return ChernData.trivial(n, 1)
    _check_cotangent(p, n)
    prev = cotangent_power_chern(n, p - 1)
    total = ChowClass.linear(n, -p) ** comb(n + 1, p) / prev.total
    return ChernData(n, comb(n, p), total)


def tangent_chern(n: int) -> ChernData:
    return ChernData(n, n, ChowClass.linear(n, 1) ** (n + 1))


def chern(e, n: int) -> ChernData:
    """Total Chern class of an expression, computed structurally.

    >>> chern("O(2)+O(1)", 2).polynomial()
    '1 + 3t + 2t^2'
    """
    check_dim(n)
    e = as_expr(e)
    if isinstance(e, LineBundle):
        return ChernData(n, 1, ChowClass.linear(n, e.a))
    if isinstance(e, Tangent):
        return tangent_chern(n)
    if isinstance(e, CotangentPower):
        return cotangent_power_chern(n, e.p)
    if isinstance(e, Trivial):
        return ChernData.trivial(n, e.r)
    if isinstance(e, Twist):
        return twist_chern(chern(e.e, n), e.k)
    if isinstance(e, Dual):
        return dual_chern(chern(e.e, n))
    if isinstance(e, Sum):
        return whitney_sum(chern(e.left, n), chern(e.right, n))
    if isinstance(e, Wedge2):
        return character_to_chern(wedge2_character(chern_character(chern(e.e, n))))
    if isinstance(e, Quot):
        return quot_chern(chern(e.total, n), chern(e.sub, n))
    raise TypeError(f"not a bundle expression: {e!r}")
