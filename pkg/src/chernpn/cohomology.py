"""Sheaf cohomology of twisted differential forms on P^n (Bott's formula).

Direct sums of twists and duals of ``O(a)``, ``T`` and ``Omega^p`` are
reduced to ``Omega^p(k)`` summands using ``T = Omega^{n-1}(n+1)`` and
``(Omega^p)^* = Omega^{n-p}(n+1)``; each summand is then read off Bott's
formula. Quotients and exterior powers are rejected because their
cohomology is not determined by the data carried here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .bundles import binom
from .chowring import check_dim
from .errors import DomainError, InvalidAtDimension, UnsupportedExpression
from .expr import (CotangentPower, Dual, LineBundle, Quot, Sum, Tangent,
                   Trivial, Twist, Wedge2, as_expr)


def bott(n: int, p: int, k: int, q: int) -> int:
    """``h^q(P^n, Omega^p(k))``."""
    check_dim(n)
    if not 0 <= p <= n:
        raise DomainError(f"p = {p} outside 0..{n}")
    if not 0 <= q <= n:
        raise DomainError(f"q = {q} outside 0..{n}")
    if q == 0 and k > p:
        return binom(k + n - p, k) * binom(k - 1, p)
    if k == 0 and q == p:
        return 1
    if q == n and k < p - n:
        return binom(-k + p, -k) * binom(-k - 1, n - p)
    return 0


def serre_duality_check(n: int, p: int, k: int, q: int) -> bool:
    """True iff ``h^q(Omega^p(k)) == h^{n-q}(Omega^{n-p}(-k))``."""
    return bott(n, p, k, q) == bott(n, n - p, -k, n - q)


@dataclass(frozen=True)
class CohomologyTable:
    n: int
    twist: int
    entries: tuple

    def __getitem__(self, q: int) -> int:
        return self.entries[q]

    @property
    def euler(self) -> int:
        return sum((-1) ** q * h for q, h in enumerate(self.entries))

    def __str__(self):
        return "  ".join(f"h^{q}={h}" for q, h in enumerate(self.entries))


def _normalize(c: Counter, n: int) -> Counter:
    # Omega^n(k) = O(k - n - 1)
    out = Counter()
    for (p, k), m in c.items():
        out[(0, k - n - 1) if p == n else (p, k)] += m
    return out


def omega_summands(e, n: int) -> Counter:
    """Decompose ``e`` into a multiset of ``(p, k)`` meaning ``Omega^p(k)``."""
    e = as_expr(e)
    if isinstance(e, LineBundle):
        return Counter({(0, e.a): 1})
    if isinstance(e, Trivial):
        return Counter({(0, 0): e.r}) if e.r else Counter()
    if isinstance(e, Tangent):
        return _normalize(Counter({(n - 1, n + 1): 1}), n)
    if isinstance(e, CotangentPower):
        if not 1 <= e.p <= n:
            raise InvalidAtDimension(f"Omega^{e.p} does not exist on P^{n}")
        return _normalize(Counter({(e.p, 0): 1}), n)
    if isinstance(e, Sum):
        return omega_summands(e.left, n) + omega_summands(e.right, n)
    if isinstance(e, Twist):
        inner = omega_summands(e.e, n)
        return Counter({(p, k + e.k): m for (p, k), m in inner.items()})
    if isinstance(e, Dual):
        inner = omega_summands(e.e, n)
        return _normalize(Counter({(n - p, n + 1 - k): m
                                   for (p, k), m in inner.items()}), n)
    if isinstance(e, (Quot, Wedge2)):
        raise UnsupportedExpression(
            f"cohomology of {type(e).__name__.lower()} expressions is not determined "
            "by Chern data; only direct sums of O(a), T, Omega^p and their "
            "twists/duals are supported")
    raise TypeError(f"not a bundle expression: {e!r}")


def cohomology_table(e, n: int, j: int = 0) -> CohomologyTable:
    """``h^q(P^n, E(j))`` for ``q = 0..n``."""
    check_dim(n)
    h = [0] * (n + 1)
    for (p, k), mult in omega_summands(e, n).items():
        for q in range(n + 1):
            h[q] += mult * bott(n, p, k + j, q)
    return CohomologyTable(n, j, tuple(h))
