"""Necessary numerical conditions on Chern data of globally generated bundles."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bundles import ChernData, dual_chern
from .errors import AmbientMismatch, DomainError
from .riemannroch import hilbert_polynomial


@dataclass(frozen=True)
class SchwarzenbergerResult:
    """Outcome of the integrality test on ``chi(E(j))``.

    ``label`` names the condition as ``S_n^r`` for bookkeeping only; the test
    itself is purely extensional.
    """

    passed: bool
    label: str
    witness: Optional[int] = None
    value: Optional[Fraction] = None

    def __bool__(self):
        return self.passed


def schwarzenberger_check(c: ChernData, n: int | None = None) -> SchwarzenbergerResult:
    """Check that ``chi(E(j))`` is an integer for every integer ``j``.

    A polynomial of degree ``<= n`` is integer valued on all of Z as soon as
    it takes integer values at ``n + 1`` consecutive integers (its finite
    difference expansion then has integer coefficients), so ``j = 0..n``
    suffices. On failure the smallest bad ``j`` in that window is reported.
    """
    P = hilbert_polynomial(c, n)
    label = f"S_{c.n}^{c.rank}"
    for j in range(c.n + 1):
        v = P(j)
        if v.denominator != 1:
            return SchwarzenbergerResult(False, label, j, v)
    return SchwarzenbergerResult(True, label)


@dataclass(frozen=True)
class ScreenReport:
    violations: tuple = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed


def gg_necessary(c: ChernData, n: int | None = None) -> ScreenReport:
    """Screen Chern data against conditions every globally generated bundle meets.

    All failing conditions are reported, in a fixed order: effectivity of each
    ``c_i``, then ``c_1^2 - c_2 >= 0``, then integrality of the Hilbert
    polynomial.
    """
    out = []
    for i, ci in enumerate(c.classes, start=1):
        if ci < 0:
            out.append(("effective", f"c_{i} = {ci} < 0"))
    if c.n >= 2:
        d = c.c1 ** 2 - c.c2
        if d < 0:
            out.append(("c1^2-c2>=0", f"c_1^2 - c_2 = {d}"))
    s = schwarzenberger_check(c, n)
    if not s:
        out.append(("schwarzenberger",
                    f"{s.label}: chi(E({s.witness})) = {s.value} is not an integer"))
    return ScreenReport(tuple(out))


def second_reduction(c: ChernData, h0: int, n: int | None = None) -> ChernData:
    """Chern data of ``K^*`` where ``0 -> K -> O^{h0} -> E -> 0``.

    ``c(K) = 1/c(E)``, so ``c(K^*)`` has the same ``c_1`` and
    ``c_2(K^*) = c_1^2 - c_2``.
    """
    if n is not None and n != c.n:
        raise AmbientMismatch(f"Chern data on P^{c.n}, requested P^{n}")
    if h0 <= c.rank:
        raise DomainError(f"h0 = {h0} must exceed the rank {c.rank}")
    kernel = ChernData(c.n, h0 - c.rank, c.total.invert())
    k_dual = dual_chern(kernel)
    assert k_dual.c1 == c.c1
    assert c.n < 2 or k_dual.c2 == c.c1 ** 2 - c.c2
    return k_dual


def second_reduction_pair(c1: int, c2: int) -> tuple:
    """``(c1, c2) -> (c1, c1^2 - c2)``."""
    return c1, c1 * c1 - c2
