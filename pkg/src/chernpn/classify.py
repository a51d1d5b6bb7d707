"""Globally generated bundles with c_1 = 3 on P^n as executable data.

The catalog has two families. ``low-*`` entries are the bundles with
``c_2 <= 4``; ``high-*`` entries are those with ``c_2 >= 5``, each obtained
from a ``low`` entry through the kernel of the evaluation map (see
:func:`chernpn.constraints.second_reduction`). Extensions by trivial bundles
are not listed: adding trivial summands never changes Chern data, and that
closure rule is checked rather than enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Optional

from .bundles import ChernData, chern, rank
from .chowring import check_dim
from .constraints import gg_necessary
from .errors import DomainError
from .expr import parse


def _const(text: str) -> Callable[[int], str]:
    return lambda n: text


@dataclass(frozen=True)
class ClassificationEntry:
    """One bundle in the classification.

    ``build(n)`` returns DSL text for the bundle on ``P^n``. Quotient entries
    use the smallest rank allowed at Chern level, ``k = n``.
    """

    id: str
    build: Callable[[int], str] = field(compare=False)
    expected_c2: int
    only_n: Optional[int] = None
    expected_poly: Optional[tuple] = None
    summands: Optional[tuple] = None
    printed_variant: Optional[str] = None

    def valid_at(self, n: int) -> bool:
        if self.only_n is not None:
            return n == self.only_n
        return n >= 2

    def expression(self, n: int) -> str:
        return self.build(n)

    def chern(self, n: int) -> ChernData:
        return chern(parse(self.build(n)), n)

    def rank(self, n: int) -> int:
        return rank(parse(self.build(n)), n)

    def dims_label(self) -> str:
        return f"n = {self.only_n}" if self.only_n else "n >= 2"


def _sum_entry(id, summands, c2, only_n=None, poly=None, printed=None):
    text = "+".join(summands)
    return ClassificationEntry(id, _const(text), c2, only_n, poly,
                               tuple(summands), printed)


_CATALOG = (
    _sum_entry("low-i", ["O(3)"], 0),
    _sum_entry("low-ii", ["O(2)", "O(1)"], 2),
    _sum_entry("low-iii", ["O(2)", "T(-1)"], 3),
    _sum_entry("low-iv", ["O(1)", "O(1)", "O(1)"], 3),
    _sum_entry("low-v", ["O(1)", "O(1)", "T(-1)"], 4),
    _sum_entry("low-vi", ["O(1)", "Omega(2)"], 4, only_n=3, poly=(1, 3, 4, 2),
               printed="Omega(1)+Omega(2)"),
    _sum_entry("low-vii", ["Omega(2)"], 4, only_n=4, poly=(1, 3, 4, 2, 1)),
    _sum_entry("high-i", ["Omega^2(2)*"], 5, only_n=4, poly=(1, 3, 5, 5, 0)),
    _sum_entry("high-ii", ["T(-1)", "Omega(2)"], 5, only_n=3),
    _sum_entry("high-iii", ["O(1)", "T(-1)", "T(-1)"], 5),
    _sum_entry("high-iv", ["T(-1)", "T(-1)", "T(-1)"], 6),
    ClassificationEntry("high-v", lambda n: f"quot(Triv({2 * n + 1}), O(-2)+Omega(1))", 6),
    ClassificationEntry("high-vi", lambda n: f"quot(Triv({n + 2}), O(-2)+O(-1))", 7),
    ClassificationEntry("high-vii", lambda n: f"quot(Triv({n + 1}), O(-3))", 9),
)

#: Extensions by trivial bundles of any listed entry; recorded, not enumerated.
CLOSURE_RULE = ("0 -> O^s -> G + O^r -> E -> 0 with G in the catalog; "
                "trivial summands and trivial sub-bundles leave c_t unchanged")


def catalog() -> list:
    return list(_CATALOG)


def get_entry(entry_id: str) -> ClassificationEntry:
    for e in _CATALOG:
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def lookup(c2: int, n: Optional[int] = None) -> list:
    """Catalog entries with the given ``c_2``, restricted to ``P^n`` if given."""
    return [e for e in _CATALOG
            if e.expected_c2 == c2 and (n is None or e.valid_at(n))]


# -- verification -------------------------------------------------------------

@dataclass(frozen=True)
class CheckRow:
    entry: str
    check: str
    status: str          # "pass", "fail", "skip" or "note"
    detail: str = ""
    value: Optional[int] = None


@dataclass(frozen=True)
class CatalogReport:
    n: int
    rows: tuple

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.rows)

    def computed_c2(self) -> dict:
        """Entry id -> computed ``c_2``, for the entries valid on this P^n."""
        out = {}
        for r in self.rows:
            if r.check == "c2":
                out[r.entry] = r.value
        return out


def _row(entry, check, ok, detail, value=None):
    return CheckRow(entry, check, "pass" if ok else "fail", detail, value)


def verify_catalog(n: int) -> CatalogReport:
    """Recompute the invariants of every catalog entry on ``P^n``."""
    check_dim(n)
    rows = []
    for e in _CATALOG:
        if not e.valid_at(n):
            rows.append(CheckRow(e.id, "dimension", "skip",
                                 f"only defined for {e.dims_label()}"))
            continue
        c = e.chern(n)
        rows.append(_row(e.id, "c1", c.c1 == 3, f"c_1 = {c.c1} (expected 3)"))
        rows.append(_row(e.id, "c2", c.c2 == e.expected_c2,
                         f"c_2 = {c.c2} (expected {e.expected_c2})", c.c2))
        if e.expected_poly is not None:
            got = c.total.int_coeffs()
            want = tuple(e.expected_poly) + (0,) * (n + 1 - len(e.expected_poly))
            rows.append(_row(e.id, "c_t", got == want,
                             f"c_t = {c.polynomial()}"))
        screen = gg_necessary(c)
        rows.append(_row(e.id, "gg_necessary", screen.passed,
                         "; ".join(w for _, w in screen.violations) or "all conditions hold"))
        if e.printed_variant is not None:
            alt = chern(e.printed_variant, n)
            rows.append(CheckRow(e.id, "printed-reading", "note",
                                 f"{e.printed_variant} has c_1 = {alt.c1}, c_2 = {alt.c2}; "
                                 f"encoded as {e.expression(n)}"))
    return CatalogReport(n, tuple(rows))


# -- candidate enumeration -----------------------------------------------------

@dataclass(frozen=True)
class _Atom:
    text: str
    kind: int
    twist: int
    only_n: Optional[int] = None

    def available(self, n: int) -> bool:
        return self.only_n is None or self.only_n == n


# canonical order: (kind, twist)
_ATOMS = (
    _Atom("O(1)", 0, 1),
    _Atom("O(2)", 0, 2),
    _Atom("O(3)", 0, 3),
    _Atom("T(-1)", 1, -1),
    _Atom("Omega(2)", 2, 2, only_n=3),
    _Atom("Omega(2)", 2, 2, only_n=4),
    _Atom("Omega^2(2)*", 3, 2, only_n=4),
)


@dataclass(frozen=True)
class Candidate:
    summands: tuple
    chern: ChernData

    @property
    def expression(self) -> str:
        return "+".join(self.summands)


def enumerate_candidates(n: int, c2_max: int) -> list:
    """Direct sums of the standard atoms with ``c_1 = 3`` and ``c_2 <= c2_max``.

    Output is sorted by ``c_2`` and then by the canonical atom order.
    """
    check_dim(n)
    if n < 2:
        raise DomainError("candidate enumeration needs n >= 2")
    atoms = sorted((a for a in _ATOMS if a.available(n)), key=lambda a: (a.kind, a.twist))
    c1 = {a.text: chern(a.text, n).c1 for a in atoms}
    found = []
    for size in (1, 2, 3):
        for combo in combinations_with_replacement(atoms, size):
            if sum(c1[a.text] for a in combo) != 3:
                continue
            texts = tuple(a.text for a in combo)
            c = chern("+".join(texts), n)
            if c.c2 <= c2_max:
                key = tuple((a.kind, a.twist) for a in combo)
                found.append((c.c2, key, Candidate(texts, c)))
    found.sort(key=lambda t: (t[0], t[1]))
    return [cand for _, _, cand in found]


# -- restriction to a line --------------------------------------------------------

def p1_splittings(k: int) -> list:
    """Splitting types ``a_1 >= ... >= a_k >= 0`` with sum 3, with their ``h^0``.

    ``h^0(O_{P^1}(a)) = a + 1`` for ``a >= 0``, so every type has
    ``h^0 = k + 3``.
    """
    if k < 1:
        raise DomainError(f"rank must be >= 1, got {k}")
    out = []

    def parts(remaining, largest, prefix):
        if remaining == 0:
            if len(prefix) <= k:
                out.append(tuple(prefix) + (0,) * (k - len(prefix)))
            return
        for a in range(min(remaining, largest), 0, -1):
            parts(remaining - a, a, prefix + [a])

    parts(3, 3, [])
    return [(t, sum(a + 1 for a in t)) for t in out]
