"""Regression ledger of the numerical facts behind the c_1 = 3 classification.

Each :class:`ClaimRecord` pairs a computation with an expected value. The
expected values are the only place where published numbers are written down;
the computations go through the general machinery (Chern calculus, HRR,
Bott) and never read them back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .bundles import (ChernCharacter, ChernData, character_to_chern, chern,
                      chern_character, twist_chern, wedge2_character)
from .chowring import exp_series
from .classify import catalog, p1_splittings
from .cohomology import cohomology_table
from .constraints import (gg_necessary, schwarzenberger_check, second_reduction,
                          second_reduction_pair)
from .riemannroch import euler_char, euler_char_p2, euler_char_p3

STATED, DERIVED, ELEMENTARY = "stated", "derived", "elementary"


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    statement: str
    compute: Callable[[], Any] = field(compare=False, repr=False)
    expected: Any
    basis: str


@dataclass(frozen=True)
class ClaimResult:
    id: str
    statement: str
    basis: str
    passed: bool
    computed: Any
    expected: Any
    error: str = ""


def _cd(n, rank, classes):
    return ChernData.from_classes(n, rank, classes)


# -- computations ---------------------------------------------------------------

def _p3_chi(c2):
    # chi for c = (3, c2, c3), rank k, both through ch*td and the P^3 closed form
    out = []
    for k in (3, 4, 7):
        for c3 in range(-3, 4):
            out.append((k, c3, euler_char(_cd(3, k, [3, c2, c3])),
                        euler_char_p3(k, 3, c2, c3)))
    return out


def _p3_chi_c2_3():
    return all(g == s == k + 8 + Fraction(c3 + 1, 2) for k, c3, g, s in _p3_chi(3))


def _p3_chi_c2_4():
    return all(g == s == k + 5 + Fraction(c3, 2) for k, c3, g, s in _p3_chi(4))


def _p3_parity():
    return tuple(euler_char(_cd(3, 3, [3, 3, c3])).denominator == 1
                 for c3 in (-1, 0, 1, 2, 3))


def _p3_odd_c3_forced():
    # c3 <= 1 from the cohomology bound and c3 odd leaves c3 = 1 among c3 in {-3..1}
    odd = [c3 for c3 in range(-3, 2) if schwarzenberger_check(_cd(3, 3, [3, 3, c3]))]
    return odd[-1], chern("O(1)+O(1)+O(1)", 3).classes


def _twist_identity():
    out = []
    for c2 in range(0, 5):
        q = twist_chern(_cd(2, 2, [3, c2]), -1)
        out.append((q.c1, q.c2 - c2))
    return set(out)


def _twist_bound():
    return max(twist_chern(_cd(2, 2, [3, c2]), -1).c2 for c2 in range(0, 5))


def _quotient_p3():
    return chern("quot(O(1)+Omega(2), Triv(1))", 3).total.int_coeffs()


def _c3_of_o1_omega2():
    return chern("O(1)+Omega(2)", 3).c(3)


def _s43():
    r = schwarzenberger_check(_cd(4, 3, [3, 4, 2]))
    return r.passed, r.label


def _s54():
    g = chern("Omega(2)+Triv(3)", 4).classes
    r = schwarzenberger_check(_cd(5, 4, list(g)))
    return g, r.passed, r.label


def _p2_endgame():
    # K = kernel of O^{h0} -> E on P^2, E with c = (3, x), rank k
    out = []
    for x in range(0, 5):
        for k in (2, 3, 5):
            e = _cd(2, k, [3, x])
            for h0 in range(k + 2, k + 10):
                K = ChernData(2, h0 - k, e.total.invert())
                chi = euler_char(K)
                closed = euler_char_p2(K.rank, K.c1, K.c2)
                out.append(chi == closed == -K.c2 + h0 - k and K.c1 == -3
                           and K.c2 == 9 - x and second_reduction(e, h0).c2 == 9 - x)
    return all(out)


def _p2_lower_bound():
    # h^2(K) = -c2(K) + h0 - k >= 0 with c2(K) = 9 - c2 >= 5 forces h0 >= k + 5
    return min(9 - x for x in range(0, 5))


def _p1_bound():
    return all(h0 == k + 3 for k in range(1, 7) for _, h0 in p1_splittings(k))


def _gg_inequality():
    return all(e.chern(n).c1 ** 2 - e.chern(n).c2 >= 0
               for e in catalog() for n in range(2, 6) if e.valid_at(n))


def _lemma2_pairing():
    return {c2: second_reduction_pair(3, c2)[1] for c2 in (0, 2, 3, 4)}


def _lemma2_on_catalog():
    # h0 from Bott for direct sums; the image c2 must be a high-family c2
    low = [e for e in catalog() if e.id.startswith("low") and e.summands]
    high_c2 = {e.expected_c2 for e in catalog() if e.id.startswith("high")}
    out = {}
    for e in low:
        n = e.only_n or 3
        c = e.chern(n)
        h0 = cohomology_table(e.expression(n), n)[0]
        k = second_reduction(c, h0)
        out[e.id] = (k.c1, k.c2, k.c2 in high_c2)
    return out


def _involution():
    return all(second_reduction_pair(*second_reduction_pair(c1, c2)) == (c1, c2)
               for c1 in range(-6, 7) for c2 in range(-40, 41))


def _wedge2_route():
    ch = chern_character(chern("T", 4))
    lam = wedge2_character(ch)
    # ch(F(-2)) = ch(F) e^{-2h}
    c = character_to_chern(ChernCharacter(4, lam.value * exp_series(4, -2)))
    return c.total.int_coeffs()


def _inverse_of_t_minus_2():
    return chern("T(-2)", 4).total.invert().int_coeffs()


def _tango():
    c = chern("quot(Triv(7), T(-2))", 4)
    return c.rank, c.total.int_coeffs()


def _cn_zero_unique():
    n = 4
    zero = sorted(e.id for e in catalog()
                  if e.valid_at(n) and e.rank(n) >= n and e.chern(n).c(n) == 0)
    return zero


def _small_rank_split():
    n = 4
    small = [e for e in catalog() if e.valid_at(n) and e.rank(n) < n]
    return all(e.summands and all(s.startswith("O(") for s in e.summands) for e in small)


def _omega2_dual_iso():
    return chern("Omega^2(2)*", 4) == chern("wedge2(T(-1))", 4)


def _printed_reading():
    c = chern("Omega(1)+Omega(2)", 3)
    return c.c1


def _trivial_padding():
    return all(chern(e.expression(n) + "+Triv(5)", n).total == e.chern(n).total
               for e in catalog() for n in range(2, 6) if e.valid_at(n))


def _catalog_screen():
    return all(gg_necessary(e.chern(n)).passed
               for e in catalog() for n in range(2, 6) if e.valid_at(n))


def _vanish(expr_for, n_range, twists, qs):
    for n in n_range:
        for j in twists:
            t = cohomology_table(expr_for(n), n, j)
            if any(t[q] for q in qs):
                return False
    return True


def _v_restriction_dual():
    # h^1(E_H^*(1)) = 0 for E_H = O(2)+O(1)+O^m and O(2)+T(-1)+O^m on H
    return all(cohomology_table(f"({s}+Triv(2))*", m, 1)[1] == 0
               for s in ("O(2)+O(1)", "O(2)+T(-1)") for m in range(2, 8))


def _v_omega2_dual():
    # h^i(E_H^*(-j)) = 0, i in {0, 1}, j >= 1, E_H = Omega_{P^4}(2)
    return _vanish(lambda n: "Omega(2)*", [4], range(-1, -11, -1), (0, 1))


def _v_split_restrictions():
    # h^i(G(-j)) = 0 for i in {0, 1}, j >= 2, G = O(1)^3 or O(1)^2+T(-1), dim H >= 3
    return all(_vanish(lambda n, s=s: s, range(3, 8), range(-2, -12, -1), (0, 1))
               for s in ("O(1)+O(1)+O(1)", "O(1)+O(1)+T(-1)"))


def _v_g_dual_p3():
    # h^i(G^*(-j)) = 0 for i in {0, 1}, j >= 1, G = O(1)+Omega(2) on P^3
    return _vanish(lambda n: "(O(1)+Omega(2))*", [3], range(-1, -11, -1), (0, 1))


def _h1_restriction():
    # h^1(E_H(-2)) for E_H = O(1)+Omega(2) on P^3
    return cohomology_table("O(1)+Omega(2)", 3, -2)[1]


def _v_lemma3_cases():
    # h^{m-1}(F_H(-m-1)) on H = P^m for F_H(1) = O(2)+O^a, O(1)^2+O^a, T(-1)+O(1)+O^a
    cases = ("O(1)+O(-1)+O(-1)", "Triv(2)+O(-1)", "T(-2)+Triv(1)+O(-1)")
    for m in range(2, 8):
        for s in cases:
            if cohomology_table(s, m, -m - 1)[m - 1]:
                return False
    return True


def _bott_hrr_catalog():
    ok = True
    for e in catalog():
        if not e.summands:
            continue
        for n in range(2, 6):
            if not e.valid_at(n):
                continue
            for j in range(-6, 7):
                t = cohomology_table(e.expression(n), n, j)
                ok &= t.euler == euler_char(twist_chern(e.chern(n), j))
    return ok


# -- ledger ------------------------------------------------------------------------

CLAIMS = (
    ClaimRecord("p3-chi-c2-3", "n=3, c=(3,3,c3): chi(E) = k + 8 + (c3+1)/2",
                _p3_chi_c2_3, True, STATED),
    ClaimRecord("p3-c3-parity", "n=3, c1=c2=3: chi integral for c3 in {-1,1,3}, not for {0,2}",
                _p3_parity, (True, False, True, False, True), STATED),
    ClaimRecord("p3-c3-forced", "c3 <= 1 and c3 odd give c3 = 1, the c_t of O(1)^3",
                _p3_odd_c3_forced, (1, (3, 3, 1)), STATED),
    ClaimRecord("rank2-twist", "rank 2, c1 = 3: c2(Q(-1)) = 1 - c1 + c2 = c2 - 2",
                _twist_identity, {(1, -2)}, STATED),
    ClaimRecord("rank2-twist-bound", "c2(Q) <= 4 gives c2(Q(-1)) <= 2",
                _twist_bound, 2, STATED),
    ClaimRecord("p3-chi-c2-4", "n=3, c=(3,4,c3): h0 - h1 = chi(E) = k + 5 + c3/2",
                _p3_chi_c2_4, True, STATED),
    ClaimRecord("p3-c3-nonzero", "c3(O(1)+Omega_{P^3}(2)) != 0",
                _c3_of_o1_omega2, 2, DERIVED),
    ClaimRecord("p3-quotient-ct", "c_t of O(1)+Omega_{P^3}(2) modulo O = 1+3t+4t^2+2t^3",
                _quotient_p3, (1, 3, 4, 2), STATED),
    ClaimRecord("s43-failure", "rank 3 on P^4 with c_t = 1+3t+4t^2+2t^3 violates (S_4^3)",
                _s43, (False, "S_4^3"), STATED),
    ClaimRecord("s54-failure", "rank 4 on P^5 with c_t = 1+3t+4t^2+2t^3+t^4 violates (S_5^4)",
                _s54, ((3, 4, 2, 1), False, "S_5^4"), STATED),
    ClaimRecord("p2-kernel-chi", "P^2: chi(K) = (c1^2 - 2c2 + 3c1)/2 + rk = -c2(K) + h0 - k",
                _p2_endgame, True, STATED),
    ClaimRecord("p2-kernel-c2", "c2(K) = 9 - c2 >= 5 when c2 <= 4",
                _p2_lower_bound, 5, STATED),
    ClaimRecord("p1-bound", "h0(E restricted to a line) = k + 3 for k = 1..6",
                _p1_bound, True, STATED),
    ClaimRecord("gg-inequality", "c1^2 - c2 >= 0 for every catalog entry",
                _gg_inequality, True, STATED),
    ClaimRecord("catalog-screen", "every catalog entry passes the necessary screen",
                _catalog_screen, True, ELEMENTARY),
    ClaimRecord("trivial-padding", "adding trivial summands leaves c_t unchanged",
                _trivial_padding, True, ELEMENTARY),
    ClaimRecord("kernel-pairing", "(c1, c2) -> (c1, c1^2 - c2) sends {0,2,3,4} to {9,7,6,5}",
                _lemma2_pairing, {0: 9, 2: 7, 3: 6, 4: 5}, STATED),
    ClaimRecord("kernel-on-catalog", "K* of each low direct sum (h0 from Bott) has a high c2",
                _lemma2_on_catalog,
                {"low-i": (3, 9, True), "low-ii": (3, 7, True), "low-iii": (3, 6, True),
                 "low-iv": (3, 6, True), "low-v": (3, 5, True), "low-vi": (3, 5, True),
                 "low-vii": (3, 5, True)}, DERIVED),
    ClaimRecord("kernel-involution", "(c1, c2) -> (c1, c1^2 - c2) is an involution",
                _involution, True, ELEMENTARY),
    ClaimRecord("wedge2-adams", "c(wedge2 T_{P^4} (-2)) via Adams operations = 1+3h+5h^2+5h^3",
                _wedge2_route, (1, 3, 5, 5, 0), STATED),
    ClaimRecord("wedge2-inverse", "1/c(T_{P^4}(-2)) = 1+3h+5h^2+5h^3, c4 = 0",
                _inverse_of_t_minus_2, (1, 3, 5, 5, 0), DERIVED),
    ClaimRecord("omega2-dual-iso", "c(Omega^2_{P^4}(2)^*) = c(wedge2 T_{P^4}(-2))",
                _omega2_dual_iso, True, STATED),
    ClaimRecord("tango", "O^7 / T_{P^4}(-2) has rank 3 and c_t = 1+3t+5t^2+5t^3",
                _tango, (3, (1, 3, 5, 5, 0)), STATED),
    ClaimRecord("cn-zero-unique", "on P^4 with k >= n, c4 = 0 only for Omega^2(2)^*",
                _cn_zero_unique, ["high-i"], STATED),
    ClaimRecord("small-rank-split", "on P^4 every catalog entry of rank < 4 splits",
                _small_rank_split, True, STATED),
    ClaimRecord("printed-reading", "Omega_{P^3}(1)+Omega_{P^3}(2) has c1 = 1, not 3",
                _printed_reading, 1, DERIVED),
    ClaimRecord("vanish-dual-restriction", "h1(E_H^*(1)) = 0 for the split restrictions",
                _v_restriction_dual, True, STATED),
    ClaimRecord("vanish-omega2-dual", "h^i(Omega_{P^4}(2)^*(-j)) = 0, i in {0,1}, j >= 1",
                _v_omega2_dual, True, STATED),
    ClaimRecord("vanish-split-restrictions", "h^i(G(-j)) = 0, i in {0,1}, j >= 2",
                _v_split_restrictions, True, STATED),
    ClaimRecord("vanish-p3-dual", "h^i((O(1)+Omega_{P^3}(2))^*(-j)) = 0, i in {0,1}, j >= 1",
                _v_g_dual_p3, True, STATED),
    ClaimRecord("h1-restriction", "h1((O(1)+Omega_{P^3}(2))(-2)) = 1",
                _h1_restriction, 1, STATED),
    ClaimRecord("vanish-sub-bundles", "h^{m-1}(F_H(-m-1)) = 0 for the split F_H",
                _v_lemma3_cases, True, STATED),
    ClaimRecord("bott-vs-hrr", "alternating Bott sums equal chi on direct-sum entries",
                _bott_hrr_catalog, True, DERIVED),
)


def run_claim(claim: ClaimRecord) -> ClaimResult:
    try:
        got = claim.compute()
    except Exception as exc:  # a crashing claim is a failed claim
        return ClaimResult(claim.id, claim.statement, claim.basis, False,
                           None, claim.expected, f"{type(exc).__name__}: {exc}")
    return ClaimResult(claim.id, claim.statement, claim.basis,
                       got == claim.expected, got, claim.expected)


def verify_claims(claims=CLAIMS) -> list:
    """Run every claim and return the results in ledger order."""
    return [run_claim(c) for c in claims]


verify_paper_claims = verify_claims
