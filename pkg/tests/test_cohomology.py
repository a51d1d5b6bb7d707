from math import comb

import pytest

from chernpn.bundles import chern
from chernpn.cohomology import bott, cohomology_table, omega_summands, serre_duality_check
from chernpn.errors import DomainError, InvalidAtDimension, UnsupportedExpression
from chernpn.riemannroch import euler_char

from oracles import count_monomials


def test_bott_examples():
    assert bott(3, 1, 2, 0) == 6
    assert bott(3, 0, -4, 3) == 1
    for n in range(1, 6):
        for p in range(n + 1):
            assert bott(n, p, 0, p) == 1


def test_bott_domain():
    with pytest.raises(DomainError):
        bott(3, 4, 0, 0)
    with pytest.raises(DomainError):
        bott(3, 1, 0, -1)
    with pytest.raises(DomainError):
        bott(9, 1, 0, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_line_bundles_against_monomial_count(n):
    for k in range(-12, 12):
        assert bott(n, 0, k, 0) == count_monomials(n, k)
        # h^n(O(k)) = h^0(O(-k-n-1))
        assert bott(n, 0, k, n) == count_monomials(n, -k - n - 1)
        assert all(bott(n, 0, k, q) == 0 for q in range(1, n))


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_sections_from_euler_sequence(n):
    # 0 -> Omega(k) -> O(k-1)^{n+1} -> O(k) -> 0 is exact on H^0 for k >= 1
    for k in range(1, 10):
        expected = (n + 1) * count_monomials(n, k - 1) - count_monomials(n, k)
        assert bott(n, 1, k, 0) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_boundary_twists_vanish(n):
    for p in range(1, n):
        # k = p and k = p - n are the branch edges
        assert bott(n, p, p, 0) == 0
        assert bott(n, p, p - n, n) == 0


def test_tables():
    t = cohomology_table("O(1)+Omega(2)", 3)
    assert t.entries == (10, 0, 0, 0)
    t = cohomology_table("Omega(2)*", 4, -1)
    assert t[0] == t[1] == 0
    assert t.entries == cohomology_table("T(-3)", 4).entries
    assert cohomology_table("T", 2).entries == (8, 0, 0)
    assert cohomology_table("Omega", 3).entries == (0, 1, 0, 0)
    assert cohomology_table("Triv(4)", 2).entries == (4, 0, 0)


def test_table_additive():
    a = cohomology_table("O(2)+T(-1)", 3, 1)
    b = cohomology_table("O(2)", 3, 1)
    c = cohomology_table("T(-1)", 3, 1)
    assert a.entries == tuple(x + y for x, y in zip(b.entries, c.entries))


def test_unsupported():
    with pytest.raises(UnsupportedExpression):
        cohomology_table("quot(Triv(7), T(-2))", 4)
    with pytest.raises(UnsupportedExpression):
        cohomology_table("wedge2(T)", 4)
    with pytest.raises(InvalidAtDimension):
        cohomology_table("Omega^4", 3)


def test_omega_summands_normalizes_top_forms():
    assert omega_summands("T*", 1) == omega_summands("O(-2)", 1)
    assert omega_summands("Omega^3(5)", 3) == omega_summands("O(1)", 3)


def test_serre_example():
    assert serre_duality_check(3, 1, 2, 0)
    assert bott(3, 1, 2, 0) == bott(3, 2, -2, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_serre_duality_sweep(n):
    for p in range(n + 1):
        for k in range(-10, 11):
            for q in range(n + 1):
                assert serre_duality_check(n, p, k, q), (n, p, k, q)


@pytest.mark.parametrize("n", range(1, 6))
def test_single_atom_has_at_most_one_nonzero(n):
    for p in range(n + 1):
        for k in range(-10, 11):
            assert sum(bott(n, p, k, q) != 0 for q in range(n + 1)) <= 1


SWEEP = ["O(3)", "T", "Omega", "Omega(2)", "T(-1)", "O(2)+T(-1)", "Omega^2(2)*",
         "O(1)+Omega(2)", "T*(1)", "Omega^2+T(-2)", "Triv(3)+O(-4)", "Omega(2)*"]


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("text", SWEEP)
def test_bott_matches_hrr(text, n):
    c = chern(text, n)
    for j in range(-4, 5):
        t = cohomology_table(text, n, j)
        assert t.euler == euler_char(chern(f"({text})({j})", n)), j
    assert c.rank == sum(m * comb(n, p)
                         for (p, _), m in omega_summands(text, n).items())
