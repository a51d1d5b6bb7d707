from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st

from chernpn.bundles import (ChernCharacter, ChernData, character_to_chern, chern,
                             chern_character, dual_chern, quot_chern, rank,
                             twist_chern, wedge2_character, wedge_character,
                             whitney_sum)
from chernpn.chowring import MAX_DIM, ChowClass, exp_series
from chernpn.errors import (AmbientMismatch, InvalidAtDimension, NonIntegralChern,
                            RankTooSmall, RankViolation, UnsupportedOperation)
from chernpn.expr import parse

from oracles import ch_oracle, twist_oracle


def cd(n, r, *classes):
    return ChernData.from_classes(n, r, classes)


# -- rank ------------------------------------------------------------------------

@pytest.mark.parametrize("text, n, r", [
    ("T", 4, 4),
    ("Omega^2(2)*", 4, 6),
    ("quot(Triv(7), T(-2))", 4, 3),
    ("O(1)+T(-1)+Triv(3)", 3, 7),
    ("wedge2(T)", 5, 10),
    ("Omega^3", 5, 10),
])
def test_rank(text, n, r):
    assert rank(text, n) == r


def test_rank_errors():
    with pytest.raises(InvalidAtDimension):
        rank("Omega^2", 1)
    with pytest.raises(RankViolation):
        rank("quot(O(1), T)", 3)


# -- chern on expressions ----------------------------------------------------------

@pytest.mark.parametrize("text, n, r, poly", [
    ("O(2)+O(1)", 2, 2, (1, 3, 2)),
    ("O(2)+O(1)", 5, 2, (1, 3, 2)),
    ("Omega(2)", 4, 4, (1, 3, 4, 2, 1)),
    ("Omega^2(2)*", 4, 6, (1, 3, 5, 5, 0)),
    ("O(1)+Omega(2)", 3, 4, (1, 3, 4, 2)),
    ("quot(Triv(7), T(-2))", 4, 3, (1, 3, 5, 5, 0)),
    ("quot(Triv(4), O(-3))", 3, 3, (1, 3, 9, 27)),
    ("quot(Triv(5), O(-2)+O(-1))", 3, 3, (1, 3, 7, 15)),
    ("quot(Triv(7), O(-2)+Omega(1))", 3, 3, (1, 3, 6, 12)),
    ("T", 2, 2, (1, 3, 3)),
])
def test_chern_examples(text, n, r, poly):
    c = chern(text, n)
    assert c.rank == r
    assert c.total == ChowClass(n, poly)


def test_chern_c2_values():
    assert chern("O(1)+O(1)+T(-1)", 2).c2 == 4
    assert chern("O(1)+O(1)+T(-1)", 5).c2 == 4
    assert chern("Omega^2(2)*", 4).c(4) == 0


def test_chern_accepts_ast():
    assert chern(parse("O(3)"), 3) == chern("O(3)", 3)


def test_chern_data_validation():
    with pytest.raises(RankViolation):
        cd(3, 1, 3, 9)
    with pytest.raises(NonIntegralChern):
        ChernData(2, 2, ChowClass(2, (1, Fraction(1, 2))))
    with pytest.raises(NonIntegralChern):
        ChernData(2, 2, ChowClass(2, (2, 1)))
    with pytest.raises(AmbientMismatch):
        ChernData(3, 2, ChowClass(2, (1, 1)))
    with pytest.raises(InvalidAtDimension):
        chern("Omega^3", 2)


# -- Omega^p reduction chain against independent presentations ----------------------

@pytest.mark.parametrize("n", range(1, MAX_DIM + 1))
def test_euler_sequence_presentation(n):
    # T(-1) = O^{n+1}/O(-1) and Omega(1) = ker(O^{n+1} -> O(1))
    assert chern("T(-1)", n) == chern(f"quot(Triv({n + 1}), O(-1))", n)
    assert chern("Omega(1)", n).total == chern(f"quot(Triv({n + 1}), O(1))", n).total
    assert chern("Omega(1)", n) == chern("T(-1)*", n)
    assert chern("Omega", n) == chern("T*", n)
    assert chern(f"Omega^{n}", n).total == ChowClass.linear(n, -n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_cotangent_duality_iso(n):
    for p in range(1, n):
        assert chern(f"Omega^{p}*", n) == chern(f"Omega^{n - p}({n + 1})", n)


@pytest.mark.parametrize("n", range(2, 6))
def test_omega2_is_wedge2_of_omega(n):
    assert chern("Omega^2", n) == chern("wedge2(Omega)", n)


@pytest.mark.parametrize("n", range(2, 6))
def test_omega2_dual_twist_matches_wedge2(n):
    # Omega^2(2)^* = wedge2(T)(-2) = wedge2(T(-1))
    a = chern("Omega^2(2)*", n)
    assert a == chern("wedge2(T)(-2)", n) == chern("wedge2(T(-1))", n)


def test_remark_diagram_on_p4():
    assert chern("Omega^2(2)*", 4) == chern("quot(Triv(10), T(-2))", 4)
    tango = chern("quot(Triv(7), T(-2))", 4)
    assert tango.total == chern("Omega^2(2)*", 4).total
    assert tango.rank == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_omega2_dual_equals_t_minus_2(n):
    assert chern("Omega(2)*", n) == chern("T(-2)", n)


# -- characters --------------------------------------------------------------------

def test_ch_line_bundle():
    assert chern_character("O(1)", 2).value == ChowClass(2, (1, 1, Fraction(1, 2)))


def test_ch_tangent_p2_via_euler_sequence():
    ch = chern_character("T", 2).value
    assert ch == ChowClass(2, (2, 3, Fraction(3, 2)))
    assert ch == 3 * exp_series(2, 1) - 1


def test_ch3_formula():
    for c3 in range(-3, 4):
        ch = chern_character(cd(3, 3, 3, 3, c3))
        assert ch[3] == Fraction(27 - 27 + 3 * c3, 6) == Fraction(c3, 2)


def test_character_to_chern():
    ch = ChernCharacter(2, ChowClass(2, (2, 3, Fraction(3, 2))))
    assert character_to_chern(ch) == cd(2, 2, 3, 3)
    with pytest.raises(NonIntegralChern):
        character_to_chern(ChernCharacter(2, ChowClass(2, (2, 1, Fraction(1, 3)))))
    with pytest.raises(RankViolation):
        ChernCharacter(2, ChowClass(2, (Fraction(1, 2),)))


@pytest.mark.parametrize("n", range(1, 7))
def test_ch_of_split_bundle_is_sum_of_exponentials(n):
    twists = [3, -1, 2, 0, -4][: n]
    text = "+".join(f"O({a})" for a in twists)
    expected = sum((exp_series(n, a) for a in twists), ChowClass.zero(n))
    assert chern_character(text, n).value == expected


def test_wedge2_examples():
    ch = chern_character("T(-2)", 4)
    w = wedge2_character(ch)
    assert w.rank == 6
    # wedge2 of the twist is wedge2(T)(-4); untwisting by +2 lands on O^10/T(-2)
    c = character_to_chern(ChernCharacter(4, w.value * exp_series(4, 2)))
    assert c.total == chern("T(-2)", 4).total.invert()
    assert c.total == ChowClass(4, (1, 3, 5, 5, 0))


def test_wedge2_of_rank2_is_determinant():
    ch = chern_character("O(2)+O(-5)", 3)
    assert wedge2_character(ch).value == exp_series(3, -3)
    assert chern("wedge2(O(1)+O(2))", 3) == chern("O(3)", 3)


def test_wedge2_of_trivial():
    assert chern("wedge2(Triv(5))", 3) == ChernData.trivial(3, 10)


def test_wedge_errors():
    with pytest.raises(RankTooSmall):
        wedge2_character(chern_character("O(1)", 2))
    with pytest.raises(UnsupportedOperation):
        wedge_character(chern_character("T", 3), 3)
    assert wedge_character(chern_character("T", 3), 1) == chern_character("T", 3)


# -- twist / dual / quot -----------------------------------------------------------

def test_twist_rank2_minus_one():
    for c2 in range(-5, 10):
        assert twist_chern(cd(2, 2, 3, c2), -1) == cd(2, 2, 1, c2 - 2)


def test_twist_tangent_p4():
    assert twist_chern(cd(4, 4, 5, 10, 10, 5), -2).classes == (-3, 4, -2, 1)
    assert twist_oracle(4, [5, 10, 10, 5], -2, 4) == [1, -3, 4, -2, 1]


def test_dual_examples():
    assert dual_chern(cd(4, 4, 3, 4, 2, 1)).classes == (-3, 4, -2, 1)
    assert dual_chern(ChernData.trivial(3, 4)) == ChernData.trivial(3, 4)


def test_quot_errors():
    with pytest.raises(RankViolation):
        quot_chern(ChernData.trivial(3, 1), chern("O(-1)", 3))
    with pytest.raises(RankViolation):
        quot_chern(ChernData.trivial(3, 2), chern("O(-3)", 3))
    with pytest.raises(AmbientMismatch):
        quot_chern(ChernData.trivial(3, 4), chern("O(-3)", 2))


def test_whitney_mismatch():
    with pytest.raises(AmbientMismatch):
        whitney_sum(chern("T", 2), chern("T", 3))


# -- properties --------------------------------------------------------------------

@st.composite
def chern_data(draw, min_rank_excess=0, n=None):
    n = draw(st.integers(1, MAX_DIM)) if n is None else n
    r = draw(st.integers(n + min_rank_excess, n + 5))
    cs = draw(st.lists(st.integers(-30, 30), min_size=n, max_size=n))
    return ChernData.from_classes(n, r, cs)


@settings(max_examples=150, deadline=None)
@given(chern_data())
def test_character_round_trip(c):
    ch = chern_character(c)
    assert list(ch.value.coeffs) == ch_oracle(c.rank, c.classes, c.n)
    assert character_to_chern(ch) == c


@settings(max_examples=150, deadline=None)
@given(chern_data(), st.integers(-6, 6), st.integers(-6, 6))
def test_twist_properties(c, a, b):
    assert twist_chern(twist_chern(c, a), b) == twist_chern(c, a + b)
    assert twist_chern(c, 0) == c
    assert list(twist_chern(c, a).total.int_coeffs()) == twist_oracle(c.rank, c.classes, a, c.n)
    # ch(E(a)) = ch(E) e^{ah}
    assert chern_character(twist_chern(c, a)).value == chern_character(c).value * exp_series(c.n, a)


@settings(max_examples=150, deadline=None)
@given(chern_data(), st.integers(-6, 6))
def test_dual_properties(c, t):
    assert dual_chern(dual_chern(c)) == c
    # (E(t))^* = E^*(-t)
    assert dual_chern(twist_chern(c, t)) == twist_chern(dual_chern(c), -t)


@st.composite
def pairs(draw):
    n = draw(st.integers(1, MAX_DIM))
    return draw(chern_data(n=n)), draw(chern_data(n=n))


@settings(max_examples=100, deadline=None)
@given(pairs())
def test_whitney_character_additive(ab):
    a, b = ab
    s = whitney_sum(a, b)
    assert chern_character(s).value == chern_character(a).value + chern_character(b).value


@settings(max_examples=100, deadline=None)
@given(chern_data(min_rank_excess=1))
def test_wedge2_vs_character_of_sum(c):
    # wedge2(E + O) = wedge2(E) + E
    ch = chern_character(c)
    lhs = wedge2_character(chern_character(whitney_sum(c, ChernData.trivial(c.n, 1))))
    assert lhs.value == wedge2_character(ch).value + ch.value


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("text", ["O(2)+T(-1)", "Omega(2)+O(1)", "T+Omega^2", "O(3)"])
def test_trivial_padding(text, n):
    base = chern(text, n)
    for r in (1, 4):
        padded = chern(f"{text}+Triv({r})", n)
        assert padded.total == base.total and padded.rank == base.rank + r
