from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from zetarpa.errors import DegenerateTable, InsufficientCoefficients, ZeroDeterminant
from zetarpa.exact import factorial
from zetarpa.pade import (
    MomentFunctional,
    PadeApprox,
    associated_poly,
    orth_poly_determinant,
    pade,
    pade_shifted,
    same_ratfunc,
    verify_contact,
)
from zetarpa.poly import Poly
from zetarpa.psi import psi_series
from zetarpa.s2 import p_m_s2, raw_moment_s2, s2_functional

GEOMETRIC = [Fraction(1)] * 12
EXP = [Fraction(1, factorial(k)) for k in range(12)]


def test_geometric_0_1():
    pa = pade(GEOMETRIC, 0, 1)
    assert pa.num == Poly([Fraction(1)])
    assert pa.den == Poly([Fraction(1), Fraction(-1)])
    assert verify_contact(GEOMETRIC, pa) == len(GEOMETRIC)


def test_exp_1_1_hand_oracle():
    # solving q1 c2 = -c3-free 2x2 system by hand gives (1 + t/2)/(1 - t/2)
    pa = pade(EXP, 1, 1)
    assert pa.num == Poly([Fraction(1), Fraction(1, 2)])
    assert pa.den == Poly([Fraction(1), Fraction(-1, 2)])
    assert verify_contact(EXP, pa) >= 3


def test_psi_2_1_value_at_one():
    # [2/1] of the symbolic kernel at t = 1 is (s+2)(s+3)/(12(s-1))
    from zetarpa.ratfunc import RatFunc

    S = RatFunc.s()
    series = psi_series(4)
    pa = pade(series, 2, 1)
    value = pa.num(Fraction(1)) / pa.den(Fraction(1))
    assert value == (S + 2) * (S + 3) / (12 * (S - 1))


def test_insufficient_coefficients():
    with pytest.raises(InsufficientCoefficients):
        pade([Fraction(1), Fraction(1)], 2, 1)


def test_degenerate_entry_raises():
    # the kernel series has c_3 = 0 identically, so [3/1] is non-normal
    series = psi_series(5, Fraction(7, 3))
    with pytest.raises(DegenerateTable):
        pade(series, 3, 1)


def test_den_normalized_at_zero():
    for (m1, m2) in [(2, 1), (3, 2), (1, 3)]:
        pa = pade(EXP, m1, m2)
        assert pa.den[0] == 1
        assert verify_contact(EXP, pa) >= m1 + m2 + 1


def test_contact_on_kernel_series():
    for s in (Fraction(2), Fraction(5, 2)):
        series = psi_series(22, s)
        for (m1, m2) in [(2, 1), (5, 4), (8, 7), (10, 9), (11, 8), (10, 10)]:
            pa = pade(series, m1, m2)
            assert verify_contact(series, pa) >= m1 + m2 + 1


def test_kernel_degeneracy_pattern():
    # vanishing odd coefficients make exactly the both-odd entries with
    # m1 > m2 non-normal; their neighbors stay normal
    series = psi_series(14, Fraction(2))
    for (m1, m2) in [(3, 1), (5, 3), (7, 5)]:
        with pytest.raises(DegenerateTable):
            pade(series, m1, m2)
    for (m1, m2) in [(4, 1), (5, 2), (6, 3), (7, 4)]:
        pade(series, m1, m2)


def test_contact_detects_injected_fault():
    pa = pade(EXP, 2, 2)
    broken = PadeApprox(pa.num + Poly([0, Fraction(1)]), pa.den, 2, 2, pa.contact_order)
    assert verify_contact(EXP, broken) == 1


@given(st.lists(
    st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=5),
    min_size=8, max_size=8,
))
def test_contact_property_random_series(coeffs):
    assume(coeffs[0] != 0)
    try:
        pa = pade(coeffs, 3, 2)
    except DegenerateTable:
        assume(False)
    assert verify_contact(coeffs, pa) >= 6


def test_shift_route_geometric():
    pa = pade_shifted(GEOMETRIC, 1, 1)
    direct = pade(GEOMETRIC, 2, 1)
    assert same_ratfunc(pa, direct)


def test_shift_route_exp():
    assert same_ratfunc(pade_shifted(EXP, 2, 1), pade(EXP, 3, 2))


def test_shift_route_kernel():
    series = psi_series(9, Fraction(2))
    assert same_ratfunc(pade_shifted(series, 3, 1), pade(series, 4, 3))


@given(st.lists(
    st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4),
    min_size=8, max_size=8,
), st.integers(min_value=1, max_value=2))
def test_shift_route_equivalence_random(coeffs, p):
    assume(coeffs[0] != 0)
    m2 = 2
    try:
        via_shift = pade_shifted(coeffs, m2, p)
        direct = pade(coeffs, m2 + p, m2)
    except DegenerateTable:
        assume(False)
    assert same_ratfunc(via_shift, direct)


def test_denominator_orthogonality():
    # for [M-1/M] of the moment series, the reversed denominator is the
    # orthogonal polynomial of the underlying functional
    moments = [raw_moment_s2(j) for j in range(14)]
    fun = MomentFunctional.from_series(moments)
    for M in (1, 2, 3, 4, 5, 6):
        pa = pade(moments, M - 1, M)
        p_rev = pa.den.reverse(M)
        for i in range(M):
            xi = Poly([Fraction(0)] * i + [Fraction(1)])
            assert fun.apply(xi * p_rev) == 0, (M, i)


def test_determinant_route_examples():
    fun = s2_functional()
    mono = [Poly([Fraction(0)] * j + [Fraction(1)]) for j in range(9)]
    assert orth_poly_determinant(fun, mono, 0, ("leading", 1)) == Poly([Fraction(1)])
    assert orth_poly_determinant(fun, mono, 1, ("value", 1, 6)) == Poly([0, Fraction(6)])
    assert orth_poly_determinant(fun, mono, 2, ("value", 1, 12)) == Poly(
        [Fraction(2), Fraction(0), Fraction(10)])


def test_determinant_agrees_with_hankel_route():
    # determinant construction is proportional to the reversed Pade denominator
    moments = [raw_moment_s2(j) for j in range(20)]
    fun = MomentFunctional.from_series(moments)
    mono = [Poly([Fraction(0)] * j + [Fraction(1)]) for j in range(9)]
    for n in range(1, 9):
        p_det = orth_poly_determinant(fun, mono, n, ("leading", 1))
        pa = pade(moments, n - 1, n)
        p_rev = pa.den.reverse(n)
        assert p_rev.scale(1 / p_rev.leading()) == p_det, n


def test_determinant_zero_normalization_rejected():
    fun = s2_functional()
    mono = [Poly([Fraction(0)] * j + [Fraction(1)]) for j in range(3)]
    # P_1 = 6x vanishes at 0, so normalizing by the value there must fail
    with pytest.raises(ZeroDeterminant):
        orth_poly_determinant(fun, mono, 1, ("value", 0, 1))


def test_associated_poly_basics():
    fun = s2_functional()
    assert associated_poly(fun, Poly([Fraction(5)])).is_zero()
    assert associated_poly(fun, Poly.x()) == Poly([raw_moment_s2(0)])
    # for P_1 = 6x the associated polynomial is 6 B_2 = 1
    assert associated_poly(fun, p_m_s2(1)) == Poly([Fraction(1)])


def test_pade_json_roundtrip():
    pa = pade(EXP, 2, 2)
    obj = pa.to_json()
    assert obj["field"] == "Q"
    back = PadeApprox.from_json(obj)
    assert back.num == pa.num and back.den == pa.den

    sym = pade(psi_series(4), 2, 1)
    obj = sym.to_json()
    assert obj["field"] == "Q(s)"
    back = PadeApprox.from_json(obj)
    assert same_ratfunc(back, sym)
