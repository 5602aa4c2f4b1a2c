from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetarpa.errors import ZeroDenominator
from zetarpa.poly import Poly, binom_poly, poly_divmod, poly_gcd
from zetarpa.ratfunc import RatFunc, pochhammer

S = RatFunc.s()

rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
)


def ratfuncs():
    polys = st.lists(rationals, min_size=1, max_size=3).map(Poly)
    return st.tuples(polys, polys.filter(lambda p: not p.is_zero())).map(
        lambda t: RatFunc(t[0], t[1])
    )


# -- Poly ----------------------------------------------------------------------


def test_poly_trim_and_zero():
    assert Poly([Fraction(0), Fraction(0)]).coeffs == ()
    assert Poly().degree == -1
    assert Poly([Fraction(3)]).degree == 0


def test_poly_arithmetic_and_eval():
    p = Poly([Fraction(1), Fraction(2)])       # 1 + 2x
    q = Poly([Fraction(0), Fraction(1), Fraction(1)])  # x + x^2
    assert (p * q)(Fraction(2)) == p(Fraction(2)) * q(Fraction(2))
    assert (p + q) - q == p
    assert (-p) + p == Poly()


def test_poly_reverse_shift():
    p = Poly([Fraction(1), Fraction(0), Fraction(3)])
    assert p.reverse() == Poly([Fraction(3), Fraction(0), Fraction(1)])
    assert p.reverse(4) == Poly([Fraction(0), Fraction(0), Fraction(3), Fraction(0), Fraction(1)])
    assert p.shift(2) == Poly([0, 0, Fraction(1), Fraction(0), Fraction(3)])


def test_poly_divmod_gcd():
    a = Poly([Fraction(-1), Fraction(0), Fraction(1)])  # x^2 - 1
    b = Poly([Fraction(1), Fraction(1)])                # x + 1
    q, r = poly_divmod(a, b)
    assert r.is_zero() and q == Poly([Fraction(-1), Fraction(1)])
    assert poly_gcd(a, b) == Poly([Fraction(1), Fraction(1)])


def test_binom_poly_examples():
    assert binom_poly(-1, 0) == Poly([Fraction(1)])
    assert binom_poly(-1, 1) == Poly([Fraction(-1), Fraction(1)])
    assert binom_poly(-1, 2) == Poly([Fraction(1), Fraction(-3, 2), Fraction(1, 2)])
    # values agree with integer binomials on a strip of integers
    for k in range(5):
        for x in range(-3, 8):
            from zetarpa.exact import binomial
            assert binom_poly(-1, k)(Fraction(x)) == binomial(x - 1, k)


def test_poly_json_roundtrip():
    p = Poly([Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(7, 5)])
    assert Poly.from_json(p.to_json()) == p


# -- RatFunc -------------------------------------------------------------------


def test_ratfunc_canonical_examples():
    x = Poly.x()
    one = Poly([Fraction(1)])
    # (s^2-1)/(s-1) -> s+1
    r = RatFunc(x * x - one, x - one)
    assert r == S + 1
    # (2s+4)/(2s-2) -> (s+2)/(s-1)
    r = RatFunc(Poly([Fraction(4), Fraction(2)]), Poly([Fraction(-2), Fraction(2)]))
    assert r == (S + 2) / (S - 1)
    # 0/(s^3+1) -> 0/1
    r = RatFunc(Poly(), Poly([Fraction(1), Fraction(0), Fraction(0), Fraction(1)]))
    assert r.is_zero() and r.den == Poly([Fraction(1)])


def test_ratfunc_monic_denominator():
    r = (S + 2) / (2 * S - 2)
    assert r.den.leading() == 1
    assert r == (S + 2) / (S - 1) / 2


def test_ratfunc_zero_denominator():
    with pytest.raises(ZeroDenominator):
        RatFunc(Poly([Fraction(1)]), Poly())
    with pytest.raises(ZeroDenominator):
        (S + 1) / RatFunc.const(0)


def test_ratfunc_eval():
    r = (S + 2) * (S + 3) / (12 * (S - 1))
    assert r.eval(Fraction(2)) == Fraction(5, 3)
    assert r.eval(Fraction(3)) == Fraction(5, 4)


def test_ratfunc_json_roundtrip():
    r = (3 * S ** 2 - 7) / (5 * S + 1)
    assert RatFunc.from_json(r.to_json()) == r


@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_ratfunc_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    if not a.is_zero():
        assert a * (1 / a) == 1
        assert (b / a) * a == b


@given(ratfuncs())
def test_ratfunc_additive_inverse(a):
    assert a - a == 0
    assert a + (-a) == RatFunc.const(0)


def test_pochhammer_field_cases():
    assert pochhammer(S, 0) == 1
    assert pochhammer(Fraction(2), 3) == 24
    assert pochhammer(S, -1) == 1 / (S - 1)
    assert pochhammer(S, 2) == S * (S + 1)
