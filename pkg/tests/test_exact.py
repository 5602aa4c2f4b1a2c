import math
from fractions import Fraction

import mpmath as mp
import pytest

from zetarpa.errors import PoleAtOne
from zetarpa.exact import (
    bernoulli,
    binomial,
    format_rational,
    lcm_upto,
    parse_rational,
    pochhammer_scalar,
)


def bernoulli_oracle(n: int) -> Fraction:
    """Independent evaluation straight from the defining recurrence."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(Fraction(math.comb(m + 1, j)) * b[j] for j in range(m))
        b.append(-acc / (m + 1))
    return b[n]


def test_bernoulli_basics():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("k", [2, 5, 9, 20, 37])
def test_bernoulli_matches_recurrence_oracle(k):
    assert bernoulli(k) == bernoulli_oracle(k)


def test_bernoulli_recurrence_identity():
    # sum_{j<=n} C(n+1, j) B_j = 0 for every n >= 1
    for n in range(1, 61):
        acc = sum(Fraction(math.comb(n + 1, j)) * bernoulli(j) for j in range(n + 1))
        assert acc == 0, n


def test_bernoulli_odd_vanishing():
    for k in range(1, 31):
        assert bernoulli(2 * k + 1) == 0


def test_bernoulli_even_asymptotic():
    # |B_2k| ~ 4 sqrt(pi k) (k/(pi e))^{2k}; the ratio sits near 1 and tightens
    with mp.workprec(300):
        def ratio(k):
            b = bernoulli(2 * k)
            approx = 4 * mp.sqrt(mp.pi * k) * (k / (mp.pi * mp.e)) ** (2 * k)
            return abs(mp.mpf(b.numerator)) / b.denominator / approx

        values = {k: ratio(k) for k in (20, 30, 40, 50, 60)}
        for k, r in values.items():
            assert 0.9 < r < 1.1, (k, r)
        assert abs(values[60] - 1) < abs(values[20] - 1)


def test_lcm_upto():
    assert lcm_upto(1) == 1
    assert lcm_upto(6) == 60
    assert lcm_upto(10) == 2520
    for k in range(1, 40):
        assert lcm_upto(k + 1) % lcm_upto(k) == 0
        step = lcm_upto(k + 1) // lcm_upto(k)
        # each step multiplies by 1 or by a prime
        assert step == 1 or all(step % p for p in range(2, step)) , (k, step)


def test_lcm_binomial_divisibility():
    # d_k / (i C(k, i)) is an integer for 1 <= i <= k
    for k in range(1, 31):
        for i in range(1, k + 1):
            assert lcm_upto(k) % (i * math.comb(k, i)) == 0, (k, i)


def test_pochhammer_scalar():
    assert pochhammer_scalar(Fraction(2), 0) == 1
    assert pochhammer_scalar(Fraction(2), 3) == 24
    assert pochhammer_scalar(Fraction(3), -1) == Fraction(1, 2)
    with pytest.raises(PoleAtOne):
        pochhammer_scalar(Fraction(1), -1)


def test_binomial_negative_top():
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6
    assert binomial(5, 7) == 0


def test_parse_and_format_rational():
    assert parse_rational("2.5") == Fraction(5, 2)
    assert parse_rational("-691/2730") == Fraction(-691, 2730)
    assert parse_rational("7") == 7
    with pytest.raises(ValueError):
        parse_rational("1e-3")
    assert format_rational(Fraction(-691, 2730)) == "-691/2730"
    assert format_rational(Fraction(4, 2)) == "2"
