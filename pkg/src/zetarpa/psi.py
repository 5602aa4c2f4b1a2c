"""Remainder kernel of the Hurwitz zeta series and its Pade approximants.

zeta(s, a) splits into n explicit head terms plus (n+a)^{1-s} times the
kernel Psi(s, t) evaluated at t = 1/(n+a).  Psi has the divergent
asymptotic expansion with coefficients c_k = (-1)^k B_k (s)_{k-1} / k!,
which is what the approximants are built from.  Everything before the
final power evaluations is exact (over Q or over Q(s)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from .errors import PoleAtOne
from .exact import bernoulli, factorial, format_rational
from .pade import PadeApprox, pade, same_ratfunc
from .poly import Poly
from .ratfunc import RatFunc, pochhammer

__all__ = [
    "psi_coeff",
    "psi_series",
    "psi2_coeff",
    "stieltjes_moment",
    "RpaResult",
    "rpa_symbolic",
    "rpa_numeric",
    "psi2_split_check",
    "ConvergenceRow",
    "convergence_table",
]

_GUARD_BITS = 24


def _check_numeric_s(s: Fraction) -> Fraction:
    s = Fraction(s)
    if s == 1:
        raise PoleAtOne("the kernel series has a pole at s = 1")
    return s


def psi_coeff(k: int, s: Fraction | None = None):
    """k-th Taylor coefficient of the remainder kernel.

    Symbolic (RatFunc in s) when `s` is None, otherwise an exact Fraction
    at the given rational s != 1.
    """
    if k < 0:
        raise ValueError("coefficient index must be >= 0")
    base = RatFunc.s() if s is None else _check_numeric_s(s)
    b = bernoulli(k)
    if not b:
        return RatFunc.const(0) if s is None else Fraction(0)
    val = pochhammer(base, k - 1) * Fraction((-1) ** k * b.numerator,
                                             b.denominator * factorial(k))
    return val


def psi_series(count: int, s: Fraction | None = None) -> list:
    """First `count` kernel coefficients c_0 .. c_{count-1}."""
    return [psi_coeff(k, s) for k in range(count)]


def psi2_coeff(k: int, s: Fraction | None = None):
    """Coefficient k of the twice-shifted kernel: B_{k+2} (s)_{k+1} (-1)^k / (k+2)!.

    This is the tail left after splitting off the 1/(s-1) + t/2 head.
    """
    if k < 0:
        raise ValueError("coefficient index must be >= 0")
    base = RatFunc.s() if s is None else _check_numeric_s(s)
    b = bernoulli(k + 2)
    if not b:
        return RatFunc.const(0) if s is None else Fraction(0)
    return pochhammer(base, k + 1) * Fraction((-1) ** k * b.numerator,
                                              b.denominator * factorial(k + 2))


def stieltjes_moment(s: Fraction, k: int) -> Fraction:
    """k-th moment of the positive weight behind the kernel tail.

    Equals (-1)^k times the (2k)-th tail coefficient; positive for all
    real s > 0, which is what makes the diagonal approximants converge.
    """
    return (-1) ** k * psi2_coeff(2 * k, s)


@dataclass
class RpaResult:
    """Structured value of a remainder-Pade approximation of zeta(s, a).

    Symbolic mode (s is None): `ratfunc` is the coefficient of
    (n+a)^{1-s} and `partial_bases` lists the bases b of the explicit
    b^{-s} head terms.  Numeric mode: `pade_value` is the exact rational
    value of the approximant at t = 1/(n+a) and `total` the big-float
    assembly.
    """

    n: int
    m1: int
    m2: int
    a: Fraction
    s: Fraction | None = None
    partial_bases: list[Fraction] = field(default_factory=list)
    factor_base: Fraction | None = None
    ratfunc: RatFunc | None = None
    pade_value: Fraction | None = None
    total: object | None = None
    precision_bits: int | None = None

    def to_json(self) -> dict:
        out: dict = {
            "n": self.n, "m1": self.m1, "m2": self.m2,
            "a": format_rational(Fraction(self.a)),
        }
        if self.s is None:
            out["partial_terms"] = self.n
            out["partial_bases"] = [format_rational(Fraction(b)) for b in self.partial_bases]
            out["factor_exponent"] = "1-s"
            out["base"] = format_rational(Fraction(self.factor_base))
            out["ratfunc"] = self.ratfunc.to_json()
        else:
            out["s"] = format_rational(Fraction(self.s))
            out["pade_value"] = format_rational(self.pade_value)
            out["precision_bits"] = self.precision_bits
            out["total"] = mp.nstr(self.total, int(self.precision_bits / 3.2), strip_zeros=False)
        return out


def rpa_symbolic(n: int, a: int, m1: int, m2: int) -> RpaResult:
    """Approximant with the s-dependence kept exact in Q(s).

    Needs integer a >= 1 so t = 1/(n+a) is an exact rational; the head
    terms (k+a)^{-s} are returned structurally (bases only), matching how
    closed forms are usually displayed.
    """
    if n < 0 or a < 1 or int(a) != a:
        raise ValueError("need n >= 0 and integer a >= 1")
    series = psi_series(m1 + m2 + 1)
    pa = pade(series, m1, m2)
    t = Fraction(1, n + a)
    value = pa.num(t) / pa.den(t)
    if not isinstance(value, RatFunc):
        value = RatFunc.const(value)
    return RpaResult(
        n=n, m1=m1, m2=m2, a=Fraction(a),
        partial_bases=[Fraction(k + a) for k in range(n)],
        factor_base=Fraction(n + a),
        ratfunc=value,
    )


def rpa_numeric(
    s: Fraction,
    a: Fraction,
    n: int,
    m1: int,
    m2: int,
    precision_bits: int = 128,
) -> RpaResult:
    """Approximant at rational s, a with the Pade stage exact over Q.

    Floating point enters only in the final (k+a)^{-s} and (n+a)^{1-s}
    powers, evaluated at `precision_bits` plus guard bits.
    """
    s = _check_numeric_s(s)
    a = Fraction(a)
    if a <= 0:
        raise ValueError("need a > 0")
    series = psi_series(m1 + m2 + 1, s)
    pa = pade(series, m1, m2)
    t = Fraction(1, 1) / (n + a)
    exact = pa.eval_exact(t)
    with mp.workprec(precision_bits + _GUARD_BITS):
        sf = mp.mpf(s.numerator) / s.denominator
        head = mp.mpf(0)
        for k in range(n):
            base = k + a
            head += (mp.mpf(base.numerator) / base.denominator) ** (-sf)
        na = n + a
        naf = mp.mpf(na.numerator) / na.denominator
        total = head + naf ** (1 - sf) * (mp.mpf(exact.numerator) / exact.denominator)
        total = +total
    return RpaResult(
        n=n, m1=m1, m2=m2, a=a, s=s,
        pade_value=exact, total=total, precision_bits=precision_bits,
    )


def psi2_split_check(m: int, p: int, s: Fraction | None = None) -> bool:
    """Exact check of the head/tail split of the [m+p/m] approximant.

    [m+p/m] of the kernel must equal 1/(s-1) + t/2 + t^2 [m+p-2/m] of the
    shifted kernel, as rational functions in t.
    """
    if p < 1:
        raise ValueError("split identity needs p >= 1")
    series = psi_series(2 * m + p + 1, s)
    lhs = pade(series, m + p, m)
    tail = pade(series[2:], m + p - 2, m)
    head = Poly(series[:2])
    num = head * tail.den + tail.num.shift(2)
    rhs = PadeApprox(num, tail.den, m + p, m, 0)
    return same_ratfunc(lhs, rhs)


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    value: object
    abs_error: object

    def to_json(self) -> dict:
        digits = 17
        return {
            "m": self.m,
            "value": mp.nstr(self.value, digits),
            "abs_error": mp.nstr(self.abs_error, 8),
        }


def convergence_table(
    s: Fraction,
    a: Fraction,
    n: int,
    p: int = 1,
    m_max: int = 10,
    precision_bits: int = 128,
) -> list[ConvergenceRow]:
    """Errors of the [m+p/m] approximants against the reference value, m = 1..m_max."""
    from .oracle import OracleConfig, zeta_ref

    s = _check_numeric_s(s)
    ref = zeta_ref(s, a, OracleConfig(precision_bits=precision_bits + _GUARD_BITS))
    rows = []
    for m in range(1, m_max + 1):
        r = rpa_numeric(s, a, n, m + p, m, precision_bits)
        with mp.workprec(precision_bits + _GUARD_BITS):
            err = abs(r.total - ref)
        rows.append(ConvergenceRow(m=m, value=r.total, abs_error=err))
    return rows
