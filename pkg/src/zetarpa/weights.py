"""High-precision quadrature checks of the integral representations.

The positive weight w_s on (0, infinity) turns zeta(s, a) into a
Stieltjes-type transform; this module evaluates w_s three ways (closed
forms at s = 2, 3, 4, the exponential series, and the literal nested
integral), verifies the zeta and Bernoulli-moment representations, the
classical integral formula for zeta(s, a), the arctan kernel identity on
(0, 1), and the orthogonality integrals on the imaginary axis.

All routines take rational inputs and work at a configurable binary
precision through mpmath.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import InvalidM, PoleAtOne, SlowConvergence
from .exact import bernoulli, factorial
from .poly import Poly
from .ratfunc import pochhammer
from .s2 import p_m_s2
from .s3 import pi_m_s3

__all__ = [
    "QuadratureConfig",
    "w_closed",
    "w_series",
    "w_nested",
    "theorem1_check",
    "bernoulli_moment_check",
    "hermite_zeta",
    "is_identity_check",
    "zeta_integral_identity",
    "imaginary_axis_orthogonality",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Precision and scheme knobs shared by the integral checks.

    scheme: "tanh-sinh" (double-exponential, default; robust to endpoint
    singularities) or "gauss-legendre" panels.  max_terms caps the
    exponential sums; series needing more raise SlowConvergence.
    """

    precision_bits: int = 128
    scheme: str = "tanh-sinh"
    max_terms: int = 10 ** 6
    small_x: float = 0.05  # below this the series is summed via polylog

    def work_bits(self) -> int:
        return self.precision_bits + 16

    def truncation(self) -> mp.mpf:
        # integrands decay like e^{-2 pi x}; this keeps the tail below budget
        return max(mp.mpf(30), (self.precision_bits + 16) * mp.log(2) / (2 * mp.pi)) + 5


_DEFAULT = QuadratureConfig()


def _mpf(q: Fraction | int | float) -> mp.mpf:
    if isinstance(q, Fraction):
        return mp.mpf(q.numerator) / q.denominator
    return mp.mpf(q)


def _quad(f, points, cfg: QuadratureConfig):
    method = "gauss-legendre" if cfg.scheme == "gauss-legendre" else "tanh-sinh"
    return mp.quad(f, points, method=method)


def w_closed(s: int, x) -> mp.mpf:
    """Closed forms of the weight at s = 2, 3, 4.

    w_2 = pi x^2 / sinh^2(pi x)
    w_3 = pi^2 x^3 cosh(pi x) / sinh^3(pi x)
    w_4 = (pi^3/3) x^4 (2 + cosh(2 pi x)) / sinh^4(pi x)
    """
    x = _mpf(x)
    if x <= 0:
        raise ValueError("need x > 0")
    if s == 2:
        return mp.pi * x ** 2 / mp.sinh(mp.pi * x) ** 2
    if s == 3:
        return mp.pi ** 2 * x ** 3 * mp.cosh(mp.pi * x) / mp.sinh(mp.pi * x) ** 3
    if s == 4:
        return (mp.pi ** 3 / 3) * x ** 4 * (2 + mp.cosh(2 * mp.pi * x)) / mp.sinh(mp.pi * x) ** 4
    raise ValueError("closed forms exist for s in {2, 3, 4} only")


def w_series(s: Fraction, x, cfg: QuadratureConfig = _DEFAULT) -> mp.mpf:
    """Exponential-series form (2 x^s / Gamma(s)) sum_k (2 pi k)^{s-1} e^{-2 pi k x}.

    Term-by-term integration of the nested-integral definition collapses
    to this m-independent sum.  Truncated when the next term drops below
    2^{-precision-8} of the partial sum; raises SlowConvergence when x is
    so small that more than `max_terms` terms would be needed.
    """
    with mp.workprec(cfg.work_bits() + 8):
        sf, xf = _mpf(Fraction(s)), _mpf(x)
        if xf <= 0:
            raise ValueError("need x > 0")
        tol = mp.mpf(2) ** (-(cfg.precision_bits + 8))
        q = mp.e ** (-2 * mp.pi * xf)
        qk = mp.mpf(1)
        total = mp.mpf(0)
        for k in range(1, cfg.max_terms + 1):
            qk *= q
            term = (2 * mp.pi * k) ** (sf - 1) * qk
            total += term
            if k > 3 and term < tol * total:
                break
        else:
            raise SlowConvergence(f"series for the weight needs > {cfg.max_terms} terms at x = {xf}")
        return +(2 * xf ** sf / mp.gamma(sf) * total)


def _w_smallx(s: Fraction, x, cfg: QuadratureConfig) -> mp.mpf:
    # polylog form of the same sum; stable arbitrarily close to 0 once the
    # working precision can still distinguish e^{-2 pi x} from 1
    xf = _mpf(x)
    boost = max(0, int(-mp.log(xf, 2)) + 1) if 0 < xf < 1 else 0
    with mp.workprec(cfg.work_bits() + 16 + boost):
        sf, xf = _mpf(Fraction(s)), _mpf(x)
        li = mp.polylog(1 - sf, mp.e ** (-2 * mp.pi * xf))
        return +(2 * xf ** sf / mp.gamma(sf) * (2 * mp.pi) ** (sf - 1) * li)


def _weight(s: Fraction, x, cfg: QuadratureConfig) -> mp.mpf:
    s = Fraction(s)
    if s.denominator == 1 and s.numerator in (2, 3, 4):
        return w_closed(int(s), x)
    if _mpf(x) < cfg.small_x:
        return _w_smallx(s, x, cfg)
    return w_series(s, x, cfg)


def _deriv_exp_sum(t: mp.mpf, m: int, tol: mp.mpf, max_terms: int) -> mp.mpf:
    # d^m/dt^m 1/(e^{2 pi t} - 1) = sum_k (-2 pi k)^m e^{-2 pi k t}
    q = mp.e ** (-2 * mp.pi * t)
    qk = mp.mpf(1)
    total = mp.mpf(0)
    for k in range(1, max_terms + 1):
        qk *= q
        term = (-2 * mp.pi * k) ** m * qk
        total += term
        if k > 3 and abs(term) < tol * max(abs(total), mp.mpf(1)):
            return total
    raise SlowConvergence("derivative series did not converge")


def w_nested(s: Fraction, m: int, x, cfg: QuadratureConfig = _DEFAULT) -> mp.mpf:
    """Literal nested-integral form of the weight, for any admissible m.

    2 (-1)^m x^s / (Gamma(s) Gamma(m+1-s)) * int_x^inf (t-x)^{m-s} d^m/dt^m (1/(e^{2 pi t}-1)) dt.
    The result is independent of the integer m as long as m > s - 1.
    """
    s = Fraction(s)
    if int(m) != m or not m > s - 1:
        raise InvalidM(f"need integer m > s - 1, got m = {m} for s = {s}")
    with mp.workprec(cfg.work_bits() + 8):
        sf, xf = _mpf(s), _mpf(x)
        if xf <= 0:
            raise ValueError("need x > 0")
        tol = mp.mpf(2) ** (-(cfg.precision_bits + 16))
        upper = cfg.truncation() + xf

        def f(t):
            return (t - xf) ** (m - sf) * _deriv_exp_sum(t, m, tol, cfg.max_terms)

        integral = _quad(f, [xf, xf + 1, upper], cfg)
        pref = 2 * (-1) ** m * xf ** sf / (mp.gamma(sf) * mp.gamma(m + 1 - sf))
        return +(pref * integral)


def theorem1_check(s: Fraction, a: Fraction, cfg: QuadratureConfig = _DEFAULT):
    """Integral representation of zeta(s, a) through the weight.

    Returns (rhs, |rhs - reference|) where
    rhs = a^{1-s} (1/(s-1) + 1/(2a) + int_0^inf w_s(x)/(a^2+x^2) dx).
    """
    from .oracle import OracleConfig, zeta_ref

    s, a = Fraction(s), Fraction(a)
    if s == 1:
        raise PoleAtOne("s = 1")
    with mp.workprec(cfg.work_bits()):
        sf, af = _mpf(s), _mpf(a)
        upper = cfg.truncation()

        def f(x):
            return _weight(s, x, cfg) / (af ** 2 + x ** 2)

        integral = _quad(f, [0, 1, 5, upper], cfg)
        rhs = af ** (1 - sf) * (1 / (sf - 1) + 1 / (2 * af) + integral)
        ref = zeta_ref(s, a, OracleConfig(precision_bits=cfg.work_bits()))
        return +rhs, +abs(rhs - ref)


def bernoulli_moment_check(s: Fraction, k: int, cfg: QuadratureConfig = _DEFAULT):
    """Even moments of the weight against their Bernoulli closed form.

    Returns (int_0^inf x^k w_s(x) dx, target) with
    target = (-1)^{k/2} B_{k+2} (s)_{k+1} / (k+2)!, an exact rational.
    """
    s = Fraction(s)
    if k < 0 or k % 2 != 0:
        raise ValueError("the moment identity is stated for even k >= 0")
    target = ((-1) ** (k // 2) * bernoulli(k + 2) * pochhammer(s, k + 1)
              / factorial(k + 2))
    with mp.workprec(cfg.work_bits()):
        upper = cfg.truncation()

        def f(x):
            return x ** k * _weight(s, x, cfg)

        integral = _quad(f, [0, 1, 5, upper], cfg)
        return +integral, target


def hermite_zeta(s: Fraction, a: Fraction, cfg: QuadratureConfig = _DEFAULT) -> mp.mpf:
    """Classical integral formula for zeta(s, a), valid for all s != 1.

    a^{-s}/2 + a^{1-s}/(s-1) + 2 int_0^inf (a^2+y^2)^{-s/2} sin(s arctan(y/a)) / (e^{2 pi y}-1) dy.
    """
    s, a = Fraction(s), Fraction(a)
    if s == 1:
        raise PoleAtOne("s = 1")
    if a <= 0:
        raise ValueError("need a > 0")
    with mp.workprec(cfg.work_bits()):
        sf, af = _mpf(s), _mpf(a)
        upper = cfg.truncation()

        def f(y):
            return ((af ** 2 + y ** 2) ** (-sf / 2) * mp.sin(sf * mp.atan(y / af))
                    / mp.expm1(2 * mp.pi * y))

        integral = _quad(f, [0, 1, 5, upper], cfg)
        return +(af ** (-sf) / 2 + af ** (1 - sf) / (sf - 1) + 2 * integral)


def is_identity_check(s: Fraction, t, cfg: QuadratureConfig = _DEFAULT):
    """Arctangent kernel identity on 0 < s < 1, t >= 0.

    LHS = (1/(Gamma(s)Gamma(1-s))) int_0^t x^s (t-x)^{-s} / (1+x^2) dx,
    RHS = (1+t^2)^{-s/2} sin(s arctan t); returns both.  The endpoint
    singularities are integrable and the double-exponential rule absorbs
    them after splitting at t/2.
    """
    s = Fraction(s)
    if not (0 < s < 1):
        raise ValueError("identity holds for 0 < s < 1")
    with mp.workprec(cfg.work_bits()):
        sf, tf = _mpf(s), _mpf(t)
        if tf < 0:
            raise ValueError("need t >= 0")
        rhs = (1 + tf ** 2) ** (-sf / 2) * mp.sin(sf * mp.atan(tf))
        if tf == 0:
            return mp.mpf(0), +rhs

        def f(x):
            return x ** sf * (tf - x) ** (-sf) / (1 + x ** 2)

        lhs = mp.quad(f, [0, tf / 2, tf], method="tanh-sinh")
        lhs /= mp.gamma(sf) * mp.gamma(1 - sf)
        return +lhs, +rhs


_ZETA_IDENTITY = {
    # s: (head, prefactor, rational integrand numerator as poly in x, power of (1+x^2))
    2: (Fraction(3, 2), 4, Poly([Fraction(0), Fraction(1)]), 2),
    3: (Fraction(1), -2, Poly([Fraction(0), Fraction(-3), Fraction(0), Fraction(1)]), 3),
    4: (Fraction(5, 6), -8, Poly([Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]), 4),
}


def zeta_integral_identity(s: int, cfg: QuadratureConfig = _DEFAULT):
    """The three rational-kernel integral identities for zeta(2), zeta(3), zeta(4).

    zeta(2) = 3/2 + 4 I(x/(1+x^2)^2), zeta(3) = 1 - 2 I(x(x^2-3)/(1+x^2)^3),
    zeta(4) = 5/6 - 8 I(x(x^2-1)/(1+x^2)^4) with I(g) = int_0^inf g(x)/(e^{2 pi x}-1) dx.
    Returns (value, reference).
    """
    from .oracle import constants

    if s not in _ZETA_IDENTITY:
        raise ValueError("identities available for s in {2, 3, 4}")
    head, pref, numer, power = _ZETA_IDENTITY[s]
    with mp.workprec(cfg.work_bits()):
        upper = cfg.truncation()

        def f(x):
            return numer(x) / (1 + x ** 2) ** power / mp.expm1(2 * mp.pi * x)

        value = _mpf(head) + pref * _quad(f, [0, 1, 5, upper], cfg)
        ref = {2: "zeta2", 3: "zeta3", 4: "zeta4"}[s]
        return +value, constants(ref, cfg.work_bits())


def imaginary_axis_orthogonality(kind: str, n: int, m: int,
                                 cfg: QuadratureConfig = _DEFAULT):
    """Orthogonality integrals of the closed-form polynomials on x = i y.

    kind "s2": int_R P_n(iy) P_m(iy) w_2(y) dy; diagonal magnitude
    2(n+1)(n+2)/(2n+3) with sign (-1)^n from P_n(iy)^2.
    kind "s3": 2 int_0^inf Pi_n(iy) Pi_m(iy) (pi^2/3) y^5 cosh(pi y)/sinh^3(pi y) dy;
    diagonal magnitude (n+1)(n+2)/(3(2n+3)).  Off-diagonal values vanish.
    Returns the (possibly complex) value; only magnitudes are pinned by
    the norm formulas, the i-orientation of the contour stays a convention.
    """
    with mp.workprec(cfg.work_bits()):
        upper = cfg.truncation()
        if kind == "s2":
            pn, pm = p_m_s2(n), p_m_s2(m)

            def f(y):
                return pn(1j * y) * pm(1j * y) * mp.pi * y ** 2 / mp.sinh(mp.pi * y) ** 2

            return _quad(f, [-upper, 0, upper], cfg)
        if kind == "s3":
            pn, pm = pi_m_s3(n), pi_m_s3(m)

            def f(y):
                return (pn(1j * y) * pm(1j * y) * (mp.pi ** 2 / 3) * y ** 5
                        * mp.cosh(mp.pi * y) / mp.sinh(mp.pi * y) ** 3)

            return 2 * _quad(f, [0, 1, upper], cfg)
        raise ValueError("kind must be 's2' or 's3'")
