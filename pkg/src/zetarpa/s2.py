"""Closed-form apparatus for zeta(2, a): orthogonal polynomials, associated
polynomials, the rational approximation pairs u/v, integrality scalings,
error bounds, and the geometric rate functions.

The orthogonal polynomials here are the denominators (reversed) of the
[m+1/m] approximants of the s = 2 remainder kernel; everything is exact.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import IntegralityViolation
from .exact import bernoulli, binomial, factorial, format_rational, lcm_upto
from .pade import MomentFunctional, associated_poly, orth_poly_determinant, pade
from .poly import Poly, binom_poly
from .psi import psi_series

__all__ = [
    "raw_moment_s2",
    "s2_functional",
    "modified_moment_s2",
    "pair_moment_s2",
    "basis_e_s2",
    "p_m_s2",
    "r_m_s2",
    "ApproxPairS2",
    "zeta2_approx",
    "integrality_s2",
    "error_bound_s2",
    "linear_form_s2",
    "RateReportS2",
    "rate_s2",
]

_P_CACHE: list[Poly] = [Poly([Fraction(2)])]
_P_LOCK = threading.Lock()


def raw_moment_s2(j: int) -> Fraction:
    """<x^2 c^(2), x^j> = (-1)^j B_{j+2}."""
    return (-1) ** j * bernoulli(j + 2)


def s2_functional() -> MomentFunctional:
    return MomentFunctional(raw_moment_s2)


def modified_moment_s2(k: int) -> Fraction:
    """Moment of the binomial C(x-1, k): (-1)^k (k+1) (k+1)! / (k+3)!."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Fraction((-1) ** k * (k + 1) * factorial(k + 1), factorial(k + 3))


def pair_moment_s2(k: int, j: int) -> Fraction:
    """Moment of C(x-1, k) C(x-1, j)."""
    return Fraction(
        (-1) ** (k + j) * (k + 1) * factorial(k + 1) * (j + 1) * factorial(j + 1),
        factorial(k + j + 3),
    )


def basis_e_s2(k: int) -> Poly:
    """e_k = C(x-1, k) / ((k+1) (k+1)!), the basis with factorial pair moments."""
    return binom_poly(-1, k).scale(Fraction(1, (k + 1) * factorial(k + 1)))


def _p_recurrence(m: int) -> Poly:
    # P_{m+1} = 2(2m+3)/((m+1)(m+2)) x P_m + P_{m-1};  P_{-1} = 0, P_0 = 2
    with _P_LOCK:
        while len(_P_CACHE) <= m:
            mm = len(_P_CACHE) - 1
            cur = _P_CACHE[mm]
            prev = _P_CACHE[mm - 1] if mm >= 1 else Poly()
            coef = Fraction(2 * (2 * mm + 3), (mm + 1) * (mm + 2))
            _P_CACHE.append(cur.shift(1).scale(coef) + prev)
        return _P_CACHE[m]


def _p_binomial(m: int) -> Poly:
    out = Poly()
    for k in range(m + 1):
        coef = Fraction(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1))
        out = out + binom_poly(-1, k).scale(coef)
    return out


def _p_determinant(m: int) -> Poly:
    basis = [Poly([Fraction(0)] * j + [Fraction(1)]) for j in range(m + 1)]
    target = (m + 1) * (m + 2)  # value at x = 1, where only the k=0 binomial survives
    return orth_poly_determinant(s2_functional(), basis, m, ("value", 1, target))


def p_m_s2(m: int, route: str = "recurrence") -> Poly:
    """Orthogonal polynomial P_m for the s = 2 kernel functional.

    Routes: three-term recurrence (cached, default), explicit binomial
    sum, or the moment-determinant construction; all agree exactly.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if route == "recurrence":
        return _p_recurrence(m)
    if route == "binomial_sum":
        return _p_binomial(m)
    if route == "determinant":
        return _p_determinant(m)
    raise ValueError(f"unknown route {route!r}")


def _r_associated(m: int) -> Poly:
    return associated_poly(s2_functional(), p_m_s2(m))


def _r_compact(m: int) -> Poly:
    # sum_k C(m+1,k+1) C(m+k+2,k+1) sum_{i=1..k} (-1)^{i-1}/((i+1)(i+2)) * C(t-1,k)/C(t-1,i)
    # with the quotient written as the exact polynomial C(t-i-1, k-i)/C(k, i).
    out = Poly()
    for k in range(m + 1):
        outer = Fraction(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1))
        for i in range(1, k + 1):
            coef = outer * Fraction((-1) ** (i - 1), (i + 1) * (i + 2) * binomial(k, i))
            out = out + binom_poly(-i - 1, k - i).scale(coef)
    return out


def r_m_s2(m: int, route: str = "associated") -> Poly:
    """Associated polynomial R_{m-1} (degree <= m-1).

    The functional route is the primary construction; the compact
    binomial form is kept as an independent expression of the same
    polynomial.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Poly()
    if route == "associated":
        return _r_associated(m)
    if route == "compact":
        return _r_compact(m)
    raise ValueError(f"unknown route {route!r}")


@dataclass(frozen=True)
class ApproxPairS2:
    """Exact pair v/u approximating zeta(2, a) with n head terms and order m.

    u clears the head-term denominators and the orthogonal-polynomial
    denominator, so at a = 1 the scaled pair d_{m+2}^2 (u, v) is integral.
    """

    n: int
    m: int
    a: Fraction
    u: Fraction
    v: Fraction

    @property
    def value(self) -> Fraction:
        return self.v / self.u

    def to_json(self) -> dict:
        return {
            "n": self.n, "m": self.m, "a": format_rational(self.a),
            "u": format_rational(self.u), "v": format_rational(self.v),
        }


def zeta2_approx(n: int, m: int, a: Fraction = Fraction(1), verify: bool = True) -> ApproxPairS2:
    """Head terms plus the [m+1/m] kernel correction, assembled exactly.

    v/u = sum_{k<n} (k+a)^{-2} + 1/(n+a) + 1/(2(n+a)^2) + eps_m(a)/(n+a)^2
    with eps_m(a) = R_{m-1}(n+a)/P_m(n+a).  With verify=True the same
    value is recomputed through the generic Pade engine and compared.
    """
    a = Fraction(a)
    if n < 0 or m < 0 or a <= 0:
        raise ValueError("need n, m >= 0 and a > 0")
    na = n + a
    heads = [1 / (Fraction(k) + a) ** 2 for k in range(n)]
    heads += [1 / na, 1 / (2 * na ** 2)]
    pval = p_m_s2(m)(na)
    if pval == 0:
        raise IntegralityViolation("orthogonal polynomial vanished at n + a")
    eps = r_m_s2(m)(na) / pval if m >= 1 else Fraction(0)
    value = sum(heads) + eps / na ** 2
    partial_lcm = math.lcm(*[t.denominator for t in heads[:n]]) if n else 1
    u = partial_lcm * 2 * na ** 2 * pval
    v = u * value
    if verify:
        series = psi_series(2 * m + 2, Fraction(2))
        pa = pade(series, m + 1, m)
        alt = sum(heads[:n], Fraction(0)) + pa.eval_exact(1 / na) / na
        if alt != value:
            raise IntegralityViolation(
                f"closed form and Pade route disagree at n={n}, m={m}")
    return ApproxPairS2(n=n, m=m, a=a, u=u, v=v)


def integrality_s2(n: int, m: int) -> tuple[int, int]:
    """d_{m+2}^2-scaled pair at a = 1; both entries must be integers."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    pair = zeta2_approx(n, m, Fraction(1), verify=False)
    d2 = Fraction(lcm_upto(m + 2)) ** 2
    su, sv = d2 * pair.u, d2 * pair.v
    if su.denominator != 1 or sv.denominator != 1:
        raise IntegralityViolation(f"scaled pair not integral at n={n}, m={m}")
    return int(su), int(sv)


def error_bound_s2(n: int, m: int, precision_bits: int = 128) -> mp.mpf:
    """Bound 2(m+1)(m+2) / (pi (2m+3) P_m(n+1)^2) on |zeta(2) - v/u| at a = 1."""
    pval = p_m_s2(m)(Fraction(n + 1))
    with mp.workprec(precision_bits):
        b = 2 * (m + 1) * (m + 2) / (mp.pi * (2 * m + 3))
        b /= (mp.mpf(pval.numerator) / pval.denominator) ** 2
        return +b


def linear_form_s2(n: int, m: int) -> tuple[int, int]:
    """Minimal integral linear form (U, V) with U zeta(2) - V -> 0 along m = n.

    U = d_{m+2}^2 P_m(n+1), V = U * value; integrality needs m >= n - 1
    so the head-term denominators divide the scaling.
    """
    if m < max(1, n - 1):
        raise ValueError("linear form needs m >= n - 1 (and m >= 1)")
    pair = zeta2_approx(n, m, Fraction(1), verify=False)
    pval = p_m_s2(m)(Fraction(n + 1))
    d2 = Fraction(lcm_upto(m + 2)) ** 2
    U = d2 * pval
    V = U * pair.value
    if U.denominator != 1 or V.denominator != 1:
        raise IntegralityViolation(f"linear form not integral at n={n}, m={m}")
    return int(U), int(V)


@dataclass(frozen=True)
class RateReportS2:
    """Geometric data for the m = r n scaling of the s = 2 linear forms."""

    r: Fraction
    sigma: mp.mpf
    rho: mp.mpf
    contraction: mp.mpf
    admissible: bool

    def to_json(self) -> dict:
        return {
            "r": format_rational(self.r),
            "sigma": mp.nstr(self.sigma, 12),
            "rho": mp.nstr(self.rho, 12),
            "contraction": mp.nstr(self.contraction, 12),
            "admissible": self.admissible,
        }


def rate_s2(r: Fraction, precision_bits: int = 128) -> RateReportS2:
    """sigma, rho and the contraction factor e^{2 max(r,1)} / rho(r).

    sigma(r) is the positive root of t^2 + r^2 t - r^2; admissibility
    means the scaled linear forms tend to zero geometrically.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("need r > 0")
    with mp.workprec(precision_bits):
        rf = mp.mpf(r.numerator) / r.denominator
        sigma = (-rf ** 2 + mp.sqrt(rf ** 4 + 4 * rf ** 2)) / 2
        rho = (rf + sigma) ** rf / ((1 - sigma) * (rf - sigma) ** rf)
        contraction = mp.e ** (2 * max(rf, mp.mpf(1))) / rho
        return RateReportS2(
            r=r, sigma=+sigma, rho=+rho, contraction=+contraction,
            admissible=bool(contraction < 1),
        )
