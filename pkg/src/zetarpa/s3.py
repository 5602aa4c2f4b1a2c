"""Closed-form apparatus for zeta(3, a).

Mirror of the s = 2 module with even orthogonal polynomials of degree 2m,
the two-sided Newton basis nu_j, the theta basis whose pair moments are
those of x(1-x) on [0,1], cube-power integrality scalings, and the
cross-check against the classical integer sequence for zeta(3).
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
from .ratfunc import pochhammer

__all__ = [
    "raw_moment_s3",
    "s3_functional",
    "moment_s3",
    "nu_moment_s3",
    "theta_pair_moment_s3",
    "nu_poly",
    "theta_poly",
    "pi_m_s3",
    "theta_m_s3",
    "ApproxPairS3",
    "zeta3_approx",
    "integrality_s3",
    "error_bound_s3",
    "linear_form_s3",
    "RateReportS3",
    "rate_s3",
    "apery_numbers",
    "apery_crosscheck",
]

_PI_CACHE: list[Poly] = [Poly([Fraction(2)])]
_PI_LOCK = threading.Lock()


def raw_moment_s3(j: int) -> Fraction:
    """<x^4 c^(3), x^j> = (-1)^j B_{j+4} (3)_{j+3} / (j+4)!."""
    return ((-1) ** j * bernoulli(j + 4) * pochhammer(Fraction(3), j + 3)
            / factorial(j + 4))


def s3_functional() -> MomentFunctional:
    return MomentFunctional(raw_moment_s3)


def nu_poly(j: int) -> Poly:
    """Two-sided Newton basis: nu_{2j} = C(x-1,j) C(x+j,j), nu_{2j+1} = C(x-1,j+1) C(x+j,j)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    half, odd = divmod(j, 2)
    return binom_poly(-1, half + odd) * binom_poly(half, half)


def theta_poly(k: int) -> Poly:
    """theta_k = (-1)^k nu_{2k} / (k+1)^2; pair moments are x(1-x) moments on [0,1]."""
    return nu_poly(2 * k).scale(Fraction((-1) ** k, (k + 1) ** 2))


def moment_s3(k: int) -> Fraction:
    """Moment of nu_{2k}: (-1)^{k+1} (k+1)^2 / (2 (k+3) (k+2))."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Fraction((-1) ** (k + 1) * (k + 1) ** 2, 2 * (k + 3) * (k + 2))


def nu_moment_s3(j: int) -> Fraction:
    """Moment of nu_j; odd-index moments are the negatives of the even ones."""
    half, odd = divmod(j, 2)
    base = moment_s3(half)
    return -base if odd else base


def theta_pair_moment_s3(k: int, j: int) -> Fraction:
    """<theta_k theta_j> = 1/(2(k+j+3)) - 1/(2(k+j+2))."""
    return Fraction(1, 2 * (k + j + 3)) - Fraction(1, 2 * (k + j + 2))


def _pi_recurrence(m: int) -> Poly:
    # Pi_{m+1} = (2(2m+3)/((m+1)(m+2)^2) x^2 + (2m+3)/(m+2)) Pi_m - (m+1)/(m+2) Pi_{m-1}
    with _PI_LOCK:
        while len(_PI_CACHE) <= m:
            mm = len(_PI_CACHE) - 1
            cur = _PI_CACHE[mm]
            prev = _PI_CACHE[mm - 1] if mm >= 1 else Poly()
            c2 = Fraction(2 * (2 * mm + 3), (mm + 1) * (mm + 2) ** 2)
            c0 = Fraction(2 * mm + 3, mm + 2)
            cp = Fraction(mm + 1, mm + 2)
            nxt = cur.shift(2).scale(c2) + cur.scale(c0) - prev.scale(cp)
            _PI_CACHE.append(nxt)
        return _PI_CACHE[m]


def _pi_binomial(m: int) -> Poly:
    out = Poly()
    for k in range(m + 1):
        coef = Fraction(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1), k + 1)
        out = out + nu_poly(2 * k).scale(coef)
    return out


def _pi_determinant(m: int) -> Poly:
    # theta basis keeps the moment matrix a Hankel matrix of a positive
    # measure, hence nonsingular; normalize by the value at 1 as for s = 2.
    fun = MomentFunctional(raw_moment_s3)
    basis = [theta_poly(k) for k in range(m + 1)]
    return orth_poly_determinant(fun, basis, m, ("value", 1, (m + 1) * (m + 2)))


def pi_m_s3(m: int, route: str = "recurrence") -> Poly:
    """Even orthogonal polynomial of degree 2m for the s = 3 kernel functional."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if route == "recurrence":
        return _pi_recurrence(m)
    if route == "binomial_sum":
        return _pi_binomial(m)
    if route == "determinant":
        return _pi_determinant(m)
    raise ValueError(f"unknown route {route!r}")


def _theta_associated(m: int) -> Poly:
    return associated_poly(s3_functional(), pi_m_s3(m))


def _theta_compact(m: int) -> Poly:
    # sum_k C(m+1,k+1) C(m+k+2,k+1)/(k+1) sum_{p=1..k} (-1)^p/(2(p+1)(p+2))
    #       * t * nu_{2k}(t)/nu_{2p}(t)
    # where nu_{2k}/nu_{2p} = C(t-p-1, k-p) C(t+k, k-p) / C(k, p)^2 exactly.
    t = Poly.x()
    out = Poly()
    for k in range(m + 1):
        outer = Fraction(binomial(m + 1, k + 1) * binomial(m + k + 2, k + 1), k + 1)
        for p in range(1, k + 1):
            quot = binom_poly(-p - 1, k - p) * binom_poly(k, k - p)
            coef = outer * Fraction((-1) ** p, 2 * (p + 1) * (p + 2) * binomial(k, p) ** 2)
            out = out + (t * quot).scale(coef)
    return out


def theta_m_s3(m: int, route: str = "associated") -> Poly:
    """Associated polynomial Theta_{m-1} of the even orthogonal polynomial.

    Degree is 2m - 1 (the printed compact form suggests 2m - 2, but the
    odd-moment structure adds one).  Both routes agree exactly.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Poly()
    if route == "associated":
        return _theta_associated(m)
    if route == "compact":
        return _theta_compact(m)
    raise ValueError(f"unknown route {route!r}")


@dataclass(frozen=True)
class ApproxPairS3:
    """Exact pair f/g approximating zeta(3, a); g clears heads and Pi_m(n+a)."""

    n: int
    m: int
    a: Fraction
    f: Fraction
    g: Fraction

    @property
    def value(self) -> Fraction:
        return self.f / self.g

    def to_json(self) -> dict:
        return {
            "n": self.n, "m": self.m, "a": format_rational(self.a),
            "f": format_rational(self.f), "g": format_rational(self.g),
        }


def zeta3_approx(n: int, m: int, a: Fraction = Fraction(1), verify: bool = True) -> ApproxPairS3:
    """Head terms plus the [2m+2/2m] kernel correction, assembled exactly.

    f/g = sum_{k<n} (k+a)^{-3} + 1/(2(n+a)^2) + 1/(2(n+a)^3) + 1/(4(n+a)^4)
          + eps_m(a)/(n+a)^5
    with eps_m(a) = Theta_{m-1}(n+a)/Pi_m(n+a).  verify=True replays the
    value through the generic Pade engine.
    """
    a = Fraction(a)
    if n < 0 or m < 0 or a <= 0:
        raise ValueError("need n, m >= 0 and a > 0")
    na = n + a
    partial = [1 / (Fraction(k) + a) ** 3 for k in range(n)]
    heads = partial + [1 / (2 * na ** 2), 1 / (2 * na ** 3), 1 / (4 * na ** 4)]
    pival = pi_m_s3(m)(na)
    if pival == 0:
        raise IntegralityViolation("orthogonal polynomial vanished at n + a")
    eps = theta_m_s3(m)(na) / pival if m >= 1 else Fraction(0)
    value = sum(heads) + eps / na ** 5
    partial_lcm = math.lcm(*[t.denominator for t in partial]) if n else 1
    g = partial_lcm * 4 * na ** 5 * pival
    f = g * value
    if verify and m >= 1:
        series = psi_series(4 * m + 3, Fraction(3))
        pa = pade(series, 2 * m + 2, 2 * m)
        alt = sum(partial, Fraction(0)) + pa.eval_exact(1 / na) / na ** 2
        if alt != value:
            raise IntegralityViolation(
                f"closed form and Pade route disagree at n={n}, m={m}")
    return ApproxPairS3(n=n, m=m, a=a, f=f, g=g)


def integrality_s3(n: int, m: int) -> tuple[int, int]:
    """d_{m+1}^3-scaled pair at a = 1; both entries must be integers."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    pair = zeta3_approx(n, m, Fraction(1), verify=False)
    d3 = Fraction(lcm_upto(m + 1)) ** 3
    sg, sf = d3 * pair.g, d3 * pair.f
    if sg.denominator != 1 or sf.denominator != 1:
        raise IntegralityViolation(f"scaled pair not integral at n={n}, m={m}")
    return int(sg), int(sf)


def error_bound_s3(n: int, m: int, precision_bits: int = 128) -> mp.mpf:
    """Bound (m+1)(m+2) / (3 (2m+3) Pi_m(n+1)^2) on |zeta(3) - f/g| at a = 1."""
    pival = pi_m_s3(m)(Fraction(n + 1))
    with mp.workprec(precision_bits):
        b = mp.mpf((m + 1) * (m + 2)) / (3 * (2 * m + 3))
        b /= (mp.mpf(pival.numerator) / pival.denominator) ** 2
        return +b


def linear_form_s3(n: int, m: int) -> tuple[int, int]:
    """Minimal integral linear form (G, F) with G zeta(3) - F -> 0 along m = n.

    G = d_{m+1}^3 * 4 (n+1)^5 Pi_m(n+1), F = G * value; needs m >= n - 1.
    """
    if m < max(1, n - 1):
        raise ValueError("linear form needs m >= n - 1 (and m >= 1)")
    pair = zeta3_approx(n, m, Fraction(1), verify=False)
    na = Fraction(n + 1)
    d3 = Fraction(lcm_upto(m + 1)) ** 3
    G = d3 * 4 * na ** 5 * pi_m_s3(m)(na)
    F = G * pair.value
    if G.denominator != 1 or F.denominator != 1:
        raise IntegralityViolation(f"linear form not integral at n={n}, m={m}")
    return int(G), int(F)


@dataclass(frozen=True)
class RateReportS3:
    """Geometric data for the m = r n scaling of the s = 3 linear forms."""

    r: Fraction
    mu: mp.mpf
    eta: mp.mpf
    contraction: mp.mpf
    admissible: bool

    def to_json(self) -> dict:
        return {
            "r": format_rational(self.r),
            "mu": mp.nstr(self.mu, 12),
            "eta": mp.nstr(self.eta, 12),
            "contraction": mp.nstr(self.contraction, 12),
            "admissible": self.admissible,
        }


def rate_s3(r: Fraction, precision_bits: int = 128) -> RateReportS3:
    """mu, eta and the contraction factor e^{3 max(r,1)} / eta(r).

    mu(r) = r / sqrt(1 + r^2) solves (1-t^2)(r^2-t^2) = t^4.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("need r > 0")
    with mp.workprec(precision_bits):
        rf = mp.mpf(r.numerator) / r.denominator
        mu_v = rf / mp.sqrt(1 + rf ** 2)
        eta = (1 + mu_v) * (rf + mu_v) ** rf / ((1 - mu_v) * (rf - mu_v) ** rf)
        contraction = mp.e ** (3 * max(rf, mp.mpf(1))) / eta
        return RateReportS3(
            r=r, mu=+mu_v, eta=+eta, contraction=+contraction,
            admissible=bool(contraction < 1),
        )


def apery_numbers(count: int) -> list[int]:
    """First `count` terms of 1, 5, 73, ... from the three-term recurrence
    (n+1)^3 b_{n+1} = (34 n^3 + 51 n^2 + 27 n + 5) b_n - n^3 b_{n-1}."""
    if count < 1:
        return []
    b = [Fraction(1), Fraction(5)]
    while len(b) < count:
        n = len(b) - 1
        nxt = ((34 * n ** 3 + 51 * n ** 2 + 27 * n + 5) * b[n] - n ** 3 * b[n - 1])
        b.append(nxt / (n + 1) ** 3)
    out = []
    for x in b[:count]:
        if x.denominator != 1:
            raise IntegralityViolation("recurrence left the integers")
        out.append(int(x))
    return out


def apery_crosscheck(m_max: int, precision_bits: int = 256) -> list[dict]:
    """Diagnostic: the [2m-1/2m] pipeline at t = 1/(m+1) against the classical sequence.

    For each m the exact value p/q is computed, the d_m^3-supported part
    of q is stripped, and the remainder compared with b_m; the report also
    carries the linear form |zeta(3) q' - p'| and its m-th root.
    """
    if m_max < 1:
        raise ValueError("need m_max >= 1")
    from .oracle import constants

    z3 = constants("zeta3", precision_bits + 16)
    bs = apery_numbers(m_max + 1)
    report = []
    for m in range(1, m_max + 1):
        series = psi_series(4 * m, Fraction(3))
        pa = pade(series, 2 * m - 1, 2 * m)
        t = Fraction(1, m + 1)
        value = sum(Fraction(1, (k + 1) ** 3) for k in range(m))
        value += pa.eval_exact(t) * t ** 2
        q = value.denominator
        p = value.numerator
        d3 = lcm_upto(m) ** 3
        stripped = q // math.gcd(q, d3)
        scaled_p = value * stripped  # rational; denominator divides d_m^3
        with mp.workprec(precision_bits + 16):
            lin = abs(z3 * stripped - mp.mpf(scaled_p.numerator) / scaled_p.denominator)
            rate = lin ** (mp.mpf(1) / m)
            report.append({
                "m": m,
                "numerator": str(p),
                "denominator": str(q),
                "stripped_denominator": str(stripped),
                "reference": str(bs[m]),
                "exact_match": stripped == bs[m],
                "reference_ratio": format_rational(Fraction(bs[m], stripped)),
                "linear_form": mp.nstr(+lin, 8),
                "rate": mp.nstr(+rate, 8),
            })
    return report
