"""Independent reference values of zeta(s, a) for acceptance testing.

Two routes that share nothing with the Pade pipeline: truncated Dirichlet
sum with Euler-Maclaurin tail correction (primary for s > 1), and the
classical integral formula (used alone for s <= 1, where the sum route
computes the continuation less directly).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import PoleAtOne
from .exact import bernoulli

__all__ = ["OracleConfig", "zeta_ref", "constants"]


@dataclass(frozen=True)
class OracleConfig:
    precision_bits: int = 200
    method: str = "auto"  # auto | euler_maclaurin | hermite


def _euler_maclaurin(s: Fraction, a: Fraction, prec: int) -> mp.mpf:
    # sum_{k<N} (k+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
    #   + sum_j B_{2j} (s)_{2j-1} (N+a)^{-s-2j+1} / (2j)!
    # J grows until the next correction falls below budget; the terms
    # decrease before they diverge, and the first omitted one bounds the error.
    with mp.workprec(prec + 24):
        sf = mp.mpf(s.numerator) / s.denominator
        N = max(prec, int(2 * abs(sf)) + 1, 10)
        total = mp.mpf(0)
        for k in range(N):
            base = k + a
            total += (mp.mpf(base.numerator) / base.denominator) ** (-sf)
        na = N + a
        naf = mp.mpf(na.numerator) / na.denominator
        total += naf ** (1 - sf) / (sf - 1) + naf ** (-sf) / 2
        budget = mp.mpf(2) ** (-(prec + 12))
        prev = mp.inf
        poch = mp.mpf(1)  # (s)_{2j-1} built incrementally
        fact = mp.mpf(1)
        j = 0
        while True:
            j += 1
            if j == 1:
                poch = sf
                fact = mp.mpf(2)
            else:
                poch *= (sf + 2 * j - 3) * (sf + 2 * j - 2)
                fact *= (2 * j - 1) * (2 * j)
            b = bernoulli(2 * j)
            term = (mp.mpf(b.numerator) / b.denominator) * poch * naf ** (-sf - 2 * j + 1) / fact
            if abs(term) > abs(prev):
                break  # asymptotic tail started diverging; stop at the optimum
            total += term
            if abs(term) < budget:
                break
            prev = term
        return +total


def zeta_ref(s: Fraction, a: Fraction, cfg: OracleConfig | None = None) -> mp.mpf:
    """Reference zeta(s, a) with absolute error below 2^-precision_bits."""
    cfg = cfg or OracleConfig()
    s, a = Fraction(s), Fraction(a)
    if s == 1:
        raise PoleAtOne("zeta(s, a) has its pole at s = 1")
    if a <= 0:
        raise ValueError("need a > 0")
    method = cfg.method
    if method == "auto":
        method = "euler_maclaurin" if s > 1 else "hermite"
    if method == "euler_maclaurin":
        with mp.workprec(cfg.precision_bits + 8):
            return +_euler_maclaurin(s, a, cfg.precision_bits)
    if method == "hermite":
        from .weights import QuadratureConfig, hermite_zeta

        with mp.workprec(cfg.precision_bits + 8):
            return +hermite_zeta(s, a, QuadratureConfig(precision_bits=cfg.precision_bits + 8))
    raise ValueError(f"unknown oracle method {cfg.method!r}")


def constants(name: str, precision_bits: int = 128) -> mp.mpf:
    """pi, zeta2, zeta3 (and zeta4) at the requested precision."""
    with mp.workprec(precision_bits + 8):
        if name == "pi":
            return +mp.pi
        if name == "zeta2":
            return +(mp.pi ** 2 / 6)
        if name == "zeta4":
            return +(mp.pi ** 4 / 90)
        if name == "zeta3":
            return +zeta_ref(Fraction(3), Fraction(1),
                             OracleConfig(precision_bits=precision_bits + 8))
        raise ValueError(f"unknown constant {name!r}")
