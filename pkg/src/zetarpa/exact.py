"""Exact rational scalars: Bernoulli numbers, LCM table, rising factorials.

All values are `fractions.Fraction` (arbitrary-precision rationals).  The
memo tables are guarded by locks so concurrent readers are safe.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .errors import PoleAtOne

__all__ = [
    "bernoulli",
    "lcm_upto",
    "pochhammer_scalar",
    "factorial",
    "binomial",
    "parse_rational",
    "format_rational",
]

# B_0, B_1 with the convention B_1 = -1/2 (the one under which the
# asymptotic series of the zeta remainder kernel has +t/2 as its linear term).
_BERNOULLI: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_BERNOULLI_LOCK = threading.Lock()

_LCM: list[int] = [1, 1]  # d_0 := 1 by convention, d_1 = 1
_LCM_LOCK = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k, exact, with B_1 = -1/2.

    Computed from the defining recurrence sum_{j<=n} C(n+1, j) B_j = 0 and
    memoized; O(k^2) rational operations for a fresh prefix.
    """
    if k < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if k >= len(_BERNOULLI):
        with _BERNOULLI_LOCK:
            while len(_BERNOULLI) <= k:
                n = len(_BERNOULLI)
                if n % 2 == 1:
                    _BERNOULLI.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for j in range(n):
                    if _BERNOULLI[j]:
                        acc += math.comb(n + 1, j) * _BERNOULLI[j]
                _BERNOULLI.append(-acc / (n + 1))
    return _BERNOULLI[k]


def lcm_upto(k: int) -> int:
    """d_k = lcm(1, 2, ..., k); the table grows incrementally and is cached."""
    if k < 1:
        raise ValueError("lcm_upto needs k >= 1")
    if k >= len(_LCM):
        with _LCM_LOCK:
            while len(_LCM) <= k:
                n = len(_LCM)
                _LCM.append(math.lcm(_LCM[n - 1], n))
    return _LCM[k]


def factorial(k: int) -> int:
    return math.factorial(k)


def binomial(n: int, k: int) -> int:
    """C(n, k) for integer n of any sign (generalized, always an integer)."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k) for n < 0
    return (-1) ** k * math.comb(k - n - 1, k)


def pochhammer_scalar(base: Fraction | int, k: int) -> Fraction:
    """Rising factorial (base)_k for k >= -1, with (base)_{-1} = 1/(base-1).

    Raises PoleAtOne when k = -1 and base = 1.
    """
    base = Fraction(base)
    if k < -1:
        raise ValueError("pochhammer is defined here for k >= -1 only")
    if k == -1:
        if base == 1:
            raise PoleAtOne("(1)_{-1} = 1/(1-1) is undefined")
        return 1 / (base - 1)
    out = Fraction(1)
    for i in range(k):
        out *= base + i
    return out


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q', 'p', or a plain decimal string exactly.

    Scientific notation is rejected so every accepted input has an
    obvious exact value.
    """
    s = text.strip()
    if "e" in s.lower():
        raise ValueError(f"scientific notation not accepted: {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    """Serialize as 'p/q', or just 'p' when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
