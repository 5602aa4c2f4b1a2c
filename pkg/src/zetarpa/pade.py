"""Pade approximants over an exact field, plus the orthogonal-polynomial view.

The solver works over any exact field whose elements support +, -, *, /
and compare against 0 (Fraction and RatFunc both qualify).  The Hankel
system for the denominator is eliminated fraction-free (Bareiss), so no
floating point or conditioning questions arise anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DegenerateTable, InsufficientCoefficients, ZeroDeterminant
from .poly import Poly
from .ratfunc import RatFunc

__all__ = [
    "PadeApprox",
    "pade",
    "pade_shifted",
    "verify_contact",
    "same_ratfunc",
    "MomentFunctional",
    "orth_poly_determinant",
    "associated_poly",
    "solve_exact",
    "det_exact",
]


def _zero_of(sample):
    return sample * 0


def _one_of(sample):
    return sample * 0 + 1


def solve_exact(rows: list[list], rhs: list) -> list:
    """Solve a square system by fraction-free (Bareiss) elimination.

    Entries are exact field elements; every division performed is exact.
    Raises DegenerateTable when the matrix is singular.
    """
    n = len(rows)
    if n == 0:
        return []
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    one = _one_of(M[0][0])
    prev = one
    for k in range(n):
        piv = next((r for r in range(k, n) if M[r][k] != 0), None)
        if piv is None:
            raise DegenerateTable("singular linear system")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev
            M[i][k] = _zero_of(M[i][k])
        prev = M[k][k]
    # back substitution
    x = [None] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n]
        for j in range(i + 1, n):
            acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x


def det_exact(rows: list[list]):
    """Determinant by Bareiss elimination with row-swap sign tracking."""
    n = len(rows)
    M = [list(r) for r in rows]
    if n == 0:
        return Fraction(1)
    one = _one_of(M[0][0])
    prev = one
    sign = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if M[r][k] != 0), None)
        if piv is None:
            return _zero_of(M[0][0])
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


@dataclass(frozen=True)
class PadeApprox:
    """Rational approximant [m1/m2]: num/den with den(0) = 1.

    `contact_order` is the guaranteed order of contact with the source
    series: den*f - num = O(t^contact_order).
    """

    num: Poly
    den: Poly
    m1: int
    m2: int
    contact_order: int

    def __call__(self, t):
        return self.num(t) / self.den(t)

    def eval_exact(self, t: Fraction):
        """Value at a rational point, in the coefficient field."""
        return self.num(Fraction(t)) / self.den(Fraction(t))

    def field_tag(self) -> str:
        sample = self.den[0]
        return "Q(s)" if isinstance(sample, RatFunc) else "Q"

    def to_json(self) -> dict:
        tag = self.field_tag()
        if tag == "Q":
            num, den = self.num.to_json(), self.den.to_json()
        else:
            num = [c.to_json() if isinstance(c, RatFunc) else RatFunc.const(c).to_json()
                   for c in self.num.coeffs]
            den = [c.to_json() if isinstance(c, RatFunc) else RatFunc.const(c).to_json()
                   for c in self.den.coeffs]
        return {"m1": self.m1, "m2": self.m2, "num": num, "den": den, "field": tag}

    @classmethod
    def from_json(cls, obj: dict) -> "PadeApprox":
        if obj["field"] == "Q":
            num, den = Poly.from_json(obj["num"]), Poly.from_json(obj["den"])
        else:
            num = Poly([RatFunc.from_json(c) for c in obj["num"]])
            den = Poly([RatFunc.from_json(c) for c in obj["den"]])
        return cls(num, den, obj["m1"], obj["m2"], obj["m1"] + obj["m2"] + 1)


def _coerce_series(series: Sequence) -> list:
    out = []
    for c in series:
        out.append(Fraction(c) if isinstance(c, int) else c)
    return out


def pade(series: Sequence, m1: int, m2: int) -> PadeApprox:
    """[m1/m2] approximant of the series c_0 + c_1 t + ...

    Solves the m2 x m2 Hankel system for the denominator (normalized to
    den(0) = 1), then convolves for the numerator.  Exact throughout.
    """
    if m1 < 0 or m2 < 0:
        raise ValueError("Pade orders must be nonnegative")
    c = _coerce_series(series)
    if len(c) < m1 + m2 + 1:
        raise InsufficientCoefficients(
            f"[{m1}/{m2}] needs {m1 + m2 + 1} coefficients, got {len(c)}")
    zero = _zero_of(c[0])
    one = _one_of(c[0])

    def at(i: int):
        return c[i] if 0 <= i < len(c) else zero

    if m2 == 0:
        q = [one]
    else:
        rows = [[at(m1 + k - j) for j in range(1, m2 + 1)] for k in range(1, m2 + 1)]
        rhs = [-at(m1 + k) for k in range(1, m2 + 1)]
        try:
            q_tail = solve_exact(rows, rhs)
        except DegenerateTable:
            raise DegenerateTable(f"[{m1}/{m2}] entry is non-normal") from None
        q = [one] + q_tail
    p = []
    for i in range(m1 + 1):
        acc = zero
        for j in range(min(i, m2) + 1):
            acc = acc + q[j] * at(i - j)
        p.append(acc)
    return PadeApprox(Poly(p), Poly(q), m1, m2, m1 + m2 + 1)


def pade_shifted(series: Sequence, m2: int, p: int) -> PadeApprox:
    """[m2+p/m2] via the shift identity: explicit head + t^{p+1} [m2-1/m2] of the tail.

    Equals pade(series, m2+p, m2) as a rational function whenever both exist.
    """
    if p < 1:
        raise ValueError("shift route needs p >= 1")
    c = _coerce_series(series)
    if len(c) < 2 * m2 + p + 1:
        raise InsufficientCoefficients(
            f"shift route needs {2 * m2 + p + 1} coefficients, got {len(c)}")
    tail = pade(c[p + 1:], m2 - 1, m2)
    head = Poly(c[: p + 1])
    num = head * tail.den + tail.num.shift(p + 1)
    return PadeApprox(num, tail.den, m2 + p, m2, m2 + p + m2 + 1)


def verify_contact(series: Sequence, pa: PadeApprox) -> int:
    """First power of t where den*f - num has a nonzero coefficient.

    Returns len(series) when no discrepancy is visible in the prefix.
    """
    c = _coerce_series(series)
    zero = _zero_of(c[0])
    for i in range(len(c)):
        acc = zero
        for j in range(min(i, pa.den.degree) + 1):
            acc = acc + pa.den[j] * c[i - j]
        acc = acc - pa.num[i]
        if acc != 0:
            return i
    return len(c)


def same_ratfunc(a: PadeApprox, b: PadeApprox) -> bool:
    """Equality as rational functions (cross-multiplied, exact)."""
    return a.num * b.den == b.num * a.den


class MomentFunctional:
    """Linear functional on polynomials given by its monomial moments.

    `moment(j)` returns <c, x^j>; `apply` extends linearly to any Poly.
    The pair table <c, e_i e_j> over a supplied basis is what the
    determinant construction consumes.
    """

    def __init__(self, moment_fn: Callable[[int], object]):
        self._fn = moment_fn
        self._memo: dict[int, object] = {}

    @classmethod
    def from_series(cls, coeffs: Sequence, shift: int = 0) -> "MomentFunctional":
        """Shifted-coefficient functional <c^(shift), x^j> = c_{j+shift} (zero below index 0)."""
        c = _coerce_series(coeffs)
        zero = _zero_of(c[0])

        def fn(j: int):
            i = j + shift
            if i < 0:
                return zero
            if i >= len(c):
                raise InsufficientCoefficients(f"moment {j} needs coefficient {i}")
            return c[i]

        return cls(fn)

    def moment(self, j: int):
        if j not in self._memo:
            self._memo[j] = self._fn(j)
        return self._memo[j]

    def apply(self, p: Poly):
        acc = None
        for j, coeff in enumerate(p.coeffs):
            term = coeff * self.moment(j)
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    def pair_moment(self, e_i: Poly, e_j: Poly):
        return self.apply(e_i * e_j)


def orth_poly_determinant(
    fun: MomentFunctional,
    basis: Sequence[Poly],
    n: int,
    normalization: tuple,
) -> Poly:
    """Degree-n orthogonal polynomial from the moment determinant.

    Rows 0..n-1 hold the pair moments <c, e_j e_i>; the last row is the
    basis itself, expanded by cofactors.  `normalization` pins the free
    scalar: ("value", x0, target) or ("leading", target).
    """
    if len(basis) < n + 1:
        raise ValueError("basis too short")
    alpha = [[fun.pair_moment(basis[j], basis[i]) for j in range(n + 1)]
             for i in range(n)]
    out = Poly()
    for j in range(n + 1):
        minor = [[alpha[i][jj] for jj in range(n + 1) if jj != j] for i in range(n)]
        cof = det_exact(minor) if n > 0 else Fraction(1)
        sign = (-1) ** (n + j)
        out = out + basis[j].scale(sign * cof)
    if out.is_zero():
        raise ZeroDeterminant("moment determinant vanished")
    kind = normalization[0]
    if kind == "value":
        _, x0, target = normalization
        cur = out(Fraction(x0))
        if cur == 0:
            raise ZeroDeterminant(f"cannot normalize: value at {x0} is 0")
        return out.scale(Fraction(target) / cur)
    if kind == "leading":
        _, target = normalization
        return out.scale(Fraction(target) / out.leading())
    raise ValueError(f"unknown normalization {kind!r}")


def associated_poly(fun: MomentFunctional, p: Poly) -> Poly:
    """R(t) = <c_x, (p(x) - p(t)) / (x - t)>, degree <= deg p - 1.

    Uses (x^j - t^j)/(x - t) = sum_{i<j} x^i t^{j-1-i} so only raw moments
    up to deg p - 1 are needed.
    """
    if p.degree <= 0:
        return Poly()
    out = [None] * p.degree
    for j, coeff in enumerate(p.coeffs):
        if not coeff:
            continue
        for i in range(j):
            term = coeff * fun.moment(i)
            r = j - 1 - i
            out[r] = term if out[r] is None else out[r] + term
    zero = _zero_of(p.coeffs[-1])
    return Poly([zero if c is None else c for c in out])
