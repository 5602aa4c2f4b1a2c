"""Dense univariate polynomials over an exact field.

Coefficients are `Fraction` for polynomials over Q, or `RatFunc` for
polynomials whose coefficients live in Q(s).  The zero polynomial is the
empty coefficient list; any nonzero polynomial has a nonzero leading
coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import factorial, format_rational, parse_rational

__all__ = ["Poly", "binom_poly", "poly_gcd", "poly_divmod"]


class Poly:
    """Immutable dense polynomial; index i of `coeffs` is the x^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([Fraction(0), Fraction(1)])

    # -- structure ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        if not c:
            return Poly()
        return Poly([a * c for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        zero = self.coeffs[0] * 0
        return Poly([zero] * k + list(self.coeffs))

    def reverse(self, n: int | None = None) -> "Poly":
        """Coefficient reversal x^n * p(1/x); n defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal order below degree")
        if not self.coeffs:
            return self
        zero = self.coeffs[0] * 0
        pad = n - self.degree
        return Poly([zero] * pad + list(reversed(self.coeffs)))

    def __call__(self, x):
        """Horner evaluation; works for Fraction, RatFunc, mpf, mpc points."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> list[str]:
        """Coefficient strings, ascending degree (Fraction coefficients only)."""
        return [format_rational(Fraction(c)) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "Poly":
        return cls([parse_rational(t) for t in items])

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = format_rational(c) if isinstance(c, Fraction) else f"({c})"
            parts.append(cs if i == 0 else (f"{cs}*x^{i}" if i > 1 else f"{cs}*x"))
        return " + ".join(parts)


def binom_poly(shift: int, k: int) -> Poly:
    """The degree-k polynomial x -> C(x + shift, k), expanded in monomials."""
    if k < 0:
        raise ValueError("binom_poly needs k >= 0")
    out = Poly([Fraction(1)])
    for j in range(k):
        out = out * Poly([Fraction(shift - j), Fraction(1)])
    return out.scale(Fraction(1, factorial(k)))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division over a field; returns (quotient, remainder)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q: list = []
    r = list(a.coeffs)
    db, lb = b.degree, b.leading()
    while len(r) - 1 >= db and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < db:
            break
        c = r[-1] / lb
        d = len(r) - 1 - db
        if len(q) < d + 1:
            q.extend([Fraction(0)] * (d + 1 - len(q)))
        q[d] = c
        for i, bc in enumerate(b.coeffs):
            r[d + i] = r[d + i] - c * bc
        r.pop()
    return Poly(q), Poly(r)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the coefficient field (Euclidean algorithm)."""
    while not b.is_zero():
        _, rem = poly_divmod(a, b)
        a, b = b, rem
    if a.is_zero():
        return a
    return a.scale(1 / a.leading())
