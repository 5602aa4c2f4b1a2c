"""The rational-function field Q(s).

`RatFunc` holds a reduced numerator/denominator pair of Fraction-coefficient
polynomials with a monic denominator, so equal field elements compare equal
structurally.  Arithmetic mixes freely with int and Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PoleAtOne, ZeroDenominator
from .poly import Poly, poly_divmod, poly_gcd

__all__ = ["RatFunc", "pochhammer"]


def _coerce_poly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly([Fraction(v)])


class RatFunc:
    """Element of Q(s) in canonical form (reduced, monic denominator)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly([Fraction(1)])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = poly_divmod(num, g)
            den, _ = poly_divmod(den, g)
        lead = den.leading()
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num, self.den = num, den

    # -- constructors ----------------------------------------------------------

    @classmethod
    def s(cls) -> "RatFunc":
        """The field generator (the formal variable)."""
        return cls(Poly.x())

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly([Fraction(c)]))

    # -- predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num[0]) if self.num.coeffs else Fraction(0)

    # -- arithmetic ---------------------------------------------------------------

    def _wrap(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDenominator("division by zero in Q(s)")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc.const(1) / self ** (-k)
        out = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- evaluation ---------------------------------------------------------------

    def eval(self, s_value: Fraction | int) -> Fraction:
        """Evaluate at a rational point; the point must not be a pole."""
        d = self.den(Fraction(s_value))
        if d == 0:
            if Fraction(s_value) == 1:
                raise PoleAtOne("evaluation at the pole s = 1")
            raise ZeroDenominator(f"evaluation at a pole: s = {s_value}")
        return self.num(Fraction(s_value)) / d

    # -- serialization ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFunc":
        return cls(Poly.from_json(obj["num"]), Poly.from_json(obj["den"]))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        num = str(self.num).replace("x", "s")
        if self.den.degree == 0:
            return num
        return f"({num})/({str(self.den).replace('x', 's')})"


def pochhammer(base, k: int):
    """Rising factorial (base)_k in the field of `base`, k >= -1.

    (base)_0 = 1, (base)_{-1} = 1/(base - 1).  `base` may be an int,
    Fraction, or RatFunc; the result stays in the same field.
    """
    if k < -1:
        raise ValueError("pochhammer is defined here for k >= -1 only")
    if isinstance(base, RatFunc):
        if k == -1:
            return RatFunc.const(1) / (base - 1)
        out = RatFunc.const(1)
        for i in range(k):
            out = out * (base + i)
        return out
    from .exact import pochhammer_scalar

    return pochhammer_scalar(base, k)
