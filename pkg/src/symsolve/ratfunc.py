"""Rational functions num/den over an exact coefficient field.

Normalized form: gcd(num, den) = 1 and den monic, so equality is
structural.  The coefficient field is whatever the underlying Poly
carries (rationals or a number field).
"""

from __future__ import annotations

from fractions import Fraction

from .poly import P, Poly, poly_gcd

__all__ = ["RatFunc", "RF"]


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None, reduce: bool = True):
        if not isinstance(num, Poly):
            num = Poly.const(Fraction(num) if isinstance(num, int) else num)
        if den is None:
            den = Poly.const(Fraction(1))
        elif not isinstance(den, Poly):
            den = Poly.const(Fraction(den) if isinstance(den, int) else den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num = Poly()
            self.den = Poly.const(Fraction(1))
            return
        if den.degree == 0:
            lc = den.lead()
            if lc != 1:
                inv = Fraction(1) / lc if isinstance(lc, (int, Fraction)) else 1 / lc
                num = num * inv
            self.num = num
            self.den = Poly.const(Fraction(1))
            return
        if reduce:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lead()
        if lc != 1:
            inv = Fraction(1) / lc if isinstance(lc, (int, Fraction)) else 1 / lc
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly.const(Fraction(c) if isinstance(c, int) else c))

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p)

    # -- queries ----------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if self.den.degree != 0:
            raise ValueError("not a polynomial")
        return self.num  # den is monic constant 1

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def valuation_at_infinity(self) -> int:
        """deg den - deg num; raises on 0."""
        if not self.num:
            raise ValueError("zero has no valuation")
        return self.den.degree - self.num.degree

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, reduce=False)
        # scalar of the coefficient field (int, Fraction, number field element)
        try:
            return RatFunc(
                Poly.const(Fraction(other) if isinstance(other, int) else other),
                reduce=False,
            )
        except Exception:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFunc(self.num + o.num, reduce=False)
        g = poly_gcd(self.den, o.den)
        if g.degree > 0:
            da = self.den.exact_div(g)
            db = o.den.exact_div(g)
            return RatFunc(self.num * db + o.num * da, da * o.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return RatFunc(Poly())
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFunc(self.num * o.num, reduce=False)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = o.den.exact_div(g1) if g1.degree > 0 else o.den
        n2 = o.num.exact_div(g2) if g2.degree > 0 else o.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFunc(o.den, o.num, reduce=False)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            if not self:
                raise ZeroDivisionError
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n, reduce=False)

    # -- maps ------------------------------------------------------------------

    def shift(self, a) -> "RatFunc":
        """x -> x + a."""
        return RatFunc(self.num.shift(a), self.den.shift(a), reduce=False)

    def eval(self, v):
        dv = self.den.eval(v)
        if not dv:
            raise ZeroDivisionError(f"pole at {v}")
        nv = self.num.eval(v)
        if isinstance(nv, int):
            nv = Fraction(nv)
        if isinstance(dv, int):
            dv = Fraction(dv)
        return nv / dv

    def __call__(self, v):
        return self.eval(v)

    def map_coeffs(self, f) -> "RatFunc":
        return RatFunc(self.num.map_coeffs(f), self.den.map_coeffs(f))

    # -- printing -----------------------------------------------------------------

    def to_str(self, var: str = "x") -> str:
        if self.den.degree == 0:
            return self.num.to_str(var)
        ns = self.num.to_str(var)
        ds = self.den.to_str(var)
        if self.num.degree > 0 or self.num and self.num.lead() != 1:
            ns = f"({ns})"
        return f"{ns}/({ds})"

    def __repr__(self):
        return f"RatFunc({self.to_str()})"


def RF(num, den=1) -> RatFunc:
    """Rational function from int/Fraction coefficient lists or polys."""

    def topoly(v):
        if isinstance(v, Poly):
            return v
        if isinstance(v, (list, tuple)):
            return Poly(tuple(Fraction(c) for c in v))
        return Poly.const(Fraction(v))

    return RatFunc(topoly(num), topoly(den))
