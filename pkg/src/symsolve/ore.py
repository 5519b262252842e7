"""The skew ring D = F(x)[S] of linear difference operators.

S is the shift x -> x+1, with the commutation rule S*f(x) = f(x+1)*S.
Coefficients are RatFunc over Q or over a quadratic number field; an
operator is stored exactly (no silent rescaling), while canonical() gives
the content-normalized representative of the left F(x)-orbit used for
equality of solution spaces, hashing, and printing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .fieldext import NFElem
from .poly import Poly, poly_gcd, poly_lcm
from .ratfunc import RatFunc

__all__ = ["Operator", "tau_power", "solution_window"]


def _to_ratfunc(c) -> RatFunc:
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, Poly):
        return RatFunc(c, reduce=False)
    if isinstance(c, int):
        c = Fraction(c)
    return RatFunc(Poly.const(c), reduce=False)


class Operator:
    """Difference operator sum a_i * S^i with rational-function a_i."""

    __slots__ = ("coeffs", "_canon")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_to_ratfunc(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._canon = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_polys(cls, polys: Sequence[Poly]) -> "Operator":
        return cls(polys)

    @classmethod
    def identity(cls) -> "Operator":
        return cls((RatFunc(Poly.const(Fraction(1)), reduce=False),))

    @classmethod
    def tau(cls) -> "Operator":
        one = RatFunc(Poly.const(Fraction(1)), reduce=False)
        return cls((RatFunc(Poly(), reduce=False), one))

    # -- queries ------------------------------------------------------------

    @property
    def order(self) -> int:
        """ord(L); the zero operator gets -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i: int) -> RatFunc:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFunc(Poly(), reduce=False)

    def leading(self) -> RatFunc:
        return self.coeffs[-1]

    def trailing(self) -> RatFunc:
        return self.coeffs[0]

    def is_normal(self) -> bool:
        """a_0 != 0 (and nonzero operator)."""
        return bool(self.coeffs) and bool(self.coeffs[0])

    def is_full(self) -> bool:
        return bool(self.coeffs) and all(bool(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- canonical form -------------------------------------------------------

    def poly_coeffs(self) -> List[Poly]:
        """Coefficients with denominators cleared by their least common
        multiple (this multiplies the operator by a unit of F(x))."""
        if not self.coeffs:
            return []
        den = Poly.const(Fraction(1))
        for c in self.coeffs:
            if c:
                den = poly_lcm(den, c.den)
        out = []
        for c in self.coeffs:
            if not c:
                out.append(Poly())
            else:
                out.append(c.num * den.exact_div(c.den))
        return out

    def canonical(self) -> "Operator":
        """Representative of {f(x)·L}: cleared polynomial coefficients,
        rational content 1 with positive leading coefficient of a_d
        (leading coefficient of a_d monic over a number field)."""
        if self._canon is not None:
            return self._canon
        if not self.coeffs:
            self._canon = self
            return self
        polys = self.poly_coeffs()
        g = Poly()
        for p in polys:
            if p:
                g = poly_gcd(g, p)
        if g.degree > 0:
            polys = [p.exact_div(g) if p else p for p in polys]
        rational = all(p.is_rational() for p in polys)
        if rational:
            content = Fraction(0)
            from math import gcd as igcd

            num = 0
            den = 1
            for p in polys:
                c = p.content()
                num = igcd(num, c.numerator)
                den = den * c.denominator // igcd(den, c.denominator)
            content = Fraction(num, den)
            if polys[-1].lead() < 0:
                content = -content
            polys = [p * (Fraction(1) / content) for p in polys]
        else:
            inv = 1 / polys[-1].lead()
            polys = [p * inv for p in polys]
        canon = Operator(polys)
        canon._canon = canon
        self._canon = canon
        return canon

    def same_solution_space(self, other: "Operator") -> bool:
        return self.canonical() == other.canonical()

    # -- ring operations ---------------------------------------------------------

    def shift_coeffs(self, k: int) -> "Operator":
        """S^k · L · S^(-k): substitute x -> x+k in every coefficient."""
        return Operator(tuple(c.shift(k) if c else c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Operator):
            other = Operator((_to_ratfunc(other),))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Operator(out)

    __radd__ = __add__

    def __neg__(self):
        return Operator(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Operator):
            other = Operator((_to_ratfunc(other),))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Operator composition (self applied after other)."""
        if not isinstance(other, Operator):
            other = Operator((_to_ratfunc(other),))
        if not self.coeffs or not other.coeffs:
            return Operator()
        out = [RatFunc(Poly(), reduce=False)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                out[i + j] = out[i + j] + a * b.shift(i)
        return Operator(out)

    def __rmul__(self, other):
        # scalar * L
        return Operator((_to_ratfunc(other),)) * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative operator power")
        result = Operator.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scalar_mul(self, c) -> "Operator":
        c = _to_ratfunc(c)
        return Operator(tuple(c * a for a in self.coeffs))

    # -- division ---------------------------------------------------------------

    def right_divmod(self, other: "Operator") -> Tuple["Operator", "Operator"]:
        """L = Q·M + R with ord(R) < ord(M), exact over F(x)."""
        if not other:
            raise ZeroDivisionError("right division by the zero operator")
        rem = list(self.coeffs)
        dM = other.order
        lM = other.leading()
        quo = [RatFunc(Poly(), reduce=False)] * max(0, len(rem) - dM)
        while len(rem) > dM:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) <= dM:
                break
            k = len(rem) - 1 - dM
            c = rem[-1] / lM.shift(k)
            quo[k] = quo[k] + c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b.shift(k)
            rem.pop()
        return Operator(quo), Operator(rem)

    def __mod__(self, other):
        return self.right_divmod(other)[1]

    def gcrd(self, other: "Operator") -> "Operator":
        a, b = self, other
        while b:
            a, b = b, a.right_divmod(b)[1]
        if not a:
            return a
        return a.scalar_mul(1 / a.leading())

    def xgcrd(self, other: "Operator"):
        """(g, u, v) with u·self + v·other = g, g normalized monic."""
        r0, r1 = self, other
        u0, u1 = Operator.identity(), Operator()
        v0, v1 = Operator(), Operator.identity()
        while r1:
            q, r = r0.right_divmod(r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        if not r0:
            return r0, u0, v0
        inv = Operator((1 / r0.leading(),))
        return inv * r0, inv * u0, inv * v0

    # -- difference-specific maps ----------------------------------------------------

    def adjoint(self) -> "Operator":
        """L* = sum a_{d-i}(x+i) S^i."""
        d = self.order
        return Operator(tuple(self.coeff(d - i).shift(i) for i in range(d + 1)))

    def vee_adjoint(self) -> "Operator":
        """Monic variant: (L/a_d) -> sum a_{d-i}(x+i-1) S^i."""
        d = self.order
        lead = self.leading()
        cs = [self.coeff(i) / lead for i in range(d + 1)]
        return Operator(tuple(cs[d - i].shift(i - 1) for i in range(d + 1)))

    def det(self) -> RatFunc:
        """Companion determinant (-1)^d a_0/a_d."""
        if not self.is_normal():
            raise ValueError("determinant requires a normal operator")
        d = self.order
        val = self.trailing() / self.leading()
        return -val if d % 2 else val

    def companion(self) -> List[List[RatFunc]]:
        d = self.order
        if d < 1:
            raise ValueError("companion matrix needs order >= 1")
        zero = RatFunc(Poly(), reduce=False)
        one = RatFunc(Poly.const(Fraction(1)), reduce=False)
        rows = []
        for i in range(d - 1):
            row = [zero] * d
            row[i + 1] = one
            rows.append(row)
        lead = self.leading()
        rows.append([-(self.coeff(j) / lead) for j in range(d)])
        return rows

    def apply_window(self, values: Sequence, n0) -> List:
        """Residuals sum_i a_i(n) v(n+i) for n = n0 .. n0+len-1-d, exact.

        values[j] is the sequence at x = n0 + j; points where a
        coefficient has a pole raise with the point named.
        """
        d = self.order
        if d < 0:
            raise ValueError("zero operator")
        out = []
        for base in range(len(values) - d):
            n = n0 + base
            acc = Fraction(0)
            for i, c in enumerate(self.coeffs):
                if not c:
                    continue
                try:
                    cv = c.eval(n)
                except ZeroDivisionError:
                    raise ZeroDivisionError(f"coefficient pole at x = {n}")
                acc = acc + cv * values[base + i]
            out.append(acc)
        return out

    def __repr__(self):
        if not self.coeffs:
            return "Operator(0)"
        parts = []
        for i in range(self.order, -1, -1):
            c = self.coeff(i)
            if not c:
                continue
            term = "" if i == 0 else ("S" if i == 1 else f"S^{i}")
            cs = c.to_str()
            if term and cs == "1":
                parts.append(term)
            else:
                parts.append(f"({cs})" + ("*" + term if term else ""))
        return "Operator(" + " + ".join(parts) + ")"


def tau_power(k: int) -> Operator:
    """S^k as an operator, k >= 0."""
    if k < 0:
        raise ValueError("negative shift power")
    one = RatFunc(Poly.const(Fraction(1)), reduce=False)
    zero = RatFunc(Poly(), reduce=False)
    return Operator((zero,) * k + (one,))


def solution_window(L: Operator, inits: Sequence, n0: int, length: int) -> List:
    """Exact solution values u(n0), ..., u(n0+length-1) from d initial
    values, unrolling the recurrence; requires a_d pole- and zero-free
    and the other coefficients pole-free on the points used."""
    d = L.order
    if len(inits) != d:
        raise ValueError(f"need exactly {d} initial values")
    vals = [Fraction(v) if isinstance(v, int) else v for v in inits]
    lead = L.leading()
    while len(vals) < length:
        n = n0 + len(vals) - d
        lv = lead.eval(n)
        if not lv:
            raise ZeroDivisionError(f"leading coefficient vanishes at x = {n}")
        acc = 0
        for i in range(d):
            ci = L.coeff(i)
            if ci:
                acc = acc + ci.eval(n) * vals[len(vals) - d + i]
        vals.append(-acc / lv)
    return vals[:length]
