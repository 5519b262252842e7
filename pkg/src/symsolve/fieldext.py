"""Number fields Q[y]/(m(y)) with exact element arithmetic.

Only quadratic extensions are exercised by the solver (singularity classes
of higher degree are rejected upstream), but the element arithmetic is
written for any degree since it costs nothing.  Quadratic fields are
normalized to generators with minimal polynomial y^2 - core, core a
squarefree integer, which keeps square-root extraction elementary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

from .poly import P, Poly, poly_xgcd

__all__ = [
    "NumberField",
    "NFElem",
    "squarefree_core",
    "rational_sqrt",
    "sqrt_as_field_element",
    "field_sqrt",
]


class NumberField:
    """Q[y]/(m(y)) for monic irreducible m over Q."""

    __slots__ = ("modulus", "name", "embedding", "_red", "zero", "one", "gen")

    def __init__(self, modulus: Poly, name: str = "s", embedding=None):
        if not modulus or modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        modulus = modulus.monic()
        self.modulus = modulus
        self.name = name
        self.embedding = embedding
        d = modulus.degree
        # y^k mod m for k = d .. 2d-2, as coefficient tuples
        red = []
        cur = Poly(tuple(-Fraction(c) for c in modulus.coeffs[:-1]))  # y^d
        for _ in range(d - 1):
            red.append(tuple(cur[i] for i in range(d)))
            cur = Poly((0,) + cur.coeffs)  # * y
            top = cur[d]
            if top:
                cur = Poly(tuple(cur[i] for i in range(d))) + Poly(
                    tuple(-top * Fraction(c) for c in modulus.coeffs[:-1])
                )
            else:
                cur = Poly(tuple(cur[i] for i in range(d)))
        self._red = tuple(red)
        self.zero = NFElem(self, (Fraction(0),) * d)
        self.one = NFElem(self, (Fraction(1),) + (Fraction(0),) * (d - 1))
        self.gen = NFElem(
            self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (d - 2)
        )

    @classmethod
    def quadratic(cls, core: int, name: Optional[str] = None) -> "NumberField":
        """Q(sqrt(core)), core a squarefree integer != 0, 1."""
        if core in (0, 1):
            raise ValueError("core must define a proper extension")
        if name is None:
            name = f"sqrt{core}" if core > 0 else f"sqrt_m{-core}"
        emb = complex(0.0, (-core) ** 0.5) if core < 0 else core**0.5
        return cls(P(-core, 0, 1), name=name, embedding=emb)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, coords) -> "NFElem":
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            raise ValueError("too many coordinates")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NFElem(self, tuple(cs))

    def from_rational(self, q) -> "NFElem":
        return self.element([Fraction(q)])

    def coerce(self, v) -> "NFElem":
        if isinstance(v, NFElem):
            if v.field != self:
                raise ValueError("element from a different field")
            return v
        return self.from_rational(v)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("NumberField", self.modulus.coeffs))

    def __repr__(self):
        return f"Q[{self.name}]/({self.modulus.to_str(self.name)})"


class NFElem:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coords[0]

    def __bool__(self):
        return any(self.coords)

    def _same(self, other) -> Optional["NFElem"]:
        if isinstance(other, NFElem):
            if other.field != self.field:
                return None
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    prod[i + j] += a * b
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = self.field._red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return NFElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        g, s, _ = poly_xgcd(Poly(self.coords), self.field.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("modulus not coprime to element")
        d = self.field.degree
        return NFElem(self.field, tuple(Fraction(s[i]) for i in range(d)))

    def __truediv__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self) -> "NFElem":
        """Galois conjugate (quadratic fields only)."""
        if self.field.degree != 2:
            raise ValueError("conjugate implemented for quadratic fields only")
        p = self.field.modulus[1]
        a, b = self.coords
        return NFElem(self.field, (a - b * p, -b))

    def norm(self) -> Fraction:
        if self.field.degree != 2:
            raise ValueError("norm implemented for quadratic fields only")
        return (self * self.conjugate()).as_rational()

    def numeric(self):
        emb = self.field.embedding
        if emb is None:
            raise ValueError("field has no chosen embedding")
        acc = 0.0
        for c in reversed(self.coords):
            acc = acc * emb + c
        return acc

    def __eq__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.modulus.coeffs, self.coords))

    def __repr__(self):
        return self.to_str()

    def to_str(self) -> str:
        name = self.field.name
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                v = name if i == 1 else f"{name}^{i}"
                if c == 1:
                    parts.append(v)
                elif c == -1:
                    parts.append(f"-{v}")
                else:
                    parts.append(f"{c}*{v}")
        if not parts:
            return "0"
        s = parts[0]
        for t in parts[1:]:
            s += " - " + t[1:] if t.startswith("-") else " + " + t
        return s


# -- square roots -------------------------------------------------------------


def squarefree_core(q: Fraction) -> Tuple[Fraction, int]:
    """Write q = outside^2 * core with core a squarefree integer carrying
    the sign and outside a positive rational; (0, 1) for q = 0."""
    q = Fraction(q)
    if not q:
        return Fraction(0), 1
    from sympy import factorint

    n = q.numerator * q.denominator  # q = n / den^2
    den = q.denominator
    sign = -1 if n < 0 else 1
    core = sign
    outside = 1
    for p, e in factorint(abs(n)).items():
        outside *= p ** (e // 2)
        if e % 2:
            core *= p
    return Fraction(outside, den), core


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    outside, core = squarefree_core(Fraction(q))
    return outside if core == 1 else None


def sqrt_as_field_element(q) -> Tuple[Optional[NumberField], object]:
    """Square root of a rational: (None, Fraction) when rational, else
    (Q(sqrt core), element) using the positive/upper-half embedding."""
    q = Fraction(q)
    outside, core = squarefree_core(q)
    if core == 1:
        return None, outside
    field = NumberField.quadratic(core)
    return field, field.element([0, outside])


def field_sqrt(v, field: NumberField) -> Optional["NFElem"]:
    """Square root of v inside the given quadratic field, if one exists."""
    v = field.coerce(v)
    core = -field.modulus[0]
    if field.modulus[1]:
        raise ValueError("field generator is not a pure square root")
    d0, d1 = v.coords
    if not d1:
        out, c = squarefree_core(d0)
        if c == 1:
            return field.from_rational(out)
        if c == core:
            return field.element([0, out])
        return None
    # (u + w*s)^2 = d0 + d1*s:  2uw = d1, u^2 + core*w^2 = d0
    nrm = rational_sqrt(d0 * d0 - core * d1 * d1)
    if nrm is None:
        return None
    for n in (nrm, -nrm):
        u2 = (d0 + n) / 2
        u = rational_sqrt(u2)
        if u is not None and u:
            w = d1 / (2 * u)
            return field.element([u, w])
    return None
