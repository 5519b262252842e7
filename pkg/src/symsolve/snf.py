"""Shift normalization of rational functions and shift structure of polynomials.

Two rational functions r, r~ are gauge-related when r~/r = u(x+1)/u(x) for
some rational u; the canonical representative of that orbit is obtained by
translating every irreducible factor so its root sum lands in (-deg, 0],
keeping the multiplicative constant.  Integer-shift structure (dispersion
sets, shift equivalence of factors) lives here too.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Tuple

from .factorization import factor_over_Q
from .poly import Poly
from .ratfunc import RatFunc

__all__ = [
    "canonical_shift",
    "shift_normal_form",
    "shift_equivalent",
    "dispersion_set",
    "dispersion",
    "nth_root_ratfunc",
]


def _root_sum(f: Poly) -> Fraction:
    return -Fraction(f[f.degree - 1]) / Fraction(f.lead())


def canonical_shift(f: Poly) -> Tuple[Poly, int]:
    """(fhat, k) with f(x) = fhat(x + k) and the root sum of fhat in
    (-deg f, 0].  f must be nonconstant; primitivity is preserved."""
    d = f.degree
    if d < 1:
        raise ValueError("constant polynomial has no shift class")
    s = _root_sum(f)
    k = math.ceil(s / d)
    return f.shift(k), -k


def shift_equivalent(f: Poly, g: Poly) -> Optional[int]:
    """Integer k with f(x) = g(x + k), or None.  Both primitive with
    positive leading coefficient and the same degree, typically
    irreducible factors."""
    if f.degree != g.degree or f.degree < 1:
        return None
    if f.lead() != g.lead():
        return None
    diff = _root_sum(g) - _root_sum(f)
    k = diff / f.degree
    if k.denominator != 1:
        return None
    k = k.numerator
    if g.shift(k) == f:
        return k
    return None


def shift_normal_form(r: RatFunc) -> RatFunc:
    """Canonical orbit representative under r -> r * u(x+1)/u(x)."""
    if not r:
        return r
    un, nf = factor_over_Q(r.num)
    ud, df = factor_over_Q(r.den)
    num = Poly.const(un)
    for f, m in nf:
        num = num * canonical_shift(f)[0] ** m
    den = Poly.const(ud)
    for f, m in df:
        den = den * canonical_shift(f)[0] ** m
    return RatFunc(num, den)


def dispersion_set(p: Poly, q: Poly, include_negative: bool = False) -> List[int]:
    """All integers k >= 0 (or all of Z) with deg gcd(p(x), q(x+k)) > 0.

    Factor based: a common factor at shift k forces an irreducible f | p
    and g | q of equal degree with f(x) = g(x+k), and k is then pinned by
    the root sums.
    """
    if p.degree < 1 or q.degree < 1:
        return []
    _, pf = factor_over_Q(p)
    _, qf = factor_over_Q(q)
    ks = set()
    for f, _ in pf:
        for g, _ in qf:
            k = shift_equivalent(f, g)
            if k is not None and (include_negative or k >= 0):
                ks.add(k)
    return sorted(ks)


def dispersion(p: Poly, q: Poly) -> Optional[int]:
    ks = dispersion_set(p, q)
    return ks[-1] if ks else None


def _rational_nth_root(c: Fraction, n: int) -> Optional[Fraction]:
    from sympy import integer_nthroot

    if not c:
        return Fraction(0)
    if c < 0:
        if n % 2 == 0:
            return None
        r = _rational_nth_root(-c, n)
        return -r if r is not None else None
    rn, okn = integer_nthroot(c.numerator, n)
    rd, okd = integer_nthroot(c.denominator, n)
    if okn and okd:
        return Fraction(int(rn), int(rd))
    return None


def nth_root_ratfunc(r: RatFunc, n: int) -> Optional[RatFunc]:
    """s with s^n = r, positive constant preferred for even n; None if
    r is not an n-th power in Q(x)."""
    if n < 1:
        raise ValueError("root order must be positive")
    if not r:
        return r
    un, nf = factor_over_Q(r.num)
    ud, df = factor_over_Q(r.den)
    if any(m % n for _, m in nf) or any(m % n for _, m in df):
        return None
    c = _rational_nth_root(un / ud, n)
    if c is None:
        return None
    num = Poly.const(c)
    for f, m in nf:
        num = num * f ** (m // n)
    den = Poly.const(Fraction(1))
    for f, m in df:
        den = den * f ** (m // n)
    return RatFunc(num, den)
