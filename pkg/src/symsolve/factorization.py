"""Factorization over Q and root finding, on top of sympy's exact kernels.

Everything converts through coefficient lists, so sympy objects never leak
into the rest of the package.  Factor lists are normalized to primitive
integer-coefficient polynomials with positive leading coefficient and a
rational unit, sorted deterministically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .fieldext import NFElem, NumberField, field_sqrt
from .poly import Poly, poly_gcd

__all__ = [
    "factor_over_Q",
    "roots_rational",
    "resultant",
    "is_irreducible",
    "roots_in_field",
    "root_multiplicity",
]

_x = None


def _sym_x():
    global _x
    if _x is None:
        import sympy

        _x = sympy.Symbol("x")
    return _x


def _to_sympy(p: Poly):
    import sympy

    x = _sym_x()
    cs = [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in p.coeffs]
    return sympy.Poly(list(reversed(cs)) or [0], x, domain="QQ")


def _from_sympy(sp) -> Poly:
    cs = [Fraction(int(c.p), int(c.q)) for c in sp.all_coeffs()]
    return Poly(tuple(reversed(cs)))


def factor_over_Q(p: Poly) -> Tuple[Fraction, List[Tuple[Poly, int]]]:
    """p = unit * prod f_i^{m_i} with f_i primitive integer polynomials,
    positive leading coefficients, sorted by (degree, coefficients)."""
    if not p:
        return Fraction(0), []
    if p.degree == 0:
        return Fraction(p.coeffs[0]), []
    unit_sym, factors = _to_sympy(p).factor_list()
    unit = Fraction(int(unit_sym.p), int(unit_sym.q))
    out = []
    for f, m in factors:
        fp = _from_sympy(f)
        prim = fp.primitive()
        # fp = c * prim with c = content carrying the sign of lc
        c = Fraction(fp.content())
        if fp.lead() < 0:
            c = -c
        unit *= c**m
        out.append((prim, int(m)))
    out.sort(key=lambda fm: (fm[0].degree, tuple(Fraction(c) for c in fm[0].coeffs)))
    return unit, out


def roots_rational(p: Poly) -> List[Tuple[Fraction, int]]:
    """Rational roots with multiplicities, sorted."""
    _, factors = factor_over_Q(p)
    roots = []
    for f, m in factors:
        if f.degree == 1:
            roots.append((-Fraction(f[0]) / Fraction(f[1]), m))
    roots.sort(key=lambda rm: rm[0])
    return roots


def resultant(p: Poly, q: Poly) -> Fraction:
    sp = _to_sympy(p).resultant(_to_sympy(q))
    import sympy

    r = sympy.Rational(sp)
    return Fraction(int(r.p), int(r.q))


def is_irreducible(p: Poly) -> bool:
    if p.degree < 1:
        return False
    _, factors = factor_over_Q(p)
    return len(factors) == 1 and factors[0][1] == 1


# -- roots inside a fixed (at most quadratic) extension ------------------------


def root_multiplicity(p: Poly, root) -> int:
    m = 0
    while p.degree >= 1 and not p.eval(root):
        p = _deflate(p, root)
        m += 1
    return m


def _deflate(p: Poly, root) -> Poly:
    # synthetic division by (x - root); remainder known to vanish
    out = [0] * p.degree
    acc = p[p.degree]
    for k in range(p.degree - 1, -1, -1):
        out[k] = acc
        acc = p[k] + acc * root
    return Poly(out)


def roots_in_field(p: Poly, field: Optional[NumberField]) -> List[Tuple[object, int]]:
    """Roots of p lying in Q (field None) or in the given quadratic field.

    Coefficients may be rational or elements of that same field; roots come
    back as Fractions resp. field elements, with multiplicities, in a
    deterministic order.  Roots generating larger extensions are ignored.
    """
    if not p:
        raise ValueError("zero polynomial")
    if field is None:
        return [(r, m) for r, m in roots_rational(p)]
    if field.degree != 2:
        raise ValueError("only quadratic extensions supported")

    candidates = []
    if p.is_rational():
        _, factors = factor_over_Q(p)
        for f, m in factors:
            if f.degree == 1:
                candidates.append(field.from_rational(-Fraction(f[0]) / Fraction(f[1])))
            elif f.degree == 2:
                a2, a1, a0 = Fraction(f[2]), Fraction(f[1]), Fraction(f[0])
                disc = a1 * a1 - 4 * a2 * a0
                s = field_sqrt(disc, field)
                if s is not None:
                    candidates.append((-a1 + s) / (2 * a2))
                    candidates.append((-a1 - s) / (2 * a2))
    else:
        pbar = p.map_coeffs(lambda c: c.conjugate() if isinstance(c, NFElem) else c)
        nrm = p * pbar
        nrm_q = nrm.map_coeffs(
            lambda c: c.as_rational() if isinstance(c, NFElem) else Fraction(c)
        )
        _, factors = factor_over_Q(nrm_q)
        pf = p.map_coeffs(field.coerce)
        for f, _ in factors:
            g = poly_gcd(pf, f.map_coeffs(field.coerce))
            if g.degree == 1:
                candidates.append(-g[0] / g[1])
            elif g.degree == 2:
                disc = g[1] * g[1] - 4 * g[2] * g[0]
                s = field_sqrt(disc, field)
                if s is not None:
                    candidates.append((-g[1] + s) / (field.coerce(2) * g[2]))
                    candidates.append((-g[1] - s) / (field.coerce(2) * g[2]))

    seen = []
    out = []
    for r in candidates:
        r = field.coerce(r)
        if r in seen:
            continue
        seen.append(r)
        m = root_multiplicity(p.map_coeffs(field.coerce), r)
        if m:
            out.append((r, m))
    out.sort(key=lambda rm: tuple(rm[0].coords))
    return out
