"""Symmetric products of difference operators.

The symmetric product M ⊛ N is the minimal-order monic operator whose
solution space contains every product u·v with M(u) = N(v) = 0.  The
first-order twist and the order-2 square have closed formulas; the
general case reduces shifts of u·v in the ord(M)·ord(N)-dimensional
product-coordinate space and takes the first linear dependency.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .linalg import DependencyFinder
from .ore import Operator
from .poly import Poly
from .ratfunc import RatFunc

__all__ = [
    "symprod_first_order",
    "symsquare_order2",
    "symprod_general",
    "sympower",
    "interlace",
    "conjugate_order2",
]


def symprod_first_order(L: Operator, r: RatFunc) -> Operator:
    """L ⊛ (τ - r): twist by the first-order solution with ratio r.

    b_i = a_i · prod_{j=i}^{d-1} r(x+j); the order is preserved.
    """
    if not r:
        raise ValueError("twist ratio must be nonzero")
    d = L.order
    if d < 0:
        raise ValueError("zero operator")
    out = [L.coeff(d)]
    tail = RatFunc(Poly.const(Fraction(1)), reduce=False)
    for i in range(d - 1, -1, -1):
        tail = tail * r.shift(i)
        out.append(L.coeff(i) * tail)
    out.reverse()
    return Operator(out).canonical()


def symsquare_order2(K: Operator) -> Operator:
    """Symmetric square of an order-2 operator by the explicit formulas.

    Order 3 when a_1 != 0 (solutions u^2, uv, v^2), order 2 when the
    middle coefficient vanishes (every pairwise product satisfies the
    same two-term recurrence).
    """
    if K.order != 2:
        raise ValueError("order-2 operator required")
    if not K.is_normal():
        raise ValueError("normal operator required (a_0 != 0)")
    a0, a1, a2 = K.coeff(0), K.coeff(1), K.coeff(2)
    if not a1:
        return Operator((-(a0 * a0), RatFunc(Poly(), reduce=False), a2 * a2)).canonical()
    a0s, a1s, a2s = a0.shift(1), a1.shift(1), a2.shift(1)
    b3 = a1 * a2s * a2s * a2
    b2 = a1s * a2 * (a0s * a2 - a1s * a1)
    b1 = a0s * a1 * (a1s * a1 - a0s * a2)
    b0 = -(a1s * a0s * a0 * a0)
    return Operator((b0, b1, b2, b3)).canonical()


def _shift_reduce_step(vec: List[RatFunc], L: Operator) -> List[RatFunc]:
    # tau * (sum c_i tau^i u)  with tau^d u folded back through L
    d = L.order
    lead = L.leading()
    shifted = [c.shift(1) for c in vec]
    top = shifted[d - 1]
    out = [RatFunc(Poly(), reduce=False)] + shifted[: d - 1]
    if top:
        for i in range(d):
            ci = L.coeff(i)
            if ci:
                out[i] = out[i] - top * (ci / lead)
    return out


def symprod_general(M: Operator, N: Operator) -> Operator:
    """Minimal-order monic annihilator of all products of solutions.

    tau^k(u·v) has coordinates alpha_k ⊗ beta_k in the basis
    tau^i(u)·tau^j(v); the first dependency among k = 0, 1, ... gives
    the coefficients directly, and minimality is by construction.
    """
    if not M.is_normal() or not N.is_normal():
        raise ValueError("normal operators required")
    m, n = M.order, N.order
    if m == 0 or n == 0:
        raise ValueError("positive order required")
    zero = RatFunc(Poly(), reduce=False)
    one = RatFunc(Poly.const(Fraction(1)), reduce=False)
    alpha = [one] + [zero] * (m - 1)
    beta = [one] + [zero] * (n - 1)
    finder = DependencyFinder(m * n)
    for _ in range(m * n + 1):
        prod = [a * b for a in alpha for b in beta]
        dep = finder.feed(prod)
        if dep is not None:
            return Operator(dep)
        alpha = _shift_reduce_step(alpha, M)
        beta = _shift_reduce_step(beta, N)
    raise AssertionError("no dependency within the product-space dimension")


def sympower(L: Operator, m: int) -> Operator:
    """Iterated symmetric power L^{⊛m}, with the order-2 shortcuts."""
    if m < 1:
        raise ValueError("power must be at least 1")
    if m == 1:
        return L
    if L.order == 2 and not L.coeff(1) and L.is_normal():
        # u(x+2) = rho(x) u(x) for every solution, so any m-fold product
        # satisfies tau^2 - rho^m
        rho = -(L.coeff(0) / L.coeff(2))
        return Operator((-(rho**m), RatFunc(Poly(), reduce=False), 1)).canonical()
    if L.order == 2 and m == 2:
        return symsquare_order2(L)
    out = L
    for _ in range(m - 1):
        out = symprod_general(out, L)
    return out


def interlace(L: Operator, m: int) -> Operator:
    """Section-interlacing: sum a_i(x/m) τ^{m·i}; solutions of L read on
    the arithmetic progression x ≡ 0 (mod m) solve the result."""
    if m < 1:
        raise ValueError("step must be at least 1")
    if m == 1:
        return L
    sub = Poly((Fraction(0), Fraction(1, m)))
    zero = RatFunc(Poly(), reduce=False)
    out = [zero] * (m * L.order + 1)
    for i in range(L.order + 1):
        c = L.coeff(i)
        if c:
            out[m * i] = RatFunc(c.num.eval(sub), c.den.eval(sub))
    return Operator(out)


def conjugate_order2(K: Operator) -> Operator:
    """Flip the middle coefficient; (-1)^x·u solves the result when u
    solves K, and both share the same symmetric square."""
    if K.order != 2:
        raise ValueError("order-2 operator required")
    return Operator((K.coeff(0), -K.coeff(1), K.coeff(2)))
