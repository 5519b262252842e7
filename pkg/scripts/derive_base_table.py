#!/usr/bin/env python3
"""Regenerate the shipped base-table operator templates symbolically.

Each table entry is the symmetric square of an order-2 recurrence ("root
operator") satisfied by a classical family:

  gauss2f1   u(x) = 2F1(-x/2+a, x/2+b; a+b+1/2; z)   (half-argument family
             on the locus c = a+b+1/2, where the quadratic transformation
             2F1(A,B;A+B+1/2;4w(1-w)) = 2F1(2A,2B;A+B+1/2;w) applies; the
             root operator has a sqrt(1-z) middle coefficient but its
             symmetric square is rational)
  legendre   u(x) = P_x(z)
  hermite    u(x) = H_x(z)
  besseli    u(x) = I_x(z)

For an order-2 operator a2*S^2 + a1*S + a0 with a1 = p*sqrt(D) (p, D
rational, D = 1 for the plain families) the symmetric square is

  b3 = p' * a2'^2 * a2                      (' = shift x -> x+1)
  b2 = p'' ... see below; the formulas are even in a1, so only D = a1^2/p^2
       enters and the result stays rational.

Run with --check to verify the strings stored in src/symsolve/data/
base_table.json agree with the freshly derived ones.
"""

import argparse
import json
import sys
from pathlib import Path

import sympy as sp

x, a, b, z = sp.symbols("x a b z")


def symsquare_sqrt_middle(a0, p, D, a2):
    """Symmetric square of a2*S^2 + p*sqrt(D)*S + a0, rational output.

    Derived from the rational-a1 formulas by substituting a1 = p*sqrt(D)
    and using that they are even in a1.
    """
    sh = lambda f: f.subs(x, x + 1)
    b3 = p * sh(a2) ** 2 * a2
    b2 = sh(p) * a2 * (sh(a0) * a2 - D * sh(p) * p)
    b1 = sh(a0) * p * (D * sh(p) * p - sh(a0) * a2)
    b0 = -(sh(p) * sh(a0) * a0 ** 2)
    return [sp.expand(c) for c in (b0, b1, b2, b3)]


def normalize(coeffs):
    """Divide out the joint polynomial content (primitive form)."""
    g = sp.gcd_list(coeffs)
    out = [sp.expand(sp.cancel(c / g)) for c in coeffs]
    # keep integer contents coprime as well
    ig = sp.gcd_list([sp.Poly(c, x, a, b, z).content() if not c.is_zero else 0
                      for c in out])
    if ig not in (0, 1):
        out = [sp.expand(c / ig) for c in out]
    return out


def expr_str(e):
    return sp.StrPrinter({"order": "lex"}).doprint(sp.expand(e))


def derive():
    entries = {}

    # gauss2f1 on the locus c = a+b+1/2: root operator
    #   (x+2b+1) S^2 - (2x-2a+2b+2) sqrt(1-z) S + (x-2a+1)
    entries["gauss2f1_sq"] = normalize(symsquare_sqrt_middle(
        x - 2 * a + 1, -(2 * x - 2 * a + 2 * b + 2), 1 - z, x + 2 * b + 1))

    # legendre: (x+2) S^2 - (2x+3) z S + (x+1)
    entries["legendre_sq"] = normalize(symsquare_sqrt_middle(
        x + 1, -(2 * x + 3) * z, sp.Integer(1), x + 2))

    # hermite: S^2 - 2z S + (2x+2)
    entries["hermite_sq"] = normalize(symsquare_sqrt_middle(
        2 * x + 2, -2 * z, sp.Integer(1), sp.Integer(1)))

    # bessel I: z S^2 + (2x+2) S - z
    entries["besseli_sq"] = normalize(symsquare_sqrt_middle(
        -z, 2 * x + 2, sp.Integer(1), z))

    return entries


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true",
                    help="compare against the shipped base_table.json")
    args = ap.parse_args()
    derived = derive()

    if not args.check:
        for name, coeffs in derived.items():
            print(f"[{name}]")
            for i, c in enumerate(coeffs):
                print(f"  b{i} = {expr_str(c)}")
        return 0

    table_path = (Path(__file__).resolve().parent.parent
                  / "src" / "symsolve" / "data" / "base_table.json")
    shipped = {e["name"]: e["operator"]
               for e in json.loads(table_path.read_text())["entries"]}
    ok = True
    for name, coeffs in derived.items():
        got = [sp.sympify(s.replace("^", "**")) for s in shipped[name]]
        # shipped strings may differ by one overall sign
        diffs = [sp.expand(g - c) for g, c in zip(got, coeffs)]
        sums = [sp.expand(g + c) for g, c in zip(got, coeffs)]
        if all(d == 0 for d in diffs) or all(s == 0 for s in sums):
            print(f"{name}: OK")
        else:
            print(f"{name}: MISMATCH")
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
