"""Term and gauge transformations between difference operators.

A term transformation multiplies every solution by a fixed nonzero
term with ratio r(x) (a solution of tau - r); a gauge transformation
applies an operator of lower order that maps one solution space
bijectively onto another.  Composites of the two are found in stages:
the term ratio is pinned down by the shift-normalized determinant
ratio, and the gauge part is an ansatz G = sum c_i(x) tau^i whose
coefficients solve a coupled linear difference system.  Rational
solving follows the universal-denominator approach: pole chains of a
solution are trapped between roots of the trailing and (shifted)
leading data, which leaves a finite-dimensional polynomial search.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .factorization import factor_over_Q
from .linalg import DependencyFinder, nullspace_rational
from .localdata import indicial_polynomial
from .opformat import print_operator
from .ore import Operator
from .poly import Poly, poly_gcd, poly_lcm
from .ratfunc import RatFunc
from .snf import dispersion_set, nth_root_ratfunc, shift_normal_form
from .symprod import _shift_reduce_step, symprod_first_order, symprod_general

__all__ = [
    "GaugeMap",
    "GTTransform",
    "rational_solutions",
    "hom_space",
    "term_candidates",
    "gt_find",
    "inverse_gauge",
    "transformed_operator",
    "case_diagnosis",
]

_ZERO = RatFunc(Poly(), reduce=False)
_ONE = RatFunc(Poly.const(Fraction(1)), reduce=False)


@dataclass(frozen=True)
class GaugeMap:
    """Operator G sending solutions of source into solutions of target.

    Validity means target*G is right divisible by source; G is stored
    reduced modulo source, which does not change its action on the
    solution space.  The map is a bijection exactly when gcrd(G, source)
    is trivial.
    """

    G: Operator
    source: Operator
    target: Operator

    def __post_init__(self):
        if self.G.order >= self.source.order:
            object.__setattr__(self, "G", self.G % self.source)
        if (self.target * self.G) % self.source:
            raise ValueError("not a homomorphism: nonzero remainder")

    @property
    def bijective(self) -> bool:
        return self.G.gcrd(self.source).order == 0

    def to_json(self) -> dict:
        return {
            "G": print_operator(self.G),
            "source": print_operator(self.source),
            "target": print_operator(self.target),
        }


@dataclass(frozen=True)
class GTTransform:
    """Term twist by ratio r followed by a gauge map.

    G goes from source twisted by (tau - r) to the target; the composite
    carries solutions of source, multiplied by a solution of tau - r,
    into solutions of the target.
    """

    r: RatFunc
    G: GaugeMap
    source: Operator

    def __post_init__(self):
        if not self.r:
            raise ValueError("term ratio must be nonzero")
        if self.G.source.canonical() != symprod_first_order(self.source, self.r):
            raise ValueError("gauge part does not start at the twisted operator")

    @property
    def target(self) -> Operator:
        return self.G.target

    def to_json(self) -> dict:
        return {
            "r": self.r.to_str(),
            "G": print_operator(self.G.G),
            "source": print_operator(self.source),
            "target": print_operator(self.target),
        }


# -- rational solutions ------------------------------------------------------


def _abramov_denominator(A: Poly, B: Poly) -> Poly:
    """Universal denominator when pole chains of a solution must start
    at a root of A and end at a root of B."""
    u = Poly.const(Fraction(1))
    if A.degree < 1 or B.degree < 1:
        return u
    A, B = A.primitive(), B.primitive()
    for h in reversed(dispersion_set(A, B)):
        g = poly_gcd(A, B.shift(h))
        if g.degree < 1:
            continue
        A = A.exact_div(g)
        B = B.exact_div(g.shift(-h))
        for i in range(h + 1):
            u = u * g.shift(-i)
    return u


def _integer_degree_bound(L: Operator) -> Optional[int]:
    # largest m with -m an integer root of the indicial data at infinity
    ind, _ = indicial_polynomial(L)
    if ind.degree < 1:
        return None
    best = None
    _, facs = factor_over_Q(ind)
    for f, _ in facs:
        if f.degree != 1:
            continue
        root = -Fraction(f[0]) / Fraction(f[1])
        if root.denominator == 1 and root <= 0:
            m = int(-root)
            best = m if best is None else max(best, m)
    return best


def _polynomial_solutions(L: Operator, bound: int) -> List[Poly]:
    polys = L.poly_coeffs()
    d = L.order
    cols = []
    for k in range(bound + 1):
        img = Poly()
        for i in range(d + 1):
            if polys[i]:
                img = img + polys[i] * Poly((Fraction(i), Fraction(1))) ** k
        cols.append(img)
    height = 1 + max(p.degree for p in cols if p) if any(cols) else 1
    rows = [[cols[k][m] for k in range(bound + 1)] for m in range(height)]
    return [Poly(vec) for vec in nullspace_rational(rows)]


def rational_solutions(L: Operator, degree_cap: int = 100) -> List[RatFunc]:
    """Basis of the rational solutions of L(y) = 0.

    The denominator of any solution divides a universal denominator u
    read off the trailing coefficient and the shifted leading
    coefficient; substituting y = z/u leaves polynomial solutions of
    the twisted operator, with degrees bounded through the integer
    roots of its indicial data at infinity.
    """
    if not L.is_normal():
        raise ValueError("operator must be normal")
    d = L.order
    if d < 1:
        return []
    polys = L.poly_coeffs()
    if not all(p.is_rational() for p in polys):
        raise ValueError("rational coefficients required")
    u = _abramov_denominator(polys[d].shift(-d), polys[0])
    M = Operator([RatFunc(polys[i], u.shift(i)) for i in range(d + 1)]).canonical()
    bound = _integer_degree_bound(M)
    if bound is None:
        return []
    if bound > degree_cap:
        raise ValueError(
            f"numerator degree bound {bound} exceeds degree_cap={degree_cap}; "
            "pass a larger degree_cap"
        )
    return [RatFunc(z, u) for z in _polynomial_solutions(M, bound)]


# -- homomorphisms -----------------------------------------------------------


def _hom_denominator(p1: List[Poly], p2: List[Poly]) -> Poly:
    # Pole chains of the ansatz coefficients: a rightmost pole needs the
    # trailing coefficient of the target (or a reduction pole of the
    # source lead) to vanish there, a leftmost pole the same for the
    # shifted leading data.  Conservative on both ends.
    d1, d2 = len(p1) - 1, len(p2) - 1
    B = p2[0]
    A = p2[d2].shift(-d2)
    for m in range(d2):
        B = B * p1[d1].shift(m)
        A = A * p1[0].shift(m - d2) * p1[d1].shift(m - d2)
    return _abramov_denominator(A, B)


def hom_space(
    L1: Operator, L2: Operator, degree_cap: Optional[int] = None
) -> List[GaugeMap]:
    """Basis of the maps carrying solutions of L1 to solutions of L2.

    Ansatz G = sum_{i < ord(L1)} c_i(x) tau^i; the remainder of L2*G
    under right division by L1 must vanish, a coupled linear system for
    the c_i.  All c_i share one universal denominator u; numerators are
    matched coefficient by coefficient up to degree_cap beyond deg(u),
    so the basis is complete only within that cap (default: twice the
    largest coefficient degree plus ten).
    """
    if not (L1.is_normal() and L2.is_normal()):
        raise ValueError("normal operators required")
    d1, d2 = L1.order, L2.order
    if d1 < 1:
        raise ValueError("positive source order required")
    p1, p2 = L1.poly_coeffs(), L2.poly_coeffs()
    if not all(p.is_rational() for p in p1 + p2):
        raise ValueError("rational coefficients required")
    if degree_cap is None:
        degree_cap = 2 * max(p.degree for p in p1 + p2) + 10
    L1c = Operator(p1)
    u = _hom_denominator(p1, p2)
    nans = degree_cap + u.degree
    width = nans + 1

    # coordinates of tau^k modulo L1, k = 0 .. d1+d2-1
    reduced = [[_ONE if i == k else _ZERO for i in range(d1)] for k in range(d1)]
    while len(reduced) < d1 + d2:
        reduced.append(_shift_reduce_step(reduced[-1], L1c))

    # remainder coefficient at tau^s:
    #   sum_{j,i} b_j(x) R[j+i][s](x) / u(x+j) * p_i(x+j)  =  0
    rows: List[List[Fraction]] = []
    for s in range(d1):
        terms: List[Tuple[int, int, RatFunc]] = []
        den = Poly.const(Fraction(1))
        for j in range(d2 + 1):
            if not p2[j]:
                continue
            ushift = RatFunc(u.shift(j))
            for i in range(d1):
                t = RatFunc(p2[j]) * reduced[j + i][s] / ushift
                if t:
                    terms.append((i, j, t))
                    den = poly_lcm(den, t.den)
        cols = [Poly() for _ in range(d1 * width)]
        for i, j, t in terms:
            base = (t * den).as_poly()
            step = Poly((Fraction(j), Fraction(1)))
            pw = Poly.const(Fraction(1))
            for k in range(width):
                cols[i * width + k] = cols[i * width + k] + base * pw
                pw = pw * step
        height = 1 + max(p.degree for p in cols if p)
        for m in range(height):
            rows.append([c[m] for c in cols])

    basis = []
    for vec in nullspace_rational(rows):
        numerators = [Poly(vec[i * width : (i + 1) * width]) for i in range(d1)]
        G = Operator([RatFunc(z, u) for z in numerators])
        basis.append(GaugeMap(G, L1, L2))
    return basis


# -- term candidates and the combined search ---------------------------------


def term_candidates(L1: Operator, L2: Operator) -> List[RatFunc]:
    """Ratios r for which a twist of L1 by (tau - r) can be gauge
    equivalent to L2: d-th roots of the shift-normalized determinant
    ratio, with both signs when d is even."""
    d = L1.order
    if d != L2.order:
        raise ValueError("operators must have the same order")
    ratio = shift_normal_form(L2.det() / L1.det())
    root = nth_root_ratfunc(ratio, d)
    if root is None:
        return []
    if d % 2 == 0:
        return [root, -root]
    return [root]


def _gauge_rank(gm: GaugeMap):
    return (gm.G.order, print_operator(gm.G.canonical()))


def gt_find(
    L1: Operator, L2: Operator, degree_cap: Optional[int] = None
) -> Optional[GTTransform]:
    """Combined transformation taking solutions of L1 to solutions of
    L2, or None.  Candidates for the term ratio are ranked, then the
    first bijective gauge map out of the twisted operator wins; ties
    inside one hom space go to the lowest order, then the smallest
    canonical coefficient string."""
    if L1.order != L2.order:
        raise ValueError("operators must have the same order")
    for r in term_candidates(L1, L2):
        M = symprod_first_order(L1, r)
        for gm in sorted(hom_space(M, L2, degree_cap), key=_gauge_rank):
            if gm.bijective:
                return GTTransform(r, gm, L1)
    return None


def inverse_gauge(gm: GaugeMap) -> GaugeMap:
    """Inverse bijection as a gauge map from target back to source.

    Extended right Euclid gives u*G + v*source = 1; u is the inverse
    modulo the source, reduced modulo the target where it acts.
    """
    g, cof, _ = gm.G.xgcrd(gm.source)
    if g.order != 0:
        raise ValueError("gauge map is not bijective")
    inv = cof % gm.target if cof.order >= gm.target.order else cof
    out = GaugeMap(inv, gm.target, gm.source)
    if (out.G * gm.G - Operator.identity()) % gm.source:
        raise AssertionError("inverse failed the remainder identity")
    return out


def transformed_operator(L1: Operator, G: Operator) -> Operator:
    """Minimal annihilator of the image of the solution space under G.

    Reduces G, tau*G, tau^2*G, ... modulo L1 until the coordinate
    vectors become dependent; injectivity (trivial gcrd with L1) keeps
    the image dimension full, so the result has the order of L1.
    """
    if not L1.is_normal():
        raise ValueError("operator must be normal")
    d = L1.order
    if d < 1:
        raise ValueError("positive order required")
    if G.gcrd(L1).order != 0:
        raise ValueError("not injective")
    rem = G % L1 if G.order >= d else G
    vec = [rem.coeff(i) for i in range(d)]
    finder = DependencyFinder(d)
    for _ in range(d + 1):
        dep = finder.feed(vec)
        if dep is not None:
            M = Operator(dep).canonical()
            if (M * G) % L1:
                raise AssertionError("transport failed the remainder identity")
            return M
        vec = _shift_reduce_step(vec, L1)
    raise AssertionError("no dependency within the solution-space dimension")


def case_diagnosis(L: Operator) -> int:
    """Order of the symmetric square of an order-3 operator.

    5 points at a term twist of the square of a second-order operator,
    6 at a square disguised by a proper gauge map; anything else is
    outside the two-case split.
    """
    if L.order != 3:
        raise ValueError("order-3 operator required")
    if not L.is_normal():
        raise ValueError("operator must be normal")
    return symprod_general(L, L).order
