"""Local data of difference operators that survives gauge and term
transformations.

Finite side: problem points are roots of a_0(x)·a_d(x-d); each shift
class of such roots gets a valuation-growth gap, read off the Smith
form (over power series in a local parameter ε) of the transition
matrix that carries solution windows across the singular region.

Infinity side: the indicial polynomial, generalized exponents with
their ramification-2 refinement, truncation to E_r representatives,
r-equivalence, and the quotient set used for table matching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from .factorization import factor_over_Q, roots_in_field
from .fieldext import NFElem, NumberField, field_sqrt, sqrt_as_field_element
from .ore import Operator
from .poly import Poly
from .series import TSeries
from .snf import canonical_shift, shift_equivalent

__all__ = [
    "SingularityClass",
    "ValGEntry",
    "GenExpRep",
    "GenExpSet",
    "LocalData",
    "problem_points",
    "valuation_growth",
    "valg_set",
    "indicial_polynomial",
    "generalized_exponents",
    "trunc",
    "r_equivalent",
    "gquo",
    "local_data",
]

_N = Poly((Fraction(0), Fraction(1)))  # the indicial variable


# -- finite singularities ----------------------------------------------------


@dataclass(frozen=True)
class SingularityClass:
    """Shift class of problem points, named by its monic SNF representative."""

    representative: Poly

    def __repr__(self):
        return f"SingularityClass({self.representative.to_str()})"


@dataclass(frozen=True)
class ValGEntry:
    cls: SingularityClass
    gap: int


def _class_poly(cls) -> Poly:
    rep = cls.representative if isinstance(cls, SingularityClass) else cls
    if not isinstance(rep, Poly) or rep.degree < 1:
        raise ValueError("class representative must be a nonconstant polynomial")
    return rep


def _class_offsets(polys: Sequence[Poly], d: int, rep: Poly) -> List[int]:
    """Integer positions k with rep's roots shifted by k among the roots
    of a_0(x)·a_d(x-d)."""
    prod = polys[0] * polys[d].shift(-d)
    rep_prim = rep.primitive()
    offsets: Set[int] = set()
    _, factors = factor_over_Q(prod)
    for f, _ in factors:
        k = shift_equivalent(f, rep_prim)
        if k is not None:
            offsets.add(-k)
    return sorted(offsets)


def problem_points(L: Operator) -> List[Tuple[Poly, List[int]]]:
    """Shift classes of roots of a_0(x)·a_d(x-d): (monic SNF representative,
    sorted integer positions)."""
    if not L.is_normal():
        raise ValueError("operator must be normal")
    polys = L.poly_coeffs()
    d = L.order
    prod = polys[0] * polys[d].shift(-d)
    classes: List[Tuple[Poly, Poly]] = []  # (snf primitive, monic)
    _, factors = factor_over_Q(prod)
    for f, _ in factors:
        rep, _k = canonical_shift(f)
        if not any(rep == seen for seen, _ in classes):
            classes.append((rep, rep.monic()))
    out = []
    for rep, rep_monic in classes:
        out.append((rep_monic, _class_offsets(polys, d, rep)))
    out.sort(key=lambda it: (it[0].degree, it[0].coeffs))
    return out


def _eps_val(p: Poly) -> Optional[int]:
    for k, c in enumerate(p.coeffs):
        if c:
            return k
    return None


def _minor_det(rows: List[List[Poly]]) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = Poly()
    for j in range(n):
        top = rows[0][j]
        if not top:
            continue
        sub = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        term = top * _minor_det(sub)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def valuation_growth(L: Operator, cls) -> Tuple[int, int]:
    """Extreme ε-valuation growths of solutions across the singular region
    of the given shift class: (min, max).  (0, 0) for classes without
    problem points."""
    if not L.is_normal():
        raise ValueError("non-normal at class")
    rep = _class_poly(cls)
    polys = L.poly_coeffs()
    d = L.order
    offsets = _class_offsets(polys, d, rep)
    if not offsets:
        return (0, 0)

    rep_m = rep.monic()
    if rep_m.degree == 1:
        theta = -Fraction(rep_m[0])
    else:
        theta = NumberField(rep_m, name="theta").gen

    ident = Poly.const(Fraction(1))
    N = [[ident if i == j else Poly() for j in range(d)] for i in range(d)]
    vden = 0
    vdet = 0
    for k in range(offsets[0] - d, offsets[-1] + 1):
        evals = [p.shift(theta + k) for p in polys]  # polynomials in ε
        ad, a0 = evals[d], evals[0]
        if not ad or not a0:
            raise ValueError("non-normal at class")
        vden += _eps_val(ad)
        vdet += _eps_val(a0) + (d - 1) * _eps_val(ad)
        # companion numerator: rows 0..d-2 carry ad on the superdiagonal
        M = [[Poly() for _ in range(d)] for _ in range(d)]
        for i in range(d - 1):
            M[i][i + 1] = ad
        for j in range(d):
            M[d - 1][j] = -evals[j]
        N = [
            [
                sum((M[i][l] * N[l][j] for l in range(d) if M[i][l] and N[l][j]), Poly())
                for j in range(d)
            ]
            for i in range(d)
        ]

    entry_vals = [_eps_val(e) for row in N for e in row if e]
    vmin = min(entry_vals)
    if d == 1:
        vadj = 0
    else:
        cof_vals = []
        for i in range(d):
            for j in range(d):
                sub = [
                    [N[r][c] for c in range(d) if c != j] for r in range(d) if r != i
                ]
                cof = _minor_det(sub)
                if cof:
                    cof_vals.append(_eps_val(cof))
        vadj = min(cof_vals)
    return (vmin - vden, vdet - vadj - vden)


def valg_set(L: Operator) -> Set[ValGEntry]:
    """Essential singularity classes (gap > 0) with their gaps."""
    out = set()
    for rep, _offs in problem_points(L):
        mn, mx = valuation_growth(L, rep)
        if mx - mn > 0:
            out.add(ValGEntry(SingularityClass(rep), mx - mn))
    return out


# -- indicial polynomial ------------------------------------------------------


def _coeff_windows(polys: Sequence[Poly], ram: int, pad: int) -> List[TSeries]:
    out = []
    for p in polys:
        if not p:
            out.append(TSeries(ram, 0, (Fraction(0),) * (pad + 1)))
        else:
            out.append(TSeries.from_poly_in_invx(p, ram, pad))
    return out


def _indicial_of_series(bs: Sequence[TSeries]):
    """First t-level of sum_i b_i(t)·(1+it)^(-n) with a nonzero coefficient,
    as (Poly in n, level as Fraction); None when the window shows nothing."""
    ram = bs[0].ram
    vmin = min(s.val for s in bs)
    end = min(s.end for s in bs)
    if end <= vmin:
        return None
    levels = end - vmin
    acc = [Poly() for _ in range(levels)]
    for i, s in enumerate(bs):
        if s.is_zero():
            continue
        jmax = levels // ram + 1
        bins = [Poly.const(Fraction(1))]
        if i:
            for j in range(jmax):
                bins.append(bins[-1] * (-_N - j) * i / (j + 1))
        for k, c in enumerate(s.coeffs):
            if not c:
                continue
            base = s.val + k - vmin
            for j, B in enumerate(bins):
                lvl = base + j * ram
                if lvl >= levels:
                    break
                acc[lvl] = acc[lvl] + B * c
    for m, Pm in enumerate(acc):
        if Pm:
            return Pm, Fraction(vmin + m, ram)
    return None


def indicial_polynomial(L: Operator) -> Tuple[Poly, Fraction]:
    """(P, v) with L(t^n) = P(n)·t^(n+v) + higher order, t = 1/x."""
    if not any(L.coeffs):
        raise ValueError("zero operator has no indicial polynomial")
    polys = L.poly_coeffs()
    degs = [p.degree for p in polys if p]
    span = max(degs) - min(degs)
    pad0 = L.order + span + 4
    for pad in (pad0, 2 * pad0):
        got = _indicial_of_series(_coeff_windows(polys, 1, pad))
        if got:
            return got
    raise ValueError("increase truncation")


# -- generalized exponents ----------------------------------------------------


def _is_rational_value(v) -> bool:
    if isinstance(v, (int, Fraction)):
        return True
    return isinstance(v, NFElem) and v.is_rational()


def _demote(v):
    """NFElem with rational value -> Fraction; everything else unchanged."""
    if isinstance(v, NFElem) and v.is_rational():
        return v.as_rational()
    return Fraction(v) if isinstance(v, int) else v


def _value_field(v) -> Optional[NumberField]:
    if isinstance(v, NFElem) and not v.is_rational():
        return v.field
    return None


def _join_field(values) -> Optional[NumberField]:
    fields = []
    for v in values:
        f = _value_field(v)
        if f is not None and all(f != g for g in fields):
            fields.append(f)
    if len(fields) > 1:
        raise ValueError("unsupported extension degree")
    return fields[0] if fields else None


def _coerce_value(v, fld: Optional[NumberField]):
    if fld is None:
        return _demote(v)
    if isinstance(v, NFElem):
        if v.is_rational():
            return fld.from_rational(v.as_rational())
        return fld.coerce(v)
    return fld.from_rational(Fraction(v))


def _value_key(v):
    v = _demote(v)
    if isinstance(v, Fraction):
        return (0, (), (v,))
    return (1, tuple(Fraction(c) for c in v.field.modulus.coeffs), tuple(v.coords))


@dataclass(frozen=True)
class GenExpRep:
    """c·t^v(1 + a_1 t^(1/r) + ... + a_r t^(r/r)) with a multiplicity."""

    r: int
    c: object
    v: Fraction
    tail: Tuple
    multiplicity: int = field(default=1, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "c", _demote(self.c))
        object.__setattr__(self, "v", Fraction(self.v))
        object.__setattr__(self, "tail", tuple(_demote(a) for a in self.tail))
        if (self.v * self.r).denominator != 1:
            raise ValueError("valuation not representable at this ramification")
        if len(self.tail) != self.r:
            raise ValueError("tail length must equal the ramification")

    def lift(self, r: int) -> "GenExpRep":
        if r == self.r:
            return self
        if r % self.r:
            raise ValueError("can only lift to a multiple ramification")
        f = r // self.r
        tail = [Fraction(0)] * r
        for k, a in enumerate(self.tail, start=1):
            tail[k * f - 1] = a
        return GenExpRep(r, self.c, self.v, tuple(tail), self.multiplicity)

    def series(self, slots: int) -> TSeries:
        """Exact window of the represented element."""
        coeffs = [self.c] + [self.c * a for a in self.tail]
        coeffs += [Fraction(0)] * max(0, slots - len(coeffs))
        return TSeries(self.r, int(self.v * self.r), coeffs[:max(slots, len(coeffs))])

    def sort_key(self):
        return (
            self.r,
            self.v,
            _value_key(self.c),
            tuple(_value_key(a) for a in self.tail),
        )

    def __repr__(self):
        return (
            f"GenExpRep(r={self.r}, c={self.c!r}, v={self.v}, "
            f"tail={self.tail!r}, mult={self.multiplicity})"
        )


@dataclass(frozen=True)
class GenExpSet:
    entries: Tuple[GenExpRep, ...]
    complete: bool

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)


def trunc(s: TSeries, r: Optional[int] = None) -> GenExpRep:
    """E_r representative of a nonzero series: keep the leading constant,
    the valuation, and tail coefficients through t^(r/r)."""
    if r is None:
        r = s.ram
    ss = s
    if ss.ram != r:
        ss = ss.reduce_ram()
        if r % ss.ram:
            raise ValueError("series not representable at this ramification")
        ss = ss.lift(r)
    ss = ss.strip()
    if not ss.coeffs or not ss.coeffs[0]:
        raise ValueError("series is zero to truncation order")
    if ss.nterms < r + 1:
        raise ValueError("insufficient truncation for an E_r representative")
    c = ss.coeffs[0]
    inv = Fraction(1) / c if isinstance(c, Fraction) else c.inverse()
    tail = tuple(ss.coeffs[k] * inv for k in range(1, r + 1))
    return GenExpRep(r, c, Fraction(ss.val, r), tail)


def _values_equal(a, b) -> bool:
    return _demote(a) == _demote(b)


def r_equivalent(a: GenExpRep, b: GenExpRep) -> bool:
    """Same E_r class: c, v, a_1..a_{r-1} equal and the level-r coefficients
    congruent mod (1/r)Z."""
    r = a.r * b.r // math.gcd(a.r, b.r)
    a, b = a.lift(r), b.lift(r)
    if a.v != b.v or not _values_equal(a.c, b.c):
        return False
    for k in range(r - 1):
        if not _values_equal(a.tail[k], b.tail[k]):
            return False
    diff = _demote(a.tail[r - 1]) - _demote(b.tail[r - 1])
    diff = _demote(diff)
    if not isinstance(diff, Fraction):
        return False
    return (diff * r).denominator == 1


def _lower_hull(pts: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    pts = sorted(pts)
    hull: List[Tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _roots_any_field(p: Poly, base: Optional[NumberField]):
    """All roots of p as (value, field-or-None); any root outside Q and
    quadratic reach raises."""
    if base is not None:
        found = roots_in_field(p, base)
        if sum(m for _, m in found) < p.degree:
            raise ValueError("unsupported extension degree")
        return [(r, base) for r, _ in found]
    out = []
    _, factors = factor_over_Q(p)
    for f, _m in factors:
        if f.degree == 1:
            out.append((-Fraction(f[0]) / Fraction(f[1]), None))
        elif f.degree == 2:
            disc = Fraction(f[1]) ** 2 - 4 * Fraction(f[2]) * Fraction(f[0])
            fld, s = sqrt_as_field_element(disc)
            if fld is None:
                raise ValueError("reducible quadratic factor")  # unreachable
            half = Fraction(1, 2) / Fraction(f[2])
            out.append(((s - Fraction(f[1])) * half, fld))
            out.append(((-s - Fraction(f[1])) * half, fld))
        else:
            raise ValueError("unsupported extension degree")
    return out


def _sqrt_value(v, base: Optional[NumberField]):
    """Square root of v as (value, field-or-None); raises when it would
    leave quadratic reach."""
    v = _demote(v)
    if isinstance(v, Fraction):
        fld, s = sqrt_as_field_element(v)
        return (s, fld)
    s = field_sqrt(v, v.field)
    if s is None:
        raise ValueError("unsupported extension degree")
    return (s, v.field)


def _twisted_ind(polys: Sequence[Poly], g: TSeries, slots: int):
    """Indicial data of L ⊛ (τ - 1/g) for exact windowed g."""
    ram = g.ram
    d = len(polys) - 1
    rho = g.inverse().retrunc(slots)
    windows = _coeff_windows(polys, ram, slots)
    taus = [rho]
    for _ in range(d - 1):
        taus.append(taus[-1].tau())
    suffix = [None] * (d + 1)
    suffix[d] = TSeries(ram, 0, (Fraction(1),) + (Fraction(0),) * (slots - 1))
    for i in range(d - 1, -1, -1):
        suffix[i] = taus[i] * suffix[i + 1]
    bs = [windows[i] * suffix[i] for i in range(d + 1)]
    return _indicial_of_series(bs)


def _mult_of_zero(P: Poly) -> int:
    for k, c in enumerate(P.coeffs):
        if c:
            return k
    return 0


def _definitional_mult(polys: Sequence[Poly], rep: GenExpRep) -> int:
    r = rep.r
    for slots in (2 * r + 2, 4 * r + 4):
        got = _twisted_ind(polys, rep.series(slots), slots)
        if got:
            return _mult_of_zero(got[0])
    raise ValueError("increase truncation")


def _monomial_series(c, v: Fraction, ram: int, slots: int) -> TSeries:
    return TSeries(
        ram, int(Fraction(v) * ram), (c,) + (Fraction(0),) * (slots - 1)
    )


def _tail_candidates(polys, c, v: Fraction, beta, fld, ram: int) -> List[GenExpRep]:
    """Indicial-root step: with leading part c·t^v(1+beta·t^(1/2)) fixed,
    the level-1 tail coefficients are -n0 over the indicial roots n0."""
    out = []
    for slots in (2 * ram + 2, 4 * ram + 4):
        if ram == 1:
            g = _monomial_series(c, v, 1, slots)
        else:
            cs = [c, c * beta] + [Fraction(0)] * (slots - 2)
            g = TSeries(2, int(Fraction(v) * 2), cs[:slots])
        got = _twisted_ind(polys, g, slots)
        if got is None:
            continue
        P, _lvl = got
        if not P.degree >= 1:
            return []  # no roots at this branch
        for n0, rfld in _roots_any_field(P, fld):
            joined = _join_field([c, beta, n0] if ram == 2 else [c, n0])
            if joined is None and rfld is not None:
                joined = rfld
            cc = _coerce_value(c, joined)
            n0c = _coerce_value(n0, joined)
            if ram == 1:
                tail = (-n0c,)
            else:
                tail = (_coerce_value(beta, joined), -n0c)
            cand = GenExpRep(ram, cc, Fraction(v), tail)
            m = _definitional_mult(polys, cand)
            if m > 0:
                out.append(
                    GenExpRep(cand.r, cand.c, cand.v, cand.tail, m)
                )
        return out
    raise ValueError("increase truncation")


def _ramified_branch(polys, c, v: Fraction, fld, want_beta_zero: bool):
    """Ramification-2 refinement at leading part c·t^v: find t^(1/2)-level
    ratio coefficients from the Δ-polygon, then finish with the indicial
    step.  Returns (entries, saw_higher_ramification)."""
    d = len(polys) - 1
    entries: List[GenExpRep] = []
    incomplete = False
    for slots in (6, 12):
        g0 = _monomial_series(c, v, 2, slots)
        ram = 2
        rho = g0.inverse().retrunc(slots)
        windows = _coeff_windows(polys, ram, slots)
        taus = [rho]
        for _ in range(d - 1):
            taus.append(taus[-1].tau())
        suffix = [None] * (d + 1)
        suffix[d] = TSeries(ram, 0, (Fraction(1),) + (Fraction(0),) * (slots - 1))
        for i in range(d - 1, -1, -1):
            suffix[i] = taus[i] * suffix[i + 1]
        bs = [windows[i] * suffix[i] for i in range(d + 1)]
        # τ = 1 + Δ: m_α = Σ_{i≥α} C(i,α)·b_i
        mal = []
        for alpha in range(d + 1):
            acc = None
            for i in range(alpha, d + 1):
                term = bs[i] * Fraction(math.comb(i, alpha))
                acc = term if acc is None else acc + term
            mal.append(acc)
        vals = []
        for alpha, m in enumerate(mal):
            va = m.valuation()
            if va is not None:
                vals.append((alpha, va))
        if not vals:
            continue  # window too small to see anything
        # supporting line of slope -1/2 in (α, valuation)
        best = min(va + Fraction(alpha, 2) for alpha, va in vals)
        touch = [(alpha, va) for alpha, va in vals if va + Fraction(alpha, 2) == best]
        # other fractional slopes on the lower hull would need ramification > 2
        hull = _lower_hull([(a, va * 2) for a, va in vals])  # y in half-units
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            slope2 = Fraction(y2 - y1, x2 - x1)  # 2·slope
            if -2 < slope2 < 0 and slope2 != -1:
                incomplete = True
        betas = []
        if len(touch) >= 2:
            a0 = touch[0][0]
            spacing = 0
            for alpha, _ in touch[1:]:
                spacing = math.gcd(spacing, alpha - a0)
            phi = [Fraction(0)] * ((touch[-1][0] - a0) // spacing + 1)
            for alpha, va in touch:
                lead = mal[alpha].coeff_at(va)
                phi[(alpha - a0) // spacing] = phi[(alpha - a0) // spacing] + lead
            phi_poly = Poly(phi)
            base = _join_field([c] + [p for p in phi if not _is_rational_value(p)])
            for B, bfld in _roots_any_field(phi_poly, base):
                if spacing == 1:
                    betas.append((B, bfld))
                elif spacing == 2:
                    s, sfld = _sqrt_value(B, bfld)
                    betas.append((s, sfld))
                    betas.append((-s, sfld))
                else:
                    incomplete = True
        if want_beta_zero:
            betas.append((Fraction(0), fld))
        for beta, bfld in betas:
            joined = _join_field([c, beta])
            entries.extend(_tail_candidates(polys, c, v, beta, joined or bfld, 2))
        return entries, incomplete
    raise ValueError("increase truncation")


def generalized_exponents(L: Operator, max_ram: int = 2) -> GenExpSet:
    """Multiset of E_r representatives of the exponents of L at infinity,
    each with its definitional multiplicity."""
    if not L.is_normal():
        raise ValueError("operator must be normal")
    if max_ram not in (1, 2):
        raise ValueError("max_ram must be 1 or 2")
    polys = L.poly_coeffs()
    d = L.order
    pts = [(i, -p.degree) for i, p in enumerate(polys) if p]
    hull = _lower_hull(pts)
    degmap: Dict[int, int] = {i: y for i, y in pts}

    entries: List[GenExpRep] = []
    complete = True
    integer_branches: List[Tuple[Fraction, object, Optional[NumberField]]] = []

    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y2 - y1, x2 - x1)
        v = -slope
        if v.denominator == 1:
            phi = [Fraction(0)] * (x2 - x1 + 1)
            for i in range(x1, x2 + 1):
                if i in degmap and degmap[i] == y1 + slope * (i - x1):
                    phi[i - x1] = Fraction(polys[i].lead())
            for c, fld in _roots_any_field(Poly(phi), None):
                integer_branches.append((v, c, fld))
                entries.extend(_tail_candidates(polys, c, v, None, fld, 1))
        elif v.denominator == 2 and max_ram >= 2:
            phi = [Fraction(0)] * ((x2 - x1) // 2 + 1)
            for i in range(x1, x2 + 1, 2):
                if i in degmap and degmap[i] == y1 + slope * (i - x1):
                    phi[(i - x1) // 2] = Fraction(polys[i].lead())
            for C, cfld in _roots_any_field(Poly(phi), None):
                s, sfld = _sqrt_value(C, cfld)
                for c in (s, -s):
                    got, inc = _ramified_branch(polys, c, v, sfld, True)
                    entries.extend(got)
                    complete = complete and not inc
        else:
            complete = False

    entries = _dedupe_entries(entries)
    if sum(e.multiplicity for e in entries) < d and max_ram >= 2:
        for v, c, fld in integer_branches:
            got, inc = _ramified_branch(polys, c, v, fld, False)
            entries.extend(got)
            complete = complete and not inc
        entries = _dedupe_entries(entries)

    complete = complete and sum(e.multiplicity for e in entries) == d
    entries.sort(key=GenExpRep.sort_key)
    return GenExpSet(tuple(entries), complete)


def _dedupe_entries(entries: List[GenExpRep]) -> List[GenExpRep]:
    out: List[GenExpRep] = []
    for e in entries:
        if not any(e == seen for seen in out):
            out.append(e)
    return out


def gquo(L: Operator, max_ram: int = 2) -> List[GenExpRep]:
    """Truncated pairwise quotients of distinct generalized exponents."""
    ges = generalized_exponents(L, max_ram)
    out: List[GenExpRep] = []
    for gi in ges:
        for gj in ges:
            if gi == gj:
                continue
            r = gi.r * gj.r // math.gcd(gi.r, gj.r)
            fld = _join_field([gi.c, *gi.tail, gj.c, *gj.tail])
            slots = 2 * r + 2
            si = _rep_series_in_field(gi.lift(r), fld, slots)
            sj = _rep_series_in_field(gj.lift(r), fld, slots)
            q = trunc(si / sj, r)
            if not any(q == seen for seen in out):
                out.append(q)
    out.sort(key=GenExpRep.sort_key)
    return out


def _rep_series_in_field(rep: GenExpRep, fld: Optional[NumberField], slots: int) -> TSeries:
    coeffs = [rep.c] + [rep.c * a for a in rep.tail]
    if fld is not None:
        coeffs = [_coerce_value(cv, fld) for cv in coeffs]
    coeffs += [Fraction(0)] * max(0, slots - len(coeffs))
    return TSeries(rep.r, int(rep.v * rep.r), coeffs)


# -- aggregate + serialization -------------------------------------------------


@dataclass
class LocalData:
    valg: Tuple[ValGEntry, ...]
    genexp: Tuple[GenExpRep, ...]
    gquo: Tuple[GenExpRep, ...]
    genexp_complete: bool

    def to_json(self) -> dict:
        return {
            "valg": [
                {
                    "class": [_frac_str(c) for c in e.cls.representative.coeffs],
                    "gap": e.gap,
                }
                for e in sorted(
                    self.valg,
                    key=lambda e: (
                        e.cls.representative.degree,
                        e.cls.representative.coeffs,
                    ),
                )
            ],
            "genexp": [_rep_json(g) for g in self.genexp],
            "gquo": [_rep_json(g) for g in self.gquo],
            "genexp_complete": self.genexp_complete,
        }


def _frac_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _value_json(v):
    v = _demote(v)
    if isinstance(v, Fraction):
        return _frac_str(v)
    return {
        "minpoly": [_frac_str(c) for c in v.field.modulus.coeffs],
        "coords": [_frac_str(c) for c in v.coords],
    }


def _rep_json(g: GenExpRep) -> dict:
    return {
        "r": g.r,
        "v": _frac_str(g.v),
        "c": _value_json(g.c),
        "tail": [_value_json(a) for a in g.tail],
        "multiplicity": g.multiplicity,
    }


def local_data(L: Operator, max_ram: int = 2) -> LocalData:
    ges = generalized_exponents(L, max_ram)
    return LocalData(
        valg=tuple(
            sorted(
                valg_set(L),
                key=lambda e: (
                    e.cls.representative.degree,
                    e.cls.representative.coeffs,
                ),
            )
        ),
        genexp=ges.entries,
        gquo=tuple(gquo(L, max_ram)),
        genexp_complete=ges.complete,
    )
