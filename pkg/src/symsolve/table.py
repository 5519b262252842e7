"""Base table of order-3 operators with known squared closed forms.

Each entry stores an order-2 "root" operator template whose symmetric
square is the entry's order-3 base operator, the solution family, and
parameterized local-data templates (Gquo / ValG) used for matching.  The
shipped table lives in data/base_table.json; SYMSOLVE_TABLE or an explicit
path overrides it.

The root middle coefficient may carry sqrt(D) (half-argument Gauss family,
D = 1-z); the symmetric-square formulas are even in it, so the base
operator is always rational.
"""

import json
import math
import os
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .evaluators import EVALUATORS, eval_special
from .exprs import eval_fraction, eval_poly, eval_value
from .fieldext import NumberField, field_sqrt, squarefree_core
from .localdata import (GenExpRep, LocalData, SingularityClass, ValGEntry,
                        local_data, problem_points, r_equivalent)
from .ore import Operator
from .poly import P, Poly
from .symprod import interlace, symsquare_order2
from .equivalence import hom_space

__all__ = [
    "TableError", "TableValidationError", "TableEntry", "BaseTable",
    "SolutionDescriptor", "MatchDetail", "load_table", "default_table_path",
    "resolve_table_path", "match_local_data", "solve_parameters",
    "interlaced_gate",
]


class TableError(ValueError):
    """Schema or file problem in a table definition."""


class TableValidationError(ValueError):
    """An entry failed its self-validation."""


@dataclass(frozen=True)
class SolutionDescriptor:
    expr: str
    evaluator: str
    params: Tuple[Tuple[str, Fraction], ...]

    def param_map(self) -> Dict[str, Fraction]:
        return dict(self.params)

    def display(self) -> str:
        out = self.expr
        for name, val in self.params:
            out = _subst_word(out, name, _frac_str(val))
        return out

    def eval(self, x: int, exact: bool = False):
        return eval_special(self.evaluator, x, self.param_map(), exact=exact)


def _frac_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _subst_word(text: str, name: str, repl: str) -> str:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if (ch.isalpha() or ch == "_") and text[i:i + len(name)] == name:
            before_ok = i == 0 or not (text[i - 1].isalnum() or text[i - 1] == "_")
            j = i + len(name)
            after_ok = j >= n or not (text[j].isalnum() or text[j] == "_")
            if before_ok and after_ok:
                out.append(repl)
                i = j
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def _canonical_class_rep(point: Fraction) -> Poly:
    """x - r with r the representative of point's class in (-1, 0]."""
    r = point - math.ceil(point)
    return P(-r, 1)


_REQUIRED_FIELDS = ("name", "params", "operator", "root", "solution",
                    "gquo", "valg", "matcher")
_MATCHER_KINDS = ("gauss_locus", "legendre_sq", "hermite_sq", "besseli_sq")


@dataclass
class TableEntry:
    name: str
    params: Tuple[Tuple[str, str], ...]          # (name, domain text)
    operator_templates: Tuple[str, str, str, str]
    root: Dict[str, str]
    solution_expr: str
    evaluator: str
    gquo_templates: Tuple[dict, ...]
    valg_templates: Tuple[dict, ...]
    matcher: Dict[str, object]

    @property
    def param_names(self) -> List[str]:
        return [p[0] for p in self.params]

    # -- instantiation --------------------------------------------------------

    def root_polys(self, assignment: Mapping[str, Fraction]
                   ) -> Tuple[Poly, Poly, Fraction, Poly]:
        """(a0, p, D, a2) with the middle coefficient p*sqrt(D)."""
        a0 = eval_poly(self.root["a0"], assignment)
        p = eval_poly(self.root["a1"], assignment)
        D = eval_fraction(self.root["sqrt"], assignment)
        a2 = eval_poly(self.root["a2"], assignment)
        return a0, p, D, a2

    def instantiate(self, assignment: Mapping[str, Fraction]
                    ) -> Tuple[Operator, SolutionDescriptor]:
        missing = [n for n in self.param_names if n not in assignment]
        if missing:
            raise TableError(f"entry {self.name!r}: missing parameters {missing}")
        a0, p, D, a2 = self.root_polys(assignment)
        if not a0 or not a2:
            raise TableError(
                f"entry {self.name!r}: root operator is not normal at this value")
        if not p or D == 0:
            raise TableError(
                f"entry {self.name!r}: middle root coefficient vanishes, "
                "not a full operator")
        sh = lambda q: q.shift(1)
        c3 = p * sh(a2) * sh(a2) * a2
        c2 = sh(p) * a2 * (sh(a0) * a2 - Poly.const(D) * sh(p) * p)
        c1 = sh(a0) * p * (Poly.const(D) * sh(p) * p - sh(a0) * a2)
        c0 = -(sh(p) * sh(a0) * a0 * a0)
        M = Operator([c0, c1, c2, c3]).canonical()
        if M.order != 3 or not M.is_normal():
            raise TableError(
                f"entry {self.name!r}: instantiation degenerates (a_d or a_0 = 0)")
        tmpl = Operator([eval_poly(s, assignment)
                         for s in self.operator_templates]).canonical()
        if tmpl != M:
            raise TableError(
                f"entry {self.name!r}: field 'operator' disagrees with the "
                "root symmetric square")
        desc = SolutionDescriptor(
            self.solution_expr, self.evaluator,
            tuple(sorted((k, Fraction(v)) for k, v in assignment.items()
                         if k in _EVAL_PARAMS.get(self.evaluator, ()))))
        return M, desc

    # -- local-data templates -------------------------------------------------

    def expected_valg(self, assignment: Mapping[str, Fraction]) -> set:
        # When two template points land in the same shift class their dips
        # interact by the parity of the integer offset: odd offset adds the
        # gaps, even offset cancels the class outright (the half-power sign
        # pattern repeats at even shifts and the local solutions glue).
        by_class: Dict[Poly, List[Tuple[Fraction, int]]] = {}
        for t in self.valg_templates:
            pt = eval_fraction(t["point"], assignment)
            rep = _canonical_class_rep(pt)
            by_class.setdefault(rep, []).append((pt, int(t["gap"])))
        out = set()
        for rep, dips in by_class.items():
            if len(dips) == 1:
                gap = dips[0][1]
            else:
                (p1, g1), (p2, g2) = dips
                gap = g1 + g2 if int(p1 - p2) % 2 else 0
            if gap > 0:
                out.add(ValGEntry(SingularityClass(rep), gap))
        return out

    def expected_gquo(self, assignment: Mapping[str, Fraction]) -> List[GenExpRep]:
        out = []
        for t in self.gquo_templates:
            c = eval_value(t["c"], assignment)
            tail = tuple(eval_value(s, assignment) for s in t["tail"])
            rep = GenExpRep(int(t["r"]), c,
                            Fraction(eval_fraction(str(t["v"]), assignment)),
                            tail, 1)
            if rep not in out:
                out.append(rep)
        return out

    # -- self-validation ------------------------------------------------------

    def sample_assignment(self, rng: random.Random) -> Dict[str, Fraction]:
        return _SAMPLERS[self.matcher["kind"]](rng)

    def self_validate(self, assignment: Mapping[str, Fraction]) -> None:
        M, desc = self.instantiate(assignment)
        data = local_data(M)
        if not data.genexp_complete:
            raise TableValidationError(
                f"entry {self.name!r}: incomplete exponents at {assignment}")
        want_valg = self.expected_valg(assignment)
        if set(data.valg) != want_valg:
            raise TableValidationError(
                f"entry {self.name!r}: ValG mismatch at {assignment}: "
                f"{set(data.valg)} != {want_valg}")
        want_gquo = self.expected_gquo(assignment)
        got_gquo = list(data.gquo)
        for g in got_gquo:
            if not any(r_equivalent(g, w) for w in want_gquo):
                raise TableValidationError(
                    f"entry {self.name!r}: computed Gquo element {g} matches "
                    f"no template at {assignment}")
        for w in want_gquo:
            if not any(r_equivalent(g, w) for g in got_gquo):
                raise TableValidationError(
                    f"entry {self.name!r}: template Gquo element {w} not "
                    f"realized at {assignment}")
        _numeric_solution_check(self.name, M, desc)


def _numeric_solution_check(name: str, M: Operator, desc: SolutionDescriptor,
                            points: int = 6, rtol: float = 1e-9) -> None:
    x0 = 5 + _max_problem_point(M)
    polys = M.poly_coeffs()
    vals = [desc.eval(x, exact=False) for x in range(x0, x0 + points + M.order)]
    for j in range(points):
        x = x0 + j
        terms = [float(polys[i].eval(Fraction(x))) * vals[j + i] ** 2
                 for i in range(M.order + 1)]
        resid = abs(sum(terms))
        scale = max(abs(t) for t in terms)
        if scale > 0 and resid > rtol * scale:
            raise TableValidationError(
                f"entry {name!r}: solution fails its own operator at x={x} "
                f"(residual {resid:.3e} vs scale {scale:.3e})")


def _max_problem_point(L: Operator) -> int:
    worst = 0
    for rep, offs in problem_points(L):
        m = rep.monic()
        if m.degree != 1:
            continue
        r0 = -Fraction(m[0])
        if r0.denominator == 1:
            worst = max(worst, int(r0) + max(offs, default=0))
    return max(worst, 0)


_EVAL_PARAMS = {
    "H": ("z",), "P": ("z",), "I": ("z",),
    "2F1": ("a", "b", "c", "z"), "3F2": ("alpha", "z"),
}


def _rand_fraction(rng: random.Random, lo: Fraction, hi: Fraction,
                   den_max: int = 8) -> Fraction:
    den = rng.randint(2, den_max)
    span = (hi - lo) * den
    num = rng.randint(1, max(1, math.floor(span) - 1))
    return lo + Fraction(num, den)


def _sample_gauss(rng: random.Random) -> Dict[str, Fraction]:
    a = rng.choice([Fraction(0), Fraction(1, 2)])
    b = _rand_fraction(rng, Fraction(0), Fraction(1))
    z = _rand_fraction(rng, Fraction(0), Fraction(1))
    return {"a": a, "b": b, "c": a + b + Fraction(1, 2), "z": z}


def _sample_z(rng: random.Random, exclude=()) -> Dict[str, Fraction]:
    while True:
        z = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        if rng.random() < 0.5:
            z = -z
        if z != 0 and z not in exclude:
            return {"z": z}


_SAMPLERS = {
    "gauss_locus": _sample_gauss,
    "legendre_sq": lambda rng: _sample_z(rng, exclude=(Fraction(1), Fraction(-1))),
    "hermite_sq": _sample_z,
    "besseli_sq": _sample_z,
}


# -- table loading ------------------------------------------------------------

@dataclass
class BaseTable:
    entries: Tuple[TableEntry, ...]
    path: Optional[str] = None

    def __iter__(self):
        return iter(self.entries)

    def entry(self, name: str) -> TableEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def self_validate(self, seed: int = 0, samples: int = 3) -> None:
        rng = random.Random(seed)
        for e in self.entries:
            for _ in range(samples):
                e.self_validate(e.sample_assignment(rng))
            if e.matcher["kind"] == "gauss_locus":
                if not interlaced_gate(e.sample_assignment(rng)):
                    raise TableValidationError(
                        f"entry {e.name!r}: interlaced order-minimality gate "
                        "failed (Hom dimension not > 1)")


def default_table_path() -> str:
    return str(Path(__file__).parent / "data" / "base_table.json")


def resolve_table_path(explicit: Optional[str] = None) -> str:
    return explicit or os.environ.get("SYMSOLVE_TABLE") or default_table_path()


def _require(cond: bool, entry: str, fieldname: str, msg: str) -> None:
    if not cond:
        raise TableError(f"entry {entry!r}: field {fieldname!r} {msg}")


def load_table(path: Optional[str] = None, validate: bool = False,
               seed: int = 0) -> BaseTable:
    fname = resolve_table_path(path)
    try:
        raw = json.loads(Path(fname).read_text())
    except FileNotFoundError:
        raise TableError(f"table file not found: {fname}") from None
    except json.JSONDecodeError as e:
        raise TableError(f"table file {fname}: invalid JSON ({e})") from None
    if not isinstance(raw, dict) or "entries" not in raw:
        raise TableError(f"table file {fname}: missing top-level 'entries'")
    entries = []
    seen = set()
    for item in raw["entries"]:
        name = item.get("name")
        if not isinstance(name, str) or not name:
            raise TableError("table entry without a 'name'")
        if name in seen:
            raise TableError(f"entry {name!r}: duplicate name")
        seen.add(name)
        for f in _REQUIRED_FIELDS:
            _require(f in item, name, f, "is missing")
        _require(isinstance(item["operator"], list)
                 and len(item["operator"]) == 4
                 and all(isinstance(s, str) for s in item["operator"]),
                 name, "operator", "must be a list of 4 coefficient strings")
        _require(isinstance(item["root"], dict)
                 and set(item["root"]) == {"a0", "a1", "sqrt", "a2"},
                 name, "root", "must have a0/a1/sqrt/a2")
        sol = item["solution"]
        _require(isinstance(sol, dict) and "expr" in sol and "evaluator" in sol,
                 name, "solution", "must have expr and evaluator")
        _require(sol["evaluator"] in EVALUATORS, name, "solution",
                 f"names unknown evaluator {sol['evaluator']!r}")
        _require(isinstance(item["params"], list) and all(
            isinstance(p, dict) and "name" in p and "domain" in p
            for p in item["params"]), name, "params",
            "must be a list of {name, domain}")
        for g in item["gquo"]:
            _require(isinstance(g, dict)
                     and set(g) >= {"r", "v", "c", "tail"}
                     and isinstance(g["tail"], list)
                     and len(g["tail"]) == int(g["r"]),
                     name, "gquo",
                     "elements need r/v/c/tail with r tail slots")
        for v in item["valg"]:
            _require(isinstance(v, dict) and "point" in v and "gap" in v
                     and int(v["gap"]) > 0,
                     name, "valg", "elements need point and a positive gap")
        _require(isinstance(item["matcher"], dict)
                 and item["matcher"].get("kind") in _MATCHER_KINDS,
                 name, "matcher",
                 f"kind must be one of {_MATCHER_KINDS}")
        entries.append(TableEntry(
            name=name,
            params=tuple((p["name"], p["domain"]) for p in item["params"]),
            operator_templates=tuple(item["operator"]),
            root=dict(item["root"]),
            solution_expr=sol["expr"],
            evaluator=sol["evaluator"],
            gquo_templates=tuple(item["gquo"]),
            valg_templates=tuple(item["valg"]),
            matcher=dict(item["matcher"]),
        ))
    if not entries:
        raise TableError(f"table file {fname}: no entries")
    table = BaseTable(tuple(entries), path=fname)
    if validate:
        table.self_validate(seed=seed)
    return table


# -- matching -----------------------------------------------------------------

def _quotient_classes(reps: Sequence[GenExpRep]) -> List[GenExpRep]:
    out: List[GenExpRep] = []
    for g in reps:
        if not any(r_equivalent(g, h) for h in out):
            out.append(g)
    return out


def _shape_of(reps: Sequence[GenExpRep]) -> set:
    return {(g.r, g.v) for g in reps}


def _gaps_compatible(template_gaps: Sequence[int],
                     observed_gaps: Sequence[int]) -> bool:
    """Observed gap multiset reachable from the template one when parameter
    values make template points collide: a pair of classes may merge into a
    single class with the summed gap (odd offset) or vanish (even offset)."""
    tg = sorted(template_gaps)
    og = sorted(observed_gaps)
    if tg == og:
        return True
    if len(tg) == 2 and (og == [tg[0] + tg[1]] or og == []):
        return True
    return False


def match_local_data(data: LocalData, table: BaseTable) -> List[TableEntry]:
    """Entries whose template shapes are compatible with the observed data."""
    if len(data.genexp) == 0:
        return []
    obs_classes = _quotient_classes(list(data.gquo))
    obs_shape = _shape_of(obs_classes)
    obs_gaps = [e.gap for e in data.valg]
    out = []
    for entry in table:
        t_pairs = [(int(g["r"]), Fraction(g["v"])) for g in entry.gquo_templates]
        # constants may collide at special parameter values, so the observed
        # class count can drop below the template's, never exceed it
        if set(t_pairs) != obs_shape or len(obs_classes) > len(t_pairs):
            continue
        if not _gaps_compatible([int(v["gap"]) for v in entry.valg_templates],
                                obs_gaps):
            continue
        out.append(entry)
    return out


# -- parameter matchers -------------------------------------------------------

@dataclass
class MatchDetail:
    assignments: List[Dict[str, Fraction]]
    param_candidates: Dict[str, List[Fraction]]
    warnings: List[str] = field(default_factory=list)


def _as_rational(v) -> Optional[Fraction]:
    if isinstance(v, Fraction):
        return v
    if hasattr(v, "is_rational") and v.is_rational():
        return v.as_rational()
    return None


def _rational_sqrts(q: Fraction) -> List[Fraction]:
    if q < 0:
        return []
    outside, core = squarefree_core(q)
    if core != 1:
        return []
    return [abs(outside), -abs(outside)] if outside != 0 else [Fraction(0)]


def _value_sqrts(v, warn: List[str]) -> list:
    """Square roots of a Fraction/NFElem, extending Q by one radical at most."""
    if isinstance(v, Fraction):
        outside, core = squarefree_core(v)
        if core == 1:
            return [outside, -outside] if outside else [Fraction(0)]
        fld = NumberField.quadratic(core)
        s = fld.element([Fraction(0), outside])
        return [s, -s]
    s = field_sqrt(v, v.field)
    if s is None:
        warn.append("square root outside the quadratic field; branch "
                    "skipped (would need a degree-4 extension)")
        return []
    return [s, -s]


def _sorted_unique(vals: Sequence[Fraction]) -> List[Fraction]:
    return sorted(set(vals), key=lambda q: (abs(q), q < 0, q))


def _match_gauss(entry: TableEntry, data: LocalData) -> MatchDetail:
    warn: List[str] = []
    roots = []
    for e in data.valg:
        rep = e.cls.representative.monic()
        if rep.degree != 1:
            return MatchDetail([], {})
        roots.append(-Fraction(rep[0]))
    a_cands = [Fraction(0), Fraction(1, 2)]
    nonzero = [r for r in roots if r != 0]
    if len(roots) == 2 and len(nonzero) == 1:
        beta = (-nonzero[0] / 2) % Fraction(1, 2)
    elif len(roots) <= 1 and not nonzero:
        # merged classes (summed or cancelled): both points sit over 0
        beta = Fraction(0)
    else:
        return MatchDetail([], {})
    b_cands = [beta, beta + Fraction(1, 2)]
    c_cands = [beta + 1, beta + Fraction(3, 2)]

    z_cands: List[Fraction] = []
    for g in data.gquo:
        if g.r != 1 or g.v != 0:
            return MatchDetail([], {})
        ratios = [-g.c]                            # value read as -R
        ratios += _value_sqrts(g.c, warn)          # value read as R^2
        for R in ratios:
            if not R:
                continue
            zz = _as_rational((R + 1) * (R + 1) / (4 * R))
            if zz is None:
                continue
            if 0 < zz < 1:
                z_cands.append(zz)
    z_cands = _sorted_unique(z_cands)

    assignments = []
    for z in z_cands:
        for a in a_cands:
            for b in b_cands:
                c = a + b + Fraction(1, 2)
                if c in c_cands:
                    assignments.append({"a": a, "b": b, "c": c, "z": z})
    assignments.sort(key=lambda m: (m["z"], m["a"], m["b"], m["c"]))
    return MatchDetail(assignments,
                       {"a": a_cands, "b": b_cands, "c": c_cands,
                        "z": z_cands}, warn)


def _match_legendre(entry: TableEntry, data: LocalData) -> MatchDetail:
    warn: List[str] = []
    z_cands: List[Fraction] = []
    for g in data.gquo:
        if g.r != 1 or g.v != 0:
            return MatchDetail([], {})
        aval = g.c
        # lambda^2-type element: z^2 = (a+1)^2 / (4a)
        zz = _as_rational((aval + 1) * (aval + 1) / (4 * aval))
        if zz is not None:
            z_cands.extend(_rational_sqrts(zz))
        # lambda^4-type element: z^2 = (2a +- sqrt(a^3+2a^2+a)) / (4a)
        for s in _value_sqrts(aval * (aval + 1) * (aval + 1), warn):
            zz = _as_rational((2 * aval + s) / (4 * aval))
            if zz is not None:
                z_cands.extend(_rational_sqrts(zz))
    z_cands = [z for z in _sorted_unique(z_cands) if z != 0 and abs(z) != 1]
    return MatchDetail([{"z": z} for z in z_cands], {"z": z_cands}, warn)


def _match_hermite(entry: TableEntry, data: LocalData) -> MatchDetail:
    warn: List[str] = []
    z_cands: List[Fraction] = []
    for g in data.gquo:
        if g.r != 2 or g.v != 0 or not g.tail:
            return MatchDetail([], {})
        cval = _as_rational(g.c)
        if cval not in (Fraction(1), Fraction(-1)):
            return MatchDetail([], {})
        w = g.tail[0]
        w2 = _as_rational(w * w)
        if w2 is None:
            warn.append("irrational tail square; branch skipped")
            continue
        zz = -w2 / 2 if cval == -1 else -w2 / 8
        z_cands.extend(_rational_sqrts(zz))
    z_cands = [z for z in _sorted_unique(z_cands) if z != 0]
    return MatchDetail([{"z": z} for z in z_cands], {"z": z_cands}, warn)


def _match_bessel(entry: TableEntry, data: LocalData) -> MatchDetail:
    warn: List[str] = []
    z_sq: List[Fraction] = []
    for g in data.gquo:
        if g.r != 1:
            return MatchDetail([], {})
        cval = _as_rational(g.c)
        if cval is None:
            continue
        if g.v == 2:
            z_sq.append(-4 * cval)
        elif g.v == -2:
            if cval == 0:
                continue
            z_sq.append(-4 / cval)
    z_cands: List[Fraction] = []
    for zz in z_sq:
        z_cands.extend(_rational_sqrts(zz))
    z_cands = [z for z in _sorted_unique(z_cands) if z != 0]
    return MatchDetail([{"z": z} for z in z_cands], {"z": z_cands}, warn)


_MATCHERS = {
    "gauss_locus": _match_gauss,
    "legendre_sq": _match_legendre,
    "hermite_sq": _match_hermite,
    "besseli_sq": _match_bessel,
}


def solve_parameters_detailed(entry: TableEntry, data: LocalData) -> MatchDetail:
    detail = _MATCHERS[entry.matcher["kind"]](entry, data)
    for w in detail.warnings:
        warnings.warn(f"{entry.name}: {w}", RuntimeWarning, stacklevel=2)
    return detail


def solve_parameters(entry: TableEntry, data: LocalData
                     ) -> List[Dict[str, Fraction]]:
    return solve_parameters_detailed(entry, data).assignments


# -- interlaced presentation gate ---------------------------------------------

def full_argument_root(assignment: Mapping[str, Fraction]) -> Operator:
    """Order-2 recurrence of g(x) = 2F1(-x+a, x+b; c; z) (contiguous
    relation in the first parameter pair), used for the interlaced
    presentation of the half-argument entry."""
    a, b, c, z = (Fraction(assignment[k]) for k in ("a", "b", "c", "z"))
    x = P(0, 1)
    n = x - Poly.const(a)
    s = a + b - 1
    al = c - 1
    be = a + b - c
    y = 1 - 2 * z
    one = Poly.const(Fraction(1))

    def sc(q):
        return Poly.const(Fraction(q))

    A = sc(2) * (n + sc(c)) * (n + sc(s + 2)) * (sc(2) * n + sc(s + 2)) \
        * (n + sc(c + 1))
    B = -(n + sc(c)) * (sc(2) * n + sc(s + 3)) * (
        (sc(2) * n + sc(s + 4)) * (sc(2) * n + sc(s + 2)) * sc(y)
        + sc(al * al - be * be) * one)
    C = sc(2) * (n + sc(1)) * (n + sc(al + 1)) * (n + sc(be + 1)) \
        * (sc(2) * n + sc(s + 4))
    return Operator([C, B, A]).canonical()


def interlaced_gate(assignment: Mapping[str, Fraction]) -> bool:
    """The order-6 interlaced presentation is non-minimal: its endomorphism
    space has dimension > 1, which is the signal to prefer the order-3
    locus form as the base equation."""
    K_full = full_argument_root(assignment)
    M_full = symsquare_order2(K_full)
    L6 = interlace(M_full, 2)
    return len(hom_space(L6, L6)) > 1
