"""Transformation layer: rational solutions, hom spaces, term
candidates, the combined gauge/term search, and operator transport."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symsolve.equivalence import (
    GaugeMap,
    GTTransform,
    case_diagnosis,
    gt_find,
    hom_space,
    inverse_gauge,
    rational_solutions,
    term_candidates,
    transformed_operator,
)
from symsolve.opformat import parse_operator, print_operator
from symsolve.ore import Operator
from symsolve.poly import P, Poly
from symsolve.ratfunc import RF, RatFunc
from symsolve.snf import shift_normal_form
from symsolve.symprod import symprod_first_order, symsquare_order2

X = P(0, 1)
L_CUBIC = parse_operator("2S^3 + x^2 S^2 - 3S + (x+1)")

# order-3 operator whose symmetric square drops to order 5
E_TEXT = (
    "(x+1)S^3 + (-4x^4-28x^3-73x^2-84x-36)S^2"
    " + (-4x^5-28x^4-77x^3-104x^2-69x-18)S + (x^4+5x^3+8x^2+4x)"
)


def _apply(L: Operator, y: RatFunc) -> RatFunc:
    acc = RatFunc(Poly(), reduce=False)
    for i in range(L.order + 1):
        if L.coeff(i):
            acc = acc + L.coeff(i) * y.shift(i)
    return acc


def _proportional(G1: Operator, G2: Operator, L: Operator) -> bool:
    # G1 == c*G2 modulo L for some nonzero constant c
    a = G1 % L if G1.order >= L.order else G1
    b = G2 % L if G2.order >= L.order else G2
    lead = next((i for i in range(L.order) if a.coeff(i)), None)
    if lead is None or not b.coeff(lead):
        return False
    c = a.coeff(lead) / b.coeff(lead)
    if not c.is_constant():
        return False
    return all(a.coeff(i) == c * b.coeff(i) for i in range(L.order))


class TestRationalSolutions:
    def test_shift_of_x(self):
        L = parse_operator("x S - (x+1)")
        assert [y.to_str() for y in rational_solutions(L)] == ["x"]

    def test_constants(self):
        assert [y.to_str() for y in rational_solutions(parse_operator("S - 1"))] == ["1"]

    def test_geometric_has_none(self):
        assert rational_solutions(parse_operator("S - 2")) == []

    def test_pole_chain(self):
        L = parse_operator("(x+2) S - x")
        sols = rational_solutions(L)
        assert [y.to_str() for y in sols] == ["1/(x^2 + x)"]
        assert not _apply(L, sols[0])

    def test_double_unit_root(self):
        # (S - 1)^2 annihilates 1 and x
        sols = rational_solutions(parse_operator("S^2 - 2S + 1"))
        assert len(sols) == 2
        for y in sols:
            assert y.is_polynomial() and y.num.degree <= 1

    def test_planted_factor(self):
        y = RF([3, 0, 1], [0, 1])  # (x^2+3)/x
        L = (parse_operator("S - 2") * Operator([-(y.shift(1) / y), 1])).canonical()
        sols = rational_solutions(L)
        assert len(sols) == 1
        assert (sols[0] / y).is_constant()
        assert not _apply(L, sols[0])

    def test_cap_exceeded(self):
        with pytest.raises(ValueError, match="degree_cap"):
            rational_solutions(parse_operator("x S - (x+1)"), degree_cap=0)

    def test_non_normal_rejected(self):
        with pytest.raises(ValueError, match="normal"):
            rational_solutions(parse_operator("S^2 - x S", require_normal=False))

    @given(
        num=st.lists(st.integers(-3, 3), min_size=1, max_size=3),
        den=st.lists(st.integers(-3, 3), min_size=1, max_size=3),
    )
    @settings(max_examples=15, deadline=None)
    def test_first_order_planted(self, num, den):
        if not any(num) or not any(den):
            return
        y = RF(num, den)
        L = Operator([-(y.shift(1) / y), 1]).canonical()
        sols = rational_solutions(L)
        assert len(sols) == 1
        assert (sols[0] / y).is_constant()


class TestHomSpace:
    def test_identity_present(self):
        basis = hom_space(L_CUBIC, L_CUBIC, degree_cap=4)
        assert len(basis) == 1
        assert _proportional(basis[0].G, Operator.identity(), L_CUBIC)
        assert basis[0].bijective

    def test_identity_survives_zero_cap(self):
        # the shared denominator is part of the ansatz, not of the cap
        assert len(hom_space(L_CUBIC, L_CUBIC, degree_cap=0)) == 1

    def test_roundtrip_recovery(self):
        G = Operator([P(1), P(0, 1)])  # 1 + x*tau
        L2 = transformed_operator(L_CUBIC, G)
        basis = hom_space(L_CUBIC, L2, degree_cap=6)
        assert len(basis) == 1
        assert _proportional(basis[0].G, G, L_CUBIC)
        assert basis[0].bijective

    def test_kernel_only_map(self):
        # solutions {1, 2^x} vs {2^x, 3^x}: constants must die, so the
        # only maps are multiples of 1 - tau, and none is a bijection
        L1 = parse_operator("S^2 - 3S + 2")
        L2 = parse_operator("S^2 - 5S + 6")
        basis = hom_space(L1, L2, degree_cap=4)
        assert len(basis) == 1
        assert _proportional(basis[0].G, Operator([P(1), P(-1)]), L1)
        assert not basis[0].bijective

    def test_zero_remainder_invariant(self):
        G = Operator([P(0, 1), P(2)])
        L2 = transformed_operator(L_CUBIC, G)
        for gm in hom_space(L_CUBIC, L2, degree_cap=6):
            assert not (gm.target * gm.G) % gm.source

    def test_dimension_twist_invariance(self):
        G = Operator([P(1), P(0, 1)])
        L2 = transformed_operator(L_CUBIC, G)
        r = RF([0, 1])
        dim = len(hom_space(L_CUBIC, L2, degree_cap=5))
        dim_twisted = len(
            hom_space(
                symprod_first_order(L_CUBIC, r),
                symprod_first_order(L2, r),
                degree_cap=5,
            )
        )
        assert dim == dim_twisted == 1

    def test_requires_normal(self):
        with pytest.raises(ValueError, match="normal"):
            hom_space(parse_operator("S^2 - x S", require_normal=False), L_CUBIC)


class TestTermCandidates:
    def test_cubic_twist(self):
        L2 = symprod_first_order(L_CUBIC, RF([0, 1]))
        assert term_candidates(L_CUBIC, L2) == [RF([0, 1])]

    def test_identity(self):
        assert term_candidates(L_CUBIC, L_CUBIC) == [RF([1])]

    def test_ratio_not_a_cube(self):
        cs = list(L_CUBIC.coeffs)
        L2 = Operator([cs[0] * RF([0, 1])] + cs[1:])
        assert term_candidates(L_CUBIC, L2) == []

    def test_even_order_gives_both_signs(self):
        K = parse_operator("S^2 - 3S + 2")
        K2 = symprod_first_order(K, RF([0, 1]))
        assert term_candidates(K, K2) == [RF([0, 1]), -RF([0, 1])]

    def test_shift_class_collapses(self):
        # planting x+1 normalizes to the class representative x
        L2 = symprod_first_order(L_CUBIC, RF([1, 1]))
        assert term_candidates(L_CUBIC, L2) == [RF([0, 1])]

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError, match="order"):
            term_candidates(L_CUBIC, parse_operator("S - 1"))


TERM_POOL = (
    RF([1]),
    RF([2]),
    RF([0, 1]),
    RF([1, 1]),
    RF([1], [0, 1]),
)


def _random_order3(rng) -> Operator:
    while True:
        cs = [
            P(*[F(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))])
            for _ in range(4)
        ]
        L = Operator(cs)
        if L.order == 3 and L.is_normal():
            return L.canonical()


def _random_gauge(rng, M: Operator) -> Operator:
    while True:
        cs = [
            P(*[F(rng.randint(-2, 2)) for _ in range(1 + rng.randint(0, 1))])
            for _ in range(rng.randint(1, 3))
        ]
        G = Operator(cs)
        if G and G.gcrd(M).order == 0:
            return G


class TestGtFind:
    def test_self_is_trivial(self):
        t = gt_find(L_CUBIC, L_CUBIC, degree_cap=4)
        assert t.r == RF([1])
        assert _proportional(t.G.G, Operator.identity(), L_CUBIC)

    def test_disguised_twist(self):
        r = RF([0, 1])
        M = symprod_first_order(L_CUBIC, r)
        G = Operator([P(1), P(0, 1)])
        L2 = transformed_operator(M, G)
        t = gt_find(L_CUBIC, L2, degree_cap=6)
        assert t is not None
        assert t.r == r
        assert _proportional(t.G.G, G, M)
        assert t.G.bijective
        assert t.target == L2

    def test_no_transform_between_unrelated(self):
        assert gt_find(
            parse_operator("S^2 - 3S + 2"), parse_operator("S^2 - 5S + 6")
        ) is None

    @pytest.mark.parametrize("seed", range(5))
    def test_random_roundtrips(self, seed):
        rng = random.Random(seed)
        L1 = _random_order3(rng)
        r = rng.choice(TERM_POOL)
        M = symprod_first_order(L1, r)
        G = _random_gauge(rng, M)
        L2 = transformed_operator(M, G)
        t = gt_find(L1, L2, degree_cap=6)
        assert t is not None
        assert shift_normal_form(t.r) == shift_normal_form(r)
        assert t.G.bijective


class TestInverseGauge:
    def _bijective_pair(self):
        G = Operator([P(1), P(0, 1)])
        L2 = transformed_operator(L_CUBIC, G)
        gm = hom_space(L_CUBIC, L2, degree_cap=6)[0]
        assert gm.bijective
        return gm

    def test_identity(self):
        gm = GaugeMap(Operator.identity(), L_CUBIC, L_CUBIC)
        assert inverse_gauge(gm).G == Operator.identity()

    def test_left_inverse_identity(self):
        gm = self._bijective_pair()
        inv = inverse_gauge(gm)
        assert inv.source == gm.target and inv.target == gm.source
        assert not (inv.G * gm.G - Operator.identity()) % gm.source

    def test_involution(self):
        gm = self._bijective_pair()
        back = inverse_gauge(inverse_gauge(gm))
        assert not (back.G - gm.G) % gm.source

    def test_non_bijective_rejected(self):
        L1 = parse_operator("S^2 - 3S + 2")
        L2 = parse_operator("S^2 - 5S + 6")
        gm = hom_space(L1, L2, degree_cap=4)[0]
        with pytest.raises(ValueError, match="bijective"):
            inverse_gauge(gm)


class TestTransformedOperator:
    def test_identity_map(self):
        assert transformed_operator(L_CUBIC, Operator.identity()) == L_CUBIC

    def test_scalar_map_is_term_twist(self):
        got = transformed_operator(L_CUBIC, Operator([RF([0, 1])]))
        assert got == symprod_first_order(L_CUBIC, RF([1, 1], [0, 1]))

    def test_order_preserved(self):
        assert transformed_operator(L_CUBIC, Operator.tau()).order == 3

    def test_shared_factor_rejected(self):
        L = parse_operator("S^2 - 3S + 2")
        with pytest.raises(ValueError, match="injective"):
            transformed_operator(L, parse_operator("S - 1"))

    @pytest.mark.parametrize(
        "r", [RF([0, 1]), RF([2]), RF([1, 1], [0, 1])], ids=["x", "2", "(x+1)/x"]
    )
    def test_det_transport(self, r):
        twisted = symprod_first_order(L_CUBIC, r)
        assert twisted.det() / L_CUBIC.det() == r * r.shift(1) * r.shift(2)


class TestCaseDiagnosis:
    def test_collapsing_example(self):
        assert case_diagnosis(parse_operator(E_TEXT)) == 5

    def test_plain_square(self):
        K = Operator([P(1, 1), P(-3, 2), P(2)])
        assert case_diagnosis(symsquare_order2(K)) == 5

    def test_gauge_disguise(self):
        K = Operator([P(1, 1), P(-3, 2), P(2)])
        S = symsquare_order2(K)
        L3 = transformed_operator(S, Operator([P(1), P(0, 1)]))
        assert case_diagnosis(L3) == 6

    def test_wrong_order_rejected(self):
        with pytest.raises(ValueError, match="order-3"):
            case_diagnosis(parse_operator("S^2 - 1"))


class TestTypes:
    def test_gauge_map_validates(self):
        with pytest.raises(ValueError, match="homomorphism"):
            GaugeMap(Operator.tau(), L_CUBIC, L_CUBIC)

    def test_gauge_map_reduces(self):
        G = Operator([P(1), P(0, 1)])
        L2 = transformed_operator(L_CUBIC, G)
        padded = G + Operator.tau() * L_CUBIC
        gm = GaugeMap(padded, L_CUBIC, L2)
        assert gm.G == G

    def test_gauge_map_json(self):
        gm = GaugeMap(Operator.identity(), L_CUBIC, L_CUBIC)
        js = gm.to_json()
        assert js["G"] == "1"
        assert js["source"] == print_operator(L_CUBIC)

    def test_gt_transform_validates_ratio(self):
        gm = GaugeMap(Operator.identity(), L_CUBIC, L_CUBIC)
        with pytest.raises(ValueError, match="nonzero"):
            GTTransform(RF([0]), gm, L_CUBIC)

    def test_gt_transform_validates_source(self):
        gm = GaugeMap(Operator.identity(), L_CUBIC, L_CUBIC)
        with pytest.raises(ValueError, match="twisted"):
            GTTransform(RF([2]), gm, L_CUBIC)

    def test_gt_transform_json(self):
        t = gt_find(L_CUBIC, L_CUBIC, degree_cap=4)
        js = t.to_json()
        assert js["r"] == "1" and js["G"] == "1"
        assert js["source"] == js["target"] == print_operator(L_CUBIC)
