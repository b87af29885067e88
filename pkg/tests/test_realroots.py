import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shapiro12.polycore import constant, from_coefficients, parse_polynomial, sign_at
from shapiro12.realroots import (
    compare_roots,
    isolate_real_roots,
    order_roots,
    refine,
    root_count,
    separate_roots,
    sign_at_root,
    sturm_count,
)

P = parse_polynomial


def int_polys(max_degree=10, bound=20):
    return st.lists(st.integers(-bound, bound), min_size=2, max_size=max_degree + 1) \
        .map(from_coefficients).filter(lambda p: p.degree >= 1)


class TestSturmCount:
    def test_two_real_roots(self):
        assert sturm_count(P("-1,0,1")) == 2

    def test_no_real_roots(self):
        assert sturm_count(P("1,0,1")) == 0

    def test_quartic_four_roots(self):
        # 16x^4 - 80x^2 + 32 = 0 at x^2 = (80 +- sqrt(4352))/32, both positive.
        assert sturm_count(P("32,0,-80,0,16")) == 4

    def test_grid_oracle_agrees(self):
        # Independent check: count sign flips of the polynomial on a fine grid.
        for text in ["32,0,-80,0,16", "-1,0,1", "0,-4,0,4", "-6,1,7,-3,1"]:
            p = P(text)
            flips = 0
            prev = 0
            for k in range(-4000, 4001):
                s = sign_at(p, Fraction(k, 100))
                if s == 0:
                    continue
                if prev != 0 and s != prev:
                    flips += 1
                prev = s
            assert sturm_count(p) == flips

    def test_bounded_interval(self):
        assert sturm_count(P("-1,0,1"), 0, 2) == 1
        assert sturm_count(P("-1,0,1"), -2, 2) == 2
        assert sturm_count(P("-1,0,1"), 2, None) == 0

    def test_endpoint_root_rejected(self):
        with pytest.raises(ValueError):
            sturm_count(P("-1,0,1"), 1, 2)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            sturm_count(from_coefficients([0]))

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            sturm_count(P("1,0,1"), 2, 2)

    def test_constant(self):
        assert sturm_count(constant(5)) == 0


class TestIsolation:
    def test_monomial_multiplicity(self):
        roots = isolate_real_roots(P("0,0,0,4"))
        assert len(roots) == 1
        assert roots[0].multiplicity == 3
        assert roots[0].interval.is_point and roots[0].interval.lo == 0

    def test_three_simple_roots(self):
        roots = isolate_real_roots(P("0,-4,0,4"))  # 4x(x-1)(x+1)
        assert [r.multiplicity for r in roots] == [1, 1, 1]
        mids = [r.interval.midpoint for r in roots]
        assert mids[0] < mids[1] < mids[2]

    def test_derivative_of_x2_plus_1(self):
        roots = isolate_real_roots(P("0,2"))
        assert len(roots) == 1
        assert roots[0].multiplicity == 1
        assert roots[0].interval.is_point and roots[0].interval.lo == 0

    def test_no_real_roots(self):
        assert isolate_real_roots(P("1,0,1")) == ()

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            isolate_real_roots(from_coefficients([0]))

    def test_repeated_irrational(self):
        p = P("-2,0,1") * P("-2,0,1") * P("0,1")  # (x^2-2)^2 * x
        roots = isolate_real_roots(p)
        assert [r.multiplicity for r in roots] == [2, 1, 2]


class TestRefine:
    def test_width_contract(self):
        root = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        narrow = refine(root, Fraction(1, 100))
        assert narrow.interval.width <= Fraction(1, 100)
        assert narrow.interval.lo ** 2 < 2 < narrow.interval.hi ** 2

    def test_tight_enclosure(self):
        root = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        tight = refine(root, Fraction(1, 10000))
        assert Fraction(141, 100) < tight.interval.lo
        assert tight.interval.hi < Fraction(142, 100)

    def test_rational_point_stays(self):
        root = isolate_real_roots(P("0,2"))[0]
        assert refine(root, Fraction(1, 10 ** 9)).interval.is_point

    def test_already_narrow(self):
        root = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        same = refine(root, root.interval.width + 1)
        assert same.interval.width <= root.interval.width


class TestSignAtRoot:
    def test_constant(self):
        root = isolate_real_roots(P("-2,0,1"))[0]
        assert sign_at_root(constant(-4), root) == -1

    def test_same_root_detected(self):
        root = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        assert sign_at_root(P("-2,0,1"), root) == 0

    def test_rational_point(self):
        root = isolate_real_roots(P("0,2"))[0]
        assert sign_at_root(P("32,0,-80,0,16"), root) == 1

    def test_irrational_nonzero(self):
        sqrt2 = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        assert sign_at_root(P("-3,0,1"), sqrt2) == -1   # 2 < 3
        assert sign_at_root(P("-1,0,1"), sqrt2) == 1    # 2 > 1
        assert sign_at_root(P("0,1"), sqrt2) == 1

    def test_shared_factor(self):
        p = P("-2,0,1") * P("-5,1")
        sqrt2 = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        assert sign_at_root(p, sqrt2) == 0


class TestOrderAndCompare:
    def test_merge_two_sources(self):
        merged = order_roots(
            list(isolate_real_roots(P("0,2"))) + list(isolate_real_roots(P("-4,0,12"))))
        assert len(merged) == 3
        assert merged[1].primary.interval.is_point
        assert merged[1].primary.interval.lo == 0

    def test_single_list_sorted(self):
        roots = list(isolate_real_roots(P("0,-4,0,4")))
        random.Random(1).shuffle(roots)
        merged = order_roots(roots)
        mids = [m.primary.interval.midpoint for m in merged]
        assert mids == sorted(mids)

    def test_duplicate_rational(self):
        a = isolate_real_roots(P("0,2"))[0]
        b = isolate_real_roots(P("0,0,3"))[0]
        merged = order_roots([a, b])
        assert len(merged) == 1
        assert len(merged[0].members) == 2

    def test_equal_irrational_across_owners(self):
        a = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        b = [r for r in isolate_real_roots(P("-4,0,0,0,1")) if r.interval.hi > 0][0]
        assert compare_roots(a, b) == 0
        assert compare_roots(b, a) == 0

    def test_close_but_distinct(self):
        a = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        b = [r for r in isolate_real_roots(P("-20001,0,10000")) if r.interval.hi > 0][0]
        assert compare_roots(a, b) == -1

    def test_separate_roots(self):
        roots = [m.primary for m in order_roots(
            list(isolate_real_roots(P("-2,0,1"))) + list(isolate_real_roots(P("0,1"))))]
        separated = separate_roots(roots)
        for left, right in zip(separated, separated[1:]):
            assert left.interval.hi < right.interval.lo


class TestRootCount:
    def test_examples(self):
        assert root_count(P("-1,0,1")) == root_count(P("-1,0,1"))
        rc = root_count(P("0,0,0,4"))
        assert rc.distinct == 1 and rc.with_multiplicity == 3

    def test_constant(self):
        rc = root_count(constant(7))
        assert rc.distinct == rc.with_multiplicity == 0


class TestInvariants:
    @given(int_polys())
    @settings(max_examples=60, deadline=None)
    def test_count_matches_isolation(self, p):
        assert sturm_count(p) == len(isolate_real_roots(p))

    @given(int_polys())
    @settings(max_examples=60, deadline=None)
    def test_multiplicity_parity(self, p):
        rc = root_count(p)
        assert rc.with_multiplicity >= rc.distinct
        assert rc.with_multiplicity % 2 == int(p.degree) % 2

    @given(int_polys(8, 15))
    @settings(max_examples=40, deadline=None)
    def test_refined_intervals_bracket(self, p):
        for root in isolate_real_roots(p):
            tight = refine(root, Fraction(1, 10 ** 6))
            iv = tight.interval
            if iv.is_point:
                assert sign_at(root.witness, iv.lo) == 0
            else:
                assert sign_at(root.witness, iv.lo) * sign_at(root.witness, iv.hi) < 0

    def test_sign_at_root_agrees_with_midpoint(self):
        sqrt2 = [r for r in isolate_real_roots(P("-2,0,1")) if r.interval.hi > 0][0]
        for q in [P("-1,0,1"), P("-3,0,1"), P("5,1"), P("1,2,3")]:
            tight = refine(sqrt2, Fraction(1, 10 ** 12))
            assert sign_at_root(q, sqrt2) == sign_at(q, tight.interval.midpoint)
