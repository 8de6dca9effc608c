import math
import random

import pytest
from hypothesis import assume, given, strategies as st

from zeroshear import (
    HPoint,
    hdist,
    horocyclic_arc,
    pants_quantities,
    verify_angle_relation,
    verify_self_tangency,
    verify_two_cusp_pants,
)
from zeroshear.errors import (
    AreaSplitRangeError,
    DegenerateConfigError,
    InvalidTriangleError,
    NonPositiveRadiusError,
)
from zeroshear.halfplane import (
    _horoball_gap,
    geodesic_through,
    golden_section_min,
    mobius_apply,
    translation_length,
)

finite = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)
positive = st.floats(min_value=0.05, max_value=20.0, allow_nan=False)


def hpoints(draw_x=finite, draw_y=positive):
    return st.builds(HPoint, draw_x, draw_y)


class TestDistance:
    def test_vertical_segment(self):
        assert hdist(HPoint(0, 1), HPoint(0, 2)) == pytest.approx(math.log(2), abs=1e-15)

    def test_unit_horizontal_offset(self):
        assert hdist(HPoint(0, 1), HPoint(1, 1)) == pytest.approx(
            math.acosh(1.5), abs=1e-15
        )

    def test_zero_iff_equal(self):
        p = HPoint(0.3, 0.7)
        assert hdist(p, p) == 0.0
        assert hdist(p, HPoint(0.3, 0.7001)) > 0

    @given(hpoints(), hpoints())
    def test_symmetry(self, p, q):
        assert hdist(p, q) == pytest.approx(hdist(q, p), abs=1e-12)

    @given(hpoints(), hpoints(), hpoints())
    def test_triangle_inequality(self, p, q, r):
        # acosh loses absolute precision for nearly coincident points, so
        # keep the triple non-degenerate; the seeded 1000-triple test
        # below pins the 1e-12 tolerance on generic configurations
        assume(min(math.hypot(a.x - b.x, a.y - b.y)
                   for a, b in ((p, q), (q, r), (p, r))) > 1e-3)
        assert hdist(p, r) <= hdist(p, q) + hdist(q, r) + 1e-12

    @given(hpoints(), hpoints(), finite, st.floats(min_value=0.1, max_value=10.0))
    def test_translation_dilation_invariance(self, p, q, shift, scale):
        moved = lambda z: HPoint(scale * (z.x + shift), scale * z.y)
        assert hdist(moved(p), moved(q)) == pytest.approx(hdist(p, q), rel=1e-9, abs=1e-9)

    def test_thousand_random_triples(self):
        rng = random.Random(99)
        for _ in range(1000):
            pts = [HPoint(rng.uniform(-5, 5), rng.uniform(0.01, 5)) for _ in range(3)]
            p, q, r = pts
            assert hdist(p, r) <= hdist(p, q) + hdist(q, r) + 1e-12


class TestMobius:
    def test_translation_length_of_known_hyperbolic(self):
        # trace 3 element: length 2 arccosh(3/2)
        m = (2.0, 1.0, 1.0, 1.0)
        assert translation_length(m) == pytest.approx(2 * math.acosh(1.5), abs=1e-12)

    def test_apply_preserves_distance(self):
        m = (2.0, 1.0, 1.0, 1.0)
        p, q = HPoint(0.2, 1.3), HPoint(-1.0, 0.4)
        assert hdist(mobius_apply(m, p), mobius_apply(m, q)) == pytest.approx(
            hdist(p, q), abs=1e-12
        )

    def test_geodesic_through_vertical_and_circle(self):
        g = geodesic_through(HPoint(1, 1), HPoint(1, 5))
        assert g.vertical and g.center == 1
        g = geodesic_through(HPoint(-1, 1), HPoint(1, 1))
        assert not g.vertical
        assert g.center == pytest.approx(0.0, abs=1e-12)
        assert g.radius == pytest.approx(math.sqrt(2), abs=1e-12)


class TestTwoCuspQuadrilateral:
    def test_against_closed_form_random(self):
        rng = random.Random(4)
        for _ in range(100):
            r = rng.uniform(0.1, 5.0)
            assert verify_two_cusp_pants(r) == pytest.approx(
                4 * math.acosh(math.exp(r)), abs=1e-9
            )

    def test_cross_links_to_torus16_systole(self):
        assert verify_two_cusp_pants(math.log(3.0)) == pytest.approx(
            4 * math.acosh(3.0), abs=1e-9
        )

    def test_log2(self):
        assert verify_two_cusp_pants(math.log(2.0)) == pytest.approx(
            4 * math.acosh(2.0), abs=1e-9
        )

    def test_small_radius_degenerates_to_zero(self):
        assert verify_two_cusp_pants(1e-10) < 1e-4

    def test_nonpositive_radius(self):
        with pytest.raises(NonPositiveRadiusError):
            verify_two_cusp_pants(0.0)


class TestSelfTangency:
    def test_symmetric_split(self):
        res = verify_self_tangency(math.log(4.0), 0.5)
        assert not res.degenerate_a and not res.degenerate_b
        want = 2 * math.acosh(2.0)
        assert res.length_a == pytest.approx(want, abs=1e-9)
        assert res.length_b == pytest.approx(want, abs=1e-9)

    def test_asymmetric_split(self):
        res = verify_self_tangency(math.log(4.0), 0.25)
        assert res.degenerate_a  # a e^r = 1: alpha collapses
        assert res.length_b == pytest.approx(2 * math.acosh(3.0), abs=1e-9)

    def test_boundary_case_flagged(self):
        res = verify_self_tangency(math.log(2.0), 0.5)
        assert res.degenerate_a and res.degenerate_b
        assert res.length_a == 0.0

    def test_random_against_closed_forms(self):
        rng = random.Random(11)
        for _ in range(100):
            r = rng.uniform(1.0, 5.0)
            a = rng.uniform(0.05, 0.5)
            res = verify_self_tangency(r, a)
            if not res.degenerate_a:
                assert res.length_a == pytest.approx(
                    2 * math.acosh(a * math.exp(r)), abs=1e-9
                )
            if not res.degenerate_b:
                assert res.length_b == pytest.approx(
                    2 * math.acosh((1 - a) * math.exp(r)), abs=1e-9
                )

    def test_cusp_distance_matches_big_d_at_symmetric_split(self):
        for r in [1.0 + 0.5 * k for k in range(9)]:
            res = verify_self_tangency(r, 0.5)
            if res.degenerate_a:
                continue
            want = pants_quantities(res.length_a).big_d
            assert res.cusp_to_alpha == pytest.approx(want, abs=1e-9)

    def test_split_out_of_range(self):
        with pytest.raises(AreaSplitRangeError):
            verify_self_tangency(2.0, 0.75)
        with pytest.raises(AreaSplitRangeError):
            verify_self_tangency(2.0, 0.0)

    def test_radius_below_log2(self):
        with pytest.raises(DegenerateConfigError):
            verify_self_tangency(0.5, 0.5)


class TestHorocyclicArc:
    def test_gap_oracle_against_closed_form(self):
        for s, h in ((1.0, 0.25), (0.5, 0.1), (2.0, 0.03)):
            assert _horoball_gap(s, h) == pytest.approx(2 * math.log(s / h), abs=1e-9)

    def test_lower_bound_on_grid(self):
        for k in range(21):
            length = 2.0 + 0.5 * k
            arc = horocyclic_arc(length)
            bound = 1.0 / math.cosh(length / 4.0)
            assert arc >= bound - 1e-6
            assert arc == pytest.approx(bound, abs=1e-6)  # equality configuration

    def test_trace_34_value(self):
        assert horocyclic_arc(2 * math.acosh(17.0)) >= 1.0 / 3.0 - 1e-9

    def test_four_arccosh_two(self):
        assert horocyclic_arc(4 * math.acosh(2.0)) >= 0.5 - 1e-9

    def test_short_length_limit(self):
        assert horocyclic_arc(0.05) == pytest.approx(1.0, abs=1e-3)


class TestAngleRelation:
    def test_right_angle_at_equal_lengths(self):
        assert verify_angle_relation(2.0, 2.0) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_half_ratio_gives_pi_over_six(self):
        length = 2.0
        h = 2 * math.asinh(math.sinh(1.0) / 2.0)
        assert verify_angle_relation(length, h) == pytest.approx(math.pi / 6, abs=1e-9)

    def test_vanishing_seam(self):
        assert verify_angle_relation(3.0, 1e-6) == pytest.approx(0.0, abs=1e-5)

    def test_invalid_triangle(self):
        with pytest.raises(InvalidTriangleError):
            verify_angle_relation(1.0, 2.0)

    def test_measured_grid(self):
        rng = random.Random(3)
        for _ in range(50):
            length = rng.uniform(0.5, 8.0)
            h = rng.uniform(0.1, 0.95) * length
            want = math.asin(math.sinh(h / 2) / math.sinh(length / 2))
            assert verify_angle_relation(length, h) == pytest.approx(want, abs=1e-9)


class TestGoldenSection:
    def test_quadratic_minimum(self):
        x, fx = golden_section_min(lambda t: (t - 1.3) ** 2 + 2.0, 0.0, 3.0)
        assert x == pytest.approx(1.3, abs=1e-6)
        assert fx == pytest.approx(2.0, abs=1e-12)
