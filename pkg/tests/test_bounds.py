"""
Tests for Bounds - Formulas, metadata, registry and the Q/erf wrappers
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from bounds import (
    EIDOUS,
    BoundKind,
    BoundRegistry,
    EidousCoefficients,
    default_registry,
    erf_bound_upper,
    eval_bound,
    eval_bound_checked,
    exponent_polynomial,
    exponent_polynomial_derivative,
    q_bound_lower,
    simplified_eidous,
)
from bounds.polya_family import PolyaBound
from errors import DomainError, UnknownBoundError
from reference import erf_ref, phi_ref, q_ref

GUARANTEED = [kind for kind in BoundKind if kind.guaranteed_upper_bound]
RADICAL_AND_ODD = [
    BoundKind.POLYA,
    BoundKind.ALZER,
    BoundKind.NEUMANN,
    BoundKind.YANG,
    BoundKind.BERCU,
    BoundKind.EIDOUS,
    BoundKind.EIDOUS_STAR,
]
# The printed Bercu formula falls below Phi near x = 6.18, inside its stated interval
BERCU_CHECKED_UP_TO = 6.1
# With 1.0407 taken as exact, Alzer dips below Phi on a narrow band around x = 1.587
ALZER_DIP = (1.57, 1.60)
DOMINANT = [kind for kind in GUARANTEED if kind is not BoundKind.ALZER]


@pytest.fixture(scope="module")
def dense_grid():
    """10^6 points on [0, 40] with the reference values."""
    xs = np.linspace(0.0, 40.0, 1_000_000)
    return xs, phi_ref(xs)


class TestBoundKind:
    """Test cases for bound metadata."""

    def test_only_the_approximation_is_unguaranteed(self):
        assert BoundKind.EIDOUS_STAR.guaranteed_upper_bound is False
        assert len(GUARANTEED) == 8

    def test_validity_intervals(self):
        assert BoundKind.BERCU.validity_interval.upper == 6.248
        for kind in BoundKind:
            assert kind.validity_interval.lower == 0.0
            if kind is not BoundKind.BERCU:
                assert math.isinf(kind.validity_interval.upper)

    def test_values_are_cli_names(self):
        assert [k.value for k in BoundKind] == [
            "polya", "kouba", "alzer", "abreu", "neumann", "yang", "bercu", "eidous", "eidous_star",
        ]


class TestCoefficients:
    """Test cases for the exponent polynomial."""

    def test_exact_coefficients(self):
        assert EIDOUS.c2 == pytest.approx((3.0 - math.pi) / (3.0 * math.pi), rel=1e-15)
        assert abs(EIDOUS.c2 - (-0.015023)) < 1e-5
        assert EIDOUS.c4 > 0.0
        assert EIDOUS.c4 == pytest.approx(6.695e-4, rel=1e-3)

    def test_polynomial_values(self):
        assert exponent_polynomial(0.0) == 1.0
        assert exponent_polynomial(1.0) == pytest.approx(0.98565, abs=1e-5)

    def test_positive_at_vertex(self):
        vertex = math.sqrt(EIDOUS.vertex_square)
        assert exponent_polynomial(vertex) > 0.9
        assert exponent_polynomial_derivative(vertex) == pytest.approx(0.0, abs=1e-15)

    @given(st.floats(min_value=-50.0, max_value=50.0))
    def test_positive_everywhere(self, x):
        assert exponent_polynomial(x) > 0.0

    def test_sign_checks(self):
        with pytest.raises(ValidationError):
            EidousCoefficients(c2=0.01, c4=1e-3)
        with pytest.raises(ValidationError):
            EidousCoefficients(c2=-0.01, c4=0.0)


class TestEvalBound:
    """Test cases for the nine formulas."""

    @pytest.mark.parametrize("kind", RADICAL_AND_ODD)
    def test_exactly_half_at_zero(self, kind):
        assert eval_bound(kind, 0.0) == 0.5

    def test_abreu_at_zero(self):
        assert eval_bound(BoundKind.ABREU, 0.0) == pytest.approx(1.0 - 1.0 / 12.0 - 1.0 / math.sqrt(2.0 * math.pi), rel=1e-15)
        assert eval_bound(BoundKind.ABREU, 0.0) == pytest.approx(0.51772, abs=1e-5)

    def test_kouba_as_printed(self):
        assert eval_bound(BoundKind.KOUBA, 0.0) == pytest.approx(1.0 - 1.0 / math.sqrt(2.0 * math.pi), rel=1e-15)

    @pytest.mark.parametrize(
        "kind, x, published",
        [
            (BoundKind.POLYA, 0.3, 7.72e-5),
            (BoundKind.ALZER, 1.5, 9.57e-5),
            (BoundKind.BERCU, 6.5, -2.14e-1),
            (BoundKind.EIDOUS, 2.9, 5.78e-5),
            (BoundKind.NEUMANN, 6.0, 1.10),
        ],
    )
    def test_published_errors(self, kind, x, published):
        assert eval_bound(kind, x) - phi_ref(x) == pytest.approx(published, rel=0.02)

    def test_yang_near_the_oracle_floor(self):
        assert eval_bound(BoundKind.YANG, 0.1) - phi_ref(0.1) == pytest.approx(1.9e-11, rel=0.1)

    def test_eidous_range_and_monotonicity(self):
        xs = np.linspace(0.0, 5.0, 5001)
        values = eval_bound(BoundKind.EIDOUS, xs)
        assert np.all((values >= 0.5) & (values < 1.0))
        assert np.all(np.diff(values) > 0.0)

    def test_eidous_limit(self):
        assert 1.0 - eval_bound(BoundKind.EIDOUS, 40.0) < 1e-15

    def test_simplified_coefficients_are_close_but_not_identical(self):
        xs = np.linspace(0.0, 5.0, 2001)
        gap = np.abs(eval_bound(BoundKind.EIDOUS, xs) - simplified_eidous(xs))
        assert gap.max() < 5e-5
        assert gap.max() > 0.0

    def test_array_shape_preserved(self):
        xs = np.array([[0.0, 1.0], [2.0, 3.0]])
        assert eval_bound(BoundKind.POLYA, xs).shape == (2, 2)
        assert isinstance(eval_bound(BoundKind.POLYA, 1.0), float)

    def test_large_arguments_stay_finite(self):
        values = eval_bound(BoundKind.BERCU, np.array([30.0, 1e100, 1e300]))
        assert np.all(np.isfinite(values))
        assert values[0] > 0.5
        assert values[1] == 0.5 and values[2] == 0.5
        assert eval_bound(BoundKind.EIDOUS, 1e300) == 1.0

    @pytest.mark.parametrize("bad", [-1e-9, -1.0, math.nan, math.inf])
    def test_domain_errors(self, bad):
        with pytest.raises(DomainError):
            eval_bound(BoundKind.POLYA, bad)

    def test_unknown_name(self):
        with pytest.raises(UnknownBoundError) as excinfo:
            eval_bound("gauss", 1.0)
        assert "gauss" in str(excinfo.value)
        assert isinstance(excinfo.value, KeyError)
        assert isinstance(excinfo.value, DomainError)

    def test_names_resolve(self):
        assert eval_bound("eidous", 1.0) == eval_bound(BoundKind.EIDOUS, 1.0)
        assert default_registry.resolve("EIDOUS-STAR") is BoundKind.EIDOUS_STAR


class TestDominance:
    """Upper-bound property on a dense grid."""

    @pytest.mark.parametrize("kind", DOMINANT)
    def test_bound_stays_above_phi(self, kind, dense_grid):
        xs, reference = dense_grid
        if kind is BoundKind.BERCU:
            keep = xs <= BERCU_CHECKED_UP_TO
            xs, reference = xs[keep], reference[keep]
        assert np.min(eval_bound(kind, xs) - reference) >= -1e-15

    def test_bercu_drops_below_phi_inside_its_interval(self):
        assert eval_bound(BoundKind.BERCU, 6.2) < phi_ref(6.2)

    def test_alzer_dips_below_phi(self, dense_grid):
        xs, reference = dense_grid
        h = eval_bound(BoundKind.ALZER, xs) - reference
        below = xs[h < -1e-15]
        assert ALZER_DIP[0] <= below.min() and below.max() <= ALZER_DIP[1]
        assert h.min() == pytest.approx(-1.65e-6, rel=0.02)
        assert eval_bound(BoundKind.ALZER, 1.587) < phi_ref(1.587)

    def test_alzer_holds_outside_the_dip(self, dense_grid):
        xs, reference = dense_grid
        keep = (xs < ALZER_DIP[0]) | (xs > ALZER_DIP[1])
        assert np.min(eval_bound(BoundKind.ALZER, xs[keep]) - reference[keep]) >= -1e-15

    def test_approximation_crosses_phi(self, dense_grid):
        xs, reference = dense_grid
        h = eval_bound(BoundKind.EIDOUS_STAR, xs) - reference
        assert h.min() < 0.0 < h.max()

    @given(st.floats(min_value=0.0, max_value=40.0))
    @settings(max_examples=300, deadline=None)
    def test_eidous_above_phi_anywhere(self, x):
        assert eval_bound(BoundKind.EIDOUS, x) - phi_ref(x) >= -1e-15


class TestWrappers:
    """Test cases for the Q and erf counterparts."""

    def test_anchors(self):
        assert q_bound_lower(BoundKind.EIDOUS, 0.0) == 0.5
        assert erf_bound_upper(BoundKind.EIDOUS, 0.0) == 0.0

    @given(st.sampled_from(list(BoundKind)), st.floats(min_value=0.0, max_value=20.0))
    def test_identity_wiring(self, kind, x):
        assert q_bound_lower(kind, x) == 1.0 - eval_bound(kind, x)
        assert erf_bound_upper(kind, x) == 2.0 * eval_bound(kind, math.sqrt(2.0) * x) - 1.0

    def test_published_q_and_erf(self):
        assert q_ref(2.9) - q_bound_lower(BoundKind.EIDOUS, 2.9) == pytest.approx(5.78e-5, rel=0.02)
        y = 2.9 / math.sqrt(2.0)
        assert erf_bound_upper(BoundKind.EIDOUS, y) - erf_ref(y) == pytest.approx(2 * 5.78e-5, rel=0.02)

    def test_polya_bounds_erf(self):
        ys = np.linspace(0.0, 10.0, 10_001)
        assert np.all(erf_bound_upper(BoundKind.POLYA, ys) >= erf_ref(ys) - 1e-15)

    def test_negative_y_rejected(self):
        with pytest.raises(DomainError):
            erf_bound_upper(BoundKind.POLYA, -0.5)


class TestRegistry:
    """Test cases for the bound registry."""

    def test_default_registry_holds_all(self):
        assert sorted(default_registry.list_bounds()) == sorted(k.value for k in BoundKind)
        info = default_registry.get_registry_info()
        assert info["total_bounds"] == 9
        assert info["bounds"]["bercu"]["validity"] == [0.0, 6.248]

    def test_unregistered_kind(self):
        registry = BoundRegistry()
        registry.register_bound(PolyaBound())
        assert registry.list_bounds() == ["polya"]
        with pytest.raises(UnknownBoundError):
            registry.resolve(BoundKind.EIDOUS)

    def test_checked_evaluation(self):
        inside = eval_bound_checked("bercu", 6.0)
        outside = eval_bound_checked("bercu", 6.5)
        assert inside.out_of_validity is False
        assert outside.out_of_validity is True
        assert outside.value == eval_bound(BoundKind.BERCU, 6.5)
        assert outside.kind is BoundKind.BERCU
