import math

import numpy as np
import pytest

from lawsonlab.numerics import QuadratureSpec
from lawsonlab.spheres import NORTH, SOUTH, frame_e1_e2, latlon_to_point
from lawsonlab.unit_tangent import poincare_index
from lawsonlab.vfields import (
    AngleField,
    TrigTerm,
    angle_value,
    bound_check,
    ellipse_length,
    field_at,
    frame_derivatives,
    geodesic_curvatures,
    random_perturbation,
    volume_of_field,
)

# Perimeters frozen from the 10^6-panel trapezoid oracle over the full
# parametrized ellipse (k cos t, (k-2) sin t).
ELLIPSE_LENGTHS = {
    1: 2.0 * math.pi,
    3: 13.364893220555254,
    4: 19.376896441095347,
    5: 25.526998863398145,
}


def arc_length_oracle(k: int, panels: int = 1_000_000) -> float:
    ts = np.linspace(0.0, 2.0 * math.pi, panels + 1)
    speed = np.hypot(k * np.sin(ts), (k - 2.0) * np.cos(ts))
    return float(np.trapezoid(speed, ts))


def test_angle_values():
    assert angle_value(1, 2.1) == pytest.approx(math.pi / 2)
    assert angle_value(3, math.pi) == pytest.approx(2.0 * math.pi + math.pi / 2)
    assert angle_value(0, math.pi / 2) == pytest.approx(0.0)


def test_meridian_field_for_k1():
    for lon in (0.0, 1.0, 4.0):
        p = latlon_to_point(0.3, lon)
        _, e2 = frame_e1_e2(p)
        assert np.max(np.abs(field_at(1, p).vector - e2)) < 1e-12


def test_k3_field_values_on_equator():
    p = latlon_to_point(0.0, 0.0)
    _, e2 = frame_e1_e2(p)
    assert np.max(np.abs(field_at(3, p).vector - e2)) < 1e-12
    p = latlon_to_point(0.0, math.pi / 4)
    e1, _ = frame_e1_e2(p)
    assert np.max(np.abs(field_at(3, p).vector + e1)) < 1e-12


def test_frame_derivatives():
    assert frame_derivatives(1, latlon_to_point(0.4, 1.0)) == (0.0, 0.0)
    assert frame_derivatives(3, latlon_to_point(0.0, 2.0)) == pytest.approx((2.0, 0.0))
    d1, d2 = frame_derivatives(4, latlon_to_point(math.pi / 3, 0.5))
    assert d1 == pytest.approx(6.0)
    assert d2 == 0.0
    with pytest.raises(ValueError, match="pole"):
        frame_derivatives(3, NORTH)


def test_geodesic_curvatures_meridian_field():
    for lat in (-0.7, 0.2, 1.1):
        pair = geodesic_curvatures(1, latlon_to_point(lat, 0.8))
        assert abs(pair.gamma) < 1e-12
        assert pair.delta == pytest.approx(math.tan(lat))


def test_geodesic_curvatures_at_equator_origin():
    for k in (-1, 3, 4, 7):
        pair = geodesic_curvatures(k, latlon_to_point(0.0, 0.0))
        assert abs(pair.gamma) < 1e-12
        assert pair.delta == pytest.approx(k - 1.0)


def test_curvature_identity_pointwise():
    rng = np.random.default_rng(71)
    worst = 0.0
    for _ in range(500):
        k = int(rng.integers(-3, 6))
        lat = float(rng.uniform(-1.4, 1.4))
        lon = float(rng.uniform(0.0, 2.0 * math.pi))
        p = latlon_to_point(lat, lon)
        pair = geodesic_curvatures(k, p)
        d1, d2 = frame_derivatives(k, p)
        lhs = 1.0 + pair.gamma**2 + pair.delta**2
        rhs = 1.0 + (math.tan(lat) + d1) ** 2 + d2**2
        worst = max(worst, abs(lhs - rhs))
    assert worst < 1e-12


def test_unit_circle_perimeter():
    assert abs(ellipse_length(1) - 2.0 * math.pi) < 1e-10


def test_ellipse_lengths_match_frozen_oracle_values():
    for k, frozen in ELLIPSE_LENGTHS.items():
        assert abs(ellipse_length(k) - frozen) < 1e-8


def test_ellipse_lengths_match_runtime_arc_length_oracle():
    for k in (3, 4):
        assert abs(ellipse_length(k) - arc_length_oracle(k)) < 1e-8


def test_volume_identity_unperturbed():
    for k in (1, 3, 4, 5):
        volume = volume_of_field(AngleField(k))
        bound = math.pi * ellipse_length(k)
        assert abs(volume - bound) / bound < 1e-6


def test_volume_k1_is_two_pi_squared():
    assert volume_of_field(AngleField(1)) == pytest.approx(2.0 * math.pi**2, rel=1e-10)


def test_volume_identity_measured_for_negative_k():
    # Outcome of the measurement for negative index classes: the identity
    # holds there as well (the reduced integrand is symmetric under
    # k -> 2 - k together with a latitude reflection).
    for k in (-1, -2):
        volume = volume_of_field(AngleField(k))
        bound = math.pi * ellipse_length(k)
        assert abs(volume - bound) / bound < 1e-6


def test_volume_of_generic_callable_field():
    field = AngleField(3)
    via_callable = volume_of_field(field.at, QuadratureSpec(nodes=128, nodes_y=64))
    via_analytic = volume_of_field(field, QuadratureSpec(nodes=128, nodes_y=64))
    assert abs(via_callable - via_analytic) / via_analytic < 1e-6


def test_perturbed_volume_is_2d_quadrature_of_reduced_form():
    # A perturbation with zero amplitude must reproduce the reduced path.
    field = AngleField(3, (TrigTerm(0.0, 1, 0, 0.0, 0.0),))
    assert abs(volume_of_field(field) - volume_of_field(AngleField(3))) < 1e-9


def test_perturbations_preserve_pole_indices():
    rng = np.random.default_rng(101)
    for k in (3, 4):
        for _ in range(3):
            field = AngleField(k, random_perturbation(rng, 0.3))
            assert poincare_index(field.at, NORTH) == k
            assert poincare_index(field.at, SOUTH) == 2 - k


def test_perturbed_fields_exceed_the_lower_bound():
    rng = np.random.default_rng(137)
    for k in (3, 4):
        bound = math.pi * ellipse_length(k)
        excesses = []
        for _ in range(20):
            field = AngleField(k, random_perturbation(rng, 0.3))
            volume = volume_of_field(field)
            assert volume >= bound - 1e-9
            excesses.append(volume - bound)
        assert min(excesses) > 1e-3


def test_bound_check_equality_for_minimizers():
    for k in (3, 4):
        entry = bound_check(AngleField(k), k)
        assert entry.passed
        assert abs(entry.metric) < 1e-9
        assert entry.params["index_north"] == k


def test_bound_check_refuses_excluded_index_classes():
    for k in (0, 2):
        with pytest.raises(ValueError, match="index classes"):
            bound_check(AngleField(k), k)


def test_bound_check_flags_index_mismatch():
    entry = bound_check(AngleField(4), 3)
    assert not entry.passed
    assert entry.params["status"] == "inapplicable"


def test_perturbation_terms_validate():
    with pytest.raises(ValueError):
        TrigTerm(0.1, 0, 1, 0.0, 0.0)


def test_random_perturbation_hits_requested_amplitude():
    rng = np.random.default_rng(149)
    terms = random_perturbation(rng, 0.3)
    grid_a = np.linspace(-math.pi / 2, math.pi / 2, 361)
    grid_t = np.linspace(0.0, 2.0 * math.pi, 720, endpoint=False)
    ga, gt = np.meshgrid(grid_a, grid_t, indexing="ij")
    field = AngleField(3, terms)
    bump = field.angle(ga, gt) - (2.0 * gt + math.pi / 2)
    assert abs(float(np.max(np.abs(bump))) - 0.3) < 1e-3
