"""Acceptance criteria.

Each test covers one numbered criterion at its stated tolerance and prints
one pass/fail line (visible with ``pytest -s`` or in captured output).
Default quadrature resolution is 256 nodes (256 x 128 for surfaces).
"""

import math

import numpy as np
import pytest

from lawsonlab.euler import double_cover_defect, euler_rotation, local_isometry_defect
from lawsonlab.lawson import (
    LawsonParams,
    algebraic_defect,
    angle_samples,
    closed_form_rotation,
    correspondence_point,
    cylinder_decomposition,
    domain_cover_check,
    extract_angle_slope,
    immerse,
    index_class,
    mean_curvature,
    parameter_identifications,
    parametric_mean_curvature,
    ruling_defect,
    self_congruence_defect,
    standard_chart_field,
    surface_area,
)
from lawsonlab.numerics import unwrap_and_fit
from lawsonlab.spheres import NORTH, SOUTH, Quaternion, quat_rotation
from lawsonlab.unit_tangent import poincare_index
from lawsonlab.vfields import AngleField, ellipse_length, random_perturbation, volume_of_field

CONSECUTIVE = ((1, 2), (2, 3))
ODD = ((1, 3), (3, 5))
ALL_PAIRS = CONSECUTIVE + ODD


def _report(criterion: int, label: str, passed: bool) -> None:
    print(f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {label}")
    assert passed


def _arc_length_oracle(k: int, panels: int = 1_000_000) -> float:
    ts = np.linspace(0.0, 2.0 * math.pi, panels + 1)
    speed = np.hypot(k * np.sin(ts), (k - 2.0) * np.cos(ts))
    return float(np.trapezoid(speed, ts))


def test_criterion_1_volume_equals_pi_times_ellipse_length():
    # Reference magnitudes confirmed by the independent arc-length oracle.
    assert abs(ellipse_length(1) - 2.0 * math.pi) < 1e-8
    assert abs(ellipse_length(3) - _arc_length_oracle(3)) < 1e-8
    assert abs(ellipse_length(3) - 13.3648932) < 1e-6
    assert abs(ellipse_length(4) - _arc_length_oracle(4)) < 1e-8
    assert abs(ellipse_length(4) - 19.3768964) < 1e-6
    ok = True
    for k in (1, 3, 4, 5):
        volume = volume_of_field(AngleField(k))
        bound = math.pi * ellipse_length(k)
        ok = ok and abs(volume - bound) / bound < 1e-6
    _report(1, "volume identity |vol - pi L| / pi L < 1e-6 for k in {1,3,4,5}", ok)


def test_criterion_2_perturbations_respect_the_lower_bound():
    rng = np.random.default_rng(2024)
    ok = True
    for k in (3, 4):
        bound = math.pi * ellipse_length(k)
        excesses = []
        for trial in range(20):
            field = AngleField(k, random_perturbation(rng, 0.3))
            if trial % 7 == 0:
                ok = ok and poincare_index(field.at, NORTH) == k
                ok = ok and poincare_index(field.at, SOUTH) == 2 - k
            volume = volume_of_field(field)
            ok = ok and volume >= bound - 1e-9
            excesses.append(volume - bound)
        ok = ok and min(excesses) > 1e-3
    _report(2, "20 seeded perturbations per k: volume >= pi L - 1e-9, excess > 1e-3", ok)


def test_criterion_3_double_cover_is_a_local_isometry():
    rng = np.random.default_rng(3)
    ok = True
    for _ in range(100):
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        ok = ok and local_isometry_defect(2.0 * q, h=1e-5) < 1e-6
    for _ in range(200):
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        ok = ok and double_cover_defect(2.0 * q) == 0.0
    worst = 0.0
    for _ in range(1000):
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        diff = euler_rotation(2.0 * q) - quat_rotation(Quaternion.from_array(q))
        worst = max(worst, float(np.max(np.abs(diff))))
    ok = ok and worst < 1e-12
    _report(3, "local isometry < 1e-6, double cover exact, conjugation oracle < 1e-12", ok)


def test_criterion_4_closed_form_matrix_identity():
    rng = np.random.default_rng(4)
    ok = True
    for n, m in ALL_PAIRS:
        params = LawsonParams(n, m, 2.0)
        xs = rng.uniform(-math.pi, math.pi, 1000)
        ys = rng.uniform(-math.pi, math.pi, 1000)
        defect = np.max(
            np.abs(closed_form_rotation(params, xs, ys) - euler_rotation(immerse(params, xs, ys)))
        )
        ok = ok and float(defect) < 1e-12
    _report(4, "closed-form rotation equals the double-cover image, 1000 samples x 4 pairs", ok)


def test_criterion_5_correspondence_index_classes():
    expected = {(1, 2): 4, (2, 3): 6, (1, 3): 3, (3, 5): 5}
    ok = True
    for (n, m), k in expected.items():
        params = LawsonParams(n, m, 2.0)
        result = extract_angle_slope(params)
        ok = ok and result.k == k
        xs, angles = angle_samples(params)
        _, _, residual = unwrap_and_fit(angles, xs)
        ok = ok and residual < 1e-9
        ok = ok and poincare_index(standard_chart_field(params), NORTH) == k
    _report(5, "angle slopes give k = 4, 6, 3, 5 with residual < 1e-9; winding agrees", ok)


def test_criterion_6_parameter_identifications():
    rng = np.random.default_rng(6)
    ok = True
    for n, m in CONSECUTIVE + ODD:
        params = LawsonParams(n, m, 2.0)
        for _ in range(100):
            seed = (
                float(rng.uniform(-math.pi, math.pi)),
                float(rng.uniform(0.05, math.pi / 2 - 0.05)),
            )
            sweep = parameter_identifications(params, seed, tol=1e-12)
            expected_sign = 1 if params.family == "consecutive" else -1
            ok = ok and sweep.sign == expected_sign
            ok = ok and max(sweep.max_point_defect, sweep.max_vector_defect) < 1e-12
    for n, m in ODD:
        entry = domain_cover_check(LawsonParams(n, m, 2.0), count=500, seed=66)
        ok = ok and entry.metric < 1e-10
    _report(6, "identifications: same-p same-V / V-negated (1e-12); strip cover (1e-10)", ok)


def test_criterion_7_minimality_with_discriminating_control():
    interior = np.linspace(-math.pi + 0.05, math.pi - 0.05, 20)
    gx, gy = np.meshgrid(interior, interior, indexing="ij")
    ok = True
    for n, m in ((1, 1),) + ALL_PAIRS:
        for radius in (1.0, 2.0):
            h_max = float(np.max(np.abs(mean_curvature(LawsonParams(n, m, radius), gx, gy))))
            ok = ok and h_max < 1e-5

    b = 0.5
    cb, sb = math.cos(b), math.sin(b)

    def control(x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return 2.0 * np.stack(
            [cb * np.cos(x), cb * np.sin(x), sb * np.cos(y), sb * np.sin(y)], axis=-1
        )

    grid = np.linspace(-2.5, 2.5, 8)
    cgx, cgy = np.meshgrid(grid, grid, indexing="ij")
    control_h = float(np.max(np.abs(parametric_mean_curvature(control, cgx, cgy, 2.0))))
    ok = ok and control_h > 1e-2
    _report(7, "max |H| < 1e-5 on all five surfaces at both radii; control flagged", ok)


def test_criterion_8_certificates_and_areas():
    rng = np.random.default_rng(8)
    ok = True
    for n, m in ALL_PAIRS:
        unit = LawsonParams(n, m, 1.0)
        xs = rng.uniform(-math.pi, math.pi, 100)
        ys = rng.uniform(-math.pi, math.pi, 100)
        ok = ok and float(np.max(algebraic_defect(unit, xs, ys))) < 1e-12
        big = LawsonParams(n, m, 2.0)
        for _ in range(5):
            ok = ok and ruling_defect(big, float(rng.uniform(-math.pi, math.pi))) < 1e-12
        ok = ok and self_congruence_defect(big, float(rng.uniform(0.1, 3.0))) < 1e-12
        ok = ok and surface_area(unit) >= 2.0 * math.pi**2 * min(n, m) - 1e-8
    ok = ok and abs(surface_area(LawsonParams(1, 1, 1.0)) - 2.0 * math.pi**2) < 1e-8
    _report(8, "algebraic/ruling/self-congruence < 1e-12; areas meet the 2 pi^2 min{n,m} bound", ok)


def test_criterion_9_cylinder_components():
    decomposition = cylinder_decomposition(LawsonParams(1, 3, 2.0), seed=9)
    by_id = {entry.check_id.rsplit(".", 1)[-1]: entry for entry in decomposition.entries}
    ok = by_id["boundary_circles"].metric < 1e-12
    ok = ok and by_id["circle_distance"].metric < 1e-9
    ok = ok and by_id["sign_flip"].metric < 1e-12
    _report(9, "boundary circles (1e-12), distance pi (1e-9), negated lower field (1e-12)", ok)


def test_criterion_10_index_additivity():
    ok = True
    for k in (-2, -1, 1, 3, 4, 5):
        field = AngleField(k).at
        ok = ok and poincare_index(field, NORTH) + poincare_index(field, SOUTH) == 2
    _report(10, "index at north pole plus index at south pole equals 2 exactly", ok)
