import math

import numpy as np
import pytest

from lawsonlab.euler import (
    double_cover_defect,
    euler_matrix_form,
    euler_rotation,
    extract_section,
    left_phase,
    local_isometry_defect,
    tangent_frame,
)
from lawsonlab.lawson import LawsonParams, immerse
from lawsonlab.spheres import Quaternion, point_from_vector, quat_rotation, rotation_defect
from lawsonlab.unit_tangent import TangentElement, bundle_to_rotation


def _random_unit(rng):
    q = rng.normal(size=4)
    return q / np.linalg.norm(q)


def test_base_point_maps_to_identity():
    assert np.allclose(euler_rotation(np.array([2.0, 0.0, 0.0, 0.0])), np.eye(3))


def test_second_axis_maps_to_half_turn():
    assert np.allclose(euler_rotation(np.array([0.0, 2.0, 0.0, 0.0])), np.diag([1.0, -1.0, -1.0]))


def test_wrong_radius_rejected():
    with pytest.raises(ValueError, match="sphere"):
        euler_rotation(np.array([1.0, 0.0, 0.0, 0.0]))


def test_agrees_with_conjugation_oracle():
    rng = np.random.default_rng(31)
    worst = 0.0
    for _ in range(1000):
        q = _random_unit(rng)
        diff = euler_rotation(2.0 * q) - quat_rotation(Quaternion.from_array(q))
        worst = max(worst, float(np.max(np.abs(diff))))
    assert worst < 1e-12


def test_rotation_invariants_hold():
    rng = np.random.default_rng(37)
    for _ in range(200):
        assert rotation_defect(euler_rotation(2.0 * _random_unit(rng))) < 1e-12


def test_tangent_frame_is_orthonormal():
    rng = np.random.default_rng(41)
    for _ in range(100):
        x = 2.0 * _random_unit(rng)
        frame = tangent_frame(x)
        gram = frame @ frame.T
        assert np.max(np.abs(gram - np.eye(3))) < 1e-12
        assert np.max(np.abs(frame @ x)) < 1e-12


def test_local_isometry_at_base_point():
    assert local_isometry_defect(np.array([2.0, 0.0, 0.0, 0.0]), h=1e-5) < 1e-8


def test_local_isometry_at_random_points():
    rng = np.random.default_rng(43)
    worst = 0.0
    for _ in range(100):
        worst = max(worst, local_isometry_defect(2.0 * _random_unit(rng), h=1e-5))
    assert worst < 1e-6


def test_wrong_metric_coefficient_is_flagged():
    defect = local_isometry_defect(np.array([2.0, 0.0, 0.0, 0.0]), metric_coefficient=0.25)
    assert abs(defect - 0.5) < 1e-8


def test_local_isometry_step_validation():
    with pytest.raises(ValueError, match="step"):
        local_isometry_defect(np.array([2.0, 0.0, 0.0, 0.0]), h=1e-2)


def test_double_cover_defect_is_exactly_zero():
    rng = np.random.default_rng(47)
    assert double_cover_defect(np.array([2.0, 0.0, 0.0, 0.0])) == 0.0
    assert double_cover_defect(np.array([0.0, 0.0, 2.0, 0.0])) == 0.0
    for _ in range(100):
        assert double_cover_defect(2.0 * _random_unit(rng)) == 0.0


def test_product_order_reverses_through_the_cover():
    rng = np.random.default_rng(53)
    for _ in range(200):
        q1 = Quaternion.from_array(_random_unit(rng))
        q2 = Quaternion.from_array(_random_unit(rng))
        lhs = euler_rotation(2.0 * (q1 * q2).as_array())
        rhs = euler_rotation(2.0 * q2.as_array()) @ euler_rotation(2.0 * q1.as_array())
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_extract_section_of_identity():
    element = extract_section(np.eye(3))
    assert np.allclose(element.point.vector, [1.0, 0.0, 0.0])
    assert np.allclose(element.vector, [0.0, 1.0, 0.0])


def test_section_roundtrip_both_ways():
    rng = np.random.default_rng(59)
    for _ in range(200):
        rotation = quat_rotation(Quaternion.from_array(_random_unit(rng)))
        assert np.max(np.abs(bundle_to_rotation(extract_section(rotation)) - rotation)) < 1e-12

        p = rng.normal(size=3)
        p /= np.linalg.norm(p)
        raw = rng.normal(size=3)
        v = raw - np.dot(raw, p) * p
        v /= np.linalg.norm(v)
        element = TangentElement(point_from_vector(p), v)
        rebuilt = extract_section(bundle_to_rotation(element))
        assert np.max(np.abs(rebuilt.point.vector - p)) < 1e-12
        assert np.max(np.abs(rebuilt.vector - v)) < 1e-12


def test_extract_section_rejects_tampered_column():
    rotation = np.eye(3).copy()
    rotation[:, 2] = [0.0, 0.0, -1.0]
    with pytest.raises(ValueError, match="section"):
        extract_section(rotation)


def test_section_base_point_reproduces_consecutive_formula():
    params = LawsonParams(1, 2, 2.0)
    rng = np.random.default_rng(61)
    for _ in range(100):
        x = float(rng.uniform(-math.pi, math.pi))
        y = float(rng.uniform(0.05, math.pi / 2 - 0.05))
        element = extract_section(euler_rotation(immerse(params, x, y)))
        expected = np.array(
            [math.cos(2 * y), math.sin(2 * y) * math.sin(x), math.sin(2 * y) * math.cos(x)]
        )
        assert np.max(np.abs(element.point.vector - expected)) < 1e-12


def test_circle_phase_fixes_base_point():
    rng = np.random.default_rng(67)
    for _ in range(100):
        q = Quaternion.from_array(_random_unit(rng))
        base_points = [
            extract_section(euler_rotation(2.0 * left_phase(theta, q).as_array())).point.vector
            for theta in np.linspace(0.0, 2.0 * math.pi, 8, endpoint=False)
        ]
        stacked = np.stack(base_points)
        assert np.max(np.abs(stacked - stacked[0])) < 1e-10


def test_matrix_form_extends_off_sphere():
    # The quadratic formula itself carries no domain restriction.
    value = euler_matrix_form(np.array([1.0, 2.0, 3.0, 4.0]))
    assert value.shape == (3, 3)
    assert np.isfinite(value).all()
