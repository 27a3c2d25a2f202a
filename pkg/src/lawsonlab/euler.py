"""The quadratic parametrization of SO(3) by the radius-2 3-sphere.

``euler_rotation`` is the classical Euler-parameter map written as an
explicit quadratic matrix; it agrees with quaternion conjugation
u -> q^-1 u q at q = x/2, covers SO(3) twice (x and -x give the same
rotation) and is a local isometry onto SO(3) with the half-trace metric.
"""

from __future__ import annotations

import math

import numpy as np

from .spheres import Quaternion, point_from_vector, require_sphere4
from .unit_tangent import TangentElement

RADIUS = 2.0


def euler_matrix_form(x: np.ndarray) -> np.ndarray:
    """The quadratic matrix formula on all of R^4 (no domain check).

    Finite differencing needs evaluations slightly off the sphere; the
    restriction to the radius-2 sphere is ``euler_rotation``.
    """
    x = np.asarray(x, dtype=float)
    x1, x2, x3, x4 = x[..., 0], x[..., 1], x[..., 2], x[..., 3]
    r11 = x1 * x1 + x2 * x2 - x3 * x3 - x4 * x4
    r12 = 2.0 * x1 * x4 + 2.0 * x2 * x3
    r13 = -2.0 * x1 * x3 + 2.0 * x2 * x4
    r21 = -2.0 * x1 * x4 + 2.0 * x2 * x3
    r22 = x1 * x1 - x2 * x2 + x3 * x3 - x4 * x4
    r23 = 2.0 * x1 * x2 + 2.0 * x3 * x4
    r31 = 2.0 * x1 * x3 + 2.0 * x2 * x4
    r32 = -2.0 * x1 * x2 + 2.0 * x3 * x4
    r33 = x1 * x1 - x2 * x2 - x3 * x3 + x4 * x4
    rows = np.stack(
        [
            np.stack([r11, r12, r13], axis=-1),
            np.stack([r21, r22, r23], axis=-1),
            np.stack([r31, r32, r33], axis=-1),
        ],
        axis=-2,
    )
    return rows / 4.0


def euler_rotation(x: np.ndarray) -> np.ndarray:
    """Rotation matrix attached to a point of the radius-2 3-sphere.

    Accepts any batch shape (..., 4) and returns (..., 3, 3).  All entries
    are quadratic forms in the coordinates, so x and -x map to bitwise
    identical matrices.
    """
    x = np.asarray(x, dtype=float)
    require_sphere4(x, RADIUS, tol=1e-10)
    return euler_matrix_form(x)


def tangent_frame(x: np.ndarray) -> np.ndarray:
    """Orthonormal frame of the tangent space at x on the radius-2 sphere.

    Rows are the right translates of the imaginary units by the unit
    quaternion x/2; deterministic, no branch choices.
    """
    x = require_sphere4(np.asarray(x, dtype=float), RADIUS, tol=1e-10)
    x1, x2, x3, x4 = x
    return np.array(
        [
            [-x2, x1, x4, -x3],
            [-x3, -x4, x1, x2],
            [-x4, x3, -x2, x1],
        ]
    ) / 2.0


def local_isometry_defect(
    x: np.ndarray,
    h: float = 1e-5,
    metric_coefficient: float = 0.5,
) -> float:
    """Deviation of the pulled-back half-trace metric from the round metric.

    Differences the rotation map along an orthonormal tangent frame at x
    and returns max over frame pairs of |c tr((dR u_i)^T dR u_j) - delta_ij|
    with c the metric coefficient.  A zero defect at coefficient 1/2
    certifies the map is a local isometry.
    """
    if not (1e-7 <= h <= 1e-3):
        raise ValueError("finite-difference step outside [1e-7, 1e-3]")
    x = np.asarray(x, dtype=float)
    frame = tangent_frame(x)
    diffs = []
    for u in frame:
        # The map is quadratic, so the central difference is exact up to
        # roundoff; the stencil points sit O(h^2) off the sphere, which the
        # ambient matrix form absorbs.
        diffs.append((euler_matrix_form(x + h * u) - euler_matrix_form(x - h * u)) / (2.0 * h))
    defect = 0.0
    for i in range(3):
        for j in range(i, 3):
            inner = metric_coefficient * float(np.sum(diffs[i] * diffs[j]))
            target = 1.0 if i == j else 0.0
            defect = max(defect, abs(inner - target))
    return defect


def double_cover_defect(x: np.ndarray) -> float:
    """Max entry difference between the rotations at x and -x (exactly 0)."""
    return float(np.max(np.abs(euler_rotation(x) - euler_rotation(-np.asarray(x, dtype=float)))))


def extract_section(R: np.ndarray) -> TangentElement:
    """Read a tangent element off a rotation: base point = column 1,
    vector = column 2.  Inverse of ``bundle_to_rotation``.

    Raises when the third column is not the cross product of the first two.
    """
    R = np.asarray(R, dtype=float)
    p = R[:, 0]
    v = R[:, 1]
    if float(np.max(np.abs(R[:, 2] - np.cross(p, v)))) > 1e-8:
        raise ValueError("not a section image: third column mismatch")
    return TangentElement(point_from_vector(p), v)


def left_phase(theta: float, q: Quaternion) -> Quaternion:
    """Left multiplication by cos(theta) + sin(theta) i, the circle action
    whose orbits project to a fixed base point on the 2-sphere."""
    phase = Quaternion(math.cos(theta), math.sin(theta), 0.0, 0.0)
    return phase * q
