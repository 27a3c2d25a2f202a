"""The unit tangent bundle of the 2-sphere: tangent elements, curve energy
in the Sasaki metric, the frame map into SO(3), and winding-number indices
of vector-field singularities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .numerics import unwrap_angles
from .spheres import SpherePoint2, point_from_vector

_TANGENT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class TangentElement:
    """Pair (p, V): a unit vector V tangent to the sphere at p."""

    point: SpherePoint2
    vector: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.vector, dtype=float)
        object.__setattr__(self, "vector", v)
        if v.shape != (3,):
            raise ValueError("tangent vector must be a 3-vector")
        if abs(float(np.linalg.norm(v)) - 1.0) > _TANGENT_TOL:
            raise ValueError("tangent vector is not unit length")
        if abs(float(np.dot(self.point.vector, v))) > _TANGENT_TOL:
            raise ValueError("vector is not tangent to the sphere at the base point")


def bundle_to_rotation(element: TangentElement) -> np.ndarray:
    """Rotation with columns (p, V, p x V); an isometry onto SO(3) with the
    half-trace metric when the bundle carries the Sasaki metric."""
    p = element.point.vector
    v = element.vector
    return np.column_stack([p, v, np.cross(p, v)])


@dataclass(eq=False)
class BundleCurveSample:
    """A curve in the bundle sampled on a uniform parameter grid."""

    ts: np.ndarray
    points: np.ndarray
    vectors: np.ndarray

    def __post_init__(self) -> None:
        self.ts = np.asarray(self.ts, dtype=float)
        self.points = np.asarray(self.points, dtype=float)
        self.vectors = np.asarray(self.vectors, dtype=float)
        n = self.ts.size
        if n < 3:
            raise ValueError("need at least three samples")
        if self.points.shape != (n, 3) or self.vectors.shape != (n, 3):
            raise ValueError("points and vectors must have shape (n, 3)")
        steps = np.diff(self.ts)
        if np.max(np.abs(steps - steps[0])) > 1e-9 * max(abs(steps[0]), 1e-300):
            raise ValueError("parameter grid is not uniform")
        if np.max(np.abs(np.sum(self.points**2, axis=1) - 1.0)) > 1e-10:
            raise ValueError("curve points must stay on the unit sphere")
        if np.max(np.abs(np.sum(self.vectors**2, axis=1) - 1.0)) > 1e-10:
            raise ValueError("curve vectors must stay unit length")
        if np.max(np.abs(np.sum(self.points * self.vectors, axis=1))) > 1e-10:
            raise ValueError("curve vectors must stay tangent to the sphere")

    @property
    def step(self) -> float:
        return float(self.ts[1] - self.ts[0])


def sasaki_energy(curve: BundleCurveSample, index: int) -> float:
    """Squared Sasaki speed |p'|^2 + |DV/dt|^2 at an interior sample.

    The covariant derivative DV/dt is the ambient derivative projected onto
    the tangent plane at p, which is exact for the round sphere.
    """
    n = curve.ts.size
    if not 1 <= index <= n - 2:
        raise ValueError("order-2 stencil needs an interior sample index")
    h = curve.step
    p = curve.points[index]
    dp = (curve.points[index + 1] - curve.points[index - 1]) / (2.0 * h)
    dv = (curve.vectors[index + 1] - curve.vectors[index - 1]) / (2.0 * h)
    dv_tan = dv - np.dot(dv, p) * p
    return float(np.dot(dp, dp) + np.dot(dv_tan, dv_tan))


def _chart_basis(center: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Deterministic right-handed pair (a, b) with a x b = center.
    helper = np.array([0.0, 0.0, 1.0])
    if abs(float(np.dot(center, helper))) > 0.9:
        helper = np.array([1.0, 0.0, 0.0])
    a = np.cross(helper, center)
    a /= np.linalg.norm(a)
    b = np.cross(center, a)
    return a, b


def poincare_index(
    field: Callable[[SpherePoint2], TangentElement],
    center: SpherePoint2,
    loop_colatitude: float = 0.3,
    sample_count: int = 512,
) -> int:
    """Winding number of ``field`` around ``center``.

    The field is pushed forward through the stereographic chart centered at
    ``center`` (projection from the antipode) and the winding of its angle
    along the positively oriented circle of the given colatitude is counted.
    For an annulus free of singularities the result does not depend on the
    colatitude.
    """
    if not (0.0 < loop_colatitude < math.pi):
        raise ValueError("loop colatitude must lie in (0, pi)")
    if sample_count < 8:
        raise ValueError("need at least 8 samples on the loop")
    c = center.vector
    a, b = _chart_basis(c)
    cr, sr = math.cos(loop_colatitude), math.sin(loop_colatitude)

    angles = np.empty(sample_count + 1)
    for j in range(sample_count + 1):
        s = 2.0 * math.pi * j / sample_count
        pvec = cr * c + sr * (math.cos(s) * a + math.sin(s) * b)
        pvec /= np.linalg.norm(pvec)
        element = field(point_from_vector(pvec))
        v = element.vector
        if abs(float(np.linalg.norm(v)) - 1.0) > 1e-9:
            raise ValueError("field value is not unit length on the loop")
        if abs(float(np.dot(v, pvec))) > 1e-9:
            raise ValueError("field value is not tangent at the loop point")
        u, w = float(np.dot(pvec, a)), float(np.dot(pvec, c))
        vv = float(np.dot(pvec, b))
        va, vb, vc = float(np.dot(v, a)), float(np.dot(v, b)), float(np.dot(v, c))
        denom = 1.0 + w
        # Differential of the stereographic projection applied to v.
        re = va / denom - u * vc / denom**2
        im = vb / denom - vv * vc / denom**2
        angles[j] = math.atan2(im, re)

    unwrapped = unwrap_angles(angles)
    winding = (unwrapped[-1] - unwrapped[0]) / (2.0 * math.pi)
    nearest = round(winding)
    if abs(winding - nearest) > 1e-6:
        raise ValueError(f"winding {winding!r} is not close to an integer")
    return int(nearest)
