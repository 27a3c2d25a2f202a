"""Points, charts, frames and rotations: the unit 2-sphere, round 3-spheres,
unit quaternions and SO(3).

Chart conventions
-----------------
The standard chart puts the poles on the third axis: a point with latitude
``alpha`` and longitude ``t`` is ``(cos a cos t, cos a sin t, sin a)``.  The
rotation-group computations use a second chart whose poles sit on the first
axis; ``axis1_chart_to_polar`` / ``polar_to_axis1_chart`` are the fixed
coordinate relabelings between the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi

_UNIT_TOL = 1e-12
_CHART_TOL = 1e-10
_POLE_COS = 1e-9


@dataclass(frozen=True, eq=False)
class SpherePoint2:
    """Point of the unit 2-sphere carried as a unit vector plus chart data."""

    vector: np.ndarray
    latitude: float
    longitude: float

    def __post_init__(self) -> None:
        v = np.asarray(self.vector, dtype=float)
        object.__setattr__(self, "vector", v)
        if v.shape != (3,):
            raise ValueError("sphere point needs a 3-vector")
        if abs(float(np.linalg.norm(v)) - 1.0) > _UNIT_TOL:
            raise ValueError("sphere point vector is not unit length")
        ca = math.cos(self.latitude)
        rebuilt = np.array(
            [
                ca * math.cos(self.longitude),
                ca * math.sin(self.longitude),
                math.sin(self.latitude),
            ]
        )
        if float(np.max(np.abs(rebuilt - v))) > _CHART_TOL:
            raise ValueError("chart data inconsistent with the stored vector")

    def is_pole(self) -> bool:
        return math.cos(self.latitude) < _POLE_COS


def latlon_to_point(latitude: float, longitude: float) -> SpherePoint2:
    """Build a sphere point from latitude in [-pi/2, pi/2] and any longitude."""
    if not (-HALF_PI - 1e-12 <= latitude <= HALF_PI + 1e-12):
        raise ValueError(f"latitude {latitude!r} outside [-pi/2, pi/2]")
    latitude = min(max(latitude, -HALF_PI), HALF_PI)
    t = longitude % TWO_PI
    ca = math.cos(latitude)
    vec = np.array([ca * math.cos(t), ca * math.sin(t), math.sin(latitude)])
    return SpherePoint2(vec, latitude, t)


def point_from_vector(u: np.ndarray) -> SpherePoint2:
    """Attach chart data to a unit 3-vector (longitude 0 at the poles)."""
    u = np.asarray(u, dtype=float)
    if abs(float(np.linalg.norm(u)) - 1.0) > _UNIT_TOL:
        raise ValueError("not a unit vector")
    latitude = math.asin(min(max(float(u[2]), -1.0), 1.0))
    longitude = math.atan2(float(u[1]), float(u[0])) % TWO_PI
    return SpherePoint2(u, latitude, longitude)


NORTH = latlon_to_point(HALF_PI, 0.0)
SOUTH = latlon_to_point(-HALF_PI, 0.0)


def frame_e1_e2(p: SpherePoint2) -> tuple[np.ndarray, np.ndarray]:
    """Oriented orthonormal frame: e1 along parallels, e2 along meridians.

    Satisfies e1 x e2 = p (outward normal).  Undefined at the poles.
    """
    ca = math.cos(p.latitude)
    if ca < _POLE_COS:
        raise ValueError("frame undefined at singularity (chart pole)")
    sa = math.sin(p.latitude)
    ct, st = math.cos(p.longitude), math.sin(p.longitude)
    e1 = np.array([-st, ct, 0.0])
    e2 = np.array([-sa * ct, -sa * st, ca])
    return e1, e2


@dataclass(frozen=True)
class Quaternion:
    """Quaternion with components (w, x, y, z); unit ones encode rotations."""

    w: float
    x: float
    y: float
    z: float

    @staticmethod
    def from_array(a: np.ndarray) -> "Quaternion":
        a = np.asarray(a, dtype=float)
        return Quaternion(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2)

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero quaternion")
        return Quaternion(self.w / n, self.x / n, self.y / n, self.z / n)


def quat_rotation(q: Quaternion) -> np.ndarray:
    """Matrix of the conjugation u -> q^-1 u q on imaginary quaternions.

    Requires a unit quaternion; q and -q yield the same matrix.
    """
    if abs(q.norm() - 1.0) > _UNIT_TOL:
        raise ValueError("rotation requires a unit quaternion")
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array(
        [
            [w * w + x * x - y * y - z * z, 2.0 * (x * y + w * z), 2.0 * (x * z - w * y)],
            [2.0 * (x * y - w * z), w * w - x * x + y * y - z * z, 2.0 * (y * z + w * x)],
            [2.0 * (x * z + w * y), 2.0 * (y * z - w * x), w * w - x * x - y * y + z * z],
        ]
    )


def rotation_defect(R: np.ndarray) -> float:
    """Max deviation from the rotation invariants: orthogonality, det +1,
    and third column equal to the cross product of the first two."""
    R = np.asarray(R, dtype=float)
    orth = float(np.max(np.abs(R.T @ R - np.eye(3))))
    det = abs(float(np.linalg.det(R)) - 1.0)
    orient = float(np.max(np.abs(R[:, 2] - np.cross(R[:, 0], R[:, 1]))))
    return max(orth, det, orient)


def require_rotation(R: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    R = np.asarray(R, dtype=float)
    defect = rotation_defect(R)
    if defect > tol:
        raise ValueError(f"matrix violates rotation invariants (defect {defect:.3e})")
    return R


def reorthonormalize(R: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt on the columns.

    Intended for matrices read from external sources; math paths never call
    this, so formula errors surface instead of being hidden.
    """
    R = np.array(R, dtype=float)
    for j in range(3):
        for i in range(j):
            R[:, j] -= np.dot(R[:, i], R[:, j]) * R[:, i]
        norm = np.linalg.norm(R[:, j])
        if norm == 0.0:
            raise ValueError("rank-deficient matrix cannot be orthonormalized")
        R[:, j] /= norm
    if np.linalg.det(R) < 0.0:
        R[:, 2] = -R[:, 2]
    return R


def require_sphere4(x: np.ndarray, radius: float, tol: float = 1e-10) -> np.ndarray:
    """Validate that a 4-vector lies on the sphere of the given radius."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 4:
        raise ValueError("expected 4-vector(s)")
    norms = np.sqrt(np.sum(x * x, axis=-1))
    worst = float(np.max(np.abs(norms - radius)))
    if worst > tol:
        raise ValueError(f"point off the radius-{radius} sphere by {worst:.3e}")
    return x


def axis1_chart_to_polar(v: np.ndarray) -> np.ndarray:
    """Relabel axes so the axis-1 chart poles land on the standard poles."""
    v = np.asarray(v, dtype=float)
    return np.stack([v[..., 1], v[..., 2], v[..., 0]], axis=-1)


def polar_to_axis1_chart(v: np.ndarray) -> np.ndarray:
    """Inverse relabeling of ``axis1_chart_to_polar``."""
    v = np.asarray(v, dtype=float)
    return np.stack([v[..., 2], v[..., 0], v[..., 1]], axis=-1)
