"""Lawson's doubly periodic minimal immersions of round 3-spheres, their
geometric certificates, and their pullback to unit vector fields on the
2-sphere through the quadratic double cover of SO(3).

Slot convention
---------------
For parameters (n, m) the immersion is

    (x, y) -> R (cos(mx) cos y, sin(mx) cos y, cos(nx) sin y, sin(nx) sin y):

the frequency m rides the cos(y) circle pair and n the sin(y) pair.  The
closed-form rotation matrix below and the pullback formulas are consistent
with exactly this slot order, which is why it is fixed once here.

Two one-parameter families admit a single-valued pullback:

* consecutive, m = n + 1: one unit field of index class 2n + 2;
* odd, m = n + 2 with n odd: a double-valued pullback (V and -V) whose
  branches live on the two cylindrical halves of the surface, index class
  n + 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .euler import euler_rotation, extract_section
from .numerics import FiniteDiffSpec, QuadratureSpec, integrate_2d, unwrap_and_fit
from .report import ReportEntry
from .spheres import SpherePoint2, axis1_chart_to_polar, polar_to_axis1_chart
from .unit_tangent import TangentElement

HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi

FAMILY_GENERAL = "general"
FAMILY_CONSECUTIVE = "consecutive"
FAMILY_ODD = "odd"


@dataclass(frozen=True)
class LawsonParams:
    """Frequency pair and ambient radius of one immersion."""

    n: int
    m: int
    radius: float = 2.0

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError("frequencies must be positive integers")
        if math.gcd(self.n, self.m) != 1:
            raise ValueError("frequency pair must be coprime")
        if self.radius not in (1.0, 2.0):
            raise ValueError("supported ambient radii are 1 and 2")

    @property
    def family(self) -> str:
        if self.m == self.n + 1:
            return FAMILY_CONSECUTIVE
        if self.m == self.n + 2 and self.n % 2 == 1:
            return FAMILY_ODD
        return FAMILY_GENERAL

    @property
    def label(self) -> str:
        return f"tau_{self.n}_{self.m}"

    def with_radius(self, radius: float) -> "LawsonParams":
        return LawsonParams(self.n, self.m, radius)


@dataclass(frozen=True)
class DomainRect:
    """Axis-aligned parameter rectangle inside [-pi, pi]^2."""

    x_min: float = -math.pi
    x_max: float = math.pi
    y_min: float = -math.pi
    y_max: float = math.pi

    def __post_init__(self) -> None:
        eps = 1e-12
        if not (-math.pi - eps <= self.x_min < self.x_max <= math.pi + eps):
            raise ValueError("x-interval must be an ordered subset of [-pi, pi]")
        if not (-math.pi - eps <= self.y_min < self.y_max <= math.pi + eps):
            raise ValueError("y-interval must be an ordered subset of [-pi, pi]")

    def as_rect(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((self.x_min, self.x_max), (self.y_min, self.y_max))


FULL_SQUARE = DomainRect()
HALF_STRIP = DomainRect(y_min=-HALF_PI, y_max=HALF_PI)


def immerse(params: LawsonParams, x, y) -> np.ndarray:
    """Point of the radius-R 3-sphere at parameters (x, y); broadcasts."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    cy, sy = np.cos(y), np.sin(y)
    return params.radius * np.stack(
        [
            np.cos(params.m * x) * cy,
            np.sin(params.m * x) * cy,
            np.cos(params.n * x) * sy,
            np.sin(params.n * x) * sy,
        ],
        axis=-1,
    )


def immersion_derivatives(params: LawsonParams, x, y) -> tuple[np.ndarray, np.ndarray]:
    """Analytic first derivatives (d/dx, d/dy) of the immersion."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n, m, r = params.n, params.m, params.radius
    cy, sy = np.cos(y), np.sin(y)
    d_x = r * np.stack(
        [
            -m * np.sin(m * x) * cy,
            m * np.cos(m * x) * cy,
            -n * np.sin(n * x) * sy,
            n * np.cos(n * x) * sy,
        ],
        axis=-1,
    )
    d_y = r * np.stack(
        [
            -np.cos(m * x) * sy,
            -np.sin(m * x) * sy,
            np.cos(n * x) * cy,
            np.sin(n * x) * cy,
        ],
        axis=-1,
    )
    return d_x, d_y


def _second_y_derivative(params: LawsonParams, x, y) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    cy, sy = np.cos(y), np.sin(y)
    return params.radius * np.stack(
        [
            -np.cos(params.m * x) * cy,
            -np.sin(params.m * x) * cy,
            -np.cos(params.n * x) * sy,
            -np.sin(params.n * x) * sy,
        ],
        axis=-1,
    )


def first_fundamental_form(params: LawsonParams, x, y):
    """Coefficients (E, F, G) from the analytic derivative vectors."""
    d_x, d_y = immersion_derivatives(params, x, y)
    E = np.sum(d_x * d_x, axis=-1)
    F = np.sum(d_x * d_y, axis=-1)
    G = np.sum(d_y * d_y, axis=-1)
    return E, F, G


def surface_area(
    params: LawsonParams,
    domain: DomainRect = FULL_SQUARE,
    multiplicity: int = 2,
    spec: QuadratureSpec | None = None,
) -> float:
    """Immersed area over a parameter domain, divided by the covering
    multiplicity of that domain (2 for the full square of any coprime pair,
    an identity the covering involution below witnesses)."""
    if multiplicity < 1:
        raise ValueError("covering multiplicity must be a positive integer")

    def integrand(gx, gy):
        E, F, G = first_fundamental_form(params, gx, gy)
        return np.sqrt(E * G - F * F)

    return integrate_2d(integrand, domain.as_rect(), spec, vectorized=True) / multiplicity


def covering_involution(params: LawsonParams) -> Callable[[float, float], tuple[float, float]]:
    """The parameter involution identifying the two sheets of the full
    square over the surface; its shape depends only on frequency parity."""
    if params.m % 2 == 0:

        def involution(x: float, y: float) -> tuple[float, float]:
            return x + math.pi, -y

    elif params.n % 2 == 0:

        def involution(x: float, y: float) -> tuple[float, float]:
            return x + math.pi, math.pi - y

    else:

        def involution(x: float, y: float) -> tuple[float, float]:
            return x + math.pi, y + math.pi

    return involution


def involution_defect(params: LawsonParams, count: int = 200, seed: int = 0) -> float:
    """Max image distance between random parameters and their involution."""
    rng = np.random.default_rng(seed)
    involution = covering_involution(params)
    worst = 0.0
    for _ in range(count):
        x = float(rng.uniform(-math.pi, math.pi))
        y = float(rng.uniform(-math.pi, math.pi))
        x2, y2 = involution(x, y)
        defect = float(np.max(np.abs(immerse(params, x, y) - immerse(params, x2, y2))))
        worst = max(worst, defect)
    return worst


def _cross4(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    # Vector orthogonal to a, b, c: cofactor expansion of det [w; a; b; c].
    stacked = np.stack([a, b, c], axis=-2)
    comps = []
    sign = 1.0
    for i in range(4):
        idx = [j for j in range(4) if j != i]
        comps.append(sign * np.linalg.det(stacked[..., idx]))
        sign = -sign
    return np.stack(comps, axis=-1)


def mean_curvature(params: LawsonParams, x, y, fd: FiniteDiffSpec | None = None):
    """Mean curvature as a surface inside the round 3-sphere; broadcasts.

    First derivatives are analytic; second derivatives use central
    differences.  A minimal immersion gives values at roundoff level.
    """
    fd = fd or FiniteDiffSpec(h=1e-4)
    if not (1e-6 <= fd.h <= 1e-3):
        raise ValueError("second-derivative step outside [1e-6, 1e-3]")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    E, F, G = first_fundamental_form(params, x, y)
    det = E * G - F * F
    if np.any(det < 1e-12):
        raise ValueError("coordinate singularity: degenerate induced metric")
    phi = immerse(params, x, y)
    d_x, d_y = immersion_derivatives(params, x, y)
    normal = _cross4(phi / params.radius, d_x, d_y)
    norms = np.linalg.norm(normal, axis=-1, keepdims=True)
    if np.any(norms < 1e-12):
        raise ValueError("degenerate normal direction")
    normal = normal / norms
    h = fd.h
    phi_xx = (immerse(params, x + h, y) - 2.0 * phi + immerse(params, x - h, y)) / h**2
    phi_yy = (immerse(params, x, y + h) - 2.0 * phi + immerse(params, x, y - h)) / h**2
    phi_xy = (
        immerse(params, x + h, y + h)
        - immerse(params, x + h, y - h)
        - immerse(params, x - h, y + h)
        + immerse(params, x - h, y - h)
    ) / (4.0 * h**2)
    ii_xx = np.sum(phi_xx * normal, axis=-1)
    ii_xy = np.sum(phi_xy * normal, axis=-1)
    ii_yy = np.sum(phi_yy * normal, axis=-1)
    return (G * ii_xx - 2.0 * F * ii_xy + E * ii_yy) / (2.0 * det)


def parametric_mean_curvature(
    surface: Callable[[np.ndarray, np.ndarray], np.ndarray],
    x,
    y,
    radius: float,
    fd: FiniteDiffSpec | None = None,
):
    """Mean curvature of a generic parametric surface inside the round
    3-sphere, with all derivatives by central differences.  Used to check
    that the certificate actually discriminates non-minimal surfaces."""
    fd = fd or FiniteDiffSpec(h=1e-4)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    h = fd.h
    phi = surface(x, y)
    d_x = (surface(x + h, y) - surface(x - h, y)) / (2.0 * h)
    d_y = (surface(x, y + h) - surface(x, y - h)) / (2.0 * h)
    E = np.sum(d_x * d_x, axis=-1)
    F = np.sum(d_x * d_y, axis=-1)
    G = np.sum(d_y * d_y, axis=-1)
    det = E * G - F * F
    if np.any(det < 1e-12):
        raise ValueError("coordinate singularity: degenerate induced metric")
    normal = _cross4(phi / radius, d_x, d_y)
    normal = normal / np.linalg.norm(normal, axis=-1, keepdims=True)
    phi_xx = (surface(x + h, y) - 2.0 * phi + surface(x - h, y)) / h**2
    phi_yy = (surface(x, y + h) - 2.0 * phi + surface(x, y - h)) / h**2
    phi_xy = (
        surface(x + h, y + h)
        - surface(x + h, y - h)
        - surface(x - h, y + h)
        + surface(x - h, y - h)
    ) / (4.0 * h**2)
    ii_xx = np.sum(phi_xx * normal, axis=-1)
    ii_xy = np.sum(phi_xy * normal, axis=-1)
    ii_yy = np.sum(phi_yy * normal, axis=-1)
    return (G * ii_xx - 2.0 * F * ii_xy + E * ii_yy) / (2.0 * det)


def algebraic_defect(params: LawsonParams, x, y):
    """|Im(z^n conj(w)^m)| for z, w the two complex coordinate pairs.

    A unit-sphere statement, identically zero on the immersion because the
    longitude phases cancel exactly at these exponents."""
    if params.radius != 1.0:
        raise ValueError("algebraic certificate applies to the unit-sphere immersion")
    phi = immerse(params, x, y)
    z = phi[..., 0] + 1j * phi[..., 1]
    w = phi[..., 2] + 1j * phi[..., 3]
    return np.abs(np.imag(z**params.n * np.conj(w) ** params.m))


def ruling_defect(params: LawsonParams, x: float, samples: int = 64) -> float:
    """Great-circle defect max |phi_yy + phi| / R of the curve y -> phi(x, y),
    with analytic derivatives; zero exactly when the ruling is geodesic."""
    ys = np.linspace(-math.pi, math.pi, samples)
    phi = immerse(params, x, ys)
    phi_yy = _second_y_derivative(params, x, ys)
    return float(np.max(np.abs(phi_yy + phi))) / params.radius


def self_congruence_defect(params: LawsonParams, c: float, grid: tuple[int, int] = (17, 15)) -> float:
    """Deviation of the x-shift by c from the block rotation by (mc, nc)."""
    xs = np.linspace(-math.pi, math.pi, grid[0])
    ys = np.linspace(-math.pi, math.pi, grid[1])
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    base = immerse(params, gx, gy)
    shifted = immerse(params, gx + c, gy)
    cm, sm = math.cos(params.m * c), math.sin(params.m * c)
    cn, sn = math.cos(params.n * c), math.sin(params.n * c)
    rotated = np.empty_like(base)
    rotated[..., 0] = cm * base[..., 0] - sm * base[..., 1]
    rotated[..., 1] = sm * base[..., 0] + cm * base[..., 1]
    rotated[..., 2] = cn * base[..., 2] - sn * base[..., 3]
    rotated[..., 3] = sn * base[..., 2] + cn * base[..., 3]
    return float(np.max(np.abs(shifted - rotated)))


def closed_form_rotation(params: LawsonParams, x, y) -> np.ndarray:
    """The closed-form image of the immersion under the quadratic double
    cover, written directly in double angles; must agree entrywise with
    ``euler_rotation(immerse(...))``."""
    if params.radius != 2.0:
        raise ValueError("the rotation image lives over the radius-2 sphere")
    n, m = params.n, params.m
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    c2y, s2y = np.cos(2.0 * y), np.sin(2.0 * y)
    cy2, sy2 = np.cos(y) ** 2, np.sin(y) ** 2
    r11 = c2y * np.ones_like(x)
    r12 = s2y * np.sin((m + n) * x)
    r13 = -s2y * np.cos((m + n) * x)
    r21 = -s2y * np.sin((n - m) * x)
    r22 = cy2 * np.cos(2 * m * x) + sy2 * np.cos(2 * n * x)
    r23 = cy2 * np.sin(2 * m * x) + sy2 * np.sin(2 * n * x)
    r31 = s2y * np.cos((n - m) * x)
    r32 = -cy2 * np.sin(2 * m * x) + sy2 * np.sin(2 * n * x)
    r33 = cy2 * np.cos(2 * m * x) - sy2 * np.cos(2 * n * x)
    return np.stack(
        [
            np.stack([r11, r12, r13], axis=-1),
            np.stack([r21, r22, r23], axis=-1),
            np.stack([r31, r32, r33], axis=-1),
        ],
        axis=-2,
    )


def consecutive_display_rotation(params: LawsonParams, x, y) -> np.ndarray:
    """The specialized consecutive-family matrix as printed in the source
    material; consistent with the general closed form."""
    if params.family != FAMILY_CONSECUTIVE:
        raise ValueError("specialized display applies to the consecutive family")
    n = params.n
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    c2y, s2y = np.cos(2.0 * y), np.sin(2.0 * y)
    cy2, sy2 = np.cos(y) ** 2, np.sin(y) ** 2
    r11 = c2y * np.ones_like(x)
    r12 = s2y * np.sin((2 * n + 1) * x)
    r13 = -s2y * np.cos((2 * n + 1) * x)
    r21 = s2y * np.sin(x)
    r22 = cy2 * np.cos(2 * (n + 1) * x) + sy2 * np.cos(2 * n * x)
    r23 = cy2 * np.sin(2 * (n + 1) * x) + sy2 * np.sin(2 * n * x)
    r31 = s2y * np.cos(x)
    r32 = -cy2 * np.sin(2 * (n + 1) * x) + sy2 * np.sin(2 * n * x)
    r33 = cy2 * np.cos(2 * (n + 1) * x) - sy2 * np.cos(2 * n * x)
    return np.stack(
        [
            np.stack([r11, r12, r13], axis=-1),
            np.stack([r21, r22, r23], axis=-1),
            np.stack([r31, r32, r33], axis=-1),
        ],
        axis=-2,
    )


def odd_display_rotation(params: LawsonParams, x, y) -> np.ndarray:
    """The specialized odd-family matrix as printed in the source material.

    Its first-row frequencies disagree with the general closed form (4Nx
    versus (4N+4)x for n = 2N+1); kept verbatim so the divergence can be
    measured and recorded rather than silently corrected.
    """
    if params.family != FAMILY_ODD:
        raise ValueError("specialized display applies to the odd family")
    big_n = (params.n - 1) // 2
    r_f, s_f = 2 * big_n + 1, 2 * big_n + 3
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    c2y, s2y = np.cos(2.0 * y), np.sin(2.0 * y)
    cy2, sy2 = np.cos(y) ** 2, np.sin(y) ** 2
    r11 = c2y * np.ones_like(x)
    r12 = s2y * np.sin(4 * big_n * x)
    r13 = -s2y * np.cos(4 * big_n * x)
    r21 = s2y * np.sin(2 * x)
    r22 = cy2 * np.cos(2 * r_f * x) + sy2 * np.cos(2 * s_f * x)
    r23 = cy2 * np.sin(2 * r_f * x) + sy2 * np.sin(2 * s_f * x)
    r31 = s2y * np.cos(2 * x)
    r32 = -cy2 * np.sin(2 * r_f * x) + sy2 * np.sin(2 * s_f * x)
    r33 = cy2 * np.cos(2 * r_f * x) - sy2 * np.cos(2 * s_f * x)
    return np.stack(
        [
            np.stack([r11, r12, r13], axis=-1),
            np.stack([r21, r22, r23], axis=-1),
            np.stack([r31, r32, r33], axis=-1),
        ],
        axis=-2,
    )


def correspondence_point(params: LawsonParams, x: float, y: float) -> TangentElement:
    """Tangent element cut out by the immersion at (x, y): base point and
    vector are the first two columns of the rotation image."""
    if params.radius != 2.0:
        raise ValueError("the correspondence runs over the radius-2 sphere")
    if abs(math.sin(2.0 * y)) < 1e-12:
        raise ValueError("parameters map to a chart pole; the vector there is not single-valued")
    return extract_section(euler_rotation(immerse(params, x, y)))


def index_class(params: LawsonParams) -> int:
    """Index class of the pulled-back field: 2n+2 for the consecutive
    family, n+2 (odd) for the odd family."""
    if params.family == FAMILY_CONSECUTIVE:
        return params.n + params.m + 1
    if params.family == FAMILY_ODD:
        return (params.n + params.m) // 2 + 1
    raise ValueError("no single pulled-back field outside the two families")


def angle_samples(
    params: LawsonParams, y0: float = 0.4, count: int = 512
) -> tuple[np.ndarray, np.ndarray]:
    """Angles of the pulled-back vector against the parallel/meridian frame
    of the axis-1 chart, sampled along x at a fixed interior y0."""
    if not (1e-6 < y0 < HALF_PI - 1e-6):
        raise ValueError("latitude parameter must be interior to (0, pi/2)")
    d = params.m - params.n
    if d <= 0:
        raise ValueError("frame sweep expects m > n")
    xs = np.linspace(0.0, TWO_PI, count, endpoint=False)
    c2y, s2y = math.cos(2.0 * y0), math.sin(2.0 * y0)
    angles = np.empty(count)
    for i, x in enumerate(xs):
        v = correspondence_point(params, float(x), y0).vector
        cdx, sdx = math.cos(d * x), math.sin(d * x)
        u1 = np.array([0.0, cdx, -sdx])
        u2 = np.array([-s2y, c2y * sdx, c2y * cdx])
        angles[i] = math.atan2(float(np.dot(v, u2)), float(np.dot(v, u1)))
    return xs, angles


class AngleSlope(NamedTuple):
    slope: float
    k: int


def extract_angle_slope(params: LawsonParams, y0: float = 0.4, count: int = 512) -> AngleSlope:
    """Fit the pulled-back winding angle against the chart longitude.

    The chart longitude decreases at rate m - n in x, so the raw x-slope is
    rescaled by -(m - n); the index class is slope + 1.
    """
    xs, angles = angle_samples(params, y0, count)
    slope_x, _, residual = unwrap_and_fit(angles, xs)
    if residual > 1e-6:
        raise ValueError(f"not an angle-linear field (fit residual {residual:.3e})")
    slope = -slope_x / (params.m - params.n)
    k = round(slope + 1.0)
    if abs(slope + 1.0 - k) > 1e-6:
        raise ValueError(f"winding slope {slope!r} does not give an integer index")
    return AngleSlope(float(slope), int(k))


def standard_chart_field(params: LawsonParams) -> Callable[[SpherePoint2], TangentElement]:
    """The pulled-back unit field expressed in the standard polar chart.

    Inverts the base-point map on the branch y in (0, pi/2), which covers
    the whole twice-punctured sphere once, then relabels axes so the chart
    poles land on the standard poles.
    """
    d = params.m - params.n
    if d <= 0:
        raise ValueError("field extraction expects m > n")

    def field(p: SpherePoint2) -> TangentElement:
        pe = polar_to_axis1_chart(p.vector)
        y = 0.5 * math.acos(min(max(float(pe[0]), -1.0), 1.0))
        x = math.atan2(float(pe[1]), float(pe[2])) / d
        element = correspondence_point(params, x, y)
        return TangentElement(p, axis1_chart_to_polar(element.vector))

    return field


def _wrap_pi(value: float) -> float:
    return (value + math.pi) % TWO_PI - math.pi


@dataclass
class IdentificationSweep:
    """Outcome of sweeping the family's parameter identifications."""

    sign: int
    pairs: list[tuple[tuple[float, float], tuple[float, float]]] = field(default_factory=list)
    max_point_defect: float = 0.0
    max_vector_defect: float = 0.0


def parameter_identifications(
    params: LawsonParams,
    a1: tuple[float, float],
    k_range: int = 2,
    tol: float = 1e-10,
) -> IdentificationSweep:
    """Generate the family's identified parameter pairs and verify them.

    Consecutive family: (x, y) and (x + (2j+1) pi, i pi - y) hit the same
    base point with the same vector.  Odd family: (x, y) and
    (x + (2i+1) pi/2, j pi - y) hit the same base point with the vector
    negated.  Any defect beyond ``tol`` raises, flagging a formula
    discrepancy.
    """
    family = params.family
    if family == FAMILY_GENERAL:
        raise ValueError("parameter identifications are stated for the two special families")
    x1, y1 = float(a1[0]), float(a1[1])
    if not (-math.pi < x1 < math.pi) or not (0.0 < abs(y1) < HALF_PI):
        raise ValueError("seed parameters must lie in the open fundamental domain")
    sign = 1 if family == FAMILY_CONSECUTIVE else -1
    base = correspondence_point(params, x1, y1)
    sweep = IdentificationSweep(sign=sign)
    for i in range(-k_range, k_range + 1):
        for j in range(-k_range, k_range + 1):
            if family == FAMILY_CONSECUTIVE:
                x2 = x1 + (2 * j + 1) * math.pi
                y2 = i * math.pi - y1
            else:
                x2 = x1 + (2 * i + 1) * HALF_PI
                y2 = j * math.pi - y1
            x2, y2 = _wrap_pi(x2), _wrap_pi(y2)
            other = correspondence_point(params, x2, y2)
            p_defect = float(np.max(np.abs(base.point.vector - other.point.vector)))
            v_defect = float(np.max(np.abs(base.vector - sign * other.vector)))
            if max(p_defect, v_defect) > tol:
                raise ValueError(
                    f"identification failure for {params.label} at "
                    f"({x2:.6f}, {y2:.6f}): point defect {p_defect:.3e}, "
                    f"vector defect {v_defect:.3e}"
                )
            sweep.pairs.append(((x1, y1), (x2, y2)))
            sweep.max_point_defect = max(sweep.max_point_defect, p_defect)
            sweep.max_vector_defect = max(sweep.max_vector_defect, v_defect)
    return sweep


def domain_cover_check(params: LawsonParams, count: int = 500, seed: int = 0) -> ReportEntry:
    """For the odd family the half-height strip already covers the whole
    surface: every sample of the full square is matched inside the strip."""
    if params.family != FAMILY_ODD:
        raise ValueError("the strip cover is an odd-family statement")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        x = float(rng.uniform(-math.pi, math.pi))
        y = float(rng.uniform(-math.pi, math.pi))
        if abs(y) <= HALF_PI:
            x2, y2 = x, y
        else:
            y2 = y - math.pi if y > 0 else y + math.pi
            x2 = x - math.pi if x > 0 else x + math.pi
        defect = float(np.max(np.abs(immerse(params, x, y) - immerse(params, x2, y2))))
        worst = max(worst, defect)
    return ReportEntry(
        check_id=f"lawson.domain_cover.{params.label}",
        params={"n": params.n, "m": params.m, "samples": count, "seed": seed},
        metric=worst,
        tolerance=1e-10,
    )


@dataclass(frozen=True)
class CylinderComponent:
    """One cylindrical half of an odd-family surface, with the coordinate
    planes of its two boundary great circles."""

    sign: int
    params: LawsonParams
    domain: DomainRect
    boundary_axes: tuple[tuple[int, int], tuple[int, int]]


@dataclass
class CylinderDecomposition:
    plus: CylinderComponent
    minus: CylinderComponent
    entries: list[ReportEntry]

    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)


def cylinder_decomposition(
    params: LawsonParams,
    boundary_samples: int = 181,
    interior_samples: int = 64,
    seed: int = 0,
) -> CylinderDecomposition:
    """Split an odd-family surface into its two cylindrical halves and
    certify the geometry: boundary samples lie on the two coordinate great
    circles, those circles are at the maximal mutual distance pi, and the
    lower half carries exactly the negated field of the upper half."""
    if params.family != FAMILY_ODD:
        raise ValueError("the cylinder decomposition is an odd-family statement")
    if params.radius != 2.0:
        raise ValueError("the decomposition is stated on the radius-2 sphere")
    plus = CylinderComponent(1, params, DomainRect(y_min=0.0, y_max=HALF_PI), ((0, 1), (2, 3)))
    minus = CylinderComponent(-1, params, DomainRect(y_min=-HALF_PI, y_max=0.0), ((0, 1), (2, 3)))
    entries: list[ReportEntry] = []

    xs = np.linspace(-math.pi, math.pi, boundary_samples)
    worst_boundary = 0.0
    for y_edge, axes in ((0.0, (0, 1)), (HALF_PI, (2, 3)), (-HALF_PI, (2, 3))):
        pts = immerse(params, xs, y_edge)
        off_axes = tuple(i for i in range(4) if i not in axes)
        planar = float(np.max(np.abs(pts[:, off_axes])))
        radial = float(np.max(np.abs(np.hypot(pts[:, axes[0]], pts[:, axes[1]]) - params.radius)))
        worst_boundary = max(worst_boundary, planar, radial)
    entries.append(
        ReportEntry(
            check_id=f"lawson.cylinders.{params.label}.boundary_circles",
            params={"n": params.n, "m": params.m, "samples": boundary_samples},
            metric=worst_boundary,
            tolerance=1e-12,
        )
    )

    us = np.linspace(0.0, TWO_PI, 73)
    vs = np.linspace(0.0, TWO_PI, 73)
    gu, gv = np.meshgrid(us, vs, indexing="ij")
    # Geodesic distance on the radius-2 sphere between the two circles.
    first = np.stack([2.0 * np.cos(gu), 2.0 * np.sin(gu), np.zeros_like(gu), np.zeros_like(gu)], axis=-1)
    second = np.stack([np.zeros_like(gv), np.zeros_like(gv), 2.0 * np.cos(gv), 2.0 * np.sin(gv)], axis=-1)
    inner = np.sum(first * second, axis=-1)
    dists = 2.0 * np.arccos(np.clip(inner / 4.0, -1.0, 1.0))
    entries.append(
        ReportEntry(
            check_id=f"lawson.cylinders.{params.label}.circle_distance",
            params={"n": params.n, "m": params.m, "grid": [len(us), len(vs)]},
            metric=float(np.max(np.abs(dists - math.pi))),
            tolerance=1e-9,
        )
    )

    rng = np.random.default_rng(seed)
    worst_pair = 0.0
    worst_element = 0.0
    for _ in range(interior_samples):
        x = float(rng.uniform(-math.pi, math.pi))
        y = float(rng.uniform(0.02, HALF_PI - 0.02))
        shift = int(rng.integers(-2, 3))
        upper = correspondence_point(params, x, y)
        lower = correspondence_point(params, _wrap_pi(x + (2 * shift + 1) * HALF_PI), -y)
        worst_pair = max(
            worst_pair,
            float(np.max(np.abs(upper.point.vector - lower.point.vector))),
            float(np.max(np.abs(upper.vector + lower.vector))),
        )
        for element in (upper, lower):
            worst_element = max(
                worst_element,
                abs(float(np.linalg.norm(element.vector)) - 1.0),
                abs(float(np.dot(element.point.vector, element.vector))),
            )
    entries.append(
        ReportEntry(
            check_id=f"lawson.cylinders.{params.label}.sign_flip",
            params={"n": params.n, "m": params.m, "samples": interior_samples, "seed": seed},
            metric=worst_pair,
            tolerance=1e-12,
        )
    )
    entries.append(
        ReportEntry(
            check_id=f"lawson.cylinders.{params.label}.tangency",
            params={"n": params.n, "m": params.m, "samples": interior_samples, "seed": seed},
            metric=worst_element,
            tolerance=1e-12,
        )
    )
    return CylinderDecomposition(plus, minus, entries)
