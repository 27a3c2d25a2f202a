"""Unit vector fields with linear winding angle on the twice-punctured
2-sphere: geodesic curvatures, the area (volume) functional, and the
elliptic-perimeter lower bound.

The index-k field makes the angle ``(k-1) t + pi/2`` with the parallel
direction at longitude t; it winds k-1 times per parallel, has index k
at the north pole and 2-k at the south pole, and its area equals pi times
the perimeter of the ellipse with semi-axes |k| and |k-2|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import QuadratureSpec, integrate_1d, mapped_rule, ordered_sum
from .report import ReportEntry
from .spheres import NORTH, SOUTH, SpherePoint2, frame_e1_e2, latlon_to_point
from .unit_tangent import TangentElement, poincare_index

HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CurvaturePair:
    """Geodesic curvatures of the field's integral curves and of their
    orthogonal rotation."""

    gamma: float
    delta: float


@dataclass(frozen=True)
class TrigTerm:
    """One separable trigonometric bump c sin(a t + phi) cos(b alpha + psi).

    Integer ``t_freq`` keeps the perturbation periodic in longitude, which
    preserves the pole indices of the perturbed field.
    """

    amplitude: float
    t_freq: int
    alpha_freq: int
    t_phase: float
    alpha_phase: float

    def __post_init__(self) -> None:
        if self.t_freq < 1:
            raise ValueError("longitude frequency must be a positive integer")
        if self.alpha_freq < 0:
            raise ValueError("latitude frequency must be a non-negative integer")


@dataclass(frozen=True)
class AngleField:
    """Unit field defined by an angle function in the parallel/meridian frame.

    With no perturbation terms the angle is exactly (k-1) t + pi/2.
    """

    k: int
    terms: tuple[TrigTerm, ...] = ()

    def angle(self, latitude, longitude):
        theta = (self.k - 1.0) * np.asarray(longitude, dtype=float) + HALF_PI
        alpha = np.asarray(latitude, dtype=float)
        for term in self.terms:
            theta = theta + term.amplitude * np.sin(
                term.t_freq * np.asarray(longitude, dtype=float) + term.t_phase
            ) * np.cos(term.alpha_freq * alpha + term.alpha_phase)
        return theta

    def d_longitude(self, latitude, longitude):
        out = np.full(np.broadcast(latitude, longitude).shape, self.k - 1.0)
        for term in self.terms:
            out = out + term.amplitude * term.t_freq * np.cos(
                term.t_freq * np.asarray(longitude, dtype=float) + term.t_phase
            ) * np.cos(term.alpha_freq * np.asarray(latitude, dtype=float) + term.alpha_phase)
        return out

    def d_latitude(self, latitude, longitude):
        out = np.zeros(np.broadcast(latitude, longitude).shape)
        for term in self.terms:
            out = out - term.amplitude * term.alpha_freq * np.sin(
                term.t_freq * np.asarray(longitude, dtype=float) + term.t_phase
            ) * np.sin(term.alpha_freq * np.asarray(latitude, dtype=float) + term.alpha_phase)
        return out

    def at(self, p: SpherePoint2) -> TangentElement:
        e1, e2 = frame_e1_e2(p)
        theta = float(self.angle(p.latitude, p.longitude))
        return TangentElement(p, math.cos(theta) * e1 + math.sin(theta) * e2)


def angle_value(k: int, longitude: float) -> float:
    """Winding angle (k-1) t + pi/2, not reduced mod 2 pi."""
    return (k - 1.0) * longitude + HALF_PI


def field_at(k: int, p: SpherePoint2) -> TangentElement:
    """The index-k unit field at a non-pole point."""
    return AngleField(k).at(p)


def frame_derivatives(k: int, p: SpherePoint2) -> tuple[float, float]:
    """Angle derivatives along the frame: ((k-1)/cos(alpha), 0)."""
    ca = math.cos(p.latitude)
    if ca < 1e-9:
        raise ValueError("angle derivatives undefined at the chart poles")
    return (k - 1.0) / ca, 0.0


def geodesic_curvatures(k: int, p: SpherePoint2) -> CurvaturePair:
    """Geodesic curvature pair (gamma, delta) of the index-k field at p."""
    d1, d2 = frame_derivatives(k, p)
    theta = angle_value(k, p.longitude)
    slope = math.tan(p.latitude) + d1
    gamma = math.cos(theta) * slope + math.sin(theta) * d2
    delta = math.sin(theta) * slope - math.cos(theta) * d2
    return CurvaturePair(gamma, delta)


def ellipse_length(k: int, spec: QuadratureSpec | None = None) -> float:
    """Perimeter of the ellipse x^2/k^2 + y^2/(k-2)^2 = 1.

    Evaluates 4 * integral over [0, pi/2] of sqrt((k-2)^2 + 4(k-1) sin^2 t).
    """
    kk = float(k)

    def integrand(t: float) -> float:
        return math.sqrt((kk - 2.0) ** 2 + 4.0 * (kk - 1.0) * math.sin(t) ** 2)

    return 4.0 * integrate_1d(integrand, 0.0, HALF_PI, spec)


def _angle_of(element: TangentElement) -> float:
    e1, e2 = frame_e1_e2(element.point)
    return math.atan2(float(np.dot(element.vector, e2)), float(np.dot(element.vector, e1)))


def _wrap(angle: float) -> float:
    return (angle + math.pi) % TWO_PI - math.pi


def _callable_partials(field, latitude: float, longitude: float, h: float = 1e-6):
    # Wrapped differences keep the angle branch consistent across the stencil.
    def theta(a: float, t: float) -> float:
        return _angle_of(field(latlon_to_point(a, t)))

    base = theta(latitude, longitude)
    dt = _wrap(theta(latitude, longitude + h) - base) - _wrap(theta(latitude, longitude - h) - base)
    da = _wrap(theta(latitude + h, longitude) - base) - _wrap(theta(latitude - h, longitude) - base)
    return dt / (2.0 * h), da / (2.0 * h)


def volume_of_field(field, spec: QuadratureSpec | None = None) -> float:
    """Area of the section cut by a unit field inside the unit tangent bundle.

    For an unperturbed ``AngleField`` the longitude integral is carried out
    analytically and the remaining latitude integrand
    ``2 pi sqrt(1 + (k-1)^2 + 2 (k-1) sin(alpha))`` is integrated; the
    cos(alpha) area factor has already cancelled the 1/cos(alpha) of the
    angle derivative, so the reduced integrand is bounded on the open
    interval.  Perturbed angle fields and generic callables go through the
    full 2-d quadrature of

        sqrt(cos^2 a + (sin a + theta_t)^2 + theta_a^2 cos^2 a)

    over latitude x longitude, which is the chart form of the integrand
    sqrt(1 + gamma^2 + delta^2) times the area element.
    """
    spec = spec or QuadratureSpec()

    if isinstance(field, AngleField) and not field.terms:
        kk = float(field.k)

        def reduced(alpha: float) -> float:
            return math.sqrt(1.0 + (kk - 1.0) ** 2 + 2.0 * (kk - 1.0) * math.sin(alpha))

        return TWO_PI * integrate_1d(reduced, -HALF_PI, HALF_PI, spec)

    alphas, w_alpha = mapped_rule(-HALF_PI, HALF_PI, spec.nodes)
    ts, w_t = mapped_rule(0.0, TWO_PI, spec.nodes_y)

    if isinstance(field, AngleField):
        ga, gt = np.meshgrid(alphas, ts, indexing="ij")
        theta_t = field.d_longitude(ga, gt)
        theta_a = field.d_latitude(ga, gt)
        cos_a = np.cos(ga)
        sin_a = np.sin(ga)
        vals = np.sqrt(cos_a**2 + (sin_a + theta_t) ** 2 + theta_a**2 * cos_a**2)
    else:
        vals = np.empty((alphas.size, ts.size))
        for i, a in enumerate(alphas):
            for j, t in enumerate(ts):
                theta_t, theta_a = _callable_partials(field, float(a), float(t))
                vals[i, j] = math.sqrt(
                    math.cos(a) ** 2
                    + (math.sin(a) + theta_t) ** 2
                    + theta_a**2 * math.cos(a) ** 2
                )
    if not np.isfinite(vals).all():
        i, j = np.argwhere(~np.isfinite(vals))[0]
        raise ValueError(f"non-finite area integrand at node ({i}, {j})")
    return ordered_sum(np.outer(w_alpha, w_t) * vals)


def random_perturbation(rng: np.random.Generator, amplitude: float, max_terms: int = 3) -> tuple[TrigTerm, ...]:
    """Draw a trigonometric perturbation rescaled to the given sup norm.

    All terms carry a positive longitude frequency, so the perturbation is
    never constant and the perturbed field genuinely differs from the
    unperturbed one.
    """
    count = int(rng.integers(1, max_terms + 1))
    raw = []
    for _ in range(count):
        raw.append(
            TrigTerm(
                amplitude=float(rng.uniform(0.4, 1.0)),
                t_freq=int(rng.integers(1, 5)),
                alpha_freq=int(rng.integers(0, 4)),
                t_phase=float(rng.uniform(0.0, TWO_PI)),
                alpha_phase=float(rng.uniform(0.0, TWO_PI)),
            )
        )
    grid_a = np.linspace(-HALF_PI, HALF_PI, 181)
    grid_t = np.linspace(0.0, TWO_PI, 360, endpoint=False)
    ga, gt = np.meshgrid(grid_a, grid_t, indexing="ij")
    total = np.zeros_like(ga)
    for term in raw:
        total += term.amplitude * np.sin(term.t_freq * gt + term.t_phase) * np.cos(
            term.alpha_freq * ga + term.alpha_phase
        )
    sup = float(np.max(np.abs(total)))
    if sup < 1e-9:
        # Degenerate draw; a single plain wave keeps the scale well defined.
        return (TrigTerm(amplitude, 1, 0, 0.0, HALF_PI),)
    scale = amplitude / sup
    return tuple(
        TrigTerm(t.amplitude * scale, t.t_freq, t.alpha_freq, t.t_phase, t.alpha_phase)
        for t in raw
    )


def bound_check(
    field: AngleField,
    k: int,
    spec: QuadratureSpec | None = None,
    tolerance: float = 1e-9,
) -> ReportEntry:
    """Compare the field's area against pi times the ellipse perimeter.

    The bound applies to index classes k outside {0, 2}; the field's pole
    indices are measured first and a mismatch flags the entry inapplicable.
    The entry passes when bound - volume <= tolerance.
    """
    if k in (0, 2):
        raise ValueError("the lower bound excludes index classes 0 and 2")
    measured_n = poincare_index(field.at, NORTH)
    measured_s = poincare_index(field.at, SOUTH)
    params: dict = {"k": k, "index_north": measured_n, "index_south": measured_s}
    if measured_n != k or measured_s != 2 - k:
        params["status"] = "inapplicable"
        # Metric records the index defect, which is at least 1 here.
        return ReportEntry(
            check_id=f"vfields.lower_bound.k{k}",
            params=params,
            metric=float(abs(measured_n - k) + abs(measured_s - (2 - k))),
            tolerance=tolerance,
        )
    volume = volume_of_field(field, spec)
    bound = math.pi * ellipse_length(k, spec)
    params["volume"] = volume
    params["bound"] = bound
    return ReportEntry(
        check_id=f"vfields.lower_bound.k{k}",
        params=params,
        metric=bound - volume,
        tolerance=tolerance,
    )
