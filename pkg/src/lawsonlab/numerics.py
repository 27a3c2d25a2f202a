"""Deterministic quadrature, finite differences and angle-sequence fitting.

Every routine here is a pure function of its arguments, and every reduction
runs in a fixed left-to-right order, so repeated runs with the same inputs
produce bit-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

TWO_PI = 2.0 * math.pi

DEFAULT_NODES_1D = 256
DEFAULT_NODES_2D = (256, 128)


@dataclass(frozen=True)
class QuadratureSpec:
    """Gauss-Legendre rule sizes.

    Nodes are strictly interior (open rule), so integrands may be singular
    at the interval endpoints.  ``nodes`` is used along the first axis,
    ``nodes_y`` along the second axis of tensor-product rules.
    """

    nodes: int = DEFAULT_NODES_1D
    nodes_y: int = DEFAULT_NODES_2D[1]

    def __post_init__(self) -> None:
        if self.nodes < 2 or self.nodes_y < 2:
            raise ValueError("quadrature rule needs at least 2 nodes per axis")


@dataclass(frozen=True)
class FiniteDiffSpec:
    """Central-difference step and stencil order.

    The step should scale with the geometric radius of the object being
    differentiated; the defaults suit unit-to-radius-2 geometry.
    """

    h: float = 1e-5
    order: int = 2

    def __post_init__(self) -> None:
        if not (self.h > 0.0):
            raise ValueError("finite-difference step must be positive")
        if self.order not in (2, 4):
            raise ValueError("only order-2 and order-4 central stencils are supported")


def ordered_sum(values: np.ndarray | Sequence[float]) -> float:
    """Left-to-right accumulation; the fixed order keeps reports reproducible."""
    total = 0.0
    for v in np.asarray(values, dtype=float).ravel():
        total += v
    return total


@lru_cache(maxsize=None)
def _leggauss(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def mapped_rule(a: float, b: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped from [-1, 1] to [a, b]."""
    x, w = _leggauss(nodes)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def integrate_1d(
    f: Callable[[float], float],
    a: float,
    b: float,
    spec: QuadratureSpec | None = None,
) -> float:
    """Gauss-Legendre estimate of the integral of ``f`` over [a, b].

    Parameters
    ----------
    f : callable
        Scalar integrand, evaluated at interior nodes only.
    a, b : float
        Interval endpoints.
    spec : QuadratureSpec, optional
        Rule size; defaults to 256 nodes.

    Raises
    ------
    ValueError
        If the integrand returns a non-finite value at some node.
    """
    spec = spec or QuadratureSpec()
    xs, ws = mapped_rule(a, b, spec.nodes)
    vals = np.empty_like(xs)
    for i, x in enumerate(xs):
        y = float(f(float(x)))
        if not math.isfinite(y):
            raise ValueError(f"integrand returned a non-finite value at node {i} (x={x!r})")
        vals[i] = y
    return ordered_sum(ws * vals)


def integrate_2d(
    f: Callable[[float, float], float],
    rect: tuple[tuple[float, float], tuple[float, float]],
    spec: QuadratureSpec | None = None,
    vectorized: bool = False,
) -> float:
    """Tensor-product Gauss-Legendre estimate over a rectangle [a,b] x [c,d].

    With ``vectorized=True`` the integrand is called once with meshgrid
    arrays (``indexing='ij'``) instead of per node pair.
    """
    spec = spec or QuadratureSpec()
    (a, b), (c, d) = rect
    xs, wx = mapped_rule(a, b, spec.nodes)
    ys, wy = mapped_rule(c, d, spec.nodes_y)
    if vectorized:
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        vals = np.asarray(f(gx, gy), dtype=float)
        if vals.shape != gx.shape:
            raise ValueError(f"vectorized integrand returned shape {vals.shape}, expected {gx.shape}")
        if not np.isfinite(vals).all():
            i, j = np.argwhere(~np.isfinite(vals))[0]
            raise ValueError(
                f"integrand returned a non-finite value at node ({i}, {j}) "
                f"(x={xs[i]!r}, y={ys[j]!r})"
            )
    else:
        vals = np.empty((xs.size, ys.size))
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                v = float(f(float(x), float(y)))
                if not math.isfinite(v):
                    raise ValueError(
                        f"integrand returned a non-finite value at node ({i}, {j}) "
                        f"(x={x!r}, y={y!r})"
                    )
                vals[i, j] = v
    return ordered_sum(np.outer(wx, wy) * vals)


def jacobian_fd(
    F: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray | Sequence[float],
    spec: FiniteDiffSpec | None = None,
) -> np.ndarray:
    """Central-difference Jacobian of a vector-valued map at ``x``.

    The output of ``F`` is flattened in C order; the result has shape
    (F(x).size, x.size).
    """
    spec = spec or FiniteDiffSpec()
    x = np.asarray(x, dtype=float)
    h = spec.h

    def sample(point: np.ndarray) -> np.ndarray:
        return np.asarray(F(point), dtype=float).ravel()

    m = sample(x).size
    jac = np.empty((m, x.size))
    for j in range(x.size):
        step = np.zeros_like(x)
        step[j] = h
        if spec.order == 2:
            col = (sample(x + step) - sample(x - step)) / (2.0 * h)
        else:
            col = (
                -sample(x + 2.0 * step)
                + 8.0 * sample(x + step)
                - 8.0 * sample(x - step)
                + sample(x - 2.0 * step)
            ) / (12.0 * h)
        if not np.isfinite(col).all():
            raise ValueError(f"map returned non-finite entries while differencing coordinate {j}")
        jac[:, j] = col
    return jac


def unwrap_angles(angles: np.ndarray | Sequence[float]) -> np.ndarray:
    """Remove 2-pi jumps so the sequence becomes continuous.

    Raises ValueError("undersampled ...") when a consecutive gap is not
    resolvable, i.e. its wrapped value reaches pi in magnitude.
    """
    out = np.array(angles, dtype=float)
    if out.ndim != 1:
        raise ValueError("expected a 1-d sequence of angles")
    for i in range(1, out.size):
        delta = out[i] - out[i - 1]
        wrapped = delta - TWO_PI * round(delta / TWO_PI)
        if abs(wrapped) >= math.pi * (1.0 - 1e-12):
            raise ValueError(f"undersampled angle sequence: gap of {wrapped!r} at index {i}")
        out[i] = out[i - 1] + wrapped
    return out


def unwrap_and_fit(
    angles: np.ndarray | Sequence[float],
    xs: np.ndarray | Sequence[float],
) -> tuple[float, float, float]:
    """Unwrap an angle sequence, then least-squares fit a line against ``xs``.

    Returns (slope, intercept, residual) with residual = max |fit - data|.
    """
    xs = np.asarray(xs, dtype=float)
    unwrapped = unwrap_angles(angles)
    if xs.size != unwrapped.size:
        raise ValueError("angles and sample parameters have different lengths")
    if xs.size < 2:
        raise ValueError("need at least two samples to fit a line")
    slope, intercept = np.polyfit(xs, unwrapped, 1)
    residual = float(np.max(np.abs(slope * xs + intercept - unwrapped)))
    return float(slope), float(intercept), residual
