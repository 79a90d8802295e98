"""Ground truth for the exact R2 indicator.

Closed-form optimal values for canonical fronts in normalized objective
space, deterministic point generators, and an adaptive quadrature oracle
that integrates the minimum Tchebycheff utility numerically. The oracle
evaluates the integrand by brute force and shares no algebra with the
closed-form sweep in :mod:`exact_r2.r2_exact`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from exact_r2.core import DomainError, EmptyInputError, as_points


class FrontShape(enum.Enum):
    IDEAL_POINT = "ideal"
    NADIR_POINT = "nadir"
    LINEAR = "linear"
    DTLZ1_LINEAR = "dtlz1-linear"
    CONVEX_QUADRATIC = "convex-quadratic"
    CONCAVE_CIRCULAR = "concave-circular"

    @property
    def is_point(self) -> bool:
        return self in (FrontShape.IDEAL_POINT, FrontShape.NADIR_POINT)

    @classmethod
    def parse(cls, name: str) -> "FrontShape":
        key = name.strip().lower().replace("_", "-")
        for shape in cls:
            if shape.value == key or shape.name.lower().replace("_", "-") == key:
                return shape
        raise DomainError(f"unknown front shape {name!r}")


_ANALYTIC = {
    FrontShape.IDEAL_POINT: 0.0,
    FrontShape.NADIR_POINT: 0.75,
    FrontShape.LINEAR: 1.0 / 6.0,
    FrontShape.DTLZ1_LINEAR: 1.0 / 12.0,
    FrontShape.CONVEX_QUADRATIC: (3.0 * math.pi - 8.0) / 16.0,
    FrontShape.CONCAVE_CIRCULAR: (3.0 * math.sqrt(2.0) * math.asinh(1.0) - 2.0) / 8.0,
}


def analytic_r2(shape: FrontShape) -> float:
    """Optimal exact R2 of ``shape`` with the utopian point at the origin."""
    return _ANALYTIC[FrontShape(shape)]


def _curve(shape: FrontShape, t: np.ndarray) -> np.ndarray:
    if shape is FrontShape.LINEAR:
        f2 = 1.0 - t
    elif shape is FrontShape.DTLZ1_LINEAR:
        return np.column_stack((0.5 * t, 0.5 * (1.0 - t)))
    elif shape is FrontShape.CONVEX_QUADRATIC:
        f2 = (1.0 - np.sqrt(t)) ** 2
    elif shape is FrontShape.CONCAVE_CIRCULAR:
        f2 = np.sqrt(1.0 - t * t)
    else:
        raise DomainError(f"{shape} is not a curve")
    return np.column_stack((t, f2))


def generate_front(shape: FrontShape, n: int, seed: int = 0) -> np.ndarray:
    """``n`` points on the Pareto front of ``shape`` as an ``(n, 2)`` array.

    ``seed == 0`` spaces the ``f1`` parameter evenly over ``[0, 1]``; any
    other seed draws it uniformly at random (not sorted).
    """
    shape = FrontShape(shape)
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if shape.is_point:
        if n != 1:
            raise DomainError(f"{shape.value} is a single point; n must be 1, got {n}")
        value = 0.0 if shape is FrontShape.IDEAL_POINT else 1.0
        return np.array([[value, value]])
    if seed == 0:
        t = np.linspace(0.0, 1.0, n)
    else:
        t = np.random.default_rng(seed).uniform(0.0, 1.0, n)
    return _curve(shape, t)


# Bi-sphere point source: squared distances to two anchors from points drawn
# uniformly in a box. Its Pareto front is the convex quadratic scaled by 2.
CLOUD_ANCHOR_A = (0.0, 0.0)
CLOUD_ANCHOR_B = (1.0, 1.0)
CLOUD_BOX = (-1.0, 2.0)


def generate_cloud(n: int, seed: int) -> np.ndarray:
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    x = rng.uniform(CLOUD_BOX[0], CLOUD_BOX[1], size=(n, 2))
    a = np.asarray(CLOUD_ANCHOR_A)
    b = np.asarray(CLOUD_ANCHOR_B)
    return np.column_stack((((x - a) ** 2).sum(axis=1), ((x - b) ** 2).sum(axis=1)))


_PROBE = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abserr: float
    converged: bool
    evaluations: int

    def __float__(self) -> float:
        return self.value


def _min_max_utility(f1: np.ndarray, f2: np.ndarray, w: np.ndarray) -> np.ndarray:
    out = np.empty(w.shape[0])
    step = max(1, (1 << 21) // f1.shape[0])
    for start in range(0, w.shape[0], step):
        wc = w[start:start + step, None]
        out[start:start + step] = np.maximum(wc * f1, (1.0 - wc) * f2).min(axis=1)
    return out


def quadrature_r2(
    points,
    tol: float = 1e-9,
    *,
    breakpoints=None,
    initial_panels: int = 64,
    max_evaluations: int = 10_000_000,
) -> QuadratureResult:
    """Integrate ``min_y max(w * y1, (1 - w) * y2)`` over ``w in [0, 1]``.

    Adaptive trapezoidal bisection: a panel is accepted once halving it
    changes its trapezoid estimate by at most ``tol`` times its width and the
    integrand at an interior golden-ratio probe stays within ``2 * tol`` of
    the chord, so the accepted error estimates sum to at most ``tol``. For a
    piecewise linear integrand with one kink per panel the midpoint
    difference bounds the error of the halved estimate.

    Extra ``breakpoints`` are added to the initial grid; if they include all
    kinks of the integrand every panel is linear and is accepted at once.

    If the evaluation budget runs out, the best estimate is returned with
    ``converged=False``.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    arr = as_points(points)
    if arr.shape[0] == 0:
        raise EmptyInputError("cannot integrate over an empty point set")
    if arr.min() < 0:
        raise DomainError("points must be utopian-shifted (nonnegative)")
    f1 = np.ascontiguousarray(arr[:, 0])
    f2 = np.ascontiguousarray(arr[:, 1])

    nodes = np.linspace(0.0, 1.0, int(initial_panels) + 1)
    if breakpoints is not None:
        extra = np.asarray(breakpoints, dtype=np.float64).ravel()
        nodes = np.unique(np.concatenate((nodes, extra[(extra >= 0) & (extra <= 1)])))
    values = _min_max_utility(f1, f2, nodes)
    evaluations = nodes.shape[0]

    a, b = nodes[:-1], nodes[1:]
    fa, fb = values[:-1], values[1:]
    accepted: list[float] = []
    errors: list[float] = []
    converged = True
    while a.shape[0]:
        h = b - a
        m = 0.5 * (a + b)
        g = a + _PROBE * h
        fm, fg = np.split(_min_max_utility(f1, f2, np.concatenate((m, g))), 2)
        evaluations += 2 * m.shape[0]
        coarse = 0.5 * h * (fa + fb)
        fine = 0.25 * h * (fa + 2.0 * fm + fb)
        err = np.abs(fine - coarse)
        # off-dyadic probe: evenly spaced kinks can cancel exactly at the midpoint
        probe = np.abs(fg - (fa + _PROBE * (fb - fa)))
        done = ((err <= tol * h) & (probe <= 2.0 * tol)) | (m <= a) | (m >= b)
        if evaluations >= max_evaluations:
            converged = False
            done[:] = True
        accepted.extend(fine[done].tolist())
        errors.extend(err[done].tolist())
        keep = ~done
        a, b, fa, fb, m, fm = a[keep], b[keep], fa[keep], fb[keep], m[keep], fm[keep]
        a, b = np.concatenate((a, m)), np.concatenate((m, b))
        fa, fb = np.concatenate((fa, fm)), np.concatenate((fm, fb))

    abserr = math.fsum(errors)
    if abserr > tol:
        converged = False
    return QuadratureResult(math.fsum(accepted), abserr, converged, evaluations)
