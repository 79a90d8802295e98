"""Discretized R2 indicator over a finite set of Tchebycheff weights.

This is the classical approximation: the mean, over a weight grid, of the
smallest utility any point attains. It only scans the points it is given,
so dominated points are allowed and simply never win the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from exact_r2 import _backend
from exact_r2.core import DomainError, EmptyInputError, ObjectiveVector, WeightVector, as_points


@dataclass(frozen=True)
class WeightSet:
    """Strictly increasing ``w1`` values in ``[0, 1]``."""

    w1: np.ndarray

    def __post_init__(self):
        w = np.ascontiguousarray(self.w1, dtype=np.float64)
        if w.ndim != 1 or w.shape[0] == 0:
            raise DomainError("a weight set needs at least one weight")
        if w[0] < 0 or w[-1] > 1 or np.any(np.diff(w) <= 0):
            raise DomainError("weights must be strictly increasing within [0, 1]")
        w.flags.writeable = False
        object.__setattr__(self, "w1", w)

    @property
    def weights(self) -> list[WeightVector]:
        return [WeightVector(float(w)) for w in self.w1]

    def __len__(self) -> int:
        return self.w1.shape[0]


def uniform_weights(n: int) -> WeightSet:
    """``n`` evenly spaced weights ``w1 = k / (n - 1)`` for ``k = 0..n-1``."""
    n = int(n)
    if n < 2:
        raise DomainError(f"a uniform weight set needs n >= 2, got {n}")
    return WeightSet(np.arange(n, dtype=np.float64) / (n - 1))


def tchebycheff_utility(w, y) -> float:
    """``max(w1 * f1, (1 - w1) * f2)`` for a shifted point ``y``."""
    w1 = w.w1 if isinstance(w, WeightVector) else WeightVector.of(w).w1
    y = ObjectiveVector.of(y)
    return max(w1 * y.f1, (1.0 - w1) * y.f2)


def r2_discrete(points, weights: WeightSet | int) -> float:
    """Average over ``weights`` of the minimum utility among ``points``.

    ``weights`` may be an integer, meaning :func:`uniform_weights` of that size.

    Raises:
        EmptyInputError: if ``points`` is empty.
    """
    if not isinstance(weights, WeightSet):
        weights = uniform_weights(weights)
    if hasattr(points, "as_array"):
        points = points.as_array()
    arr = as_points(points)
    if arr.shape[0] == 0:
        raise EmptyInputError("R2 of an empty point set is undefined")
    if arr.min() < 0:
        raise DomainError("points must be utopian-shifted (nonnegative)")
    f1 = np.ascontiguousarray(arr[:, 0])
    f2 = np.ascontiguousarray(arr[:, 1])
    return float(_backend.kernels.mean_min_utility(f1, f2, weights.w1))
