"""Objective-space value types, utopian shifting and error classes.

All indicator modules work in a bi-objective minimization setting where the
utopian (ideal) point has been moved to the origin.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np


class ExactR2Error(Exception):
    """Base class for errors raised by this package."""


class DomainError(ExactR2Error, ValueError):
    """An input lies outside the domain an operation is defined on."""


class DegenerateInputError(ExactR2Error, ValueError):
    """An input reduces to a case where the requested quantity is undefined."""


class EmptyInputError(ExactR2Error, ValueError):
    """An operation that needs at least one point received none."""


class ObjectiveVector(NamedTuple):
    """A point ``(f1, f2)`` in bi-objective space (minimization)."""

    f1: float
    f2: float

    @classmethod
    def of(cls, value) -> "ObjectiveVector":
        f1, f2 = (float(v) for v in value)
        if not (math.isfinite(f1) and math.isfinite(f2)):
            raise DomainError(f"objective vector must be finite, got ({f1}, {f2})")
        return cls(f1, f2)


class WeightVector(NamedTuple):
    """Convex weight pair parameterized by the weight on the first objective."""

    w1: float

    @property
    def w2(self) -> float:
        return 1.0 - self.w1

    @classmethod
    def of(cls, w1: float) -> "WeightVector":
        w1 = float(w1)
        if not 0.0 <= w1 <= 1.0:
            raise DomainError(f"weight w1 must lie in [0, 1], got {w1}")
        return cls(w1)


ORIGIN = ObjectiveVector(0.0, 0.0)


def as_points(points) -> np.ndarray:
    """Coerce a sequence of 2-vectors to a float64 array of shape ``(n, 2)``."""
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim == 1 and arr.shape[0] == 2:
        arr = arr.reshape(1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DomainError(f"expected points of shape (n, 2), got {arr.shape}")
    if not np.isfinite(arr).all():
        raise DomainError("objective values must be finite")
    return arr


def shift_to_utopian(y, ystar=ORIGIN) -> ObjectiveVector:
    """Translate ``y`` so that the utopian point ``ystar`` becomes the origin.

    Raises:
        DomainError: if ``y`` lies strictly below ``ystar`` in either objective.
    """
    y = ObjectiveVector.of(y)
    ystar = ObjectiveVector.of(ystar)
    if y.f1 < ystar.f1 or y.f2 < ystar.f2:
        raise DomainError(f"point {tuple(y)} lies below the utopian point {tuple(ystar)}")
    return ObjectiveVector(y.f1 - ystar.f1, y.f2 - ystar.f2)


def shift_points(points, ystar=ORIGIN) -> np.ndarray:
    """Vectorized :func:`shift_to_utopian` over an ``(n, 2)`` array."""
    arr = as_points(points)
    ystar = ObjectiveVector.of(ystar)
    if arr.shape[0] and (arr[:, 0].min() < ystar.f1 or arr[:, 1].min() < ystar.f2):
        raise DomainError(f"archive contains points below the utopian point {tuple(ystar)}")
    if ystar == ORIGIN:
        return arr.copy()
    return arr - np.array(ystar)
