"""Exact R2 indicator for bi-objective fronts.

The indicator is the integral over ``w in [0, 1]`` of the smallest
Tchebycheff utility ``max(w * f1, (1 - w) * f2)`` attained by the front.
On a sorted front each point is the minimizer on one weight interval,
bounded by the weights through the staircase corners shared with its
neighbours. Inside that interval the utility switches from the ``f2`` term
to the ``f1`` term at the point's balance weight, so every piece integrates
in closed form and the whole indicator is a single linear pass.

With points sorted by ascending ``f1``, the first point (smallest ``f1``)
wins for weights near 1 and the last point for weights near 0: point ``n``
owns ``[s[n], s[n-1]]`` with ``s[-1] = 1`` and ``s[N-1] = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from exact_r2 import _backend
from exact_r2.core import (
    ORIGIN,
    DegenerateInputError,
    DomainError,
    EmptyInputError,
    ObjectiveVector,
    shift_points,
)
from exact_r2.pareto import Front, nondominated_filter


@dataclass(frozen=True)
class WeightInterval:
    """Range of ``w1`` on which one point determines the set utility."""

    w_low: float
    w_high: float

    def __post_init__(self):
        if not 0.0 <= self.w_low <= self.w_high <= 1.0:
            raise DomainError(f"invalid weight interval [{self.w_low}, {self.w_high}]")

    @property
    def width(self) -> float:
        return self.w_high - self.w_low


@dataclass(frozen=True)
class PointContribution:
    index: int
    point: ObjectiveVector
    interval: WeightInterval
    balance: float
    partial: float


def _shifted(y) -> ObjectiveVector:
    y = ObjectiveVector.of(y)
    if y.f1 < 0 or y.f2 < 0:
        raise DomainError(f"point {tuple(y)} is not utopian-shifted (negative coordinate)")
    return y


def balance_weight(y) -> float:
    """Weight ``w`` at which both utility terms of ``y`` coincide.

    Solves ``w * f1 == (1 - w) * f2``, giving ``f2 / (f1 + f2)``.

    Raises:
        DegenerateInputError: for the origin, where every weight balances.
    """
    y = _shifted(y)
    total = y.f1 + y.f2
    if total == 0:
        raise DegenerateInputError("balance weight is undefined at the utopian point")
    return y.f2 / total


def separating_weight(left, right) -> float:
    """Weight through the staircase corner ``(right.f1, left.f2)``.

    At this weight the two neighbouring points have equal utility.
    """
    left = _shifted(left)
    right = _shifted(right)
    denom = right.f1 + left.f2
    if denom == 0:
        raise DegenerateInputError("separating weight is undefined for a corner at the origin")
    return left.f2 / denom


def point_partial(y, w_low: float, w_high: float) -> float:
    """Integral of ``max(w * f1, (1 - w) * f2)`` over ``[w_low, w_high]``.

    Splits the integral at the balance weight of ``y``: below it the ``f2``
    term is active, above it the ``f1`` term.

    Raises:
        DomainError: if the balance weight of ``y`` falls outside the interval.
    """
    y = _shifted(y)
    interval = WeightInterval(float(w_low), float(w_high))
    bal = balance_weight(y)
    lo, hi = interval.w_low, interval.w_high
    if not lo <= bal <= hi:
        raise DomainError(
            f"balance weight {bal!r} of {tuple(y)} lies outside [{lo!r}, {hi!r}]; "
            "is the front sorted?"
        )
    return 0.5 * y.f2 * (bal - lo) * (2.0 - lo - bal) + 0.5 * y.f1 * (hi - bal) * (hi + bal)


def _check_front(front: Front) -> bool:
    """Validate a front for R2 and report whether it is the utopian singleton."""
    if not isinstance(front, Front):
        raise TypeError(f"expected a Front, got {type(front).__name__}; use nondominated_filter")
    if not front.is_shifted():
        raise DomainError("front contains negative coordinates; shift by the utopian point first")
    return len(front) == 1 and front.f1[0] == 0.0 and front.f2[0] == 0.0


def r2_exact(front: Front) -> float:
    """Exact R2 value of a sorted, utopian-shifted front (lower is better).

    >>> r2_exact(Front([(1.0, 1.0)]))
    0.75
    """
    if _check_front(front):
        return 0.0
    return float(_backend.kernels.r2_total(front.f1, front.f2))


def contribution_table(front: Front) -> list[PointContribution]:
    """Per-point weight interval, balance weight and additive share of R2."""
    if _check_front(front):
        return [PointContribution(0, ORIGIN, WeightInterval(0.0, 1.0), 0.0, 0.0)]
    lo, hi, bal, part = _backend.kernels.r2_partials(front.f1, front.f2)
    return [
        PointContribution(
            i, front[i], WeightInterval(float(lo[i]), float(hi[i])), float(bal[i]), float(part[i])
        )
        for i in range(len(front))
    ]


def exclusive_contribution(front: Front, index: int) -> float:
    """Increase of R2 when the point at ``index`` is removed from ``front``.

    Raises:
        EmptyInputError: for single-point fronts; R2 of the empty set is undefined.
    """
    _check_front(front)
    if len(front) == 1:
        raise EmptyInputError("exclusive contribution of the only point is undefined")
    return r2_exact(front.without(index)) - r2_exact(front)


def r2_exact_archive(archive, utopian=ORIGIN) -> float:
    """Shift a raw archive by ``utopian``, filter it and return its exact R2."""
    return r2_exact(nondominated_filter(shift_points(archive, utopian)))


def r2_single(y) -> float:
    """Exact R2 of the one-point set ``{y}`` from its closed form."""
    y = _shifted(y)
    if y.f1 == 0 and y.f2 == 0:
        return 0.0
    b = balance_weight(y)
    return 0.5 * y.f2 * (1.0 - (1.0 - b) ** 2) + 0.5 * y.f1 * (1.0 - b * b)


__all__ = [
    "PointContribution",
    "WeightInterval",
    "balance_weight",
    "contribution_table",
    "exclusive_contribution",
    "point_partial",
    "r2_exact",
    "r2_exact_archive",
    "r2_single",
    "separating_weight",
]
