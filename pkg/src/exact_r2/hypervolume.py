"""Dominated hypervolume of a bi-objective front."""

from __future__ import annotations

from exact_r2 import _backend
from exact_r2.core import ObjectiveVector
from exact_r2.pareto import Front


def hv2d(front: Front, ref) -> float:
    """Area dominated by ``front`` and bounded by the reference point ``ref``.

    Only points strictly better than ``ref`` in both objectives contribute;
    the sweep adds one rectangle per such point, from its ``f2`` up to the
    previous point's ``f2`` (or ``ref`` for the first one).
    """
    if not isinstance(front, Front):
        raise TypeError(f"expected a Front, got {type(front).__name__}")
    r = ObjectiveVector.of(ref)
    return float(_backend.kernels.hv_total(front.f1, front.f2, r.f1, r.f2))
