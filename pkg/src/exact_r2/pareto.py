"""Dominance relations and sorted nondominated fronts."""

from __future__ import annotations

import enum
from typing import Iterator

import numpy as np

from exact_r2 import _backend
from exact_r2.core import DomainError, EmptyInputError, ObjectiveVector, as_points


class Dominance(enum.Enum):
    """Relation of the first argument of :func:`dominates` to the second."""

    STRICTLY_DOMINATES = "strictly-dominates"
    WEAKLY_DOMINATES = "weakly-dominates"
    EQUAL = "equal"
    IS_DOMINATED = "is-dominated"
    INCOMPARABLE = "incomparable"

    @property
    def dominates(self) -> bool:
        return self in (Dominance.STRICTLY_DOMINATES, Dominance.WEAKLY_DOMINATES)


def dominates(a, b) -> Dominance:
    """Classify the dominance relation between two objective vectors.

    ``STRICTLY_DOMINATES`` means ``a`` is better in both objectives,
    ``WEAKLY_DOMINATES`` that it is no worse in both and better in one.
    ``IS_DOMINATED`` covers both cases with the roles swapped.

    >>> dominates((1, 2), (1, 3))
    <Dominance.WEAKLY_DOMINATES: 'weakly-dominates'>
    """
    a = ObjectiveVector.of(a)
    b = ObjectiveVector.of(b)
    if a == b:
        return Dominance.EQUAL
    if a.f1 <= b.f1 and a.f2 <= b.f2:
        if a.f1 < b.f1 and a.f2 < b.f2:
            return Dominance.STRICTLY_DOMINATES
        return Dominance.WEAKLY_DOMINATES
    if b.f1 <= a.f1 and b.f2 <= a.f2:
        return Dominance.IS_DOMINATED
    return Dominance.INCOMPARABLE


class Front:
    """Mutually nondominated points sorted by strictly ascending ``f1``.

    Consequently ``f2`` is strictly descending. The coordinate arrays are
    read-only. Indicator functions additionally require nonnegative
    coordinates, i.e. points already shifted by the utopian point.
    """

    __slots__ = ("_f1", "_f2")

    def __init__(self, points, *, validate: bool = True):
        arr = as_points(points)
        if arr.shape[0] == 0:
            raise EmptyInputError("a front needs at least one point")
        self._f1 = np.ascontiguousarray(arr[:, 0])
        self._f2 = np.ascontiguousarray(arr[:, 1])
        self._f1.flags.writeable = False
        self._f2.flags.writeable = False
        if validate:
            if not (np.all(np.diff(self._f1) > 0) and np.all(np.diff(self._f2) < 0)):
                raise DomainError(
                    "front points must have strictly ascending f1 and strictly descending f2"
                )

    @classmethod
    def _from_arrays(cls, f1: np.ndarray, f2: np.ndarray) -> "Front":
        obj = cls.__new__(cls)
        obj._f1 = np.ascontiguousarray(f1, dtype=np.float64)
        obj._f2 = np.ascontiguousarray(f2, dtype=np.float64)
        obj._f1.flags.writeable = False
        obj._f2.flags.writeable = False
        return obj

    @property
    def f1(self) -> np.ndarray:
        return self._f1

    @property
    def f2(self) -> np.ndarray:
        return self._f2

    @property
    def points(self) -> list[ObjectiveVector]:
        return [ObjectiveVector(a, b) for a, b in zip(self._f1.tolist(), self._f2.tolist())]

    def as_array(self) -> np.ndarray:
        return np.column_stack((self._f1, self._f2))

    def is_shifted(self) -> bool:
        """True if every coordinate is nonnegative."""
        return bool(self._f1[0] >= 0.0 and self._f2[-1] >= 0.0)

    def without(self, index: int) -> "Front":
        """The front with the point at ``index`` removed."""
        n = len(self)
        if not -n <= index < n:
            raise IndexError(f"front index {index} out of range for size {n}")
        if n == 1:
            raise EmptyInputError("removing the only point leaves an empty front")
        keep = np.ones(n, dtype=bool)
        keep[index] = False
        return Front._from_arrays(self._f1[keep], self._f2[keep])

    def scaled(self, c: float) -> "Front":
        if not c > 0:
            raise DomainError(f"scale factor must be positive, got {c}")
        return Front._from_arrays(self._f1 * c, self._f2 * c)

    def swapped(self) -> "Front":
        """Mirror image with the two objectives exchanged."""
        return Front._from_arrays(self._f2[::-1], self._f1[::-1])

    def __len__(self) -> int:
        return self._f1.shape[0]

    def __getitem__(self, index: int) -> ObjectiveVector:
        return ObjectiveVector(float(self._f1[index]), float(self._f2[index]))

    def __iter__(self) -> Iterator[ObjectiveVector]:
        return iter(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Front):
            return NotImplemented
        return np.array_equal(self._f1, other._f1) and np.array_equal(self._f2, other._f2)

    def __hash__(self) -> int:
        return hash((self._f1.tobytes(), self._f2.tobytes()))

    def __repr__(self) -> str:
        if len(self) <= 6:
            return f"Front({[tuple(p) for p in self.points]})"
        return f"Front(<{len(self)} points>)"


_PIVOT_MIN_SIZE = 1024
_PIVOT_WEIGHTS = np.linspace(0.05, 0.95, 15)


def _pivot_prefilter(arr: np.ndarray) -> np.ndarray:
    """Drop everything weakly dominated by a few known nondominated points.

    Pivots minimize positively weighted sums of the objectives. Every removed
    point is weakly dominated by a pivot and the pivots are kept, so the
    front is unchanged whatever pivots are picked. Linear time; on typical
    archives it removes most points before sorting.
    """
    arr = np.ascontiguousarray(arr)
    pivots = np.unique(_backend.kernels.pivot_points(arr, _PIVOT_WEIGHTS), axis=0)
    keep = _backend.kernels.pivot_mask(arr, pivots)
    return np.concatenate((arr[keep], pivots))


def nondominated_filter(archive) -> Front:
    """Build the sorted nondominated front of an archive.

    Sorts by ``f1`` (ties by ``f2``) and sweeps once, dropping any point
    that is dominated by or equal to an earlier one. ``O(N log N)``.

    Raises:
        EmptyInputError: if the archive is empty.
    """
    arr = archive.as_array() if isinstance(archive, Front) else as_points(archive)
    if arr.shape[0] == 0:
        raise EmptyInputError("cannot filter an empty archive")
    if arr.shape[0] > _PIVOT_MIN_SIZE:
        arr = _pivot_prefilter(arr)
    order = np.argsort(arr[:, 0])
    f1 = arr[order, 0]
    if np.any(f1[1:] == f1[:-1]):
        # tied f1 values need ascending f2 within the tie for the sweep
        order = np.lexsort((arr[:, 1], arr[:, 0]))
        f1 = arr[order, 0]
    f2 = arr[order, 1]
    keep = _backend.kernels.nondominated_mask_sorted(f1, f2)
    return Front._from_arrays(f1[keep], f2[keep])


def dominated_by_front(front: Front, y) -> bool:
    """True if some point of ``front`` weakly dominates or equals ``y``."""
    y = ObjectiveVector.of(y)
    # the candidate is the last point with f1 <= y.f1, which has the smallest f2 among those
    idx = int(np.searchsorted(front.f1, y.f1, side="right")) - 1
    return idx >= 0 and front.f2[idx] <= y.f2
