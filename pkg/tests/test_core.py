import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from exact_r2 import DomainError, ObjectiveVector, WeightVector, shift_points, shift_to_utopian

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
nonneg = st.floats(min_value=0, max_value=1e6, allow_nan=False)


@pytest.mark.parametrize(
    "y, ystar, expected",
    [((3, 4), (1, 1), (2, 3)), ((0, 0), (0, 0), (0, 0))],
)
def test_shift_examples(y, ystar, expected):
    assert shift_to_utopian(y, ystar) == expected


def test_shift_below_utopian_raises():
    with pytest.raises(DomainError):
        shift_to_utopian((1, 1), (2, 0))


def test_shift_default_is_origin():
    assert shift_to_utopian((2.5, 7)) == (2.5, 7.0)


@pytest.mark.parametrize("bad", [(math.nan, 1), (1, math.inf), (-math.inf, 0)])
def test_non_finite_rejected(bad):
    with pytest.raises(DomainError):
        ObjectiveVector.of(bad)


@given(nonneg, nonneg)
def test_shift_by_origin_is_identity(a, b):
    assert shift_to_utopian((a, b), (0, 0)) == (a, b)


@given(finite, finite, finite, finite)
def test_shift_translation_consistent(a, b, s1, s2):
    ystar = (min(a, s1), min(b, s2))
    once = shift_to_utopian((a, b), ystar)
    assert shift_to_utopian(once, (0, 0)) == once


def test_shift_points_vectorized():
    out = shift_points([(3, 4), (1, 1)], (1, 1))
    np.testing.assert_array_equal(out, [[2, 3], [0, 0]])
    with pytest.raises(DomainError):
        shift_points([(3, 4), (0.5, 2)], (1, 1))


def test_weight_vector():
    assert WeightVector.of(0.25).w2 == 0.75
    with pytest.raises(DomainError):
        WeightVector.of(1.5)
