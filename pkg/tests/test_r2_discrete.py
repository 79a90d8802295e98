import numpy as np
import pytest

from exact_r2 import (
    DomainError,
    EmptyInputError,
    Front,
    WeightSet,
    nondominated_filter,
    r2_discrete,
    r2_exact,
    tchebycheff_utility,
    uniform_weights,
)
from exact_r2.core import WeightVector
from oracles import random_front


@pytest.mark.parametrize(
    "n, expected",
    [(3, [0, 0.5, 1]), (2, [0, 1]), (5, [0, 0.25, 0.5, 0.75, 1])],
)
def test_uniform_weights(n, expected):
    ws = uniform_weights(n)
    assert ws.w1.tolist() == expected
    assert len(ws) == n
    assert ws.weights[0] == WeightVector(0.0)


@pytest.mark.parametrize("n", [1, 0, -3])
def test_uniform_weights_rejects_small_n(n):
    with pytest.raises(DomainError):
        uniform_weights(n)


def test_weight_set_validation():
    with pytest.raises(DomainError):
        WeightSet(np.array([0.2, 0.1]))
    with pytest.raises(DomainError):
        WeightSet(np.array([0.0, 1.5]))


@pytest.mark.parametrize(
    "w, y, expected",
    [(0.5, (1, 3), 1.5), (1.0, (2, 9), 2.0), (0.75, (1, 3), 0.75)],
)
def test_tchebycheff_utility(w, y, expected):
    assert tchebycheff_utility(w, y) == expected


def test_r2_discrete_examples(backend):
    assert r2_discrete([(1, 1)], uniform_weights(3)) == pytest.approx(2.5 / 3, abs=1e-15)
    assert r2_discrete([(1, 3), (3, 1)], uniform_weights(2)) == 1.0
    assert r2_discrete([(0, 0)], uniform_weights(17)) == 0.0
    with pytest.raises(EmptyInputError):
        r2_discrete(np.empty((0, 2)), 3)


def test_dominated_points_never_change_value(backend):
    rng = np.random.default_rng(2)
    for _ in range(30):
        front = random_front(rng, 15)
        extra = front[rng.integers(0, 15, 5)] + rng.uniform(0, 0.5, (5, 2))
        for n in (2, 3, 10, 101):
            assert r2_discrete(np.vstack((front, extra)), n) == r2_discrete(front, n)


def test_filtered_and_unfiltered_agree(backend):
    rng = np.random.default_rng(4)
    pts = rng.uniform(0, 1, (200, 2))
    assert r2_discrete(pts, 257) == r2_discrete(nondominated_filter(pts), 257)


def test_weak_compliance_witness():
    base = [(1, 3), (2, 2), (3, 1)]
    grown = base[:1] + [(1.5, 2.5)] + base[1:]
    assert r2_discrete(base, 3) == r2_discrete(grown, 3) == 1.0
    assert r2_exact(Front(grown)) < r2_exact(Front(base))


def test_singleton_within_grid_error():
    y = (0.7, 1.9)
    exact = r2_exact(Front([y]))
    for n in (2, 5, 50, 500):
        assert abs(r2_discrete([y], n) - exact) <= max(y) / (n - 1)


def test_error_shrinks_with_more_weights():
    front = nondominated_filter(random_front(np.random.default_rng(8), 50))
    exact = r2_exact(front)
    errors = [abs(r2_discrete(front, n) - exact) for n in (10, 100, 1000, 10000)]
    assert errors[-1] < errors[0] / 100
