import math

import numpy as np
import pytest
from scipy import integrate, optimize

from exact_r2 import (
    DomainError,
    FrontShape,
    analytic_r2,
    generate_cloud,
    generate_front,
    nondominated_filter,
    quadrature_r2,
    r2_exact,
)

CURVES = {
    FrontShape.LINEAR: lambda x: 1.0 - x,
    FrontShape.CONVEX_QUADRATIC: lambda x: (1.0 - math.sqrt(x)) ** 2,
    FrontShape.CONCAVE_CIRCULAR: lambda x: math.sqrt(1.0 - x * x),
    FrontShape.DTLZ1_LINEAR: lambda x: 0.5 - x,
}
EXTENT = {FrontShape.DTLZ1_LINEAR: 0.5}


def continuous_r2(shape):
    """Integrate the utility of the balanced front point over w, numerically."""
    g = CURVES[shape]
    top = EXTENT.get(shape, 1.0)

    def utility(w):
        if w <= 0.0:
            return 0.0
        x = optimize.brentq(lambda x: w * x - (1 - w) * g(x), 0.0, top, xtol=1e-15)
        return w * x

    value, _ = integrate.quad(utility, 0.0, 1.0, epsabs=1e-13, limit=200)
    return value


@pytest.mark.parametrize(
    "shape, expected",
    [
        (FrontShape.IDEAL_POINT, 0.0),
        (FrontShape.NADIR_POINT, 0.75),
        (FrontShape.LINEAR, 1 / 6),
        (FrontShape.DTLZ1_LINEAR, 1 / 12),
    ],
)
def test_analytic_simple(shape, expected):
    assert analytic_r2(shape) == pytest.approx(expected, abs=1e-16)


def test_analytic_quadratic_rounded_values():
    assert round(analytic_r2(FrontShape.CONVEX_QUADRATIC), 4) == 0.0890
    assert round(analytic_r2(FrontShape.CONCAVE_CIRCULAR), 4) == 0.2174


@pytest.mark.parametrize("shape", list(CURVES))
def test_analytic_values_match_numerical_integration(shape):
    assert continuous_r2(shape) == pytest.approx(analytic_r2(shape), abs=1e-10)


@pytest.mark.parametrize(
    "shape, n, expected",
    [
        (FrontShape.LINEAR, 3, [[0, 1], [0.5, 0.5], [1, 0]]),
        (FrontShape.CONCAVE_CIRCULAR, 2, [[0, 1], [1, 0]]),
        (FrontShape.LINEAR, 1, [[0, 1]]),
        (FrontShape.CONVEX_QUADRATIC, 2, [[0, 1], [1, 0]]),
        (FrontShape.DTLZ1_LINEAR, 2, [[0, 0.5], [0.5, 0]]),
        (FrontShape.NADIR_POINT, 1, [[1, 1]]),
    ],
)
def test_generate_front_examples(shape, n, expected):
    np.testing.assert_array_equal(generate_front(shape, n, 0), expected)


def test_generate_front_point_shape_with_many_points_fails():
    with pytest.raises(DomainError):
        generate_front(FrontShape.NADIR_POINT, 2, 0)


def test_generate_front_random_is_deterministic_and_on_curve():
    a = generate_front(FrontShape.CONCAVE_CIRCULAR, 100, 4)
    np.testing.assert_array_equal(a, generate_front(FrontShape.CONCAVE_CIRCULAR, 100, 4))
    assert not np.array_equal(a, generate_front(FrontShape.CONCAVE_CIRCULAR, 100, 5))
    np.testing.assert_allclose(a[:, 0] ** 2 + a[:, 1] ** 2, 1.0, rtol=1e-14)


def test_generate_cloud():
    one = generate_cloud(1, 3)
    assert one.shape == (1, 2) and (one >= 0).all() and np.isfinite(one).all()
    a = generate_cloud(100_000, 1)
    np.testing.assert_array_equal(a, generate_cloud(100_000, 1))
    assert not np.array_equal(np.sort(a, axis=0), np.sort(generate_cloud(100_000, 2), axis=0))


def test_cloud_front_is_scaled_convex_quadratic():
    front = nondominated_filter(generate_cloud(200_000, 0))
    scaled = front.as_array() / 2.0
    target = (1 - np.sqrt(np.clip(scaled[:, 0], 0, 1))) ** 2
    assert np.all(scaled[:, 1] >= target - 1e-12)
    assert np.max(scaled[:, 1] - target) < 0.05


@pytest.mark.parametrize(
    "points, tol, expected",
    [([(1, 1)], 1e-10, 0.75), ([(1, 3), (3, 1)], 1e-10, 1.0)],
)
def test_quadrature_examples(points, tol, expected):
    q = quadrature_r2(points, tol)
    assert q.converged
    assert abs(q.value - expected) <= tol


def test_quadrature_dense_linear():
    q = quadrature_r2(generate_front(FrontShape.LINEAR, 2001, 0), 1e-8)
    assert q.converged
    assert q.value == pytest.approx(1 / 6, abs=1e-4)
    assert abs(q.value - r2_exact(nondominated_filter(generate_front(FrontShape.LINEAR, 2001, 0)))) <= 1e-8


def test_quadrature_budget_exhaustion_is_flagged():
    q = quadrature_r2(generate_cloud(300, 1), 1e-14, max_evaluations=200)
    assert not q.converged
    assert q.value > 0


def test_quadrature_rejects_bad_tol():
    with pytest.raises(DomainError):
        quadrature_r2([(1, 1)], 0.0)


@pytest.mark.parametrize(
    "shape", [FrontShape.LINEAR, FrontShape.CONVEX_QUADRATIC, FrontShape.CONCAVE_CIRCULAR, FrontShape.DTLZ1_LINEAR]
)
def test_sampled_fronts_converge_from_above(shape):
    target = analytic_r2(shape)
    gaps = [r2_exact(nondominated_filter(generate_front(shape, n, 0))) - target for n in (10, 100, 1000, 10000)]
    assert all(g > 0 for g in gaps)
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_quadrature_agrees_with_closed_form_on_clouds():
    for seed in range(10):
        front = nondominated_filter(generate_cloud(300, seed))
        q = quadrature_r2(front.as_array(), 1e-10)
        assert abs(q.value - r2_exact(front)) <= 1e-10
