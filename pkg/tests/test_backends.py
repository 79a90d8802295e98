"""The compiled and numpy kernels must agree."""

import numpy as np
import pytest

from exact_r2 import _backend, generate_cloud, uniform_weights

pytestmark = pytest.mark.skipif(
    len(_backend.available()) < 2, reason="compiled kernels not built"
)


@pytest.fixture(scope="module")
def both():
    return _backend.load("cython"), _backend.load("python")


@pytest.fixture(scope="module")
def sorted_front():
    from exact_r2 import nondominated_filter

    f = nondominated_filter(generate_cloud(50_000, 3))
    return f.f1, f.f2


def test_selected_backend_is_compiled_when_available():
    import os

    if not os.environ.get("EXACT_R2_BACKEND"):
        assert _backend.kernels.NAME == "cython"


def test_filter_masks_identical(both):
    c, p = both
    pts = generate_cloud(20_000, 1)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    f1, f2 = np.ascontiguousarray(pts[order, 0]), np.ascontiguousarray(pts[order, 1])
    np.testing.assert_array_equal(c.nondominated_mask_sorted(f1, f2), p.nondominated_mask_sorted(f1, f2))


def test_partials_identical(both, sorted_front):
    c, p = both
    for a, b in zip(c.r2_partials(*sorted_front), p.r2_partials(*sorted_front)):
        np.testing.assert_array_equal(a, b)


def test_totals_agree(both, sorted_front):
    c, p = both
    assert c.r2_total(*sorted_front) == pytest.approx(p.r2_total(*sorted_front), rel=1e-15)
    assert c.hv_total(*sorted_front, 2.0, 2.0) == pytest.approx(p.hv_total(*sorted_front, 2.0, 2.0), rel=1e-15)
    w = uniform_weights(1001).w1
    np.testing.assert_array_equal(c.min_utility(*sorted_front, w), p.min_utility(*sorted_front, w))
    assert c.mean_min_utility(*sorted_front, w) == pytest.approx(p.mean_min_utility(*sorted_front, w), rel=1e-15)
