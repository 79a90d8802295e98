"""Pure-Python (numpy) kernels.

Same contract as the compiled ``_ckernels`` module. All array arguments are
contiguous float64 and fronts are sorted by ascending ``f1``.
"""

import math

import numpy as np

NAME = "python"

_CHUNK = 1 << 22


def nondominated_mask_sorted(f1, f2):
    """Mask of points not weakly dominated by an earlier point.

    Expects the archive sorted by ``f1`` with ties broken by ascending ``f2``.
    """
    n = f2.shape[0]
    keep = np.ones(n, dtype=bool)
    if n > 1:
        best = np.minimum.accumulate(f2)
        keep[1:] = f2[1:] < best[:-1]
    return keep


def _boundaries(f1, f2):
    n = f1.shape[0]
    lo = np.empty(n)
    hi = np.empty(n)
    hi[0] = 1.0
    lo[-1] = 0.0
    if n > 1:
        sep = f2[:-1] / (f1[1:] + f2[:-1])
        lo[:-1] = sep
        hi[1:] = sep
    return lo, hi


def r2_partials(f1, f2):
    lo, hi = _boundaries(f1, f2)
    bal = f2 / (f1 + f2)
    np.clip(bal, lo, hi, out=bal)
    part = 0.5 * f2 * (bal - lo) * (2.0 - lo - bal) + 0.5 * f1 * (hi - bal) * (hi + bal)
    return lo, hi, bal, part


def r2_total(f1, f2):
    return math.fsum(r2_partials(f1, f2)[3])


def hv_total(f1, f2, r1, r2):
    inside = (f1 < r1) & (f2 < r2)
    if not inside.any():
        return 0.0
    g1 = f1[inside]
    g2 = f2[inside]
    upper = np.empty_like(g2)
    upper[0] = r2
    upper[1:] = g2[:-1]
    return math.fsum((r1 - g1) * (upper - g2))


def min_utility(f1, f2, w):
    """Per-weight minimum Tchebycheff utility over all points."""
    out = np.empty(w.shape[0])
    step = max(1, _CHUNK // max(1, f1.shape[0]))
    for start in range(0, w.shape[0], step):
        wc = w[start:start + step, None]
        u = np.maximum(wc * f1[None, :], (1.0 - wc) * f2[None, :])
        out[start:start + step] = u.min(axis=1)
    return out


def mean_min_utility(f1, f2, w):
    return math.fsum(min_utility(f1, f2, w)) / w.shape[0]


_ROWS = 1 << 15


def pivot_points(pts, lam):
    """Rows minimizing ``lam * f1 + (1 - lam) * f2`` for each ``lam``."""
    weights = np.vstack((lam, 1.0 - lam))
    best = np.full(lam.shape[0], np.inf)
    rows = np.zeros(lam.shape[0], dtype=np.intp)
    for start in range(0, pts.shape[0], _ROWS):
        s = pts[start:start + _ROWS] @ weights
        idx = s.argmin(axis=0)
        val = s[idx, np.arange(lam.shape[0])]
        better = val < best
        best[better] = val[better]
        rows[better] = idx[better] + start
    return pts[rows]


def pivot_mask(pts, piv):
    """Mask of rows not weakly dominated by (or equal to) any pivot."""
    keep = np.empty(pts.shape[0], dtype=bool)
    for start in range(0, pts.shape[0], _ROWS):
        chunk = pts[start:start + _ROWS]
        covered = np.zeros(chunk.shape[0], dtype=bool)
        for p1, p2 in piv:
            covered |= (chunk[:, 0] >= p1) & (chunk[:, 1] >= p2)
        keep[start:start + _ROWS] = ~covered
    return keep
