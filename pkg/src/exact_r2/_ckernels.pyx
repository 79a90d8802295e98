# cython: language_level=3
"""Compiled kernels; drop-in replacement for ``_pykernels``.

Sums use Neumaier compensated summation, accumulated in index order.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY

cnp.import_array()

NAME = "cython"


cdef inline void _neumaier(double x, double *s, double *c) noexcept nogil:
    cdef double t = s[0] + x
    if (s[0] if s[0] >= 0 else -s[0]) >= (x if x >= 0 else -x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


def nondominated_mask_sorted(const double[::1] f1, const double[::1] f2):
    cdef Py_ssize_t i, n = f2.shape[0]
    out = np.ones(n, dtype=np.uint8)
    cdef unsigned char[::1] keep = out
    cdef double best
    if n == 0:
        return out.view(bool)
    best = f2[0]
    with nogil:
        for i in range(1, n):
            if f2[i] < best:
                best = f2[i]
            else:
                keep[i] = 0
    return out.view(bool)


cdef inline double _partial(double a, double b, double lo, double hi) noexcept nogil:
    cdef double bal = b / (a + b)
    if bal < lo:
        bal = lo
    elif bal > hi:
        bal = hi
    return 0.5 * b * (bal - lo) * (2.0 - lo - bal) + 0.5 * a * (hi - bal) * (hi + bal)


def r2_partials(const double[::1] f1, const double[::1] f2):
    cdef Py_ssize_t i, n = f1.shape[0]
    lo_a = np.empty(n)
    hi_a = np.empty(n)
    bal_a = np.empty(n)
    part_a = np.empty(n)
    cdef double[::1] lo = lo_a, hi = hi_a, bal = bal_a, part = part_a
    cdef double w
    with nogil:
        for i in range(n):
            hi[i] = 1.0 if i == 0 else lo[i - 1]
            lo[i] = 0.0 if i == n - 1 else f2[i] / (f1[i + 1] + f2[i])
            w = f2[i] / (f1[i] + f2[i])
            if w < lo[i]:
                w = lo[i]
            elif w > hi[i]:
                w = hi[i]
            bal[i] = w
            part[i] = (0.5 * f2[i] * (w - lo[i]) * (2.0 - lo[i] - w)
                       + 0.5 * f1[i] * (hi[i] - w) * (hi[i] + w))
    return lo_a, hi_a, bal_a, part_a


def r2_total(const double[::1] f1, const double[::1] f2):
    cdef Py_ssize_t i, n = f1.shape[0]
    cdef double s = 0.0, c = 0.0, hi = 1.0, lo
    with nogil:
        for i in range(n):
            lo = 0.0 if i == n - 1 else f2[i] / (f1[i + 1] + f2[i])
            _neumaier(_partial(f1[i], f2[i], lo, hi), &s, &c)
            hi = lo
    return s + c


def hv_total(const double[::1] f1, const double[::1] f2, double r1, double r2):
    cdef Py_ssize_t i, n = f1.shape[0]
    cdef double s = 0.0, c = 0.0, upper = r2
    with nogil:
        for i in range(n):
            if f1[i] < r1 and f2[i] < r2:
                _neumaier((r1 - f1[i]) * (upper - f2[i]), &s, &c)
                upper = f2[i]
    return s + c


def min_utility(const double[::1] f1, const double[::1] f2, const double[::1] w):
    cdef Py_ssize_t i, j, n = f1.shape[0], m = w.shape[0]
    out_a = np.empty(m)
    cdef double[::1] out = out_a
    cdef double wi, vi, u, best
    with nogil:
        for i in range(m):
            wi = w[i]
            vi = 1.0 - wi
            best = INFINITY
            for j in range(n):
                u = wi * f1[j]
                if vi * f2[j] > u:
                    u = vi * f2[j]
                if u < best:
                    best = u
            out[i] = best
    return out_a


def mean_min_utility(const double[::1] f1, const double[::1] f2, const double[::1] w):
    cdef Py_ssize_t i, j, n = f1.shape[0], m = w.shape[0]
    cdef double s = 0.0, c = 0.0, wi, vi, u, best
    with nogil:
        for i in range(m):
            wi = w[i]
            vi = 1.0 - wi
            best = INFINITY
            for j in range(n):
                u = wi * f1[j]
                if vi * f2[j] > u:
                    u = vi * f2[j]
                if u < best:
                    best = u
            _neumaier(best, &s, &c)
    return (s + c) / m


def pivot_points(const double[:, ::1] pts, const double[::1] lam):
    cdef Py_ssize_t i, j, n = pts.shape[0], k = lam.shape[0]
    best_a = np.full(k, np.inf)
    rows_a = np.zeros(k, dtype=np.intp)
    cdef double[::1] best = best_a
    cdef Py_ssize_t[::1] rows = rows_a
    cdef double s
    with nogil:
        for i in range(n):
            for j in range(k):
                s = lam[j] * pts[i, 0] + (1.0 - lam[j]) * pts[i, 1]
                if s < best[j]:
                    best[j] = s
                    rows[j] = i
    return np.asarray(pts)[rows_a]


def pivot_mask(const double[:, ::1] pts, const double[:, ::1] piv):
    cdef Py_ssize_t i, j, n = pts.shape[0], k = piv.shape[0]
    out = np.ones(n, dtype=np.uint8)
    cdef unsigned char[::1] keep = out
    cdef double x, y
    with nogil:
        for i in range(n):
            x = pts[i, 0]
            y = pts[i, 1]
            for j in range(k):
                if piv[j, 0] <= x and piv[j, 1] <= y:
                    keep[i] = 0
                    break
    return out.view(bool)
