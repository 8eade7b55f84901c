# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Sturm-sequence kernels for symmetric tridiagonal matrices."""

from libc.math cimport fabs, fmax

cdef double _EPS = 2.220446049250313e-16


cdef Py_ssize_t _count(const double[::1] diag, const double[::1] offsq,
                       double x, double pivmin) nogil:
    cdef Py_ssize_t n = diag.shape[0]
    cdef Py_ssize_t i, neg = 0
    cdef double q = diag[0] - x
    if fabs(q) < pivmin:
        q = -pivmin
    if q < 0:
        neg += 1
    for i in range(1, n):
        q = diag[i] - x - offsq[i - 1] / q
        if fabs(q) < pivmin:
            q = -pivmin
        if q < 0:
            neg += 1
    return neg


def sturm_count(const double[::1] diag, const double[::1] offsq, double x, double pivmin):
    """Number of eigenvalues strictly below ``x``."""
    return _count(diag, offsq, x, pivmin)


def bisect_lowest(const double[::1] diag, const double[::1] offsq, Py_ssize_t count,
                  double lo, double hi, double pivmin):
    """Lowest ``count`` eigenvalues by bisection on ``[lo, hi]``."""
    cdef Py_ssize_t j, it
    cdef double a, b, mid, tol
    out = []
    cdef double floor_ = lo
    for j in range(count):
        a = floor_
        b = hi
        for it in range(200):
            tol = 2.0 * _EPS * fmax(fabs(a), fabs(b)) + pivmin
            if b - a <= tol:
                break
            mid = 0.5 * (a + b)
            if _count(diag, offsq, mid, pivmin) > j:
                b = mid
            else:
                a = mid
        mid = 0.5 * (a + b)
        out.append(mid)
        floor_ = a
    return out
