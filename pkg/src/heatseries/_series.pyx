# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernels: weighted Hermite tables and series accumulation.

Mirrors heatseries._series_fallback; the backend layer selects whichever
import succeeds.
"""

from libc.math cimport exp, fabs


def weighted_hermite_table(double[::1] y, Py_ssize_t nmax, double[:, ::1] out):
    """Fill out[n, i] = H_n(y[i]) * exp(-y[i]**2) for n = 0..nmax."""
    cdef Py_ssize_t npts = y.shape[0]
    cdef Py_ssize_t i, n
    cdef double yi, w
    for i in range(npts):
        yi = y[i]
        w = exp(-yi * yi)
        out[0, i] = w
        if nmax >= 1:
            out[1, i] = 2.0 * yi * w
    for n in range(1, nmax):
        for i in range(npts):
            yi = y[i]
            out[n + 1, i] = 2.0 * yi * out[n, i] - (2.0 * n) * out[n - 1, i]


def accumulate_series_1d(double[::1] out, double[:, ::1] table,
                         long long[::1] degrees, double[::1] coeffs):
    """out[i] += sum_m coeffs[m] * table[degrees[m], i]."""
    cdef Py_ssize_t nterms = degrees.shape[0]
    cdef Py_ssize_t npts = out.shape[0]
    cdef Py_ssize_t m, i, d
    cdef double c
    for m in range(nterms):
        d = <Py_ssize_t> degrees[m]
        c = coeffs[m]
        for i in range(npts):
            out[i] += c * table[d, i]


def accumulate_series_2d(double[:, ::1] out, double[:, ::1] t1,
                         double[:, ::1] t2, long long[::1] deg1,
                         long long[::1] deg2, double[::1] coeffs):
    """out[i, j] += sum_m coeffs[m] * t1[deg1[m], i] * t2[deg2[m], j]."""
    cdef Py_ssize_t nterms = deg1.shape[0]
    cdef Py_ssize_t n1 = out.shape[0]
    cdef Py_ssize_t n2 = out.shape[1]
    cdef Py_ssize_t m, i, j, d1, d2
    cdef double c, ci
    for m in range(nterms):
        d1 = <Py_ssize_t> deg1[m]
        d2 = <Py_ssize_t> deg2[m]
        c = coeffs[m]
        for i in range(n1):
            ci = c * t1[d1, i]
            for j in range(n2):
                out[i, j] += ci * t2[d2, j]


def max_abs_diff(double[::1] a, double[::1] b):
    """Largest absolute elementwise difference of two flat arrays."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i
    cdef double best = 0.0, diff
    for i in range(n):
        diff = fabs(a[i] - b[i])
        if diff > best:
            best = diff
    return best
