# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the sampling-oracle inner loops.

Signatures and semantics mirror :mod:`ellrange._pykernels` exactly.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport atan2, cos, sin, floor, hypot, sqrt, M_PI, INFINITY

cnp.import_array()


def rayleigh_batch(double complex a11, double complex a12,
                   double complex a21, double complex a22,
                   const double complex[::1] z1, const double complex[::1] z2):
    cdef Py_ssize_t n = z1.shape[0], k
    cdef double x1r, x1i, x2r, x2i, y1r, y1i, y2r, y2i
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef double b11r = a11.real, b11i = a11.imag, b12r = a12.real, b12i = a12.imag
    cdef double b21r = a21.real, b21i = a21.imag, b22r = a22.real, b22i = a22.imag
    for k in range(n):
        x1r = z1[k].real
        x1i = z1[k].imag
        x2r = z2[k].real
        x2i = z2[k].imag
        y1r = (b11r * x1r - b11i * x1i) + (b12r * x2r - b12i * x2i)
        y1i = (b11r * x1i + b11i * x1r) + (b12r * x2i + b12i * x2r)
        y2r = (b21r * x1r - b21i * x1i) + (b22r * x2r - b22i * x2i)
        y2i = (b21r * x1i + b21i * x1r) + (b22r * x2i + b22i * x2r)
        o[k].real = (y1r * x1r + y1i * x1i) + (y2r * x2r + y2i * x2i)
        o[k].imag = (y1i * x1r - y1r * x1i) + (y2i * x2r - y2r * x2i)
    return out


def max_focal_excess(const double complex[::1] pts, double complex f1,
                     double complex f2, double semi_major):
    cdef Py_ssize_t n = pts.shape[0], k
    cdef double worst = 0.0, e
    cdef double twice = 2.0 * semi_major
    for k in range(n):
        e = (hypot(pts[k].real - f1.real, pts[k].imag - f1.imag)
             + hypot(pts[k].real - f2.real, pts[k].imag - f2.imag) - twice)
        if e > worst:
            worst = e
    return worst


def sector_gap(const double complex[::1] pts, double complex center,
               double orientation, double a, double b, int nbins):
    cdef Py_ssize_t n = pts.shape[0], k
    cdef int j
    cdef double c = cos(orientation), s = sin(orientation)
    cdef double dx, dy, u, v, r, alpha, rho, gap, worst = 0.0
    cdef double[::1] best_r = np.full(nbins, -1.0)
    cdef double[::1] best_a = np.zeros(nbins)
    for k in range(n):
        dx = pts[k].real - center.real
        dy = pts[k].imag - center.imag
        u = c * dx + s * dy
        v = c * dy - s * dx
        r = hypot(u, v)
        alpha = atan2(v, u)
        j = <int>floor((alpha + M_PI) / (2.0 * M_PI) * nbins)
        if j >= nbins:
            j = nbins - 1
        elif j < 0:
            j = 0
        if r > best_r[j]:
            best_r[j] = r
            best_a[j] = alpha
    for j in range(nbins):
        if best_r[j] < 0.0:
            continue
        rho = a * b / hypot(b * cos(best_a[j]), a * sin(best_a[j]))
        gap = rho - best_r[j]
        if gap > worst:
            worst = gap
    return worst


def segment_gap(const double complex[::1] pts, double complex center,
                double orientation, double a, int nbins):
    cdef Py_ssize_t n = pts.shape[0], k
    cdef int j, run = 0, longest = 0
    cdef double c = cos(orientation), s = sin(orientation)
    cdef double dx, dy, u, v, transverse = 0.0
    cdef double umin = INFINITY, umax = -INFINITY, width, longitudinal
    cdef cnp.uint8_t[::1] hit = np.zeros(nbins, dtype=np.uint8)
    for k in range(n):
        dx = pts[k].real - center.real
        dy = pts[k].imag - center.imag
        u = c * dx + s * dy
        v = c * dy - s * dx
        if v < 0.0:
            v = -v
        if v > transverse:
            transverse = v
        if u < umin:
            umin = u
        if u > umax:
            umax = u
        j = <int>floor((u + a) / (2.0 * a) * nbins)
        if j >= nbins:
            j = nbins - 1
        elif j < 0:
            j = 0
        hit[j] = 1
    for j in range(nbins):
        if hit[j]:
            run = 0
        else:
            run += 1
            if run > longest:
                longest = run
    width = 2.0 * a / nbins
    longitudinal = longest * width
    if a - umax > longitudinal:
        longitudinal = a - umax
    if umin + a > longitudinal:
        longitudinal = umin + a
    return longitudinal if longitudinal > transverse else transverse


def hull_chain(const double[::1] x, const double[::1] y):
    cdef Py_ssize_t n = x.shape[0], k, top = 0, start
    idx = np.empty(2 * n + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] h = idx
    cdef Py_ssize_t i, j
    for k in range(n):
        while top >= 2:
            i = h[top - 2]
            j = h[top - 1]
            if (x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i]) <= 0.0:
                top -= 1
            else:
                break
        h[top] = k
        top += 1
    start = top + 1
    for k in range(n - 2, -1, -1):
        while top >= start:
            i = h[top - 2]
            j = h[top - 1]
            if (x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i]) <= 0.0:
                top -= 1
            else:
                break
        h[top] = k
        top += 1
    return idx[:top - 1].copy()
