# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``."""

import numpy as np

from libc.math cimport cos, sin, pi, pow, fabs

cdef extern from "complex.h":
    double cabs(double complex)

cdef double _EPS = np.finfo(float).eps
cdef double _START_ANGLE = 0.4


def spinor_product(alpha, beta):
    cdef double complex[:] a = np.ascontiguousarray(alpha, dtype=complex)
    cdef double complex[:] b = np.ascontiguousarray(beta, dtype=complex)
    cdef Py_ssize_t n = a.shape[0], i, k
    out_arr = np.zeros(n + 1, dtype=complex)
    cdef double complex[:] out = out_arr
    out[0] = 1.0
    for i in range(n):
        for k in range(i + 1, 0, -1):
            out[k] = a[i] * out[k] + b[i] * out[k - 1]
        out[0] = a[i] * out[0]
    return out_arr


def taylor_shift(coeffs, double complex z, int m):
    work_arr = np.array(coeffs, dtype=complex)
    cdef double complex[:] work = work_arr
    babs_arr = np.abs(work_arr)
    cdef double[:] babs = babs_arr
    cdef Py_ssize_t deg = work.shape[0] - 1, j, k
    cdef double az = cabs(z)
    cdef double complex acc
    cdef double accb
    t_arr = np.zeros(m + 1, dtype=complex)
    bnd_arr = np.zeros(m + 1)
    cdef double complex[:] t = t_arr
    cdef double[:] bnd = bnd_arr
    for j in range(min(m, deg) + 1):
        acc = work[deg]
        accb = babs[deg]
        for k in range(deg - 1, j - 1, -1):
            acc = acc * z + work[k]
            work[k] = acc
            accb = accb * az + babs[k]
            babs[k] = accb
        t[j] = work[j]
        bnd[j] = babs[j]
    return t_arr, bnd_arr


def aberth(coeffs, int max_sweeps):
    c_arr = np.ascontiguousarray(coeffs, dtype=complex)
    cdef double complex[:] c = c_arr
    cdef Py_ssize_t deg = c.shape[0] - 1, i, j, k
    cabs_arr = np.abs(c_arr)
    cdef double[:] ca = cabs_arr
    cdef double radius = pow(ca[0] / ca[deg], 1.0 / deg)
    z_arr = np.empty(deg, dtype=complex)
    cdef double complex[:] z = z_arr
    done_arr = np.zeros(deg, dtype=np.uint8)
    cdef unsigned char[:] done = done_arr
    cdef double ang
    for j in range(deg):
        ang = 2 * pi * j / deg + _START_ANGLE
        z[j] = radius * (cos(ang) + 1j * sin(ang))
    cdef double stop = (4 * deg + 1) * _EPS
    cdef int sweeps = 0
    cdef Py_ssize_t remaining = deg
    cdef double complex zi, p, dp, s, diff, ratio, denom, w
    cdef double azi, bound
    while sweeps < max_sweeps and remaining > 0:
        sweeps += 1
        for i in range(deg):
            if done[i]:
                continue
            zi = z[i]
            azi = cabs(zi)
            p = c[deg]
            dp = 0
            bound = ca[deg]
            for k in range(deg - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + c[k]
                bound = bound * azi + ca[k]
            if cabs(p) <= stop * bound:
                done[i] = 1
                remaining -= 1
                continue
            s = 0
            for j in range(deg):
                if j != i:
                    diff = zi - z[j]
                    if diff == 0:
                        diff = _EPS * (1.0 + azi)
                    s = s + 1.0 / diff
            if dp == 0:
                w = (1.0 + azi) * 1e-3 * (cos(<double>i) + 1j * sin(<double>i))
            else:
                ratio = p / dp
                denom = 1.0 - ratio * s
                if denom != 0:
                    w = ratio / denom
                else:
                    w = ratio
            z[i] = zi - w
    return z_arr, sweeps, remaining == 0
