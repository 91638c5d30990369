# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: walk evolution loops and the output-weight grid scan.

Same contracts as ``_kernels_py``; keep the floating-point operation order
identical there so the two backends stay bit-compatible on the walks.
"""

from libc.math cimport exp, fabs, sqrt

import numpy as np


def walk1d_evolve(double complex[:, ::1] amps, Py_ssize_t steps):
    cdef Py_ssize_t L = amps.shape[1]
    cdef double s = 1.0 / sqrt(2.0)
    scratch_arr = np.zeros((2, L), dtype=np.complex128)
    cdef double complex[:, ::1] b = scratch_arr
    cdef Py_ssize_t t, j
    for t in range(steps):
        b[0, 0] = 0
        b[1, L - 1] = 0
        for j in range(L - 1):
            b[0, j + 1] = (amps[0, j] + amps[1, j]) * s
        for j in range(1, L):
            b[1, j - 1] = (amps[0, j] - amps[1, j]) * s
        amps[:, :] = b


def walk2d_evolve(double complex[:, :, ::1] amps, Py_ssize_t steps):
    cdef Py_ssize_t Lx = amps.shape[1]
    cdef Py_ssize_t Ly = amps.shape[2]
    scratch_arr = np.zeros((4, Lx, Ly), dtype=np.complex128)
    cdef double complex[:, :, ::1] b = scratch_arr
    cdef double complex c0, c1, c2, c3, v0, v1, v2, v3
    cdef Py_ssize_t t, x, y
    for t in range(steps):
        # boundary targets are never written by the scatter below
        for x in range(Lx):
            b[0, x, 0] = 0
            b[1, x, Ly - 1] = 0
            b[2, x, 0] = 0
            b[3, x, Ly - 1] = 0
        for y in range(Ly):
            b[0, 0, y] = 0
            b[1, 0, y] = 0
            b[2, Lx - 1, y] = 0
            b[3, Lx - 1, y] = 0
        for x in range(Lx):
            for y in range(Ly):
                c0 = amps[0, x, y]
                c1 = amps[1, x, y]
                c2 = amps[2, x, y]
                c3 = amps[3, x, y]
                v0 = (c0 + c1 + c2 + c3) * 0.5
                v1 = (c0 - c1 + c2 - c3) * 0.5
                v2 = (c0 + c1 - c2 - c3) * 0.5
                v3 = (c0 - c1 - c2 + c3) * 0.5
                if x + 1 < Lx and y + 1 < Ly:
                    b[0, x + 1, y + 1] = v0
                if x + 1 < Lx and y - 1 >= 0:
                    b[1, x + 1, y - 1] = v1
                if x - 1 >= 0 and y + 1 < Ly:
                    b[2, x - 1, y + 1] = v2
                if x - 1 >= 0 and y - 1 >= 0:
                    b[3, x - 1, y - 1] = v3
        amps[:, :, :] = b


def xor_solution_mask(
    double[:, ::1] activations,
    double[::1] targets,
    double out_b,
    double[::1] w1,
    double[::1] w2,
    double margin,
):
    cdef Py_ssize_t nx = w1.shape[0]
    cdef Py_ssize_t ny = w2.shape[0]
    cdef Py_ssize_t np_ = targets.shape[0]
    out_arr = np.empty((nx, ny), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, p
    cdef double z, o
    cdef unsigned char ok
    for i in range(nx):
        for j in range(ny):
            ok = 1
            for p in range(np_):
                z = out_b + activations[p, 0] * w1[i] + activations[p, 1] * w2[j]
                o = 1.0 / (1.0 + exp(-z))
                if fabs(o - targets[p]) >= margin:
                    ok = 0
                    break
            out[i, j] = ok
    return out_arr
