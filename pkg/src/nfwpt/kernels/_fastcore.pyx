# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: coherent field superposition and swarm gain evaluation.

Same contracts as ``nfwpt.kernels._reference``; per-point work runs in
parallel and inner sums use compensated accumulation, so results are
deterministic regardless of thread count.
"""

from cython.parallel import prange

cimport cython
from libc.math cimport pow, sqrt

import numpy as np

cimport numpy as cnp

cdef extern from "math.h" nogil:
    void sincos(double x, double *sin_out, double *cos_out)

cnp.import_array()

PATTERN_ISOTROPIC = 0
PATTERN_COSINE_POWER = 1


def superpose_field(points, positions, normal, int pattern_kind,
                    double boresight_gain, double exponent, amplitudes,
                    double wavelength):
    """Coherent sum(a_n * sqrt(G_n) * exp(-j*2*pi*d/lambda) / d) per point."""
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef double[:, ::1] pos = np.ascontiguousarray(positions, dtype=np.float64)
    cdef double[::1] nrm = np.ascontiguousarray(normal, dtype=np.float64)
    amps = np.ascontiguousarray(amplitudes, dtype=np.complex128)
    cdef double[::1] a_re = np.ascontiguousarray(amps.real)
    cdef double[::1] a_im = np.ascontiguousarray(amps.imag)
    cdef Py_ssize_t n_points = pts.shape[0]
    cdef Py_ssize_t n_elem = pos.shape[0]
    out = np.empty(n_points, dtype=np.complex128)
    out_re = np.empty(n_points, dtype=np.float64)
    out_im = np.empty(n_points, dtype=np.float64)
    cdef double[::1] o_re = out_re
    cdef double[::1] o_im = out_im
    cdef double k = 6.283185307179586476925286766559 / wavelength
    cdef Py_ssize_t i, n
    cdef double dx, dy, dz, d, ct, root_gain, w_re, w_im
    cdef double s_re, s_im, c_re, c_im, y, t
    cdef int singular = 0

    for i in prange(n_points, nogil=True, schedule="static"):
        s_re = 0.0
        s_im = 0.0
        c_re = 0.0
        c_im = 0.0
        for n in range(n_elem):
            dx = pts[i, 0] - pos[n, 0]
            dy = pts[i, 1] - pos[n, 1]
            dz = pts[i, 2] - pos[n, 2]
            d = sqrt(dx * dx + dy * dy + dz * dz)
            if d == 0.0:
                singular += 1
                continue
            if pattern_kind == 0:
                root_gain = 1.0
            else:
                ct = (dx * nrm[0] + dy * nrm[1] + dz * nrm[2]) / d
                if ct <= 0.0:
                    continue
                if ct > 1.0:
                    ct = 1.0
                root_gain = sqrt(boresight_gain * pow(ct, exponent))
            sincos(-k * d, &w_im, &w_re)
            w_re = root_gain * w_re / d
            w_im = root_gain * w_im / d
            # accumulate (a_n * w) with Kahan compensation, re and im apart
            y = (a_re[n] * w_re - a_im[n] * w_im) - c_re
            t = s_re + y
            c_re = (t - s_re) - y
            s_re = t
            y = (a_re[n] * w_im + a_im[n] * w_re) - c_im
            t = s_im + y
            c_im = (t - s_im) - y
            s_im = t
        o_re[i] = s_re
        o_im[i] = s_im

    if singular:
        raise ValueError("evaluation point coincides with an element")
    out.real = out_re
    out.imag = out_im
    return out


def coherent_gain(offset, coefficients, phases):
    """|offset + sum_n c_n * exp(j*theta_n)|^2 per row of ``phases``."""
    coeffs = np.ascontiguousarray(coefficients, dtype=np.complex128)
    cdef double[::1] c_re = np.ascontiguousarray(coeffs.real)
    cdef double[::1] c_im = np.ascontiguousarray(coeffs.imag)
    cdef double[:, ::1] ph = np.ascontiguousarray(phases, dtype=np.float64)
    cdef Py_ssize_t n_rows = ph.shape[0]
    cdef Py_ssize_t n = ph.shape[1]
    out = np.empty(n_rows, dtype=np.float64)
    cdef double[::1] o = out
    cdef complex off = complex(offset)
    cdef double off_re = off.real
    cdef double off_im = off.imag
    cdef Py_ssize_t i, j
    cdef double s_re, s_im, k_re, k_im, y, t, cs, sn

    for i in prange(n_rows, nogil=True, schedule="static"):
        s_re = off_re
        s_im = off_im
        k_re = 0.0
        k_im = 0.0
        for j in range(n):
            sincos(ph[i, j], &sn, &cs)
            y = (c_re[j] * cs - c_im[j] * sn) - k_re
            t = s_re + y
            k_re = (t - s_re) - y
            s_re = t
            y = (c_re[j] * sn + c_im[j] * cs) - k_im
            t = s_im + y
            k_im = (t - s_im) - y
            s_im = t
        o[i] = s_re * s_re + s_im * s_im
    return out
