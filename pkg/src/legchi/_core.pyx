# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loops: weighted sums of sin((2k+1)x) / cos((2k+1)x).

The phase e^{i(2k+1)x} advances by complex rotation (4 mul + 2 add per term)
and is resynchronised from libm every _RESYNC terms so the accumulated phase
drift stays at a few ulp. Accumulation is Kahan-compensated: the certified
series tail bounds sit near 1e-14 and a plain running sum over ~1e5 terms
would not preserve them.
"""

from libc.math cimport cos, sin

import numpy as np

DEF _RESYNC = 256


cdef void _real_kernel(const double[::1] coeffs, const double[::1] x,
                       double[::1] out, bint want_sin) noexcept nogil:
    cdef Py_ssize_t n = coeffs.shape[0], m = x.shape[0]
    cdef Py_ssize_t j, k
    cdef double xr, cr, ci, sr, si, tr
    cdef double acc, comp, term, y, t
    for j in range(m):
        xr = x[j]
        sr = cos(xr); si = sin(xr)          # e^{i(2k+1)x} at k = 0
        cr = cos(2.0 * xr); ci = sin(2.0 * xr)
        acc = 0.0; comp = 0.0
        for k in range(n):
            if k > 0 and k % _RESYNC == 0:
                sr = cos((2.0 * k + 1.0) * xr)
                si = sin((2.0 * k + 1.0) * xr)
            term = coeffs[k] * (si if want_sin else sr)
            y = term - comp
            t = acc + y
            comp = (t - acc) - y
            acc = t
            tr = sr * cr - si * ci
            si = sr * ci + si * cr
            sr = tr
        out[j] = acc


cdef void _cplx_kernel(const double complex[::1] coeffs, const double[::1] x,
                       double complex[::1] out, bint want_sin) noexcept nogil:
    cdef Py_ssize_t n = coeffs.shape[0], m = x.shape[0]
    cdef Py_ssize_t j, k
    cdef double xr, cr, ci, sr, si, tr, w
    cdef double acc_r, comp_r, acc_i, comp_i, term_r, term_i, y, t
    for j in range(m):
        xr = x[j]
        sr = cos(xr); si = sin(xr)
        cr = cos(2.0 * xr); ci = sin(2.0 * xr)
        acc_r = 0.0; comp_r = 0.0
        acc_i = 0.0; comp_i = 0.0
        for k in range(n):
            if k > 0 and k % _RESYNC == 0:
                sr = cos((2.0 * k + 1.0) * xr)
                si = sin((2.0 * k + 1.0) * xr)
            w = si if want_sin else sr
            term_r = coeffs[k].real * w
            term_i = coeffs[k].imag * w
            y = term_r - comp_r
            t = acc_r + y
            comp_r = (t - acc_r) - y
            acc_r = t
            y = term_i - comp_i
            t = acc_i + y
            comp_i = (t - acc_i) - y
            acc_i = t
            tr = sr * cr - si * ci
            si = sr * ci + si * cr
            sr = tr
        out[j].real = acc_r
        out[j].imag = acc_i


def _dispatch(coeffs, x, bint want_sin):
    coeffs = np.ascontiguousarray(coeffs)
    x = np.ascontiguousarray(x, dtype=np.float64)
    if np.iscomplexobj(coeffs):
        coeffs = coeffs.astype(np.complex128, copy=False)
        out = np.empty(x.shape[0], dtype=np.complex128)
        if coeffs.shape[0]:
            _cplx_kernel(coeffs, x, out, want_sin)
        else:
            out[:] = 0.0
        return out
    coeffs = coeffs.astype(np.float64, copy=False)
    out = np.empty(x.shape[0], dtype=np.float64)
    if coeffs.shape[0]:
        _real_kernel(coeffs, x, out, want_sin)
    else:
        out[:] = 0.0
    return out


def sin_weighted_sum(coeffs, x):
    """out[j] = sum_k coeffs[k] * sin((2k+1) * x[j])."""
    return _dispatch(coeffs, x, True)


def cos_weighted_sum(coeffs, x):
    """out[j] = sum_k coeffs[k] * cos((2k+1) * x[j])."""
    return _dispatch(coeffs, x, False)
