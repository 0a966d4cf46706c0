# cython: language_level=3
"""Compiled inner loops for series re-expansion.

Both routines mirror :mod:`bohrlab._kernels_py` exactly; the pure-Python
module is the reference and the fallback when this extension is missing.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def taylor_shift(const double complex[::1] coeffs, double complex w, Py_ssize_t n_terms):
    """First ``n_terms`` Taylor coefficients of ``p(w + h)`` in ``h``.

    Repeated synthetic division; pass ``i`` finalises coefficient ``i``, so
    only ``n_terms`` passes over the array are made.
    """
    cdef Py_ssize_t size = coeffs.shape[0]
    cdef Py_ssize_t i, j
    cdef double wr = w.real, wi = w.imag, cr, ci
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    if n_terms > size:
        n_terms = size
    re_arr = np.ascontiguousarray(np.real(coeffs), dtype=np.float64)
    im_arr = np.ascontiguousarray(np.imag(coeffs), dtype=np.float64)
    cdef double[::1] re = re_arr
    cdef double[::1] im = im_arr
    for i in range(n_terms):
        cr = re[size - 1]
        ci = im[size - 1]
        for j in range(size - 2, i - 1, -1):
            # c[j] += w * c[j + 1], with c[j + 1] already updated
            cr, ci = re[j] + wr * cr - wi * ci, im[j] + wr * ci + wi * cr
            re[j] = cr
            im[j] = ci
    work_arr = re_arr[:n_terms] + 1j * im_arr[:n_terms]
    return work_arr


def blaschke_factor(const double complex[::1] coeffs, double complex alpha):
    """Coefficients of ``g(z) * (z - alpha) / (1 - conj(alpha) z)``, same length."""
    cdef Py_ssize_t size = coeffs.shape[0]
    cdef Py_ssize_t n
    cdef double complex abar = alpha.conjugate()
    cdef double complex h, prev = 0
    out_arr = np.empty(size, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    for n in range(size):
        h = -alpha * coeffs[n]
        if n > 0:
            h = h + coeffs[n - 1]
        prev = h + abar * prev
        out[n] = prev
    return out_arr


def horner(const double complex[::1] coeffs, double complex w):
    """``sum_n coeffs[n] w^n``."""
    cdef Py_ssize_t n = coeffs.shape[0]
    cdef Py_ssize_t j
    cdef double complex acc = 0
    for j in range(n - 1, -1, -1):
        acc = acc * w + coeffs[j]
    return acc
