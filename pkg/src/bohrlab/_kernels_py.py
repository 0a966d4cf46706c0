"""Pure-Python (numpy/scipy) versions of the compiled kernels.

Each synthetic-division pass is a first-order linear recurrence, which
``scipy.signal.lfilter`` runs in C, so this fallback stays usable even
without the extension.
"""

import numpy as np
from scipy.signal import lfilter


def taylor_shift(coeffs, w, n_terms):
    """First ``n_terms`` Taylor coefficients of ``p(w + h)`` in ``h``."""
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    c = np.array(coeffs, dtype=np.complex128, copy=True)
    size = c.shape[0]
    n_terms = min(n_terms, size)
    w = complex(w)
    den = np.array([1.0, -w], dtype=np.complex128)
    one = np.array([1.0], dtype=np.complex128)
    for i in range(n_terms):
        # c[j] <- c[j] + w c[j+1] for j = size-2 .. i, run high to low
        c[i:] = lfilter(one, den, c[i:][::-1])[::-1]
    return c[:n_terms].copy()


def blaschke_factor(coeffs, alpha):
    """Coefficients of ``g(z) * (z - alpha) / (1 - conj(alpha) z)``, same length."""
    g = np.asarray(coeffs, dtype=np.complex128)
    alpha = complex(alpha)
    h = -alpha * g
    h[1:] += g[:-1]
    return lfilter(
        np.array([1.0], dtype=np.complex128),
        np.array([1.0, -alpha.conjugate()], dtype=np.complex128),
        h,
    )


def horner(coeffs, w):
    """``sum_n coeffs[n] w^n``."""
    c = np.asarray(coeffs, dtype=np.complex128)
    powers = np.power(complex(w), np.arange(c.shape[0]))
    return complex(np.dot(c, powers))
