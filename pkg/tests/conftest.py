import numpy as np
import pytest

from bohrlab import _kernels_py

try:
    from bohrlab import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def fft_coefficients(fn, count, radius=1.0, points=4096):
    """Taylor coefficients of ``fn`` from samples on ``|z| = radius``."""
    theta = 2 * np.pi * np.arange(points) / points
    z = radius * np.exp(1j * theta)
    values = np.array([fn(x) for x in z])
    c = np.fft.fft(values) / points
    return c[:count] / radius ** np.arange(count)
