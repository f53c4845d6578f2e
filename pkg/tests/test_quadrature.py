import math

import numpy as np
import pytest

from xispec.errors import ConvergenceError
from xispec.quadrature import adaptive_panels, gauss_panels, tanh_sinh


def test_gauss_panels_polynomial_exact():
    val = gauss_panels(lambda x: x**5 - 2 * x + 1, -1.0, 2.0, panels=3)
    exact = (2.0**6 - 1.0) / 6 - (2.0**2 - 1.0) + 3.0
    assert abs(val - exact) < 1e-13


def test_adaptive_panels_oscillatory():
    val, err = adaptive_panels(lambda x: np.cos(40 * x), 0.0, 3.0, 1e-13, 1e-12)
    assert abs(val - math.sin(120.0) / 40.0) < 1e-12
    assert err < 1e-10


def test_adaptive_panels_reports_failure():
    # a step function never settles to 1e-15 under panel doubling
    with pytest.raises(ConvergenceError) as exc:
        adaptive_panels(lambda x: np.sign(x - math.pi / 10), 0.0, 1.0,
                        1e-15, 1e-15, max_doublings=4)
    assert exc.value.achieved is not None


def test_tanh_sinh_log_singularity():
    # int_0^{pi/2} 2 log sin theta dtheta = -pi log 2, the width-function
    # normalisation constant (derivable from the sin doubling identity)
    val = tanh_sinh(lambda t: 2.0 * np.log(np.sin(t)), 0.0, math.pi / 2)
    assert abs(val + math.pi * math.log(2.0)) < 1e-12


def test_tanh_sinh_inverse_sqrt():
    val = tanh_sinh(lambda t: 1.0 / np.sqrt(t), 0.0, 4.0)
    assert abs(val - 4.0) < 1e-12
