"""xispec: numerics around the Riemann xi function viewed as a spectral
characteristic function.

The package cross-validates, against each other and against closed forms:

* the xi function by two independent routes (Fourier transform of Polya's
  Phi; the Gamma * zeta product), with the Hardy-style scaling functions;
* modified Bessel K and Whittaker W functions of imaginary order/index;
* semiclassical inverse-spectral tools (Weyl action, Abel inversion,
  imaginary tunnelling time) for the exponential width family, including
  the beta = 4 pi kappa and gamma = 0 matching conditions;
* Gelfand-Yaglom shooting characteristic functions for a zoo of 1D
  potentials, with LGWKB asymptotics on both sides of the spectrum;
* the Riemann-Siegel main sum; and
* the magnetic-cusp mode sum with configurable coefficient policies.
"""

__version__ = "0.1.0"

from .config import Config, QuadratureConfig, ShootingConfig, WhittakerConfig, load_config
from .cusp import (CoefficientPolicy, characteristic_sum, cusp_embedding,
                   dirichlet_point_factor, flux_check, flux_shifted_expansion,
                   magnetic_laplacian_residual, mode_on_grid)
from .errors import (AsymptoticRegimeError, ConvergenceError, DomainError,
                     EvaluationError, GridAdjustmentError, IntegrationError,
                     RangeError, ResolutionError, SeedError,
                     UnsupportedShapeError, ValidationError, XispecError)
from .gammazeta import digamma, log_gamma, zeta_critical, zeta_em
from .riemann_siegel import (RSComparison, match_zeros, rs_compare,
                             rs_main_sum, rs_phase, rs_term_count)
from .semiclassical import (CountingFunction, WidthFunction, abel_invert,
                            fit_beta, imaginary_time, imaginary_time_closed,
                            imaginary_time_expansion, log_width,
                            riemann_count, weyl_action,
                            whittaker_logderiv_asymptotic, width_from_counting,
                            xi_logderiv_asymptotic)
from .shooting import (CharacteristicSamples, PotentialSpec, ShootingState,
                       characteristic_one_sided, characteristic_one_sided_log,
                       characteristic_two_sided, characteristic_two_sided_log,
                       cosh_potential, decaying_solution, exp_one_sided,
                       exp_two_sided, find_zeros, lgwkb_R, lgwkb_oscillatory,
                       morse, reconstruct_characteristic, tzitzeica)
from .special import (bessel_K, big_Z, jacobi_psi, jacobi_theta, phi,
                      polya_fake_xi, prefactor_f, scaling_S, xi, xi_fourier,
                      xi_zeta)
from .whittaker import (whittaker_W, whittaker_W_grid, whittaker_W_log,
                        whittaker_asymptotic, whittaker_ode_residual)
