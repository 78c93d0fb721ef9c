"""Exact and asymptotic tunneling probabilities of the harmonic oscillator.

The probability that the n-th oscillator eigenstate is found beyond its
classical turning points is P_n = 2 int_nu^inf psi_n(x)^2 dx, nu = sqrt(2n+1).
This package evaluates P_n exactly by adaptive quadrature, through Airy-type
asymptotic formulas with computed coefficients, and through a uniform
turning-point approximation with an explicit error bound, plus the sweeps
that validate them against each other.
"""

from .specfun import (GAMMA, AiryValue, GammaConstants, OscillatorState,
                      airy_ai, airy_ai_prime, hermite_psi, hermite_psi_squared)
from .quadrature import (DEFAULT_CONFIG, NonConvergenceError, QuadratureConfig,
                         TruncationFailureError, TunnelingResult,
                         integrate_finite, integrate_semi_infinite,
                         tunneling_exact)
from .asymptotics import (C1, C2, F_INFINITY, IterationLimitError, OlverApprox,
                          ZetaPoint, big_f_n, f_n, f_of_x, leading_term,
                          olver_approx, second_order, x_of_zeta, zeta_of_x)
from .analysis import (ComparisonRow, FigureData, LemmaReport, compare_sweep,
                       figure_dataset, lemma_check, ratio_sweep)

__version__ = "0.1.0"

__all__ = [
    "GAMMA", "AiryValue", "GammaConstants", "OscillatorState",
    "airy_ai", "airy_ai_prime", "hermite_psi", "hermite_psi_squared",
    "DEFAULT_CONFIG", "NonConvergenceError", "QuadratureConfig",
    "TruncationFailureError", "TunnelingResult",
    "integrate_finite", "integrate_semi_infinite", "tunneling_exact",
    "C1", "C2", "F_INFINITY", "IterationLimitError", "OlverApprox",
    "ZetaPoint", "big_f_n", "f_n", "f_of_x", "leading_term", "olver_approx",
    "second_order", "x_of_zeta", "zeta_of_x",
    "ComparisonRow", "FigureData", "LemmaReport", "compare_sweep",
    "figure_dataset", "lemma_check", "ratio_sweep",
    "__version__",
]
