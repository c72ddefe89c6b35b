#pragma once

#include <complex>

#include "cesarolab/errors.hpp"

namespace cesarolab {

using Complex = std::complex<double>;

// Principal-branch log Gamma, continuous on the cut plane, log_gamma(1) = 0.
// Lanczos sum for Re z >= 1/2, upward recurrence otherwise.
// Throws PoleError at z in {0, -1, -2, ...}.
Complex log_gamma(Complex z);

// Gamma(z) / Gamma(w) = exp(log_gamma(z) - log_gamma(w)).
// Stable for |Im| up to ~1e4: the logs are differenced before exponentiating.
Complex gamma_ratio(Complex z, Complex w);

// 1 / Gamma(z); returns 0 at the poles instead of throwing.
Complex reciprocal_gamma(Complex z);

// Euler Beta B(x, y) = Gamma(x) Gamma(y) / Gamma(x+y).
Complex beta_fn(Complex x, Complex y);

// Digamma psi(z) by recurrence into Re z >= 8 plus the asymptotic series.
Complex digamma(Complex z);

// Gauss hypergeometric 2F1(a, b; c; x) for real x < 1.
//   series        |x| <= 0.9 (terminating cases exact for any x)
//   Pfaff map     x <= -0.5  ->  argument x/(x-1) in (1/3, 1)
//   connection in w = 1-x for x > 0.9, including the integer c-a-b cases.
// Throws ParameterError (c pole, x >= 1), ConvergenceError.
Complex gauss_2f1(Complex a, Complex b, Complex c, double x);

// Same function with w = 1-x supplied exactly; needed by quadratures whose
// nodes approach x = 1 closer than double spacing.
Complex gauss_2f1_w(Complex a, Complex b, Complex c, double one_minus_x);

// Mittag-Leffler E_{beta,1}(z) by series with compensated summation.
// Desk-scale envelope |z| <= 50; ConvergenceError outside or on term overflow.
Complex mittag_leffler(double beta, Complex z);

}  // namespace cesarolab
