#pragma once

namespace gi0 {

/// Natural log of the Gamma function for x > 0.
/// Relative error below 1e-12 on [0.5, 1e6] (Lanczos approximation, g=7).
double log_gamma(double x);

/// Digamma function for x > 0. Absolute error below 1e-10 on [1e-3, 1e6];
/// satisfies digamma(x+1) == digamma(x) + 1/x to ~1e-12.
double digamma(double x);

/// Regularized incomplete beta function I_x(a, b), a, b > 0, 0 <= x <= 1.
/// Continued-fraction evaluation, absolute error below 1e-10.
double inc_beta_reg(double a, double b, double x);

}  // namespace gi0
