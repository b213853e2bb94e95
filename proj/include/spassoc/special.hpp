#pragma once

namespace spassoc {

/// Regularized upper incomplete gamma function Q(a, x) = Gamma(x; a) / Gamma(a)
/// for a > 0, x >= 0. Series/continued-fraction split with log-domain
/// prefactors; relative error around 1e-14 over the tested range.
double upper_reg_gamma(double a, double x);

/// Regularized incomplete beta function I_x(a, b) for x in [0, 1], a, b > 0.
/// Lentz continued fraction with a log-domain prefactor; stable for shape
/// parameters well beyond 1e6.
double reg_inc_beta(double x, double a, double b);

}  // namespace spassoc
