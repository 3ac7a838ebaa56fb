#pragma once

#include <functional>
#include <string>
#include <variant>

#include "kzeta/series.hpp"

namespace kzeta {

// Integrands on (0, inf).

/// x^{s-1} / sinh x, integrable iff s > 1.
struct CschMellin {
  double s;
};
/// x^{s-1} / cosh x, integrable iff s > 0.
struct SechMellin {
  double s;
};
/// t^{s-1} tanh(J t) / sinh t, integrable iff s > 0.
struct TanhBridge {
  double s;
  int J;
};
/// t^{2n} / sinh(pi t), integrable iff n >= 1.
struct CschPi {
  int n;
};
/// Any caller-supplied integrand, assumed integrable.
struct Regularized {
  std::function<double(double)> f;
  std::string label;
};

using Integrand = std::variant<CschMellin, SechMellin, TanhBridge, CschPi, Regularized>;

/// Pointwise value; exponentially small factors below 1e-300 are flushed.
double evaluate(const Integrand& f, double x);

/// Throws DomainError if the integrand is not integrable on (0, inf).
void require_integrable(const Integrand& f);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |difference of the last two levels|
  long evaluations = 0;
};

/// Double-exponential (exp-sinh) trapezoid on (0, inf). The step is halved
/// until two successive levels agree within target_abs_error (or to a
/// relative 64 ulp floor for large integrals); after 12 halvings
/// NoConvergence is thrown with the best estimate.
QuadratureResult integrate_semi_infinite(const Integrand& f, double target_abs_error = 1e-13);

/// Same scheme for an arbitrary function on [a, inf).
QuadratureResult integrate_from(const std::function<double(double)>& f, double a,
                                double target_abs_error = 1e-13);

/// Tanh-sinh trapezoid on [a, b]; tolerates integrable endpoint behaviour.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double target_abs_error = 1e-13);

/// Composite Gauss-Legendre (20 nodes per panel) on [a, b].
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int panels);

/// zeta(s) = int x^{s-1}/sinh x dx / (2 (1-2^{-s}) Gamma(s)), s > 1.
double zeta_via_sinh(double s);

/// beta(s) = int x^{s-1}/cosh x dx / (2 Gamma(s)), s > 0.
double beta_via_cosh(double s);

/// xi_s(J) = int t^{s-1} tanh(J t)/sinh t dt / (2 Gamma(s)).
XiResult bridge_xi(double s, int J);

/// int_0^inf t^{2n} / sinh(pi t) dt for n >= 1.
double ck_kernel_integral(int n);

}  // namespace kzeta
