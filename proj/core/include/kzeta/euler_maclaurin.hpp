#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kzeta/fpi.hpp"

namespace kzeta {

/// B_{2m}(1/2) = (2^{1-2m} - 1) B_{2m}, exact, 1 <= m <= 20.
Rational bernoulli_half(int m);

/// (1/J) sum_j f(x_j) - (1/pi) int_0^pi f(x) dx for f(x) = sin(kx)/sin x,
/// k odd and positive. The integral is computed by Gauss-Legendre panels.
double midpoint_residual(std::int64_t k, int J);

enum class Endpoint { Zero, Pi };

/// order-th derivative of sin(kx)/sin x at an endpoint, from exact
/// power-series division (the raw quotient is 0/0 there).
Rational endpoint_derivative_exact(std::int64_t k, Endpoint end, int order = 1);
double endpoint_derivative(std::int64_t k, Endpoint end, int order = 1);

/// m-th midpoint Euler-Maclaurin correction
///   B_{2m}(1/2)/(2m)! (pi/J)^{2m-1} (f^{(2m-1)}(pi) - f^{(2m-1)}(0)).
double em_correction(std::int64_t k, int J, int m);

struct EmAnalysis {
  std::int64_t k = 0;
  std::vector<int> J_values;
  std::vector<double> residuals;
  /// Slope of log|r| against log J over nonzero residuals; empty when
  /// fewer than two residuals exceed 1e-14 (rate undefined).
  std::optional<double> fitted_exponent;
  double first_correction = 0.0;  // m = 1 term at J_values.front()
};

/// J_values must be strictly increasing with at least three entries.
EmAnalysis decay_exponent(std::int64_t k, std::span<const int> J_values);

}  // namespace kzeta
