#include "kzeta/euler_maclaurin.hpp"

#include <cmath>
#include <string>

#include "kzeta/elementary.hpp"
#include "kzeta/errors.hpp"
#include "kzeta/quadrature.hpp"
#include "kzeta/selector.hpp"

namespace kzeta {

namespace {

using boost::multiprecision::cpp_int;

void require_odd_positive(std::int64_t k, const char* who) {
  if (k < 1 || k % 2 == 0) throw DomainError(std::string(who) + ": k must be odd and positive");
}

// sin(kx)/sin x near x = 0, with the removable value at 0.
double quotient_near_zero(std::int64_t k, double x) {
  if (x == 0.0) return static_cast<double>(k);
  return std::sin(static_cast<double>(k) * x) / std::sin(x);
}

}  // namespace

Rational bernoulli_half(int m) {
  if (m < 1 || m > 20) throw DomainError("bernoulli_half: m must be in 1..20");
  const auto b = special_numbers(SpecialNumberKind::Bernoulli, 2 * m);
  const Rational scale = Rational(1, cpp_int(1) << (2 * m - 1)) - 1;
  return scale * b.back();
}

Rational endpoint_derivative_exact(std::int64_t k, Endpoint end, int order) {
  require_odd_positive(k, "endpoint_derivative");
  if (order < 0 || order > 30) throw DomainError("endpoint_derivative: order must be in 0..30");
  // sin(kx)/x and sin(x)/x as power series in x, then divide.
  std::vector<Rational> num(static_cast<std::size_t>(order + 1));
  std::vector<Rational> den(static_cast<std::size_t>(order + 1));
  cpp_int fact = 1;  // (2n+1)!
  cpp_int kpow = k;  // k^{2n+1}
  for (int i = 0; i <= order; i += 2) {
    const int n = i / 2;
    if (n > 0) {
      fact *= (2 * n) * (2 * n + 1);
      kpow *= k * k;
    }
    const int sign = n % 2 == 0 ? 1 : -1;
    num[static_cast<std::size_t>(i)] = Rational(sign * kpow, fact);
    den[static_cast<std::size_t>(i)] = Rational(sign, fact);
  }
  std::vector<Rational> q(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) {
    Rational acc = num[static_cast<std::size_t>(i)];
    for (int j = 1; j <= i; ++j) {
      acc -= den[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(i - j)];
    }
    q[static_cast<std::size_t>(i)] = acc / den[0];
  }
  cpp_int order_fact = 1;
  for (int i = 2; i <= order; ++i) order_fact *= i;
  // f(pi + y) = (-1)^{k+1} sin(ky)/sin(y), the same series for odd k.
  static_cast<void>(end);
  return q.back() * Rational(order_fact);
}

double endpoint_derivative(std::int64_t k, Endpoint end, int order) {
  return endpoint_derivative_exact(k, end, order).convert_to<double>();
}

double midpoint_residual(std::int64_t k, int J) {
  require_odd_positive(k, "midpoint_residual");
  const double average = selector_average(SelectorKind::SS, J, k);
  // int_0^pi f = int_0^{pi/2} [f(x) + f(pi - x)] dx and f(pi - x) = f(x) for odd k;
  // folding keeps every evaluation at a small, exactly known distance from 0.
  const auto folded = [k](double x) { return 2.0 * quotient_near_zero(k, x); };
  const int panels = 4 + static_cast<int>(k);
  const double integral = integrate_gauss_legendre(folded, 0.0, 0.5 * kPi, panels);
  return average - integral / kPi;
}

double em_correction(std::int64_t k, int J, int m) {
  if (J < 1) throw DomainError("em_correction: J must be >= 1");
  const int order = 2 * m - 1;
  const Rational jump = endpoint_derivative_exact(k, Endpoint::Pi, order) -
                        endpoint_derivative_exact(k, Endpoint::Zero, order);
  cpp_int fact = 1;
  for (int i = 2; i <= 2 * m; ++i) fact *= i;
  const double coefficient = (bernoulli_half(m) / Rational(fact)).convert_to<double>();
  // (1/J) sum f(x_j) - (1/pi) int f = sum_m B_2m(1/2)/(2m)! h^{2m-1} jump / J, h = pi/J
  const double h = kPi / J;
  return coefficient * std::pow(h, order) * jump.convert_to<double>() / J;
}

EmAnalysis decay_exponent(std::int64_t k, std::span<const int> J_values) {
  require_odd_positive(k, "decay_exponent");
  if (J_values.size() < 3) throw DomainError("decay_exponent: need at least three J values");
  for (std::size_t i = 0; i < J_values.size(); ++i) {
    if (J_values[i] < 1 || (i > 0 && J_values[i] <= J_values[i - 1])) {
      throw DomainError("decay_exponent: J values must be positive and strictly increasing");
    }
  }
  EmAnalysis out;
  out.k = k;
  out.J_values.assign(J_values.begin(), J_values.end());
  std::vector<double> xs;
  std::vector<double> ys;
  for (int J : J_values) {
    const double r = midpoint_residual(k, J);
    out.residuals.push_back(r);
    if (std::abs(r) > 1e-14) {
      xs.push_back(std::log(static_cast<double>(J)));
      ys.push_back(std::log(std::abs(r)));
    }
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    out.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  out.first_correction = em_correction(k, J_values.front(), 1);
  return out;
}

}  // namespace kzeta
