#include "kzeta/fpi.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "kzeta/elementary.hpp"
#include "kzeta/errors.hpp"
#include "kzeta/gamma.hpp"
#include "kzeta/quadrature.hpp"
#include "kzeta/series.hpp"

namespace kzeta {

namespace {

using boost::multiprecision::cpp_int;

constexpr int kMaxSpecialIndex = 60;
constexpr int kMaxExpansionOrder = 40;
// Near-origin remainder evaluation uses kernel indices below this bound
// (exponents up to 57 for csch, 58 for sech).
constexpr int kSeriesIndices = 30;
constexpr double kSeriesSwitch = 0.5;

cpp_int binomial(int n, int k) {
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

cpp_int factorial(int n) {
  cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<Rational> build_bernoulli() {
  std::vector<Rational> b(kMaxSpecialIndex + 1);
  b[0] = 1;
  for (int n = 1; n <= kMaxSpecialIndex; ++n) {
    Rational acc = 0;
    for (int k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  return b;
}

std::vector<Rational> build_euler() {
  std::vector<Rational> e(kMaxSpecialIndex + 1);
  e[0] = 1;
  for (int n = 1; n <= kMaxSpecialIndex; ++n) {
    if (n % 2 != 0) continue;
    Rational acc = 0;
    for (int k = 0; k < n; k += 2) acc += Rational(binomial(n, k)) * e[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(n)] = -acc;
  }
  return e;
}

const std::vector<Rational>& table(SpecialNumberKind kind) {
  static const std::vector<Rational> bernoulli = build_bernoulli();
  static const std::vector<Rational> euler = build_euler();
  return kind == SpecialNumberKind::Bernoulli ? bernoulli : euler;
}

int kernel_exponent(Kernel kernel, int index) {
  return kernel == Kernel::Csch ? 2 * index - 1 : 2 * index;
}

Rational kernel_coefficient(Kernel kernel, int index) {
  const int n2 = 2 * index;
  if (kernel == Kernel::Csch) {
    const Rational& b = table(SpecialNumberKind::Bernoulli)[static_cast<std::size_t>(n2)];
    return (Rational(2) - Rational(cpp_int(1) << n2)) * b / Rational(factorial(n2));
  }
  return table(SpecialNumberKind::Euler)[static_cast<std::size_t>(n2)] / Rational(factorial(n2));
}

struct DoubleTerm {
  int exponent;
  double coefficient;
};

const std::vector<DoubleTerm>& double_expansion(Kernel kernel) {
  auto build = [](Kernel k) {
    std::vector<DoubleTerm> terms;
    for (int i = 0; i < kSeriesIndices; ++i) {
      terms.push_back({kernel_exponent(k, i), kernel_coefficient(k, i).convert_to<double>()});
    }
    return terms;
  };
  static const std::vector<DoubleTerm> csch = build(Kernel::Csch);
  static const std::vector<DoubleTerm> sech = build(Kernel::Sech);
  return kernel == Kernel::Csch ? csch : sech;
}

// x^p K(x), e^{-x} flushed below 1e-300.
double raw_integrand(Kernel kernel, int power, double x) {
  if (x >= 1.0 && std::exp(-x) < 1e-300) return 0.0;
  const double k = kernel == Kernel::Csch ? 1.0 / std::sinh(x) : 1.0 / std::cosh(x);
  return std::pow(x, power) * k;
}

double mellin(Kernel kernel, double s) {
  if (kernel == Kernel::Csch) {
    return 2.0 * one_minus_two_pow_neg(s) * gamma(s) * dirichlet_value(DirichletKind::Zeta, s);
  }
  return 2.0 * gamma(s) * dirichlet_value(DirichletKind::Beta, s);
}

}  // namespace

std::vector<Rational> special_numbers(SpecialNumberKind kind, int n_max) {
  if (n_max < 0) throw DomainError("special_numbers: n_max must be non-negative");
  if (n_max > kMaxSpecialIndex) {
    throw CapacityError("special_numbers: n_max " + std::to_string(n_max) + " exceeds " +
                        std::to_string(kMaxSpecialIndex));
  }
  const auto& t = table(kind);
  return {t.begin(), t.begin() + n_max + 1};
}

double KernelExpansion::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    acc += coefficients[i].convert_to<double>() * std::pow(x, exponents[i]);
  }
  return acc;
}

KernelExpansion kernel_expansion(Kernel kernel, int order) {
  if (order > kMaxExpansionOrder) {
    throw CapacityError("kernel_expansion: order " + std::to_string(order) + " exceeds " +
                        std::to_string(kMaxExpansionOrder));
  }
  KernelExpansion ex;
  ex.kernel = kernel;
  ex.order = order;
  for (int i = 0; kernel_exponent(kernel, i) <= order; ++i) {
    ex.exponents.push_back(kernel_exponent(kernel, i));
    ex.coefficients.push_back(kernel_coefficient(kernel, i));
  }
  return ex;
}

int min_expansion_order(Kernel kernel, int power) {
  int order = kernel_exponent(kernel, 0);
  for (int i = 0; power + kernel_exponent(kernel, i) < 0; ++i) order = kernel_exponent(kernel, i);
  return order;
}

int default_expansion_order(int power) { return std::abs(power) + 6; }

FinitePartResult finite_part(Kernel kernel, int power, double split_point,
                             std::optional<int> expansion_order) {
  if (power > -1) throw DomainError("finite_part: power must be <= -1");
  if (!(split_point > 0.0) || !std::isfinite(split_point)) {
    throw DomainError("finite_part: split point must be positive and finite");
  }
  const int order = expansion_order.value_or(default_expansion_order(power));
  if (order < min_expansion_order(kernel, power)) {
    throw DomainError("finite_part: expansion order " + std::to_string(order) +
                      " leaves divergent terms unsubtracted");
  }
  const KernelExpansion ex = kernel_expansion(kernel, order);

  FinitePartResult result;
  result.split_point = split_point;
  for (std::size_t i = 0; i < ex.exponents.size(); ++i) {
    const int alpha = power + ex.exponents[i];
    if (alpha == -1) {
      throw UnsupportedConfiguration(
          "finite_part: subtracted exponent -1 (logarithmic finite part not supported)");
    }
    result.subtracted_terms.push_back({alpha, ex.coefficients[i].convert_to<double>()});
  }

  double compensation = 0.0;
  for (const auto& t : result.subtracted_terms) {
    compensation += t.coefficient * std::pow(split_point, t.exponent + 1) / (t.exponent + 1);
  }
  result.compensation = compensation;

  // Near zero the subtracted integrand is the convergent Laurent tail; the
  // direct difference would cancel catastrophically there.
  const auto& series = double_expansion(kernel);
  const auto subtracted = result.subtracted_terms;
  auto remainder = [&series, &subtracted, kernel, power, order](double x) {
    if (x <= kSeriesSwitch) {
      double acc = 0.0;
      for (auto it = series.rbegin(); it != series.rend(); ++it) {
        if (it->exponent <= order) break;
        acc += it->coefficient * std::pow(x, power + it->exponent);
      }
      return acc;
    }
    double acc = raw_integrand(kernel, power, x);
    for (const auto& t : subtracted) acc -= t.coefficient * std::pow(x, t.exponent);
    return acc;
  };

  const QuadratureResult regular = integrate_interval(remainder, 0.0, split_point);
  const QuadratureResult tail = integrate_from(
      [kernel, power](double x) { return raw_integrand(kernel, power, x); }, split_point);

  result.regular_part = regular.value;
  result.tail = tail.value;
  result.value = result.regular_part + result.compensation + result.tail;
  result.error_estimate = regular.error_estimate + tail.error_estimate;
  return result;
}

double ac_reference(Kernel kernel, double s) {
  if (std::isnan(s)) throw DomainError("ac_reference: NaN argument");
  if (!(s <= 0.0 && s == std::floor(s))) return mellin(kernel, s);

  // Gamma has a pole at s; average symmetric offsets and extrapolate.
  constexpr std::array<double, 3> offsets = {1e-3, 5e-4, 2.5e-4};
  std::array<double, 3> even{};
  std::array<double, 3> odd{};
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const double up = mellin(kernel, s + offsets[i]);
    const double down = mellin(kernel, s - offsets[i]);
    even[i] = 0.5 * (up + down);
    odd[i] = 0.5 * (up - down);
  }
  // A surviving simple pole makes the odd part grow like 1/eps.
  if (std::abs(odd[2]) * offsets[2] > 1e-12 && std::abs(odd[0]) < std::abs(odd[2])) {
    throw PoleError("ac_reference: Mellin transform has a pole at s = " + std::to_string(s));
  }
  const double r0 = (4.0 * even[1] - even[0]) / 3.0;
  const double r1 = (4.0 * even[2] - even[1]) / 3.0;
  return (16.0 * r1 - r0) / 15.0;
}

}  // namespace kzeta
