#include "kzeta/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "kzeta/elementary.hpp"
#include "kzeta/errors.hpp"
#include "kzeta/gamma.hpp"
#include "kzeta/summation.hpp"

namespace kzeta {

namespace {

constexpr double kHalfPi = 0.5 * kPi;
constexpr int kMaxLevels = 12;
constexpr double kBaseStep = 0.5;
constexpr double kMinTarget = 1e-13;
constexpr double kFlush = 1e-300;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// x^a / sinh(x) and x^a / cosh(x) for x > 0 with e^{-x} flushed below 1e-300.
double power_over_sinh(double x, double a) {
  if (x < 1.0) return std::pow(x, a) / std::sinh(x);
  if (std::exp(-x) < kFlush) return 0.0;
  return 2.0 * std::exp(a * std::log(x) - x) / -std::expm1(-2.0 * x);
}

double power_over_cosh(double x, double a) {
  if (x < 1.0) return std::pow(x, a) / std::cosh(x);
  if (std::exp(-x) < kFlush) return 0.0;
  return 2.0 * std::exp(a * std::log(x) - x) / (1.0 + std::exp(-2.0 * x));
}

// Maps t in R to a node x and weight dx/dt.
struct Node {
  double x;
  double weight;
};

// (a, inf): x = a + exp(pi/2 sinh t)
struct ExpSinh {
  double a;
  double t_max = 6.5;
  Node operator()(double t) const {
    const double u = kHalfPi * std::sinh(t);
    const double e = std::exp(u);
    return {a + e, kHalfPi * std::cosh(t) * e};
  }
};

// [a, b]: x = mid + half tanh(pi/2 sinh t), distances to the ends kept exact.
struct TanhSinh {
  double a;
  double b;
  double t_max = 4.5;
  Node operator()(double t) const {
    const double u = kHalfPi * std::sinh(t);
    const double len = b - a;
    const double c = std::cosh(u);
    const double weight = 0.5 * len * kHalfPi * std::cosh(t) / (c * c);
    if (t < 0.0) return {a + len / (1.0 + std::exp(-2.0 * u)), weight};
    return {b - len / (1.0 + std::exp(2.0 * u)), weight};
  }
};

template <class Map, class F>
QuadratureResult de_trapezoid(const Map& map, const F& f, double target, const char* who) {
  if (!(target >= kMinTarget)) {
    throw DomainError(std::string(who) + ": target_abs_error must be >= 1e-13");
  }
  long evaluations = 0;
  auto sample = [&](double t) {
    const Node node = map(t);
    if (node.weight == 0.0 || !std::isfinite(node.weight)) return 0.0;
    ++evaluations;
    return f(node.x) * node.weight;
  };

  // Level 0 over the full window; trim the tails where the transformed
  // integrand is negligible.
  const int k_max = static_cast<int>(map.t_max / kBaseStep);
  std::vector<double> coarse;
  double peak = 0.0;
  for (int k = -k_max; k <= k_max; ++k) {
    coarse.push_back(sample(k * kBaseStep));
    peak = std::max(peak, std::abs(coarse.back()));
  }
  const double negligible = 1e-20 * peak;
  int lo = 0;
  int hi = static_cast<int>(coarse.size()) - 1;
  while (lo < hi && std::abs(coarse[static_cast<std::size_t>(lo)]) <= negligible) ++lo;
  while (hi > lo && std::abs(coarse[static_cast<std::size_t>(hi)]) <= negligible) --hi;
  lo = std::max(lo - 1, 0);
  hi = std::min(hi + 1, static_cast<int>(coarse.size()) - 1);
  const double t_lo = (lo - k_max) * kBaseStep;
  const double t_hi = (hi - k_max) * kBaseStep;

  CompensatedSum sum;
  double abs_sum = 0.0;
  for (int i = lo; i <= hi; ++i) {
    sum.add(coarse[static_cast<std::size_t>(i)]);
    abs_sum += std::abs(coarse[static_cast<std::size_t>(i)]);
  }
  double h = kBaseStep;
  double estimate = h * sum.value();
  double diff = std::numeric_limits<double>::infinity();
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int level = 1; level <= kMaxLevels; ++level) {
    h *= 0.5;
    for (double t = t_lo + h; t < t_hi; t += 2.0 * h) {
      const double v = sample(t);
      sum.add(v);
      abs_sum += std::abs(v);
    }
    const double next = h * sum.value();
    diff = std::abs(next - estimate);
    estimate = next;
    if (!std::isfinite(estimate)) break;
    const double floor = 64.0 * eps * h * abs_sum;
    if (level >= 3 && diff <= std::max(target, floor)) {
      // Level agreement says nothing below the rounding noise of the sum.
      return {estimate, std::max(diff, 8.0 * eps * h * abs_sum), evaluations};
    }
  }
  throw NoConvergence(std::string(who) + ": no convergence after 12 step halvings", estimate, diff);
}

struct GaussLegendre20 {
  std::array<double, 20> nodes{};
  std::array<double, 20> weights{};
  GaussLegendre20() {
    constexpr int n = 20;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[static_cast<std::size_t>(i)] = x;
      weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre20& gauss_legendre() {
  static const GaussLegendre20 rule;
  return rule;
}

}  // namespace

double evaluate(const Integrand& f, double x) {
  return std::visit(
      Overloaded{
          [x](const CschMellin& k) { return power_over_sinh(x, k.s - 1.0); },
          [x](const SechMellin& k) { return power_over_cosh(x, k.s - 1.0); },
          [x](const TanhBridge& k) {
            return power_over_sinh(x, k.s - 1.0) * std::tanh(static_cast<double>(k.J) * x);
          },
          [x](const CschPi& k) {
            return power_over_sinh(kPi * x, 2.0 * k.n) / std::pow(kPi, 2.0 * k.n);
          },
          [x](const Regularized& k) { return k.f(x); },
      },
      f);
}

void require_integrable(const Integrand& f) {
  std::visit(Overloaded{
                 [](const CschMellin& k) {
                   if (!(k.s > 1.0)) throw DomainError("CschMellin: integrable only for s > 1");
                 },
                 [](const SechMellin& k) {
                   if (!(k.s > 0.0)) throw DomainError("SechMellin: integrable only for s > 0");
                 },
                 [](const TanhBridge& k) {
                   if (!(k.s > 0.0)) throw DomainError("TanhBridge: integrable only for s > 0");
                   if (k.J < 1) throw DomainError("TanhBridge: J must be >= 1");
                 },
                 [](const CschPi& k) {
                   if (k.n < 1) throw DomainError("CschPi: integrable only for n >= 1");
                 },
                 [](const Regularized& k) {
                   if (!k.f) throw DomainError("Regularized: empty integrand");
                 },
             },
             f);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double target_abs_error) {
  require_integrable(f);
  return de_trapezoid(ExpSinh{0.0}, [&f](double x) { return evaluate(f, x); }, target_abs_error,
                      "integrate_semi_infinite");
}

QuadratureResult integrate_from(const std::function<double(double)>& f, double a,
                                double target_abs_error) {
  if (!std::isfinite(a)) throw DomainError("integrate_from: lower limit must be finite");
  return de_trapezoid(ExpSinh{a}, f, target_abs_error, "integrate_from");
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double target_abs_error) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_interval: need finite a < b");
  }
  return de_trapezoid(TanhSinh{a, b}, f, target_abs_error, "integrate_interval");
}

double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int panels) {
  if (panels < 1) throw DomainError("integrate_gauss_legendre: panels must be >= 1");
  const auto& rule = gauss_legendre();
  const double width = (b - a) / panels;
  CompensatedSum acc;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc.add(0.5 * width * rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]));
    }
  }
  return acc.value();
}

double zeta_via_sinh(double s) {
  if (!(s > 1.0)) throw DomainError("zeta_via_sinh: requires s > 1");
  const double integral = integrate_semi_infinite(CschMellin{s}).value;
  return integral / (2.0 * one_minus_two_pow_neg(s) * gamma(s));
}

double beta_via_cosh(double s) {
  if (!(s > 0.0)) throw DomainError("beta_via_cosh: requires s > 0");
  const double integral = integrate_semi_infinite(SechMellin{s}).value;
  return integral / (2.0 * gamma(s));
}

XiResult bridge_xi(double s, int J) {
  if (!(s > 1.0)) throw DomainError("bridge_xi: requires s > 1");
  if (J < 1) throw DomainError("bridge_xi: J must be >= 1");
  const QuadratureResult q = integrate_semi_infinite(TanhBridge{s, J});
  const double norm = 2.0 * gamma(s);
  const double value = q.value / norm;
  // Gamma and the division add a few ulps of relative error.
  const double error = q.error_estimate / norm + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
  return {s, J, value, XiMethod::Bridge, error, q.evaluations};
}

double ck_kernel_integral(int n) {
  if (n < 1) throw DomainError("ck_kernel_integral: requires n >= 1");
  return integrate_semi_infinite(CschPi{n}).value;
}

}  // namespace kzeta
