#include "kzeta/series.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "kzeta/alternating.hpp"
#include "kzeta/elementary.hpp"
#include "kzeta/errors.hpp"
#include "kzeta/gamma.hpp"
#include "kzeta/summation.hpp"

namespace kzeta {

namespace {

constexpr long kClausenTerms = 100000;
constexpr int kTailOrder = 12;

double eta_series(double s) {
  return sum_alternating([s](std::size_t k) { return std::pow(static_cast<double>(k + 1), -s); })
      .value;
}

double beta_series(double s) {
  return sum_alternating(
             [s](std::size_t k) { return std::pow(static_cast<double>(2 * k + 1), -s); })
      .value;
}

double zeta_value(double s) {
  if (s == 1.0) throw PoleError("zeta: pole at s = 1");
  if (s > 0.5) {
    // zeta = eta / (1 - 2^{1-s})
    return eta_series(s) / -std::expm1((1.0 - s) * std::numbers::ln2);
  }
  if (s == 0.0) return -0.5;
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  const double t = 1.0 - s;
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sin_pi(0.5 * s) * gamma(t) * zeta_value(t);
}

double beta_value(double s) {
  if (s > 0.5) return beta_series(s);
  // beta(s) = (2/pi)^{1-s} cos(pi s/2) Gamma(1-s) beta(1-s)
  const double t = 1.0 - s;
  return std::pow(2.0 / kPi, t) * cos_pi(0.5 * s) * gamma(t) * beta_series(t);
}

// Tail sum_{k >= M} e^{ik theta} k^{-s} via repeated summation by parts:
//   z^M sum_j Delta^j f(M) z^j / (1-z)^{j+1},   z = e^{i theta}.
// The series is asymptotic when M |1-z| is not large, so it is cut at the
// smallest term. Differences are taken in long double.
struct TailSum {
  double value;
  double error;
  int terms;
};

TailSum oscillatory_tail(double s, double theta, long M) {
  using cld = std::complex<long double>;
  std::vector<long double> f(kTailOrder + 1);
  for (int i = 0; i <= kTailOrder; ++i) {
    f[static_cast<std::size_t>(i)] = std::pow(static_cast<long double>(M + i), -static_cast<long double>(s));
  }
  const cld z = std::polar(1.0L, static_cast<long double>(theta));
  const cld zM = std::polar(1.0L, std::fmod(static_cast<long double>(M) * theta, 2.0L * std::numbers::pi_v<long double>));
  const cld one_minus_z = 1.0L - z;
  const cld ratio = z / one_minus_z;

  cld acc = 0.0L;
  cld factor = zM / one_minus_z;
  long double previous = HUGE_VALL;
  int used = 0;
  long double last = 0.0L;
  for (int j = 0; j <= kTailOrder; ++j) {
    // Delta^j f(M), f overwritten in place by successive differences.
    const long double diff = f[0];
    const cld term = factor * diff;
    const long double mag = std::abs(term);
    if (mag > previous) break;
    acc += term;
    ++used;
    last = mag;
    previous = mag;
    if (mag < 1e-22L) break;
    for (int i = 0; i + 1 <= kTailOrder - j; ++i) {
      f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i + 1)] - f[static_cast<std::size_t>(i)];
    }
    factor *= ratio;
  }
  return {static_cast<double>(acc.imag()), static_cast<double>(last), used};
}

template <class SinK>
ClausenValue clausen_impl(double s, double theta, SinK&& sin_k) {
  if (!(s > 1.0)) throw DomainError("clausen_sl: series diverges for s <= 1");
  if (!(theta > 0.0 && theta < 2.0 * kPi)) {
    throw DomainError("clausen_sl: theta must lie in (0, 2 pi)");
  }
  CompensatedSum acc;
  for (long k = 1; k <= kClausenTerms; ++k) {
    acc.add(sin_k(k) * std::pow(static_cast<double>(k), -s));
  }
  const TailSum tail = oscillatory_tail(s, theta, kClausenTerms + 1);
  acc.add(tail.value);
  return {s, theta, acc.value(), kClausenTerms + tail.terms};
}

}  // namespace

double dirichlet_value(DirichletKind kind, double s) {
  if (std::isnan(s)) throw DomainError("dirichlet_value: NaN argument");
  return kind == DirichletKind::Zeta ? zeta_value(s) : beta_value(s);
}

ClausenValue clausen_sl(double s, double theta) {
  return clausen_impl(s, theta, [theta](long k) { return std::sin(static_cast<double>(k) * theta); });
}

ClausenValue clausen_sl_rational(double s, long num, long den) {
  if (den <= 0) throw DomainError("clausen_sl_rational: denominator must be positive");
  const double theta = kPi * static_cast<double>(num) / static_cast<double>(den);
  return clausen_impl(s, theta, [num, den](long k) {
    return sin_pi_ratio(static_cast<std::int64_t>(k) * num, den);
  });
}

std::string_view to_string(XiMethod method) {
  switch (method) {
    case XiMethod::DirectSeries: return "DirectSeries";
    case XiMethod::ClausenAverage: return "ClausenAverage";
    case XiMethod::Bridge: return "Bridge";
  }
  return "?";
}

XiResult xi(double s, int J, XiVariant variant) {
  if (!(s > 1.0)) throw DomainError("xi: requires s > 1");
  if (J < 1) throw DomainError("xi: J must be >= 1");
  const bool alternating = variant == XiVariant::Alternating;
  if (alternating && J % 2 != 0) {
    throw UnsupportedConfiguration("xi: alternating variant needs even J");
  }
  const double block_len = 2.0 * J;
  auto block = [&](std::size_t m) {
    CompensatedSum acc;
    const double base = block_len * static_cast<double>(m) + 1.0;
    for (int j = 0; j < J; ++j) {
      const double term = std::pow(base + 2.0 * j, -s);
      acc.add(alternating && (j % 2 != 0) ? -term : term);
    }
    return acc.value();
  };
  const AcceleratedSum sum = sum_alternating(block);
  return {s, J, sum.value, XiMethod::DirectSeries, sum.error_estimate,
          static_cast<long>(sum.terms) * J};
}

double xi_checkpoint(double s, int J) {
  const double pi3 = kPi * kPi * kPi;
  const double r2 = std::numbers::sqrt2;
  if (s == 3.0) {
    switch (J) {
      case 1: return pi3 / 32.0;
      case 2: return 3.0 * r2 * pi3 / 128.0;
      case 4: return pi3 / 8192.0 * (240.0 - 64.0 * r2) * std::sqrt(2.0 + r2);
      case 8:
        return pi3 / 12288.0 *
               (138.0 * std::sin(kPi / 16.0) + 516.0 * std::sin(3.0 * kPi / 16.0) -
                96.0 * std::cos(3.0 * kPi / 16.0) + 186.0 * std::cos(kPi / 16.0));
      default: break;
    }
  }
  if (s == 2.0 && J == 1) return kCatalan;
  throw NotAvailable("xi_checkpoint: no closed form for s = " + std::to_string(s) +
                     ", J = " + std::to_string(J));
}

double clausen_average(double s, int J) {
  if (J < 1) throw DomainError("clausen_average: J must be >= 1");
  const long den = 2L * J;
  CompensatedSum acc;
  for (long j = 0; j < J; ++j) {
    const long num = 2 * j + 1;
    acc.add(clausen_sl_rational(s, num, den).value / sin_pi_ratio(num, den));
  }
  return acc.value() / static_cast<double>(J);
}

}  // namespace kzeta
