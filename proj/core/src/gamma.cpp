#include "kzeta/gamma.hpp"

#include <array>
#include <cmath>
#include <string>

#include "kzeta/elementary.hpp"
#include "kzeta/errors.hpp"

namespace kzeta {

namespace {

// Lanczos coefficients for g = 607/128 (Godfrey).
constexpr double kLanczosShift = 5.24218750000000000;  // g + 1/2
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr double kSqrtTwoPi = 2.5066282746310005;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

double lanczos_series(double x) {
  double ser = kLanczosC0;
  double y = x;
  for (double c : kLanczos) ser += c / ++y;
  return ser;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  const double tmp = x + kLanczosShift;
  return (x + 0.5) * std::log(tmp) - tmp + std::log(kSqrtTwoPi * lanczos_series(x) / x);
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at " + std::to_string(x));
  }
  if (x < 0.5) return kPi / (sin_pi(x) * gamma(1.0 - x));
  if (x > 171.7) return HUGE_VAL;
  const double tmp = x + kLanczosShift;
  // tmp^(x+1/2) split in two halves so it cannot overflow before exp(-tmp) scales it.
  const double half = std::pow(tmp, 0.5 * (x + 0.5));
  return kSqrtTwoPi * lanczos_series(x) / x * (half * std::exp(-tmp)) * half;
}

}  // namespace kzeta
