#include "kzeta/elementary.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace kzeta {

namespace {

// sin(pi r) for |r| <= 1, folding to |r| <= 1/2 with exact subtractions.
double sin_pi_reduced(double r) {
  if (r > 0.5) return std::sin(kPi * (1.0 - r));
  if (r < -0.5) return -std::sin(kPi * (1.0 + r));
  return std::sin(kPi * r);
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  return sin_pi_reduced(r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(std::abs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  if (r < 0.25) return std::cos(kPi * r);
  return std::sin(kPi * (0.5 - r));
}

double sin_pi_ratio(std::int64_t num, std::int64_t den) {
  const std::int64_t period = 2 * den;
  std::int64_t r = num % period;
  if (r < 0) r += period;
  double sign = 1.0;
  if (r >= den) {
    r -= den;
    sign = -1.0;
  }
  if (2 * r > den) r = den - r;
  return sign * std::sin(kPi * (static_cast<double>(r) / static_cast<double>(den)));
}

double cos_pi_ratio(std::int64_t num, std::int64_t den) {
  return sin_pi_ratio(den - 2 * num, 2 * den);
}

double one_minus_two_pow_neg(double s) { return -std::expm1(-s * std::numbers::ln2); }

}  // namespace kzeta
