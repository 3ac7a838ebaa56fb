#pragma once

#include <cstdint>
#include <numbers>

namespace kzeta {

inline constexpr double kPi = std::numbers::pi;

/// sin(pi*x) with the argument reduced exactly before multiplying by pi,
/// so zeros at the integers are exact and values near them keep full
/// relative accuracy.
double sin_pi(double x);

/// cos(pi*x), same reduction as sin_pi; exact zeros at half-integers.
double cos_pi(double x);

/// sin(pi*num/den) for integers, reduced modulo 2*den in integer
/// arithmetic. den must be positive.
double sin_pi_ratio(std::int64_t num, std::int64_t den);

/// cos(pi*num/den) for integers. den must be positive.
double cos_pi_ratio(std::int64_t num, std::int64_t den);

/// 1 - 2^{-s}, accurate when s is near zero.
double one_minus_two_pow_neg(double s);

}  // namespace kzeta
