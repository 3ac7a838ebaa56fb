#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "kzeta/summation.hpp"

namespace kzeta {

struct AcceleratedSum {
  double value = 0.0;
  double error_estimate = 0.0;
  int terms = 0;
};

/// Default number of terms for sum_alternating. The truncation error of the
/// scheme shrinks like (3+sqrt 8)^-n, so 40 terms sit well below double
/// rounding for any bounded first term.
inline constexpr int kAlternatingTerms = 40;

/// Weights w_k such that sum_k w_k a_k approximates sum_k (-1)^k a_k
/// (Cohen-Rodriguez Villegas-Zagier, Chebyshev-based). Tables for
/// n <= 128 are built once and shared; first use is thread-safe.
std::span<const double> alternating_weights(int n);

/// Accelerated sum of sum_{k>=0} (-1)^k a_k.
///
/// Exact convergence rate holds when a_k is a moment sequence of a positive
/// measure on [0,1] (e.g. a_k = (ak+b)^-s with s > 0, or any positive
/// combination of such). term(k) must return a_k.
template <class Term>
AcceleratedSum sum_alternating(Term&& term, int n = kAlternatingTerms) {
  const auto weights = alternating_weights(n);
  CompensatedSum acc;
  double magnitude = 0.0;
  double first = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = term(static_cast<std::size_t>(k));
    if (k == 0) first = a;
    const double wa = weights[static_cast<std::size_t>(k)] * a;
    acc.add(wa);
    magnitude += std::abs(wa);
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double truncation = 2.0 * std::abs(first) * std::pow(3.0 + std::sqrt(8.0), -n);
  return {acc.value(), truncation + 4.0 * eps * magnitude, n};
}

}  // namespace kzeta
