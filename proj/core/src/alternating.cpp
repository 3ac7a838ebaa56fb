#include "kzeta/alternating.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "kzeta/errors.hpp"

namespace kzeta {

namespace {

constexpr int kMaxTerms = 128;

std::vector<double> build_weights(int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    w[static_cast<std::size_t>(k)] = c / d;
    b = static_cast<double>(k + n) * static_cast<double>(k - n) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return w;
}

const std::array<std::vector<double>, kMaxTerms + 1>& weight_tables() {
  static const auto tables = [] {
    std::array<std::vector<double>, kMaxTerms + 1> t;
    for (int n = 1; n <= kMaxTerms; ++n) t[static_cast<std::size_t>(n)] = build_weights(n);
    return t;
  }();
  return tables;
}

}  // namespace

std::span<const double> alternating_weights(int n) {
  if (n < 1 || n > kMaxTerms) {
    throw DomainError("alternating_weights: n must be in 1.." + std::to_string(kMaxTerms));
  }
  return weight_tables()[static_cast<std::size_t>(n)];
}

}  // namespace kzeta
