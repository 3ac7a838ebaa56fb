#include "kzeta/selector.hpp"

#include <cmath>
#include <string>

#include "kzeta/elementary.hpp"
#include "kzeta/errors.hpp"
#include "kzeta/summation.hpp"

namespace kzeta {

namespace {

void require_grid_size(int J, const char* who) {
  if (J < 1) throw DomainError(std::string(who) + ": J must be >= 1");
}

void require_cc_even(SelectorKind kind, int J, const char* who) {
  if (kind == SelectorKind::CC && J % 2 != 0) {
    throw UnsupportedConfiguration(std::string(who) +
                                   ": cos/cos selector needs even J (cos theta_j = 0 on odd grids)");
  }
}

std::int64_t reduce_mod(std::int64_t k, std::int64_t period) {
  std::int64_t r = k % period;
  return r < 0 ? r + period : r;
}

}  // namespace

SelectorGrid make_grid(int J) {
  require_grid_size(J, "make_grid");
  SelectorGrid grid{J, {}};
  grid.thetas.reserve(static_cast<std::size_t>(J));
  for (int j = 0; j < J; ++j) {
    grid.thetas.push_back(kPi * static_cast<double>(2 * j + 1) / static_cast<double>(2 * J));
  }
  return grid;
}

double selector_average(SelectorKind kind, int J, std::int64_t k) {
  require_grid_size(J, "selector_average");
  require_cc_even(kind, J, "selector_average");
  const std::int64_t den = 2 * static_cast<std::int64_t>(J);
  const std::int64_t r = reduce_mod(k, 2 * den);
  CompensatedSum acc;
  for (std::int64_t j = 0; j < J; ++j) {
    const std::int64_t n = 2 * j + 1;
    if (kind == SelectorKind::SS) {
      acc.add(sin_pi_ratio(r * n, den) / sin_pi_ratio(n, den));
    } else {
      acc.add(cos_pi_ratio(r * n, den) / cos_pi_ratio(n, den));
    }
  }
  return acc.value() / static_cast<double>(J);
}

int expected_selector(SelectorKind kind, int J, std::int64_t k) {
  require_grid_size(J, "expected_selector");
  require_cc_even(kind, J, "expected_selector");
  const std::int64_t r = reduce_mod(k, 4 * static_cast<std::int64_t>(J));
  if (r % 2 == 0) return 0;
  const int window = r < 2 * J ? 1 : -1;
  if (kind == SelectorKind::SS) return window;
  const int phase = ((r - 1) / 2) % 2 == 0 ? 1 : -1;
  return window * phase;
}

double dirichlet_kernel(std::int64_t k, double theta) {
  if (k < 1 || k % 2 == 0) throw DomainError("dirichlet_kernel: k must be odd and positive");
  CompensatedSum acc(1.0);
  for (std::int64_t m = 1; m <= (k - 1) / 2; ++m) {
    acc.add(2.0 * std::cos(2.0 * static_cast<double>(m) * theta));
  }
  return acc.value();
}

SquareMatrix dst2_gram(int J) {
  require_grid_size(J, "dst2_gram");
  const auto n = static_cast<std::size_t>(J);
  const std::int64_t den = 2 * static_cast<std::int64_t>(J);
  SquareMatrix gram(n);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t q = m; q <= n; ++q) {
      CompensatedSum acc;
      for (std::int64_t j = 0; j < J; ++j) {
        const std::int64_t odd = 2 * j + 1;
        acc.add(sin_pi_ratio(odd * static_cast<std::int64_t>(m), den) *
                sin_pi_ratio(odd * static_cast<std::int64_t>(q), den));
      }
      gram(m - 1, q - 1) = acc.value();
      gram(q - 1, m - 1) = acc.value();
    }
  }
  return gram;
}

double poisson_reconstruction(int J, std::int64_t k) {
  require_grid_size(J, "poisson_reconstruction");
  if (k < 1 || k % 2 == 0) {
    throw DomainError("poisson_reconstruction: k must be odd and positive");
  }
  // Spectral lines e^{2imt}, |m| <= (k-1)/2, all with unit weight.
  // Grid average of e^{2imt}: e^{i m pi / J} * [J | m] = (-1)^{m/J} [J | m].
  const std::int64_t half = (k - 1) / 2;
  CompensatedSum acc;
  for (std::int64_t m = -half; m <= half; ++m) {
    if (m % J != 0) continue;
    acc.add((m / J) % 2 == 0 ? 1.0 : -1.0);
  }
  return acc.value();
}

}  // namespace kzeta
