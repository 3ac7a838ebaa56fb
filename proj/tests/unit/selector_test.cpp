#include <doctest.h>

#include <cmath>
#include <numbers>

#include <kzeta/errors.hpp>
#include <kzeta/selector.hpp>

using namespace kzeta;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("make_grid places midpoints") {
  CHECK(make_grid(1).thetas.size() == 1);
  CHECK(make_grid(1).thetas[0] == doctest::Approx(pi / 2).epsilon(1e-15));

  const auto g2 = make_grid(2);
  REQUIRE(g2.thetas.size() == 2);
  CHECK(g2.thetas[0] == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(g2.thetas[1] == doctest::Approx(3 * pi / 4).epsilon(1e-15));

  const auto g4 = make_grid(4);
  REQUIRE(g4.thetas.size() == 4);
  for (int j = 0; j < 4; ++j) CHECK(g4.thetas[j] == doctest::Approx((2 * j + 1) * pi / 8).epsilon(1e-15));

  for (int J = 1; J <= 64; ++J) {
    const auto g = make_grid(J);
    CHECK(g.J == J);
    for (double t : g.thetas) {
      CHECK(t > 0.0);
      CHECK(t < pi);
    }
  }
  CHECK_THROWS_AS(make_grid(0), DomainError);
}

TEST_CASE("selector_average examples") {
  CHECK(selector_average(SelectorKind::SS, 1, 1) == doctest::Approx(1.0));
  CHECK(selector_average(SelectorKind::SS, 1, 3) == doctest::Approx(-1.0));
  CHECK(std::abs(selector_average(SelectorKind::SS, 4, 2)) <= 1e-12);
  CHECK(selector_average(SelectorKind::CC, 2, 3) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(selector_average(SelectorKind::CC, 3, 1), UnsupportedConfiguration);
  CHECK_THROWS_AS(selector_average(SelectorKind::SS, 0, 1), DomainError);
}

TEST_CASE("expected_selector case table") {
  CHECK(expected_selector(SelectorKind::SS, 4, 5) == 1);
  CHECK(expected_selector(SelectorKind::SS, 4, 13) == -1);
  CHECK(expected_selector(SelectorKind::CC, 2, 5) == -1);
  CHECK(expected_selector(SelectorKind::SS, 3, 6) == 0);
  CHECK(expected_selector(SelectorKind::CC, 2, 3) == -1);
  CHECK(expected_selector(SelectorKind::SS, 4, -3) == -1);  // -3 = 13 mod 16
  CHECK_THROWS_AS(expected_selector(SelectorKind::CC, 5, 1), UnsupportedConfiguration);
}

TEST_CASE("selector averages equal the case table for J <= 64") {
  for (int J = 1; J <= 64; ++J) {
    for (int k = 0; k < 4 * J; ++k) {
      CHECK(std::abs(selector_average(SelectorKind::SS, J, k) - expected_selector(SelectorKind::SS, J, k)) <=
            1e-12);
      if (J % 2 == 0) {
        CHECK(std::abs(selector_average(SelectorKind::CC, J, k) - expected_selector(SelectorKind::CC, J, k)) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("selector averages agree with naive floating-point sums") {
  // Independent of the exact argument reduction: plain long double sums.
  for (int J : {3, 8, 13}) {
    for (int k = -5; k < 4 * J + 5; ++k) {
      long double ss = 0.0L;
      long double cc = 0.0L;
      for (int j = 0; j < J; ++j) {
        const long double t = (2.0L * j + 1.0L) * std::numbers::pi_v<long double> / (2.0L * J);
        ss += std::sin(k * t) / std::sin(t);
        cc += std::cos(k * t) / std::cos(t);
      }
      CHECK(std::abs(selector_average(SelectorKind::SS, J, k) - double(ss / J)) <= 1e-12);
      if (J % 2 == 0) CHECK(std::abs(selector_average(SelectorKind::CC, J, k) - double(cc / J)) <= 1e-12);
    }
  }
}

TEST_CASE("selector averages are 4J-periodic") {
  for (int J = 1; J <= 32; ++J) {
    for (int k = 0; k < 4 * J; ++k) {
      CHECK(std::abs(selector_average(SelectorKind::SS, J, k) - selector_average(SelectorKind::SS, J, k + 4 * J)) <=
            1e-12);
      CHECK(std::abs(selector_average(SelectorKind::SS, J, k) - selector_average(SelectorKind::SS, J, k - 4 * J)) <=
            1e-12);
      if (J % 2 == 0) {
        CHECK(std::abs(selector_average(SelectorKind::CC, J, k) -
                       selector_average(SelectorKind::CC, J, k + 4 * J)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Poisson reconstruction matches the grid average") {
  CHECK(poisson_reconstruction(4, 3) == doctest::Approx(1.0));
  CHECK(poisson_reconstruction(4, 9) == doctest::Approx(-1.0));
  CHECK(poisson_reconstruction(1, 1) == doctest::Approx(1.0));
  for (int J = 1; J <= 32; ++J) {
    for (int k = 1; k < 4 * J; k += 2) {
      CHECK(std::abs(poisson_reconstruction(J, k) - selector_average(SelectorKind::SS, J, k)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(poisson_reconstruction(4, 2), DomainError);
  CHECK_THROWS_AS(poisson_reconstruction(4, -1), DomainError);
  CHECK_THROWS_AS(poisson_reconstruction(0, 1), DomainError);
}

TEST_CASE("DST-II Gram matrix") {
  const SquareMatrix g2 = dst2_gram(2);
  CHECK(g2(0, 0) == doctest::Approx(1.0));
  CHECK(std::abs(g2(0, 1)) <= 1e-15);
  CHECK(g2(1, 1) == doctest::Approx(2.0));  // J, not J/2

  for (int J : {2, 4, 8, 16}) {
    const SquareMatrix g = dst2_gram(J);
    REQUIRE(g.size() == static_cast<std::size_t>(J));
    for (int m = 1; m <= J; ++m) {
      for (int n = 1; n <= J; ++n) {
        long double brute = 0.0L;
        for (int j = 0; j < J; ++j) {
          const long double a = (2.0L * j + 1.0L) * std::numbers::pi_v<long double> / (2.0L * J);
          brute += std::sin(a * m) * std::sin(a * n);
        }
        const double v = g(m - 1, n - 1);
        CHECK(std::abs(v - double(brute)) <= 1e-12);
        if (m != n) {
          CHECK(std::abs(v) <= 1e-10 * J);
        } else {
          CHECK(v == doctest::Approx(n == J ? J : J / 2.0).epsilon(1e-14));
        }
      }
    }
  }
  CHECK_THROWS_AS(dst2_gram(0), DomainError);
}

TEST_CASE("Dirichlet kernel identity") {
  for (int k = 1; k <= 51; k += 2) {
    for (double t : {0.05, 0.3, 1.0, 1.5707, 2.4, 3.1, -0.9, 4.0, 7.7}) {
      CHECK(std::abs(std::sin(k * t) / std::sin(t) - dirichlet_kernel(k, t)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(dirichlet_kernel(4, 0.3), DomainError);
}
