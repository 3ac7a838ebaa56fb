#include <doctest.h>

#include <cmath>
#include <vector>

#include <kzeta/errors.hpp>
#include <kzeta/euler_maclaurin.hpp>
#include <kzeta/quadrature.hpp>
#include <kzeta/selector.hpp>

using namespace kzeta;

TEST_CASE("B_2m(1/2)") {
  CHECK(bernoulli_half(1) == Rational(-1, 12));
  CHECK(bernoulli_half(2) == Rational(7, 240));
  CHECK(bernoulli_half(3) == Rational(-31, 1344));
  for (int m = 1; m <= 6; ++m) {
    CHECK(sign(bernoulli_half(m)) == -sign(bernoulli_half(m + 1)));
  }
  CHECK_NOTHROW(bernoulli_half(20));
  CHECK_THROWS_AS(bernoulli_half(0), DomainError);
  CHECK_THROWS_AS(bernoulli_half(21), DomainError);
}

TEST_CASE("endpoint derivatives vanish for odd k") {
  for (int k = 1; k <= 99; k += 2) {
    CAPTURE(k);
    CHECK(endpoint_derivative_exact(k, Endpoint::Zero) == 0);
    CHECK(endpoint_derivative_exact(k, Endpoint::Pi) == 0);
    CHECK(endpoint_derivative(k, Endpoint::Zero) == 0.0);
    CHECK(endpoint_derivative(k, Endpoint::Pi) == 0.0);
    // f is even about both endpoints, so every odd derivative vanishes.
    CHECK(endpoint_derivative_exact(k, Endpoint::Zero, 3) == 0);
    CHECK(endpoint_derivative_exact(k, Endpoint::Pi, 5) == 0);
  }
  // Even orders are the removable-singularity values: f(0) = k, f''(0) = -k(k^2-1)/3.
  CHECK(endpoint_derivative_exact(5, Endpoint::Zero, 0) == 5);
  CHECK(endpoint_derivative_exact(5, Endpoint::Zero, 2) == -40);
  CHECK_THROWS_AS(endpoint_derivative(4, Endpoint::Zero), DomainError);
  CHECK_THROWS_AS(endpoint_derivative(0, Endpoint::Pi), DomainError);
}

TEST_CASE("endpoint derivative agrees with a finite-difference estimate away from the limit") {
  // Sanity check of the series route: f'(x) near 0 is O(x), matching the zero limit.
  for (int k : {3, 7, 15}) {
    const double x = 1e-3;
    const double h = 1e-6;
    auto f = [k](double t) { return std::sin(k * t) / std::sin(t); };
    const double fd = (f(x + h) - f(x - h)) / (2 * h);
    CHECK(std::abs(fd) <= 1e-3 * k * k * k);
  }
}

TEST_CASE("midpoint residual examples") {
  CHECK(std::abs(midpoint_residual(3, 4)) <= 1e-12);
  CHECK(std::abs(midpoint_residual(1, 1)) <= 1e-13);
  // k = 9 > 2J, yet 9 mod 8 = 1 sits in the +1 window: the residual vanishes.
  CHECK(std::abs(midpoint_residual(9, 2)) <= 1e-12);
  // Outside the window the average is -1 against an integral of 1.
  CHECK(midpoint_residual(13, 2) == doctest::Approx(-2.0));
  CHECK_THROWS_AS(midpoint_residual(4, 2), DomainError);
  CHECK_THROWS_AS(midpoint_residual(3, 0), DomainError);
}

TEST_CASE("residual vanishes in the selector window") {
  for (int J : {2, 4, 8, 16}) {
    for (int k = 1; k < 2 * J; k += 2) {
      CHECK(std::abs(midpoint_residual(k, J)) <= 1e-12);
    }
  }
}

TEST_CASE("residual is the selector value minus one for every odd k") {
  for (int J : {1, 2, 3, 5}) {
    for (int k = 1; k < 40; k += 2) {
      CHECK(std::abs(midpoint_residual(k, J) - (selector_average(SelectorKind::SS, J, k) - 1.0)) <= 1e-12);
    }
  }
}

TEST_CASE("decay analysis") {
  const std::vector<int> window = {4, 8, 16};
  const EmAnalysis a = decay_exponent(3, window);
  CHECK(a.k == 3);
  CHECK(a.J_values == window);
  REQUIRE(a.residuals.size() == window.size());
  for (double r : a.residuals) CHECK(std::abs(r) <= 1e-12);
  CHECK_FALSE(a.fitted_exponent.has_value());
  CHECK(a.first_correction == 0.0);

  // k = 17 with J = 2, 3, 4: 17 mod 4J < 2J each time, so every residual is zero
  // and the rate is undefined.
  const std::vector<int> js = {2, 3, 4};
  const EmAnalysis b = decay_exponent(17, js);
  REQUIRE(b.residuals.size() == 3);
  for (double r : b.residuals) CHECK(std::abs(r) <= 1e-12);
  CHECK_FALSE(b.fitted_exponent.has_value());
  CHECK(b.first_correction == 0.0);

  // Nonzero residuals (all exactly -2) give a flat fit.
  const std::vector<int> flat = {3, 4, 5};
  const EmAnalysis c = decay_exponent(11, flat);
  REQUIRE(c.fitted_exponent.has_value());
  CHECK(std::abs(*c.fitted_exponent) <= 1e-10);

  CHECK_THROWS_AS(decay_exponent(3, std::vector<int>{4, 8}), DomainError);
  CHECK_THROWS_AS(decay_exponent(3, std::vector<int>{4, 4, 8}), DomainError);
  CHECK_THROWS_AS(decay_exponent(2, std::vector<int>{2, 4, 8}), DomainError);
}

TEST_CASE("first correction vanishes for odd k") {
  for (int k = 1; k <= 51; k += 2) {
    for (int J : {1, 2, 4, 8}) CHECK(em_correction(k, J, 1) == 0.0);
  }
  CHECK_THROWS_AS(em_correction(3, 0, 1), DomainError);
}

TEST_CASE("nonzero residuals decay at least like J^-3" * doctest::should_fail()) {
  // Stated rate for the midpoint rule on f(x) = sin(kx)/sin x. For odd k the
  // residual is exactly 0 or -2, so no decay can be fitted.
  const std::vector<int> js = {3, 4, 5};
  const EmAnalysis a = decay_exponent(11, js);
  REQUIRE(a.fitted_exponent.has_value());
  CHECK(*a.fitted_exponent <= -3.0 + 0.3);
}

TEST_CASE("adding the m = 2 correction shrinks the residual" * doctest::should_fail()) {
  // For k > 2J, adding B_4(1/2)/4! (pi/J)^3 (f'''(pi) - f'''(0)) to the
  // integral should reduce |residual| in at least 90% of cases. f''' vanishes at
  // both endpoints for odd k, so the correction is identically zero.
  int improved = 0;
  int total = 0;
  for (int J : {1, 2, 3, 4, 5, 6}) {
    for (int k = 2 * J + 1; k < 2 * J + 30; k += 2) {
      const double r = midpoint_residual(k, J);
      if (std::abs(r) <= 1e-12) continue;
      ++total;
      const double corrected = r - em_correction(k, J, 2);
      if (std::abs(corrected) < std::abs(r)) ++improved;
    }
  }
  REQUIRE(total > 0);
  CHECK(improved >= 0.9 * total);
}

TEST_CASE("the m = 2 correction is exactly zero for odd k") {
  for (int k = 1; k <= 41; k += 2) {
    for (int J : {1, 2, 3, 8}) CHECK(em_correction(k, J, 2) == 0.0);
  }
}
