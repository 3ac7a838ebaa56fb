#include "cli/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include <kzeta/kzeta.hpp>

namespace kzeta::cli {

namespace {

constexpr std::array<std::string_view, 8> kSuites = {"selectors", "series", "mellin", "bridge",
                                                      "fpi",       "em",     "audit",  "all"};

// High-precision reference values (50-digit evaluations, rounded).
constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kZeta5 = 1.0369277551433699263;
constexpr double kBeta4 = 0.98894455174110533611;
constexpr double kBeta1p5 = 0.86450265346120204036;
constexpr double kZetaNeg3p5 = 0.0044410113354794319585;
constexpr double kBetaNeg2p5 = -0.47477605327648972625;
constexpr double kZeta0p7 = -2.7783884455536955627;
constexpr double kBeta0p3 = 0.60718361295478589462;
constexpr double kZeta20 = 1.0000009539620338728;
constexpr double kBetaNeg5p5 = -10.804195421013136047;
constexpr double kXiAlt2J2 = 0.87235802495485994177;
constexpr double kXiAlt3J2 = 0.95838045456309456205;
constexpr double kXiAlt3J4 = 0.9673363138504725463;
constexpr double kXiAlt2J4 = 0.90373230700031737413;
constexpr double kXi2J4 = 1.147630893187404258;

// Finite parts at zero (Csch -3, Csch -5, Sech -2, Sech -4).
constexpr double kFpCsch3 = 0.091345371175179812341;
constexpr double kFpCsch5 = -0.0099797643128357803509;
constexpr double kFpSech2 = -1.1662436161232751206;
constexpr double kFpSech4 = 0.51031966820805268146;

class Collector {
 public:
  explicit Collector(double tol) : tol_(tol) {}

  void check(std::string name, double expected, double computed, Provenance prov,
             std::string note = {}) {
    entries_.push_back(make_check(std::move(name), expected, computed, tol_, prov, std::move(note)));
  }

  // Runs `computed` and records a failed entry if it throws.
  void check(std::string name, double expected, const std::function<double()>& computed,
             Provenance prov, std::string note = {}) {
    try {
      check(std::move(name), expected, computed(), prov, std::move(note));
    } catch (const std::exception& ex) {
      fail(std::move(name), expected, prov, ex);
    }
  }

  void fail(std::string name, double expected, Provenance prov, const std::exception& ex) {
    CheckEntry e = make_check(std::move(name), expected, std::numeric_limits<double>::quiet_NaN(), tol_,
                              prov, fmt::format("error: {}", ex.what()));
    e.pass = false;
    entries_.push_back(std::move(e));
  }

  std::vector<CheckEntry> take() { return std::move(entries_); }

 private:
  double tol_;
  std::vector<CheckEntry> entries_;
};

constexpr double zeta2() { return kPi * kPi / 6.0; }
double beta3() { return kPi * kPi * kPi / 32.0; }

void selectors(Collector& c) {
  auto max_table_deviation = [](SelectorKind kind, int J) {
    double worst = 0.0;
    for (int k = 0; k < 4 * J; ++k) {
      worst = std::max(worst, std::abs(selector_average(kind, J, k) - expected_selector(kind, J, k)));
    }
    return worst;
  };
  for (int J : {1, 2, 3, 4, 5, 7, 8, 16, 32, 64}) {
    c.check(fmt::format("selectors/ss_table_J{:02}", J), 0.0,
            [&] { return max_table_deviation(SelectorKind::SS, J); }, Provenance::Paper,
            "max |average - case table| over k in [0, 4J)");
  }
  for (int J : {2, 4, 6, 8, 16, 32, 64}) {
    c.check(fmt::format("selectors/cc_table_J{:02}", J), 0.0,
            [&] { return max_table_deviation(SelectorKind::CC, J); }, Provenance::Paper,
            "max |average - case table| over k in [0, 4J)");
  }

  struct Sample {
    SelectorKind kind;
    int J;
    int k;
    double expected;
    Provenance prov;
  };
  const Sample samples[] = {
      {SelectorKind::SS, 1, 1, 1.0, Provenance::Paper},   {SelectorKind::SS, 1, 3, -1.0, Provenance::Paper},
      {SelectorKind::SS, 4, 2, 0.0, Provenance::Paper},   {SelectorKind::SS, 4, 5, 1.0, Provenance::Paper},
      {SelectorKind::SS, 4, 13, -1.0, Provenance::Paper}, {SelectorKind::SS, 3, 6, 0.0, Provenance::Trivial},
      {SelectorKind::CC, 2, 3, -1.0, Provenance::Paper},  {SelectorKind::CC, 2, 5, -1.0, Provenance::Paper},
  };
  for (const auto& s : samples) {
    c.check(fmt::format("selectors/{}_J{}_k{:02}", s.kind == SelectorKind::SS ? "ss" : "cc", s.J, s.k),
            s.expected, [&] { return selector_average(s.kind, s.J, s.k); }, s.prov);
  }

  c.check("selectors/periodicity", 0.0,
          [] {
            double worst = 0.0;
            for (int J = 1; J <= 32; ++J) {
              for (int k = 0; k < 4 * J; ++k) {
                worst = std::max(worst, std::abs(selector_average(SelectorKind::SS, J, k) -
                                                 selector_average(SelectorKind::SS, J, k + 4 * J)));
                if (J % 2 == 0) {
                  worst = std::max(worst, std::abs(selector_average(SelectorKind::CC, J, k) -
                                                   selector_average(SelectorKind::CC, J, k + 4 * J)));
                }
              }
            }
            return worst;
          },
          Provenance::Paper, "max over J <= 32, k in [0, 4J), shift by 4J");

  c.check("selectors/poisson_reconstruction", 0.0,
          [] {
            double worst = 0.0;
            for (int J = 1; J <= 32; ++J) {
              for (int k = 1; k < 4 * J; k += 2) {
                worst = std::max(worst, std::abs(poisson_reconstruction(J, k) -
                                                 selector_average(SelectorKind::SS, J, k)));
              }
            }
            return worst;
          },
          Provenance::Derived, "max over J <= 32, odd k < 4J");

  for (int J : {2, 4, 8, 16}) {
    const SquareMatrix g = dst2_gram(J);
    double off = 0.0;
    double diag = 0.0;
    for (int m = 1; m <= J; ++m) {
      for (int n = 1; n <= J; ++n) {
        const double v = g(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(n - 1));
        if (m != n) {
          off = std::max(off, std::abs(v));
        } else {
          diag = std::max(diag, std::abs(v - (n == J ? J : J / 2.0)));
        }
      }
    }
    c.check(fmt::format("selectors/dst2_J{:02}_offdiag", J), 0.0, off, Provenance::Derived,
            "max |G(m,n)|, m != n");
    c.check(fmt::format("selectors/dst2_J{:02}_diag", J), 0.0, diag, Provenance::Derived,
            "max |G(n,n) - target|, target J/2 for n < J and J at n = J");
  }

  c.check("selectors/dirichlet_kernel", 0.0,
          [] {
            double worst = 0.0;
            for (int k = 1; k <= 41; k += 2) {
              for (double t : {0.1, 0.7, 1.3, 2.2, 3.0, -0.4}) {
                // sin(k t) carries an absolute error near k*eps, so scale by k/|sin t|
                const double diff = std::abs(std::sin(k * t) / std::sin(t) - dirichlet_kernel(k, t));
                worst = std::max(worst, diff * std::abs(std::sin(t)) / k);
              }
            }
            return worst;
          },
          Provenance::Paper, "odd k <= 41, six sample angles, error scaled by |sin t|/k");
}

void series(Collector& c) {
  using enum DirichletKind;
  c.check("series/zeta_2", zeta2(), [] { return dirichlet_value(Zeta, 2.0); }, Provenance::Trivial);
  c.check("series/zeta_3", kZeta3, [] { return dirichlet_value(Zeta, 3.0); }, Provenance::Derived);
  c.check("series/zeta_5", kZeta5, [] { return dirichlet_value(Zeta, 5.0); }, Provenance::Derived);
  c.check("series/zeta_20", kZeta20, [] { return dirichlet_value(Zeta, 20.0); }, Provenance::Derived);
  c.check("series/zeta_0.7", kZeta0p7, [] { return dirichlet_value(Zeta, 0.7); }, Provenance::Derived);
  c.check("series/zeta_-3.5", kZetaNeg3p5, [] { return dirichlet_value(Zeta, -3.5); },
          Provenance::Derived, "functional equation");
  c.check("series/beta_2", kCatalan, [] { return dirichlet_value(Beta, 2.0); }, Provenance::Paper);
  c.check("series/beta_3", beta3(), [] { return dirichlet_value(Beta, 3.0); }, Provenance::Paper);
  c.check("series/beta_4", kBeta4, [] { return dirichlet_value(Beta, 4.0); }, Provenance::Derived);
  c.check("series/beta_0.3", kBeta0p3, [] { return dirichlet_value(Beta, 0.3); }, Provenance::Derived);
  c.check("series/beta_-2.5", kBetaNeg2p5, [] { return dirichlet_value(Beta, -2.5); },
          Provenance::Derived, "functional equation");
  c.check("series/beta_-5.5", kBetaNeg5p5, [] { return dirichlet_value(Beta, -5.5); },
          Provenance::Derived, "functional equation");

  struct Checkpoint {
    int s;
    int J;
  };
  for (auto [s, J] : {Checkpoint{3, 1}, Checkpoint{3, 2}, Checkpoint{3, 4}, Checkpoint{3, 8}, Checkpoint{2, 1}}) {
    c.check(fmt::format("series/xi_checkpoint_s{}_J{}", s, J), xi_checkpoint(s, J),
            [=] { return xi(s, J).value; }, Provenance::Paper, "closed form");
  }
  for (int s = 2; s <= 5; ++s) {
    c.check(fmt::format("series/xi_J1_equals_beta_s{}", s), dirichlet_value(Beta, s),
            [=] { return xi(s, 1).value; }, Provenance::Trivial);
  }
  c.check("series/xi_alt_s2_J2", kXiAlt2J2, [] { return xi(2, 2, XiVariant::Alternating).value; },
          Provenance::Derived);
  c.check("series/xi_alt_s2_J4", kXiAlt2J4, [] { return xi(2, 4, XiVariant::Alternating).value; },
          Provenance::Derived);
  c.check("series/xi_alt_s3_J2", kXiAlt3J2, [] { return xi(3, 2, XiVariant::Alternating).value; },
          Provenance::Derived);
  c.check("series/xi_alt_s3_J4", kXiAlt3J4, [] { return xi(3, 4, XiVariant::Alternating).value; },
          Provenance::Derived);

  c.check("series/clausen_s2_half_pi", kCatalan, [] { return clausen_sl_rational(2.0, 1, 2).value; },
          Provenance::Derived);
  c.check("series/clausen_s3_half_pi", beta3(), [] { return clausen_sl_rational(3.0, 1, 2).value; },
          Provenance::Paper);
  c.check("series/clausen_s3_pi", 0.0, [] { return clausen_sl(3.0, kPi).value; }, Provenance::Trivial);
  c.check("series/clausen_average_s3_J1", beta3(), [] { return clausen_average(3.0, 1); },
          Provenance::Trivial);
  c.check("series/clausen_average_s3_J2", xi_checkpoint(3, 2), [] { return clausen_average(3.0, 2); },
          Provenance::Derived);
  c.check("series/clausen_average_s2_J4", kXi2J4, [] { return clausen_average(2.0, 4); },
          Provenance::Derived);
}

void mellin(Collector& c) {
  using enum DirichletKind;
  c.check("mellin/zeta3_sinh", kZeta3, [] { return zeta_via_sinh(3.0); }, Provenance::Paper,
          "2/7 int x^2/sinh x");
  c.check("mellin/zeta5_sinh", kZeta5, [] { return zeta_via_sinh(5.0); }, Provenance::Paper,
          "2/93 int x^4/sinh x");
  c.check("mellin/beta2_cosh", kCatalan, [] { return beta_via_cosh(2.0); }, Provenance::Paper,
          "1/2 int x/cosh x");
  c.check("mellin/beta4_cosh", kBeta4, [] { return beta_via_cosh(4.0); }, Provenance::Paper,
          "1/12 int x^3/cosh x");
  c.check("mellin/zeta2_sinh", zeta2(), [] { return zeta_via_sinh(2.0); }, Provenance::Derived);
  c.check("mellin/beta3_cosh", beta3(), [] { return beta_via_cosh(3.0); }, Provenance::Derived);

  for (int s = 2; s <= 5; ++s) {
    const double target = 2.0 * one_minus_two_pow_neg(s) * gamma(s) * dirichlet_value(Zeta, s);
    c.check(fmt::format("mellin/csch_closure_s{}", s), target,
            [=] { return integrate_semi_infinite(CschMellin{double(s)}).value; }, Provenance::Paper,
            "2 (1 - 2^-s) Gamma(s) zeta(s)");
  }
  for (double s : {1.5, 2.0, 3.0, 4.0}) {
    const double target = 2.0 * gamma(s) * dirichlet_value(Beta, s);
    c.check(fmt::format("mellin/sech_closure_s{}", s), target,
            [=] { return integrate_semi_infinite(SechMellin{s}).value; }, Provenance::Paper,
            "2 Gamma(s) beta(s)");
  }
  c.check("mellin/sech_s1.5_reference", kBeta1p5, [] { return beta_via_cosh(1.5); }, Provenance::Derived);
  for (int n : {1, 2}) {
    c.check(fmt::format("mellin/ck_scale_n{}", n),
            integrate_semi_infinite(CschMellin{2.0 * n + 1.0}).value / std::pow(kPi, 2 * n + 1),
            [=] { return ck_kernel_integral(n); }, Provenance::Derived,
            "int t^2n/sinh(pi t) = pi^-(2n+1) int x^2n/sinh x");
  }
}

void bridge(Collector& c) {
  for (int s : {2, 3}) {
    for (int J : {1, 2, 4, 8}) {
      c.check(fmt::format("bridge/vs_series_s{}_J{}", s, J), xi(s, J).value,
              [=] { return bridge_xi(s, J).value; }, Provenance::Paper, "tanh(Jt)/sinh t kernel");
    }
    c.check(fmt::format("bridge/J1_equals_cosh_s{}", s), beta_via_cosh(s),
            [=] { return bridge_xi(s, 1).value; }, Provenance::Trivial, "tanh t/sinh t = sech t");
  }
  c.check("bridge/checkpoint_s3_J4", xi_checkpoint(3, 4), [] { return bridge_xi(3, 4).value; },
          Provenance::Paper);
  c.check("bridge/checkpoint_s3_J8", xi_checkpoint(3, 8), [] { return bridge_xi(3, 8).value; },
          Provenance::Paper);
  c.check("bridge/series_s2_J8", xi(2, 8).value, [] { return bridge_xi(2, 8).value; }, Provenance::Derived);
  struct Pair {
    int s;
    int J;
  };
  for (auto [s, J] : {Pair{2, 2}, Pair{3, 2}, Pair{3, 4}}) {
    c.check(fmt::format("bridge/triangle_clausen_s{}_J{}", s, J), clausen_average(s, J),
            [=] { return bridge_xi(s, J).value; }, Provenance::Derived);
  }
}

struct FpCase {
  Kernel kernel;
  int power;
  double reference;
  const char* label;
};

constexpr FpCase kFpCases[] = {
    {Kernel::Csch, -3, kFpCsch3, "csch_p3"},
    {Kernel::Csch, -5, kFpCsch5, "csch_p5"},
    {Kernel::Sech, -2, kFpSech2, "sech_p2"},
    {Kernel::Sech, -4, kFpSech4, "sech_p4"},
};

void fpi(Collector& c) {
  double reconstruction = 0.0;
  for (const auto& fc : kFpCases) {
    const std::string base = fmt::format("fpi/{}", fc.label);
    FinitePartResult at_one;
    try {
      at_one = finite_part(fc.kernel, fc.power, 1.0);
    } catch (const std::exception& ex) {
      c.fail(base + "_c1", fc.reference, Provenance::Derived, ex);
      continue;
    }
    c.check(base + "_c1", fc.reference, at_one.value, Provenance::Derived, "50-digit reference");
    for (double split : {0.5, 2.0}) {
      c.check(fmt::format("{}_split_c{}", base, split), at_one.value,
              [&] {
                const FinitePartResult r = finite_part(fc.kernel, fc.power, split);
                reconstruction = std::max(
                    reconstruction, std::abs(r.value - (r.regular_part + r.compensation + r.tail)));
                return r.value;
              },
              Provenance::Trivial, "independent of the split point");
    }
    c.check(base + "_analytic_continuation", ac_reference(fc.kernel, fc.power + 1.0), at_one.value,
            Provenance::Derived, fmt::format("Mellin transform continued to s = {}", fc.power + 1));
    const int min_order = min_expansion_order(fc.kernel, fc.power);
    c.check(base + "_order_stability", at_one.value,
            [&] { return finite_part(fc.kernel, fc.power, 1.0, min_order + 2).value; },
            Provenance::Derived, fmt::format("expansion order {} vs default", min_order + 2));
    reconstruction = std::max(
        reconstruction,
        std::abs(at_one.value - (at_one.regular_part + at_one.compensation + at_one.tail)));
  }
  c.check("fpi/reconstruction", 0.0, reconstruction, Provenance::Trivial,
          "max |value - (regular + compensation + tail)|");
  c.check("fpi/csch_p3_closed_form", 3.0 * kZeta3 / (4.0 * kPi * kPi),
          [] { return finite_part(Kernel::Csch, -3).value; }, Provenance::Derived, "3 zeta(3) / (4 pi^2)");

  c.check("fpi/bernoulli_recurrence", 0.0,
          [] {
            const auto B = special_numbers(SpecialNumberKind::Bernoulli, 40);
            Rational worst = 0;
            for (int n = 1; n <= 40; ++n) {
              Rational sum = 0;
              Rational binom = 1;  // C(n+1, k)
              for (int k = 0; k <= n; ++k) {
                sum += binom * B[static_cast<std::size_t>(k)];
                binom = binom * (n + 1 - k) / (k + 1);
              }
              worst = std::max(worst, Rational(abs(sum)));
            }
            return worst.convert_to<double>();
          },
          Provenance::Trivial, "sum_k C(n+1,k) B_k = 0, n <= 40, exact");
  c.check("fpi/euler_recurrence", 0.0,
          [] {
            const auto E = special_numbers(SpecialNumberKind::Euler, 40);
            Rational worst = 0;
            for (int n = 2; n <= 40; n += 2) {
              Rational sum = 0;
              Rational binom = 1;  // C(n, k)
              for (int k = 0; k <= n; ++k) {
                if (k % 2 == 0) sum += binom * E[static_cast<std::size_t>(k)];
                binom = binom * (n - k) / (k + 1);
              }
              worst = std::max(worst, Rational(abs(sum)));
            }
            return worst.convert_to<double>();
          },
          Provenance::Derived, "sum_{k even} C(n,k) E_k = 0, even n <= 40, exact");
  c.check("fpi/compensation_exponent_m4", -1.0 / 3.0,
          [] {
            // x^-3 / sinh x at c = 1: the x^-4 monomial alone contributes c^-3 / -3.
            const FinitePartResult r = finite_part(Kernel::Csch, -3, 1.0);
            return r.subtracted_terms.front().coefficient / (r.subtracted_terms.front().exponent + 1);
          },
          Provenance::Trivial);
}

void em(Collector& c) {
  c.check("em/bernoulli_half_1", -1.0 / 12.0, [] { return bernoulli_half(1).convert_to<double>(); },
          Provenance::Paper);
  c.check("em/bernoulli_half_2", 7.0 / 240.0, [] { return bernoulli_half(2).convert_to<double>(); },
          Provenance::Paper);
  c.check("em/endpoint_derivatives_odd_k", 0.0,
          [] {
            double worst = 0.0;
            for (int k = 1; k <= 99; k += 2) {
              for (Endpoint end : {Endpoint::Zero, Endpoint::Pi}) {
                worst = std::max(worst, std::abs(endpoint_derivative(k, end)));
              }
            }
            return worst;
          },
          Provenance::Paper, "max over odd k <= 99, both endpoints, exact series limit");
  c.check("em/residual_selector_window", 0.0,
          [] {
            double worst = 0.0;
            for (int J : {2, 4, 8, 16}) {
              for (int k = 1; k < 2 * J; k += 2) worst = std::max(worst, std::abs(midpoint_residual(k, J)));
            }
            return worst;
          },
          Provenance::Derived, "max over J in {2,4,8,16}, odd k < 2J");
  c.check("em/residual_k1_J1", 0.0, [] { return midpoint_residual(1, 1); }, Provenance::Trivial);
  c.check("em/residual_k3_J4", 0.0, [] { return midpoint_residual(3, 4); }, Provenance::Derived);
  c.check("em/first_correction", 0.0,
          [] {
            double worst = 0.0;
            for (int k = 1; k <= 31; k += 2) worst = std::max(worst, std::abs(em_correction(k, 4, 1)));
            return worst;
          },
          Provenance::Paper, "m = 1 term, odd k <= 31, J = 4");
}

void audit(Collector& c) {
  const VerificationReport a = claims_audit();
  for (const auto& e : a.entries) {
    c.check(e.name, e.expected, e.computed, e.provenance, e.note);
  }
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite(std::string_view name) {
  return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

double default_tolerance(std::string_view suite) {
  if (suite == "selectors") return 1e-12;
  if (suite == "audit") return 1e-8;
  return 1e-10;
}

VerificationReport run_suite(std::string_view suite, double tolerance) {
  if (!is_suite(suite)) throw std::invalid_argument(fmt::format("unknown suite '{}'", suite));
  Collector c(tolerance);
  const bool all = suite == "all";
  if (all || suite == "selectors") selectors(c);
  if (all || suite == "series") series(c);
  if (all || suite == "mellin") mellin(c);
  if (all || suite == "bridge") bridge(c);
  if (all || suite == "fpi") fpi(c);
  if (all || suite == "em") em(c);
  if (all || suite == "audit") audit(c);

  VerificationReport report;
  report.suite = std::string(suite);
  report.tolerance = tolerance;
  report.entries = c.take();
  report.sort_entries();
  return report;
}

int exit_code(const VerificationReport& report) { return report.passed() ? 0 : 1; }

}  // namespace kzeta::cli
