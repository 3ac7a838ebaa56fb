#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "kzeta/elementary.hpp"
#include "kzeta/euler_maclaurin.hpp"
#include "kzeta/fpi.hpp"
#include "kzeta/quadrature.hpp"
#include "kzeta/selector.hpp"
#include "kzeta/series.hpp"

namespace kzeta {

namespace {

constexpr double kAuditTolerance = 1e-8;

std::string with_ratio(const std::string& note, double expected, double computed) {
  char buf[64];
  if (expected != 0.0) {
    std::snprintf(buf, sizeof buf, "ratio computed/expected = %.9g", computed / expected);
  } else {
    std::snprintf(buf, sizeof buf, "expected is zero");
  }
  return note.empty() ? std::string(buf) : note + "; " + buf;
}

CheckEntry claim(std::string name, double expected, double computed, const std::string& note,
                 Provenance provenance = Provenance::Paper) {
  return make_check(std::move(name), expected, computed, kAuditTolerance, provenance,
                    with_ratio(note, expected, computed));
}

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Limit of xi_2(J) from J = 256, 512, 1024, eliminating J^-1 and J^-2.
double extrapolated_xi2_limit() {
  const double a = xi(2.0, 256).value;
  const double b = xi(2.0, 512).value;
  const double c = xi(2.0, 1024).value;
  const double r0 = 2.0 * b - a;
  const double r1 = 2.0 * c - b;
  return (4.0 * r1 - r0) / 3.0;
}

}  // namespace

VerificationReport claims_audit() {
  VerificationReport report;
  report.suite = "audit";
  report.tolerance = kAuditTolerance;
  auto& out = report.entries;

  const double zeta3 = dirichlet_value(DirichletKind::Zeta, 3.0);
  const double zeta5 = dirichlet_value(DirichletKind::Zeta, 5.0);
  const double beta2 = dirichlet_value(DirichletKind::Beta, 2.0);
  const double beta4 = dirichlet_value(DirichletKind::Beta, 4.0);

  // Finite-part propositions: zeta(2m+1) = (-1)^m/(2m)! FP int x^{-2m-1}/sinh x,
  // beta(2m) = (-1)^{m-1}/(2m-1)! FP int x^{-2m}/cosh x.
  const double fp_c3 = finite_part(Kernel::Csch, -3).value;
  const double fp_c5 = finite_part(Kernel::Csch, -5).value;
  const double fp_s2 = finite_part(Kernel::Sech, -2).value;
  const double fp_s4 = finite_part(Kernel::Sech, -4).value;
  out.push_back(claim("audit/zeta3_fpi", zeta3, -0.5 * fp_c3,
                      fmt("zeta(3) = -1/2 FP int x^-3/sinh x; FP = %.17g (analytic continuation "
                          "gives 3 zeta(3)/(4 pi^2))",
                          fp_c3)));
  out.push_back(claim("audit/zeta5_fpi", zeta5, fp_c5 / 24.0,
                      fmt("zeta(5) = 1/24 FP int x^-5/sinh x; FP = %.17g", fp_c5)));
  out.push_back(claim("audit/beta2_fpi", beta2, fp_s2,
                      fmt("beta(2) = FP int x^-2/cosh x; FP = %.17g", fp_s2)));
  out.push_back(claim("audit/beta4_fpi", beta4, -fp_s4 / 6.0,
                      fmt("beta(4) = -1/6 FP int x^-4/cosh x; FP = %.17g", fp_s4)));

  // zeta(2n+1) = (-1)^n/(2n)! int t^{2n}/sinh(pi t) dt
  const double ck1 = ck_kernel_integral(1);
  const double ck2 = ck_kernel_integral(2);
  out.push_back(claim("audit/ck_zeta3", zeta3, -0.5 * ck1,
                      fmt("zeta(3) = -1/2 int t^2/sinh(pi t); integral = %.17g", ck1)));
  out.push_back(claim("audit/ck_zeta5", zeta5, ck2 / 24.0,
                      fmt("zeta(5) = 1/24 int t^4/sinh(pi t); integral = %.17g", ck2)));
  const double ck1_scaled = 2.0 * one_minus_two_pow_neg(3.0) * 2.0 * zeta3 / std::pow(kPi, 3.0);
  out.push_back(claim("audit/ck_scale_n1", ck1_scaled, ck1,
                      "substitution x = pi t: int t^2/sinh(pi t) = 2(1-2^-3) 2! zeta(3)/pi^3",
                      Provenance::Derived));

  // Mellin examples with the printed prefactors.
  out.push_back(claim("audit/mellin_zeta3", zeta3,
                      2.0 / 7.0 * integrate_semi_infinite(CschMellin{3.0}).value,
                      "zeta(3) = 2/7 int x^2/sinh x"));
  out.push_back(claim("audit/mellin_zeta5", zeta5,
                      2.0 / 93.0 * integrate_semi_infinite(CschMellin{5.0}).value,
                      "zeta(5) = 2/93 int x^4/sinh x"));
  out.push_back(claim("audit/mellin_beta2", beta2,
                      0.5 * integrate_semi_infinite(SechMellin{2.0}).value,
                      "beta(2) = 1/2 int x/cosh x"));
  out.push_back(claim("audit/mellin_beta4", beta4,
                      integrate_semi_infinite(SechMellin{4.0}).value / 12.0,
                      "beta(4) = 1/12 int x^3/cosh x"));

  // Table: J -> infinity limit of xi_2 listed as zeta(2) = pi^2/6.
  const double limit = extrapolated_xi2_limit();
  out.push_back(claim("audit/xi2_limit", kPi * kPi / 6.0, limit,
                      fmt("extrapolated from xi_2(256..1024); (1-2^-2) zeta(2) = %.17g",
                          0.75 * dirichlet_value(DirichletKind::Zeta, 2.0))));

  // DST-II: S^T S = (J/2) I.
  constexpr int gram_J = 8;
  const SquareMatrix gram = dst2_gram(gram_J);
  double off_diagonal = 0.0;
  for (std::size_t m = 0; m < gram.size(); ++m) {
    for (std::size_t n = 0; n < gram.size(); ++n) {
      if (m != n) off_diagonal = std::max(off_diagonal, std::abs(gram(m, n)));
    }
  }
  out.push_back(claim("audit/dst2_diag_n_eq_J", gram_J / 2.0, gram(gram_J - 1, gram_J - 1),
                      "J = 8, harmonic n = J; claimed value J/2"));
  out.push_back(claim("audit/dst2_offdiag", 0.0, off_diagonal,
                      "J = 8, max |off-diagonal|"));

  // Claimed support: S(k) = 0 for odd k outside [1, 2J-1].
  out.push_back(claim("audit/poisson_support", 0.0, selector_average(SelectorKind::SS, 4, 9),
                      "J = 4, k = 9; claimed 0 outside [1, 2J-1]"));
  // Claimed spectrum: sin(k t)/sin t = sum_{|r| <= (k-1)/2} e^{i(2r+1)t}.
  {
    constexpr int k = 3;
    constexpr double t = 0.7;
    std::complex<double> claimed_sum = 0.0;
    for (int r = -(k - 1) / 2; r <= (k - 1) / 2; ++r) {
      claimed_sum += std::polar(1.0, (2.0 * r + 1.0) * t);
    }
    out.push_back(claim("audit/poisson_odd_spectrum", std::sin(k * t) / std::sin(t),
                        claimed_sum.real(),
                        fmt("k = 3, t = 0.7, real part of the odd-frequency expansion; "
                            "imaginary part %.6g",
                            claimed_sum.imag())));
  }

  // Midpoint Euler-Maclaurin.
  out.push_back(claim("audit/em_first_coefficient", -1.0 / 12.0,
                      (bernoulli_half(1) / 2).convert_to<double>(),
                      "B_2(1/2)/2! printed as -1/12"));
  out.push_back(claim("audit/em_first_correction", 0.0, em_correction(5, 4, 1),
                      "O(1/J) term vanishes (k = 5, J = 4)"));
  {
    const int js[] = {1, 2, 3};
    const EmAnalysis em = decay_exponent(7, js);
    out.push_back(claim("audit/em_decay_rate", -3.0, em.fitted_exponent.value_or(0.0),
                        "first nonzero correction O(J^-3); k = 7, J = 1,2,3 residuals are "
                        "exactly -2 (odd-k residuals are 0 or -2)"));
  }

  report.sort_entries();
  return report;
}

}  // namespace kzeta
