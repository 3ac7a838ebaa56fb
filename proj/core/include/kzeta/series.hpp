#pragma once

#include <string_view>

namespace kzeta {

enum class DirichletKind { Zeta, Beta };

/// zeta(s) or beta(s) for real s.
///
/// For s > 1/2 the alternating series (eta for zeta, beta directly) is
/// summed with sum_alternating; otherwise the functional equation maps the
/// argument to 1-s. Relative error <= 1e-12 on [-6, 20].
/// Zeta at s = 1 throws PoleError.
double dirichlet_value(DirichletKind kind, double s);

/// Catalan's constant G = beta(2).
inline constexpr double kCatalan = 0.91596559417721901505;

struct ClausenValue {
  double s = 0.0;
  double theta = 0.0;
  double value = 0.0;  // Sl_s(theta) = sum_{k>=1} sin(k theta) / k^s
  long terms_used = 0;
};

/// Clausen sine series Sl_s(theta) for s >= 2, theta in (0, 2 pi).
/// Absolute error <= 1e-10.
ClausenValue clausen_sl(double s, double theta);

/// Sl_s(pi * num / den) with the angle kept as an exact rational multiple
/// of pi; used on selector grids.
ClausenValue clausen_sl_rational(double s, long num, long den);

enum class XiMethod { DirectSeries, ClausenAverage, Bridge };
enum class XiVariant { Plain, Alternating };

std::string_view to_string(XiMethod method);

struct XiResult {
  double s = 0.0;
  int J = 0;
  double value = 0.0;
  XiMethod method = XiMethod::DirectSeries;
  double error_estimate = 0.0;
  long terms_used = 0;
};

/// Block-alternating sum
///   Plain:       sum_m (-1)^m sum_{j<J} (2Jm+2j+1)^{-s}
///   Alternating: sum_m (-1)^m sum_{j<J} (-1)^j (2Jm+2j+1)^{-s}   (J even)
/// Outer series accelerated, inner block summed with compensation.
XiResult xi(double s, int J, XiVariant variant = XiVariant::Plain);

/// Tabulated closed forms for (s, J) in {(3,1), (3,2), (3,4), (3,8), (2,1)}.
/// Anything else throws NotAvailable.
double xi_checkpoint(double s, int J);

/// (1/J) sum_j Sl_s(theta_j) / sin(theta_j) over the midpoint grid.
double clausen_average(double s, int J);

}  // namespace kzeta
