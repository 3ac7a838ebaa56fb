#pragma once

namespace kzeta {

/// Gamma function for real x.
///
/// Lanczos approximation (g = 607/128, 15 terms) for x >= 1/2 and the
/// reflection formula below that. Relative error stays under 1e-13 on
/// (0, 50] and at negative non-integers of moderate size. Throws
/// PoleError at 0 and the negative integers.
double gamma(double x);

/// log|Gamma(x)| for x > 0.
double log_gamma(double x);

}  // namespace kzeta
