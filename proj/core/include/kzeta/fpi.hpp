#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kzeta/report.hpp"

namespace kzeta {

using Rational = boost::multiprecision::cpp_rational;

enum class SpecialNumberKind { Bernoulli, Euler };

/// Exact B_0..B_{n_max} (B_1 = -1/2) or E_0..E_{n_max}, from the standard
/// recurrences. n_max <= 60, else CapacityError. Tables are built once.
std::vector<Rational> special_numbers(SpecialNumberKind kind, int n_max);

enum class Kernel { Csch, Sech };

/// Laurent/Taylor expansion of 1/sinh x or 1/cosh x about zero:
///   1/sinh x = sum_n (2 - 2^{2n}) B_{2n} x^{2n-1} / (2n)!
///   1/cosh x = sum_n E_{2n} x^{2n} / (2n)!
struct KernelExpansion {
  Kernel kernel = Kernel::Csch;
  std::vector<int> exponents;
  std::vector<Rational> coefficients;
  int order = 0;  // highest retained exponent

  double evaluate(double x) const;
};

/// All terms with exponent <= order; order <= 40 (CapacityError above).
KernelExpansion kernel_expansion(Kernel kernel, int order);

struct SubtractedTerm {
  int exponent = 0;
  double coefficient = 0.0;
};

struct FinitePartResult {
  double value = 0.0;
  double split_point = 1.0;
  std::vector<SubtractedTerm> subtracted_terms;
  double compensation = 0.0;  // sum coef * c^{a+1} / (a+1)
  double regular_part = 0.0;  // int_0^c (x^p K(x) - subtracted) dx
  double tail = 0.0;          // int_c^inf x^p K(x) dx
  double error_estimate = 0.0;
};

/// Smallest admissible expansion order: the largest kernel exponent e with
/// power + e < 0, so every divergent monomial is subtracted.
int min_expansion_order(Kernel kernel, int power);

/// Default expansion order |power| + 6.
int default_expansion_order(int power);

/// Hadamard finite part at zero of int_0^inf x^power K(x) dx.
///
/// Subtracts the kernel expansion through expansion_order on (0, c],
/// adds back the power-rule integrals of those monomials, and integrates
/// the raw integrand on [c, inf). No subtracted exponent may be -1
/// (UnsupportedConfiguration); for these kernels that needs Csch with odd
/// power or Sech with even power.
FinitePartResult finite_part(Kernel kernel, int power, double split_point = 1.0,
                             std::optional<int> expansion_order = std::nullopt);

/// Analytic continuation of the Mellin transforms
///   Csch: 2 (1 - 2^{-s}) Gamma(s) zeta(s),   Sech: 2 Gamma(s) beta(s).
/// At non-positive integers, where Gamma has a pole, the symmetric average
/// at s +- eps (eps = 1e-3, 5e-4, 2.5e-4) is Richardson-extrapolated to
/// eps -> 0. A pole that does not cancel throws PoleError.
double ac_reference(Kernel kernel, double s);

/// Computes both sides of each quantitative claim (finite-part constants,
/// kernel integral normalisations, table limits, orthogonality and spectrum
/// statements) and records match/mismatch at 1e-8 with ratios.
/// All entries are informational.
VerificationReport claims_audit();

}  // namespace kzeta
