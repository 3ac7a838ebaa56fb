#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include <kzeta/fpi.hpp>
#include <kzeta/series.hpp>

#include "cli/format.hpp"

namespace kzeta::cli {

struct XiRow {
  double s = 0.0;
  int J = 0;
  double series = 0.0;
  double bridge = 0.0;
  std::optional<double> closed_form;
  double abs_diff = 0.0;  // |series - bridge|
};

/// The five tabulated (s, J) pairs with closed forms.
std::vector<XiRow> xi_checkpoint_rows();
std::vector<XiRow> xi_sweep_rows(double s, std::span<const int> J_values);

void write_xi_table(std::ostream& out, std::string_view which, const std::vector<XiRow>& rows,
                    Format format);

void write_xi_results(std::ostream& out, const std::vector<XiResult>& results, XiVariant variant,
                      Format format);

struct FinitePartRequest {
  Kernel kernel = Kernel::Csch;
  int power = -3;
  double split_point = 1.0;
  int expansion_order = 0;
};

/// Prints the finite-part decomposition and, when the continued Mellin
/// transform is finite at s = power + 1, its value for comparison.
void write_finite_part(std::ostream& out, const FinitePartRequest& request,
                       const FinitePartResult& result, std::optional<double> continuation,
                       Format format);

}  // namespace kzeta::cli
