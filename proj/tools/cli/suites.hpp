#pragma once

#include <span>
#include <string>
#include <string_view>

#include <kzeta/report.hpp>

namespace kzeta::cli {

/// selectors, series, mellin, bridge, fpi, em, audit, all.
std::span<const std::string_view> suite_names();

bool is_suite(std::string_view name);

/// 1e-12 for selectors, 1e-8 for audit (its verdict threshold), 1e-10 otherwise.
double default_tolerance(std::string_view suite);

/// Runs a suite and judges every entry against `tolerance`. Entries are
/// sorted by name. An exception inside one check becomes a failed entry.
/// Unknown suite names throw std::invalid_argument.
VerificationReport run_suite(std::string_view suite, double tolerance);

/// 0 when every non-audit entry passes, else 1.
int exit_code(const VerificationReport& report);

}  // namespace kzeta::cli
