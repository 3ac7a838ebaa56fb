#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kzeta {

enum class Provenance { Paper, Trivial, Derived };

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view text);

struct CheckEntry {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;  // abs_error / |expected|, or abs_error when expected == 0
  bool pass = false;
  Provenance provenance = Provenance::Derived;
  std::string note;

  /// Audit entries ("audit/..." names) are findings, never failures.
  bool informational() const { return std::string_view(name).starts_with("audit/"); }
};

/// pass = abs_error <= tolerance || rel_error <= tolerance.
CheckEntry make_check(std::string name, double expected, double computed, double tolerance,
                      Provenance provenance, std::string note = {});

struct VerificationReport {
  std::string suite;
  double tolerance = 0.0;
  std::vector<CheckEntry> entries;
  std::int64_t wall_time_ms = 0;

  /// True iff every non-informational entry passes.
  bool passed() const;

  /// Stable ordering by entry name.
  void sort_entries();
};

}  // namespace kzeta
