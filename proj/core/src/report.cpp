#include "kzeta/report.hpp"

#include <algorithm>
#include <cmath>

namespace kzeta {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "Paper";
    case Provenance::Trivial: return "Trivial";
    case Provenance::Derived: return "Derived";
  }
  return "Derived";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
  if (text == "Paper") return Provenance::Paper;
  if (text == "Trivial") return Provenance::Trivial;
  if (text == "Derived") return Provenance::Derived;
  return std::nullopt;
}

CheckEntry make_check(std::string name, double expected, double computed, double tolerance,
                      Provenance provenance, std::string note) {
  CheckEntry e;
  e.name = std::move(name);
  e.expected = expected;
  e.computed = computed;
  e.abs_error = std::abs(computed - expected);
  e.rel_error = expected != 0.0 ? e.abs_error / std::abs(expected) : e.abs_error;
  e.pass = e.abs_error <= tolerance || e.rel_error <= tolerance;
  e.provenance = provenance;
  e.note = std::move(note);
  return e;
}

bool VerificationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CheckEntry& e) { return e.informational() || e.pass; });
}

void VerificationReport::sort_entries() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; });
}

}  // namespace kzeta
