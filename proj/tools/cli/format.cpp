#include "cli/format.hpp"

#include <cmath>
#include <cstddef>

#include <fmt/format.h>
#include <json.hpp>

namespace kzeta::cli {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

std::string json_real(double x) {
  if (!std::isfinite(x)) return "null";
  return fmt::format("{:.16e}", x);
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

namespace {

void write_text(std::ostream& out, const VerificationReport& report) {
  std::size_t failed = 0;
  std::size_t mismatches = 0;
  std::size_t width = 4;
  for (const auto& e : report.entries) width = std::max(width, e.name.size());

  out << fmt::format("suite {}  tolerance {:.1e}\n", report.suite, report.tolerance);
  for (const auto& e : report.entries) {
    std::string_view status = e.pass ? "PASS" : "FAIL";
    if (e.informational()) {
      status = e.pass ? "match" : "MISMATCH";
      if (!e.pass) ++mismatches;
    } else if (!e.pass) {
      ++failed;
    }
    out << fmt::format("{:<8} {:<{}}  expected {:>22.15g}  computed {:>22.15g}  abs {:.2e}  rel {:.2e}  [{}]",
                       status, e.name, width, e.expected, e.computed, e.abs_error, e.rel_error,
                       to_string(e.provenance));
    if (!e.note.empty()) out << "  " << e.note;
    out << '\n';
  }
  out << fmt::format("{} checks, {} failed", report.entries.size(), failed);
  if (mismatches > 0) out << fmt::format(", {} audit mismatches (informational)", mismatches);
  if (report.wall_time_ms > 0) out << fmt::format(", {} ms", report.wall_time_ms);
  out << '\n';
}

void write_json(std::ostream& out, const VerificationReport& report) {
  out << "{\n";
  out << "  \"suite\": " << json_string(report.suite) << ",\n";
  out << "  \"tolerance\": " << json_real(report.tolerance) << ",\n";
  out << "  \"entries\": [";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"name\": " << json_string(e.name) << ", \"expected\": " << json_real(e.expected)
        << ", \"computed\": " << json_real(e.computed) << ", \"abs_error\": " << json_real(e.abs_error)
        << ", \"rel_error\": " << json_real(e.rel_error) << ", \"pass\": " << (e.pass ? "true" : "false")
        << ", \"provenance\": " << json_string(to_string(e.provenance))
        << ", \"note\": " << json_string(e.note) << "}";
  }
  out << (report.entries.empty() ? "],\n" : "\n  ],\n");
  out << "  \"wall_time_ms\": " << report.wall_time_ms << "\n";
  out << "}\n";
}

void write_csv(std::ostream& out, const VerificationReport& report) {
  out << "name,expected,computed,abs_error,rel_error,pass,provenance,note\n";
  for (const auto& e : report.entries) {
    out << csv_field(e.name) << ',' << json_real(e.expected) << ',' << json_real(e.computed) << ','
        << json_real(e.abs_error) << ',' << json_real(e.rel_error) << ',' << (e.pass ? "true" : "false")
        << ',' << to_string(e.provenance) << ',' << csv_field(e.note) << '\n';
  }
}

}  // namespace

void write_report(std::ostream& out, const VerificationReport& report, Format format) {
  switch (format) {
    case Format::Text:
      write_text(out, report);
      break;
    case Format::Json:
      write_json(out, report);
      break;
    case Format::Csv:
      write_csv(out, report);
      break;
  }
}

}  // namespace kzeta::cli
