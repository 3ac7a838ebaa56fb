#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <kzeta/report.hpp>

namespace kzeta::cli {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view text);

/// 17 significant digits, scientific ("%.16e"); "null" for non-finite
/// values, which JSON cannot carry.
std::string json_real(double x);

/// JSON string literal with escapes.
std::string json_string(std::string_view s);

/// CSV field, quoted when it contains a separator, quote or newline.
std::string csv_field(std::string_view s);

void write_report(std::ostream& out, const VerificationReport& report, Format format);

}  // namespace kzeta::cli
