#include "cli/tables.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include <kzeta/errors.hpp>
#include <kzeta/quadrature.hpp>

namespace kzeta::cli {

namespace {

XiRow make_row(double s, int J, std::optional<double> closed_form) {
  XiRow row;
  row.s = s;
  row.J = J;
  row.series = xi(s, J).value;
  row.bridge = bridge_xi(s, J).value;
  row.closed_form = closed_form;
  row.abs_diff = std::abs(row.series - row.bridge);
  return row;
}

std::string fixed(double x) { return fmt::format("{:.16f}", x); }

std::string_view kernel_name(Kernel k) { return k == Kernel::Csch ? "csch" : "sech"; }

}  // namespace

std::vector<XiRow> xi_checkpoint_rows() {
  std::vector<XiRow> rows;
  for (auto [s, J] : {std::pair{3.0, 1}, {3.0, 2}, {3.0, 4}, {3.0, 8}, {2.0, 1}}) {
    rows.push_back(make_row(s, J, xi_checkpoint(s, J)));
  }
  return rows;
}

std::vector<XiRow> xi_sweep_rows(double s, std::span<const int> J_values) {
  std::vector<XiRow> rows;
  for (int J : J_values) {
    std::optional<double> closed;
    try {
      closed = xi_checkpoint(s, J);
    } catch (const NotAvailable&) {
    }
    rows.push_back(make_row(s, J, closed));
  }
  return rows;
}

void write_xi_table(std::ostream& out, std::string_view which, const std::vector<XiRow>& rows,
                    Format format) {
  switch (format) {
    case Format::Text:
      out << fmt::format("{:>4} {:>5}  {:>20}  {:>20}  {:>20}  {:>10}\n", "s", "J", "series", "bridge",
                         "closed form", "|diff|");
      for (const auto& r : rows) {
        out << fmt::format("{:>4g} {:>5}  {:>20}  {:>20}  {:>20}  {:>10.2e}\n", r.s, r.J, fixed(r.series),
                           fixed(r.bridge), r.closed_form ? fixed(*r.closed_form) : "-", r.abs_diff);
      }
      break;
    case Format::Json:
      out << "{\n  \"which\": " << json_string(which) << ",\n  \"rows\": [";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"s\": " << json_real(r.s) << ", \"J\": " << r.J << ", \"series\": " << json_real(r.series)
            << ", \"bridge\": " << json_real(r.bridge)
            << ", \"closed_form\": " << (r.closed_form ? json_real(*r.closed_form) : "null")
            << ", \"abs_diff\": " << json_real(r.abs_diff) << "}";
      }
      out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
      break;
    case Format::Csv:
      out << "s,J,series,bridge,closed_form,abs_diff\n";
      for (const auto& r : rows) {
        out << json_real(r.s) << ',' << r.J << ',' << json_real(r.series) << ',' << json_real(r.bridge) << ','
            << (r.closed_form ? json_real(*r.closed_form) : "") << ',' << json_real(r.abs_diff) << '\n';
      }
      break;
  }
}

void write_xi_results(std::ostream& out, const std::vector<XiResult>& results, XiVariant variant,
                      Format format) {
  const std::string_view variant_name = variant == XiVariant::Plain ? "plain" : "alternating";
  switch (format) {
    case Format::Text:
      out << fmt::format("{:>4} {:>5}  {:<14} {:>20}  {:>10}  {:>6}\n", "s", "J", "method", "value",
                         "error est", "terms");
      for (const auto& r : results) {
        out << fmt::format("{:>4g} {:>5}  {:<14} {:>20}  {:>10.2e}  {:>6}\n", r.s, r.J, to_string(r.method),
                           fixed(r.value), r.error_estimate, r.terms_used);
      }
      break;
    case Format::Json:
      out << "{\n  \"variant\": " << json_string(variant_name) << ",\n  \"results\": [";
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"s\": " << json_real(r.s) << ", \"J\": " << r.J
            << ", \"method\": " << json_string(to_string(r.method)) << ", \"value\": " << json_real(r.value)
            << ", \"error_estimate\": " << json_real(r.error_estimate) << ", \"terms_used\": " << r.terms_used
            << "}";
      }
      out << (results.empty() ? "]\n}\n" : "\n  ]\n}\n");
      break;
    case Format::Csv:
      out << "s,J,method,value,error_estimate,terms_used\n";
      for (const auto& r : results) {
        out << json_real(r.s) << ',' << r.J << ',' << to_string(r.method) << ',' << json_real(r.value) << ','
            << json_real(r.error_estimate) << ',' << r.terms_used << '\n';
      }
      break;
  }
}

void write_finite_part(std::ostream& out, const FinitePartRequest& req, const FinitePartResult& r,
                       std::optional<double> continuation, Format format) {
  switch (format) {
    case Format::Text: {
      out << fmt::format("FP int_0^inf x^{} / {} x dx\n", req.power, req.kernel == Kernel::Csch ? "sinh" : "cosh");
      out << fmt::format("  value            {:.16g}\n", r.value);
      out << fmt::format("  split point      {:g}\n", r.split_point);
      out << fmt::format("  expansion order  {}\n", req.expansion_order);
      out << "  subtracted      ";
      for (const auto& t : r.subtracted_terms) out << fmt::format(" {:+.16g} x^{}", t.coefficient, t.exponent);
      out << '\n';
      out << fmt::format("  regular part     {:.16g}\n", r.regular_part);
      out << fmt::format("  compensation     {:.16g}\n", r.compensation);
      out << fmt::format("  tail             {:.16g}\n", r.tail);
      out << fmt::format("  error estimate   {:.2e}\n", r.error_estimate);
      if (continuation) {
        out << fmt::format("  continuation     {:.16g}  (Mellin transform at s = {})\n", *continuation,
                           req.power + 1);
      } else {
        out << fmt::format("  continuation     pole at s = {}\n", req.power + 1);
      }
      break;
    }
    case Format::Json: {
      out << "{\n";
      out << "  \"kernel\": " << json_string(kernel_name(req.kernel)) << ",\n";
      out << "  \"exponent\": " << req.power << ",\n";
      out << "  \"split_point\": " << json_real(r.split_point) << ",\n";
      out << "  \"expansion_order\": " << req.expansion_order << ",\n";
      out << "  \"value\": " << json_real(r.value) << ",\n";
      out << "  \"regular_part\": " << json_real(r.regular_part) << ",\n";
      out << "  \"compensation\": " << json_real(r.compensation) << ",\n";
      out << "  \"tail\": " << json_real(r.tail) << ",\n";
      out << "  \"error_estimate\": " << json_real(r.error_estimate) << ",\n";
      out << "  \"subtracted_terms\": [";
      for (std::size_t i = 0; i < r.subtracted_terms.size(); ++i) {
        const auto& t = r.subtracted_terms[i];
        out << (i == 0 ? "" : ", ") << "{\"exponent\": " << t.exponent
            << ", \"coefficient\": " << json_real(t.coefficient) << "}";
      }
      out << "],\n";
      out << "  \"analytic_continuation\": " << (continuation ? json_real(*continuation) : "null") << "\n";
      out << "}\n";
      break;
    }
    case Format::Csv: {
      out << "field,value\n";
      out << "kernel," << kernel_name(req.kernel) << '\n';
      out << "exponent," << req.power << '\n';
      out << "split_point," << json_real(r.split_point) << '\n';
      out << "expansion_order," << req.expansion_order << '\n';
      out << "value," << json_real(r.value) << '\n';
      out << "regular_part," << json_real(r.regular_part) << '\n';
      out << "compensation," << json_real(r.compensation) << '\n';
      out << "tail," << json_real(r.tail) << '\n';
      out << "error_estimate," << json_real(r.error_estimate) << '\n';
      for (const auto& t : r.subtracted_terms) {
        out << "subtracted_x^" << t.exponent << ',' << json_real(t.coefficient) << '\n';
      }
      out << "analytic_continuation," << (continuation ? json_real(*continuation) : "") << '\n';
      break;
    }
  }
}

}  // namespace kzeta::cli
