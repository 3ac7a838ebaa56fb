#include "cli/app.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <kzeta/kzeta.hpp>

#include "cli/format.hpp"
#include "cli/suites.hpp"
#include "cli/tables.hpp"

namespace kzeta::cli {

namespace {

const std::vector<std::string> kFormats = {"text", "json", "csv"};

struct VerifyOptions {
  std::string suite = "all";
  double tol = 0.0;
  std::string format = "text";
  bool timing = false;
};

struct TableOptions {
  std::string which = "xi_checkpoints";
  double s = 3.0;
  std::vector<int> J = {1, 2, 4, 8};
  std::string format = "text";
};

struct FpiOptions {
  std::string kernel = "csch";
  int exponent = -3;
  double split = 1.0;
  int order = 0;
  std::string format = "text";
};

struct XiOptions {
  double s = 3.0;
  std::vector<int> J = {1, 2, 4, 8};
  std::string variant = "plain";
  std::string method = "series";
  std::string format = "text";
};

Format format_of(const std::string& name) { return parse_format(name).value_or(Format::Text); }

int run_verify(const VerifyOptions& opt, bool tol_given, std::ostream& out) {
  const double tol = tol_given ? opt.tol : default_tolerance(opt.suite);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = run_suite(opt.suite, tol);
  if (opt.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  write_report(out, report, format_of(opt.format));
  return exit_code(report);
}

int run_table(const TableOptions& opt, std::ostream& out) {
  std::vector<XiRow> rows;
  if (opt.which == "xi_checkpoints") {
    rows = xi_checkpoint_rows();
  } else {
    if (!(opt.s > 1.0)) throw DomainError("table: s must exceed 1");
    if (opt.J.empty()) throw DomainError("table: J list is empty");
    for (int J : opt.J) {
      if (J < 1) throw DomainError("table: J must be positive");
    }
    rows = xi_sweep_rows(opt.s, opt.J);
  }
  write_xi_table(out, opt.which, rows, format_of(opt.format));
  return kPass;
}

int run_fpi(const FpiOptions& opt, bool order_given, std::ostream& out) {
  FinitePartRequest req;
  req.kernel = opt.kernel == "csch" ? Kernel::Csch : Kernel::Sech;
  req.power = opt.exponent;
  req.split_point = opt.split;
  req.expansion_order = order_given ? opt.order : default_expansion_order(opt.exponent);
  const FinitePartResult result = finite_part(req.kernel, req.power, req.split_point, req.expansion_order);
  std::optional<double> continuation;
  try {
    continuation = ac_reference(req.kernel, req.power + 1.0);
  } catch (const PoleError&) {
  }
  write_finite_part(out, req, result, continuation, format_of(opt.format));
  return kPass;
}

int run_xi(const XiOptions& opt, std::ostream& out) {
  const XiVariant variant = opt.variant == "plain" ? XiVariant::Plain : XiVariant::Alternating;
  if (variant == XiVariant::Alternating && opt.method != "series") {
    throw UnsupportedConfiguration("xi: the alternating variant is only available by series");
  }
  if (opt.J.empty()) throw DomainError("xi: J list is empty");
  std::vector<XiResult> results;
  for (int J : opt.J) {
    if (J < 1) throw DomainError("xi: J must be positive");
    if (opt.method == "series") {
      results.push_back(xi(opt.s, J, variant));
    } else if (opt.method == "bridge") {
      results.push_back(bridge_xi(opt.s, J));
    } else {
      XiResult r;
      r.s = opt.s;
      r.J = J;
      r.method = XiMethod::ClausenAverage;
      r.value = clausen_average(opt.s, J);
      r.error_estimate = 1e-10;  // accuracy contract of clausen_sl
      r.terms_used = J;
      results.push_back(r);
    }
  }
  write_xi_results(out, results, variant, format_of(opt.format));
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selector kernels, finite-J zeta/beta block sums and hyperbolic Mellin integrals", "kzeta"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites(suite_names().begin(), suite_names().end());
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  auto* tol_opt = verify_cmd->add_option("--tol", verify.tol, "Pass tolerance (abs or rel), default per suite")
                      ->check(CLI::Range(1e-14, 1e-6));
  verify_cmd->add_option("--format", verify.format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();
  verify_cmd->add_flag("--timing", verify.timing, "Record wall time in the report");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate xi_s(J) by series and bridge integral");
  table_cmd->add_option("--which", table.which, "Table to print")
      ->check(CLI::IsMember({"xi_checkpoints", "xi_sweep"}))
      ->capture_default_str();
  table_cmd->add_option("--s", table.s, "Exponent s > 1 (xi_sweep)")->capture_default_str();
  table_cmd->add_option("--J", table.J, "Comma-separated block sizes (xi_sweep)")->delimiter(',');
  table_cmd->add_option("--format", table.format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();

  FpiOptions fpi;
  auto* fpi_cmd = app.add_subcommand("fpi", "Hadamard finite part of int x^p K(x) dx at zero");
  fpi_cmd->add_option("--kernel", fpi.kernel, "csch or sech")->check(CLI::IsMember({"csch", "sech"}))->capture_default_str();
  fpi_cmd->add_option("--exponent", fpi.exponent, "Power p <= -1")->capture_default_str();
  fpi_cmd->add_option("--split", fpi.split, "Split point c > 0")->capture_default_str();
  auto* order_opt = fpi_cmd->add_option("--order", fpi.order, "Expansion order (default |p| + 6)");
  fpi_cmd->add_option("--format", fpi.format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();

  XiOptions xiopt;
  auto* xi_cmd = app.add_subcommand("xi", "Evaluate xi_s(J)");
  xi_cmd->add_option("--s", xiopt.s, "Exponent s > 1")->capture_default_str();
  xi_cmd->add_option("--J", xiopt.J, "Comma-separated block sizes")->delimiter(',');
  xi_cmd->add_option("--variant", xiopt.variant, "plain or alternating")
      ->check(CLI::IsMember({"plain", "alternating"}))
      ->capture_default_str();
  xi_cmd->add_option("--method", xiopt.method, "series, clausen or bridge")
      ->check(CLI::IsMember({"series", "clausen", "bridge"}))
      ->capture_default_str();
  xi_cmd->add_option("--format", xiopt.format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify, tol_opt->count() > 0, out);
    if (table_cmd->parsed()) return run_table(table, out);
    if (fpi_cmd->parsed()) return run_fpi(fpi, order_opt->count() > 0, out);
    if (xi_cmd->parsed()) return run_xi(xiopt, out);
  } catch (const Error& e) {
    err << "kzeta: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kzeta::cli
