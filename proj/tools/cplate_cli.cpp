// cplate: eigencurves, eigenvalue bounds, negativity bounds and self-checks for
// the clamped plate on [0, h] x [0, 1].
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cplate/bounds.hpp"
#include "cplate/eigencurve.hpp"
#include "cplate/greens.hpp"
#include "cplate/oracle.hpp"
#include "cplate/report.hpp"
#include "cplate/verify.hpp"

namespace {

using namespace cplate;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "csv";
  std::string out;
  int precision = 6;
  std::vector<double> h_values;
  std::vector<double> range;  // MIN MAX STEPS

  [[nodiscard]] OutputSpec spec() const {
    OutputSpec s;
    s.format = format == "json" ? Format::json : Format::csv;
    s.path = out;
    s.precision = precision;
    return s;
  }

  // --h values first, then the --range grid; at least one is required.
  [[nodiscard]] std::vector<double> h_grid() const {
    std::vector<double> hs = h_values;
    if (!range.empty()) {
      const double lo = range[0], hi = range[1];
      const int steps = static_cast<int>(range[2]);
      if (!(hi > lo) || steps < 1 || range[2] != steps) {
        throw UsageError("--range expects MIN < MAX and an integer STEPS >= 1");
      }
      for (int i = 0; i <= steps; ++i) hs.push_back(lo + (hi - lo) * i / steps);
    }
    if (hs.empty()) throw UsageError("give h values with --h or --range");
    for (double h : hs) {
      if (!(h > 0.0)) throw UsageError("h values must be > 0");
    }
    return hs;
  }
};

void add_output_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "Output path (default: standard output)");
  cmd->add_option("--precision", opt.precision, "Significant digits")
      ->check(CLI::Range(3, 15))
      ->capture_default_str();
}

void add_h_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--h", opt.h_values, "Rectangle length (repeatable)")->take_all();
  cmd->add_option("--range", opt.range, "MIN MAX STEPS uniform h grid")->expected(3);
}

void emit(const Table& table, const OutputSpec& spec) {
  if (spec.path.empty()) {
    write_table(std::cout, table, spec);
    return;
  }
  std::ofstream file(spec.path);
  if (!file) throw UsageError("cannot open output file " + spec.path);
  write_table(file, table, spec);
}

// Evaluates fn on every h concurrently; results come back in input order.
template <class Fn>
auto map_rows(const std::vector<double>& hs, Fn fn) {
  using Row = decltype(fn(0.0));
  std::vector<std::future<Row>> jobs;
  jobs.reserve(hs.size());
  for (double h : hs) jobs.push_back(std::async(std::launch::async, fn, h));
  std::vector<Row> rows;
  rows.reserve(hs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      rows.push_back(jobs[i].get());
    } catch (const NumericalError& e) {
      throw NumericalError("h=" + verify::fmt(hs[i], 10) + ": " + e.what());
    }
  }
  return rows;
}

int run_curves(double alpha_min, double alpha_max, int steps, int n_max, const CommonOptions& opt) {
  if (!(alpha_min >= 0.0) || !(alpha_max > alpha_min) || steps < 1) {
    throw UsageError("curves expects 0 <= ALPHA_MIN < ALPHA_MAX and STEPS >= 1");
  }
  if (n_max < 1 || n_max > 4) throw UsageError("curves expects 1 <= N_MAX <= 4");
  Table table;
  table.columns.push_back("alpha");
  for (int n = 1; n <= n_max; ++n) table.columns.push_back("rho" + std::to_string(n));
  for (int i = 0; i <= steps; ++i) {
    const double alpha = alpha_min + (alpha_max - alpha_min) * i / steps;
    std::vector<Cell> row{alpha};
    for (int n = 1; n <= n_max; ++n) row.emplace_back(rho(n, alpha).rho);
    table.add_row(std::move(row));
  }
  emit(table, opt.spec());
  return 0;
}

int run_bounds(const CommonOptions& opt) {
  const auto rows = map_rows(opt.h_grid(), [](double h) { return bounds_row(h); });
  Table table{{"h", "lambda1", "lambda2", "lambda3", "nu1", "pct_err", "alpha_g"}, {}};
  for (const BoundsRow& r : rows) {
    table.add_row({r.h, r.lambda1, r.lambda2, r.lambda3, r.nu1, r.pct_err, r.alpha_g});
  }
  emit(table, opt.spec());
  return 0;
}

int run_negativity(const CommonOptions& opt) {
  const auto rows = map_rows(opt.h_grid(), [](double h) { return bounds_row(h); });
  Table table{{"h", "l2_bound", "linf_bound", "status"}, {}};
  for (const BoundsRow& r : rows) {
    if (r.negativity) {
      table.add_row({r.h, r.negativity->l2, r.negativity->linf, std::string("ok")});
    } else {
      std::cerr << "cplate: negativity bound is vacuous at h=" << r.h << " (lambda3 <= nu1)\n";
      table.add_row({r.h, std::monostate{}, std::monostate{}, std::string("vacuous")});
    }
  }
  emit(table, opt.spec());
  return 0;
}

int run_verify(const std::string& level, const CommonOptions& opt) {
  const auto results = run_verification(level == "full" ? VerifyLevel::full : VerifyLevel::fast);
  Table table{{"check", "passed", "detail"}, {}};
  bool all = true;
  for (const CheckResult& r : results) {
    all = all && r.passed;
    table.add_row({r.name, r.passed, r.detail});
  }
  emit(table, opt.spec());
  return all ? 0 : kExitNumerical;
}

int run_greens(double a, int grid, const CommonOptions& opt) {
  if (!(a > 0.0)) throw UsageError("greens expects --a > 0");
  if (grid < 2) throw UsageError("greens expects --grid >= 2");
  const GreensKernel kernel(a);
  Table table{{"x", "y", "G"}, {}};
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const double x = static_cast<double>(i) / grid, y = static_cast<double>(j) / grid;
      table.add_row({x, y, kernel.G(x, y)});
    }
  }
  emit(table, opt.spec());
  return 0;
}

int run_oracle(int basis_m, int basis_n, const CommonOptions& opt) {
  if (basis_m < 4 || basis_n < 4 || basis_m * basis_n > 4096) {
    throw UsageError("oracle expects basis sizes >= 4 with product <= 4096");
  }
  const auto rows = map_rows(opt.h_grid(), [=](double h) { return oracle_report(h, basis_m, basis_n); });
  Table table{{"h", "basis_m", "basis_n", "mu1_estimate", "mu3_estimate", "lambda1", "nu1",
               "enclosure_ok"},
              {}};
  for (const OracleReport& r : rows) {
    table.add_row({r.h, static_cast<long long>(r.basis_m), static_cast<long long>(r.basis_n),
                   r.mu1_estimate, r.mu3_estimate, r.lambda1, r.nu1, r.enclosure_ok});
  }
  emit(table, opt.spec());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue bounds for the clamped plate on [0,h]x[0,1]"};
  app.require_subcommand(1);
  // "-h" is taken by the rectangle length, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  CommonOptions curves_opt, bounds_opt, neg_opt, verify_opt, greens_opt, oracle_opt;

  double alpha_min = 0.0, alpha_max = 0.0;
  int steps = 0, n_max = 4;
  auto* curves = app.add_subcommand("curves", "First eigenvalues rho_n(alpha) of H(1, alpha)");
  curves->add_option("alpha_min", alpha_min)->required();
  curves->add_option("alpha_max", alpha_max)->required();
  curves->add_option("steps", steps)->required();
  curves->add_option("n_max", n_max)->capture_default_str();
  add_output_flags(curves, curves_opt);

  auto* bounds = app.add_subcommand("bounds", "lambda1, lambda2, lambda3, nu1 per h");
  add_output_flags(bounds, bounds_opt);
  add_h_flags(bounds, bounds_opt);

  auto* negativity = app.add_subcommand("negativity", "Groundstate negative-part bounds per h");
  add_output_flags(negativity, neg_opt);
  add_h_flags(negativity, neg_opt);

  std::string level = "fast";
  auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suite");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  add_output_flags(verify_cmd, verify_opt);

  double a = 1.0;
  int grid = 20;
  auto* greens = app.add_subcommand("greens", "Green's function G(x,y) on a uniform grid");
  greens->add_option("--a", a, "Parameter a (operator d^4 - a^2 d^2)")->required();
  greens->add_option("--grid", grid, "Intervals per direction")->capture_default_str();
  add_output_flags(greens, greens_opt);

  int basis_m = 14, basis_n = 14;
  auto* oracle = app.add_subcommand("oracle", "Rayleigh-Ritz cross-check per h");
  oracle->add_option("--basis-m", basis_m, "Beam modes along x")->capture_default_str();
  oracle->add_option("--basis-n", basis_n, "Beam modes along y")->capture_default_str();
  add_output_flags(oracle, oracle_opt);
  add_h_flags(oracle, oracle_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*curves) return run_curves(alpha_min, alpha_max, steps, n_max, curves_opt);
    if (*bounds) return run_bounds(bounds_opt);
    if (*negativity) return run_negativity(neg_opt);
    if (*verify_cmd) return run_verify(level, verify_opt);
    if (*greens) return run_greens(a, grid, greens_opt);
    if (*oracle) return run_oracle(basis_m, basis_n, oracle_opt);
  } catch (const UsageError& e) {
    std::cerr << "cplate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cplate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cplate: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
