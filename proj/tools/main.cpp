// Command line front end: kernel tabulation, analytic solves with error
// reporting, convergence studies, and the oracle-backed self test.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O error.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsgf/constants.hpp"
#include "nsgf/field_io.hpp"
#include "nsgf/harness.hpp"

namespace {

using namespace nsgf;

struct CommonOpts {
  int dim = 3;
  int n = 64;
  std::string case_name = "gaussian";
  double width = 0.0;
  double ref_length = 3.0;
  std::string kernel = "regularized";
  std::string out;
  std::string format = "csv";
};

void add_case_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--dim", o.dim, "dimension")->check(CLI::Range(1, 3));
  cmd->add_option("--case", o.case_name, "analytic case")
      ->check(CLI::IsMember({"gaussian", "compact-bump", "point-vortex"}));
  cmd->add_option("--width", o.width, "RHS width parameter (0 = default)");
  cmd->add_option("--ref-length", o.ref_length, "reference length L")->default_val(3.0);
}

int run_kernel_table(int dim, double sigma, double L, double r_max, int samples,
                     const std::string& out) {
  harness::write_kernel_table_csv(out, dim, sigma, L, r_max, samples);
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

void write_solution(const harness::SolveOutcome& outcome, const std::string& out,
                    const std::string& format) {
  if (out.empty()) return;
  if (!outcome.vector_valued) {
    if (format == "binary")
      io::write_binary(out, outcome.solution);
    else
      io::write_csv(out, outcome.solution);
    std::printf("wrote %s\n", out.c_str());
    return;
  }
  for (int c = 0; c < outcome.velocity.components; ++c) {
    grid::ScalarField comp{outcome.velocity.grid, outcome.velocity.component[c]};
    const std::string path = out + ".v" + std::to_string(c);
    if (format == "binary")
      io::write_binary(path, comp);
    else
      io::write_csv(path, comp);
    std::printf("wrote %s\n", path.c_str());
  }
}

int run_solve_cmd(const CommonOpts& o) {
  const auto tc = harness::TestCase::make(o.dim, harness::rhs_kind_from_name(o.case_name),
                                          o.width, o.ref_length);
  auto run_one = [&](bool regularized) {
    const auto outcome = harness::run_solve(tc, o.n, regularized);
    if (outcome.boundary_warning)
      std::fprintf(stderr,
                   "warning: RHS not compactly supported on this grid, boundary magnitude %.3g\n",
                   outcome.boundary_max);
    std::printf("%s kernel: rel l_inf %.6e  rel l_2 %.6e\n",
                regularized ? "regularized" : "singular", outcome.error_linf_rel,
                outcome.error_l2_rel);
    return outcome;
  };
  if (o.kernel == "both") {
    run_one(true);
    const auto outcome = run_one(false);
    write_solution(outcome, o.out, o.format);
  } else {
    const auto outcome = run_one(o.kernel == "regularized");
    write_solution(outcome, o.out, o.format);
  }
  return 0;
}

int run_convergence_cmd(const CommonOpts& o, const std::string& n_list) {
  std::vector<int> ns;
  std::size_t pos = 0;
  while (pos < n_list.size()) {
    std::size_t comma = n_list.find(',', pos);
    if (comma == std::string::npos) comma = n_list.size();
    ns.push_back(std::stoi(n_list.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  for (int n : ns)
    if (n < 4 || (n & (n - 1)) != 0)
      throw CLI::ValidationError("--n-list entries must be powers of two >= 4");
  const auto tc = harness::TestCase::make(o.dim, harness::rhs_kind_from_name(o.case_name),
                                          o.width, o.ref_length);
  std::vector<harness::ConvergenceRecord> records;
  if (o.kernel == "both" || o.kernel == "regularized") {
    auto r = harness::run_convergence(tc, ns, true);
    records.insert(records.end(), r.begin(), r.end());
  }
  if (o.kernel == "both" || o.kernel == "singular") {
    auto r = harness::run_convergence(tc, ns, false);
    records.insert(records.end(), r.begin(), r.end());
  }
  for (const auto& r : records)
    std::printf("%s n=%3d h=%.6g rel l_inf=%.6e rel l_2=%.6e order=%s\n",
                r.regularized ? "reg " : "sing", r.n, r.h, r.error_linf, r.error_l2,
                std::isnan(r.observed_order) ? "-"
                                             : std::to_string(r.observed_order).c_str());
  if (!o.out.empty()) {
    harness::write_convergence_csv(o.out, records);
    std::printf("wrote %s\n", o.out.c_str());
  }
  return 0;
}

int run_selftest_cmd(bool inject_c2, bool inject_wrap) {
  harness::FaultInjection faults;
  faults.flip_c2_gamma_sign = inject_c2;
  faults.skip_zero_padding = inject_wrap;
  const auto report = harness::run_selftest(faults);
  std::printf("%-22s %-6s %s\n", "suite", "result", "detail");
  for (const auto& s : report.suites)
    std::printf("%-22s %-6s %s\n", s.name.c_str(), s.pass ? "PASS" : "FAIL",
                s.detail.c_str());
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-singular Green's function toolkit for the unbounded Poisson equation"};
  app.require_subcommand(1);

  CommonOpts o;

  // kernel-table
  auto* table = app.add_subcommand("kernel-table", "tabulate G and K kernel curves as CSV");
  int table_dim = 3;
  double sigma = 1.0 / nsgf::pi;
  double table_L = 3.0;
  double r_max = 6.0;
  int samples = 601;
  std::string table_out = "kernel_table.csv";
  table->add_option("--dim", table_dim, "dimension")->check(CLI::Range(1, 3));
  table->add_option("--sigma", sigma, "regularization length (default h/pi with h = 1)");
  table->add_option("--ref-length", table_L, "reference length L")->default_val(3.0);
  table->add_option("--r-max", r_max, "max radius in units of h");
  table->add_option("--samples", samples, "number of rows");
  table->add_option("--out", table_out, "output CSV path");

  // solve
  auto* solve = app.add_subcommand("solve", "solve one analytic case and report errors");
  add_case_flags(solve, o);
  solve->add_option("--n", o.n, "grid extent per axis (power of two)");
  solve->add_option("--kernel", o.kernel, "kernel choice")
      ->check(CLI::IsMember({"regularized", "singular", "both"}));
  solve->add_option("--out", o.out, "output field path");
  solve->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "binary"}));

  // convergence
  auto* conv = app.add_subcommand("convergence", "grid refinement study, CSV output");
  std::string n_list = "16,32,64";
  add_case_flags(conv, o);
  conv->add_option("--n-list", n_list, "comma-separated ascending extents");
  conv->add_option("--kernel", o.kernel, "kernel choice")
      ->check(CLI::IsMember({"regularized", "singular", "both"}));
  conv->add_option("--out", o.out, "output CSV path");

  // selftest
  auto* self = app.add_subcommand("selftest", "run the oracle-backed invariant suites");
  bool inject_c2 = false, inject_wrap = false;
  self->add_flag("--inject-c2-fault", inject_c2,
                 "test fixture: flip the gamma sign in the 2D constant");
  self->add_flag("--inject-wrap-fault", inject_wrap,
                 "test fixture: drop the zero padding (periodic convolution)");

  try {
    app.parse(argc, argv);
    if (table->parsed())
      return run_kernel_table(table_dim, sigma, table_L, r_max, samples, table_out);
    if (solve->parsed()) {
      if (o.n < 4 || (o.n & (o.n - 1)) != 0)
        throw CLI::ValidationError("--n must be a power of two >= 4");
      return run_solve_cmd(o);
    }
    if (conv->parsed()) return run_convergence_cmd(o, n_list);
    if (self->parsed()) return run_selftest_cmd(inject_c2, inject_wrap);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const nsgf::io::IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
