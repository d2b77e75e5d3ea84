#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using fcont::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& config) {
  auto* fn = cmd->add_option("--fn", config.function, "built-in test function (sin20, expcos50, kink3, runge1, x, ...)");
  auto* data = cmd->add_option("--data", config.data_path, "sample file: rows `x,f` or a single column `f`");
  fn->excludes(data);
  cmd->add_option("--n", config.n, "grid half-size n for built-in functions")->check(CLI::Range(2, 1 << 22));
  cmd->add_option("--r", config.r, "continuation order r")->check(CLI::Range(0, fcont::kMaxOrder));
  cmd->add_option("--p", config.p, "finite-difference accuracy order p")->check(CLI::Range(1, 60));
  cmd->add_option("--grid", config.grid, "dense evaluation grid N")->check(CLI::PositiveNumber);
  cmd->add_option("--format", config.format, "csv | json | markdown");
  cmd->add_option("--out", config.out_path, "output path (default: stdout)");
}

int emit(const std::string& text, const RunConfig& config) {
  if (!config.out_path) {
    std::cout << text;
    return fcont::cli::kSuccess;
  }
  std::ofstream out(*config.out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << *config.out_path << "'\n";
    return fcont::cli::kIoError;
  }
  return fcont::cli::kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier continuation approximation of equispaced samples on [0, 1]"};
  app.require_subcommand(1);

  RunConfig config;
  auto* cont = app.add_subcommand("continue", "write the continued profile on [-1, 1]");
  add_common(cont, config);
  auto* approx = app.add_subcommand("approximate", "evaluate the approximant on the dense grid");
  add_common(approx, config);
  auto* coeffs = app.add_subcommand("coeffs", "dump the trigonometric coefficients");
  add_common(coeffs, config);
  auto* conv = app.add_subcommand("convergence", "run a convergence study over n = 2^from .. 2^to");
  add_common(conv, config);
  conv->add_option("--from", config.from, "first exponent");
  conv->add_option("--to", config.to, "last exponent");

  int m = 1;
  int p = 1;
  auto* stencil = app.add_subcommand("stencil", "print exact one-sided stencil weights");
  stencil->add_option("--m", m, "derivative order")->required();
  stencil->add_option("--p", p, "accuracy order")->required();

  double perturbation = 0.0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  selftest->add_option("--perturb-stencils", perturbation, "add this to every w_0 (negative control)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fcont::cli::kValidationError;
  }

  try {
    if (*cont) return emit(fcont::cli::cmd_continue(config), config);
    if (*approx) return emit(fcont::cli::cmd_approximate(config), config);
    if (*coeffs) return emit(fcont::cli::cmd_coeffs(config), config);
    if (*conv) return emit(fcont::cli::cmd_convergence(config), config);
    if (*stencil) {
      std::cout << fcont::cli::cmd_stencil(m, p);
      return fcont::cli::kSuccess;
    }
    if (*selftest) return fcont::cli::cmd_selftest(std::cout, perturbation);
  } catch (const fcont::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fcont::cli::exit_code_for(e);
  }
  return fcont::cli::kValidationError;
}
