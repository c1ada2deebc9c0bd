#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scator/error.hpp"
#include "scator/eval.hpp"
#include "scator/grid.hpp"
#include "scator/identity_suite.hpp"

namespace {

double epsilon_from_env() {
  char const* text = std::getenv("SCATOR_EPS");
  if (text == nullptr || *text == '\0') return 1e-9;
  char* end = nullptr;
  double value = std::strtod(text, &end);
  if (end == text || *end != '\0' || !(value >= 0)) {
    throw scator::UsageError("SCATOR_EPS must be a nonnegative number");
  }
  return value;
}

int run_eval(std::string const& text, bool use_float, double eps) {
  auto expr = scator::parse_expression(text);
  if (use_float) {
    auto value = scator::evaluate<double>(*expr, eps);
    std::cout << scator::format_value(value) << "\n";
  } else {
    auto value = scator::evaluate<scator::Rational>(*expr);
    std::cout << scator::format_value(value) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic scator algebra tool"};
  app.require_subcommand(1);

  std::string expr_text;
  bool flag_exact = false;
  bool flag_float = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a scator expression");
  eval_cmd->add_option("expr", expr_text, "expression, e.g. \"(2; 1, 1) * (2; 1, 1)\"")
      ->required();
  auto* opt_exact = eval_cmd->add_flag("--exact", flag_exact, "exact rational backend (default)");
  eval_cmd->add_flag("--float", flag_float, "double precision backend")->excludes(opt_exact);

  std::string a0_text, min_text, max_text, step_text, out_path;
  auto* grid_cmd = app.add_subcommand("grid", "causality map over a director rectangle");
  grid_cmd->add_option("--a0", a0_text, "scalar component")->required();
  grid_cmd->add_option("--min", min_text, "lower bound for both directors")->required();
  grid_cmd->add_option("--max", max_text, "upper bound for both directors")->required();
  grid_cmd->add_option("--step", step_text, "grid step")->required();
  grid_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

  std::uint64_t seed = 42;
  int trials = 100;
  std::string module = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suite, JSON lines on stdout");
  verify_cmd->add_option("--seed", seed, "RNG seed")->required();
  verify_cmd->add_option("--trials", trials, "trials per identity")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--module", module, "restrict to one module")
      ->check(CLI::IsMember({"all", "core", "embed", "dual", "metric", "3d"}));

  CLI11_PARSE(app, argc, argv);

  try {
    double eps = epsilon_from_env();

    if (eval_cmd->parsed()) {
      return run_eval(expr_text, flag_float, eps);
    }

    if (grid_cmd->parsed()) {
      auto parse = [](std::string const& text, char const* what) {
        auto value = scator::parse_rational(text);
        if (!value) throw scator::UsageError(std::string(what) + ": bad number '" + text + "'");
        return *value;
      };
      scator::GridSpec spec{parse(a0_text, "--a0"), parse(min_text, "--min"),
                            parse(max_text, "--max"), parse(step_text, "--step")};
      if (out_path.empty()) {
        scator::write_region_csv(spec, std::cout);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw scator::UsageError("cannot open '" + out_path + "' for writing");
        scator::write_region_csv(spec, out);
      }
      return 0;
    }

    scator::SuiteOptions options;
    options.seed = seed;
    options.trials = trials;
    options.module = module;
    options.epsilon = eps;
    auto result = scator::run_identity_suite(options, std::cout);
    std::cerr << "identities: " << result.records << " records, " << result.exact_failures
              << " exact failures, " << result.float_failures << " float failures, "
              << result.flagged_failures << " flagged\n";
    return result.exact_failures > 0 ? 1 : 0;
  } catch (scator::UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (scator::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
